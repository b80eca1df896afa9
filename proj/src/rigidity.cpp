#include "domdimlab/rigidity.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace domdimlab::rigidity {

NakayamaCatalog::NakayamaCatalog(nakayama::NakAlgebra a) : a_(std::move(a)), mods_(nakayama::indecomposables(a_)) {}

std::size_t NakayamaCatalog::index_of(const nakayama::NakModule& m) const
{
    auto it = std::find(mods_.begin(), mods_.end(), m);
    if (it == mods_.end())
        throw RigidityError("module " + m.str() + " is not an indecomposable of " + a_.str());
    return static_cast<std::size_t>(it - mods_.begin());
}

std::size_t NakayamaCatalog::ext(std::size_t i, std::size_t j, int t) const
{
    return static_cast<std::size_t>(nakayama::dim_ext(a_, t, mods_[i], mods_[j]));
}

bool NakayamaCatalog::is_projective(std::size_t i) const { return nakayama::is_projective(a_, mods_[i]); }

TableCatalog::TableCatalog(std::vector<homology::Representation> modules, int max_degree, bool complete)
    : mods_(std::move(modules)), max_degree_(max_degree), complete_(complete)
{
    if (mods_.empty())
        throw RigidityError("empty module catalog");
    if (max_degree < 1)
        throw RigidityError("catalog needs Ext degree >= 1");
    const auto& a = mods_.front().algebra();
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        if (mods_[i].algebra() != a)
            throw RigidityError("catalog modules over different algebras");
        if (mods_[i].dim() == 0)
            throw RigidityError("catalog contains the zero module");
        if (homology::is_indecomposable(mods_[i]) == Tristate::no)
            throw RigidityError("catalog module " + label(i) + " is decomposable");
        for (std::size_t j = 0; j < i; ++j)
            if (homology::is_isomorphic(mods_[i], mods_[j]) == Tristate::yes)
                throw RigidityError("catalog modules " + label(j) + " and " + label(i) + " are isomorphic");
    }
    selfinjective_ = homology::is_selfinjective(a);
    const auto d = static_cast<std::size_t>(max_degree);
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        projective_.push_back(homology::is_projective(mods_[i]));
        homology::Resolution res(mods_[i]);
        std::vector<std::vector<std::size_t>> row;
        for (const auto& n : mods_)
            row.push_back(homology::ext_dims(res, n, d).dims);
        ext_.push_back(std::move(row));
    }
}

std::string TableCatalog::label(std::size_t i) const
{
    return mods_[i].name().empty() ? "X" + std::to_string(i) : mods_[i].name();
}

std::size_t TableCatalog::ext(std::size_t i, std::size_t j, int t) const
{
    if (t < 1 || t > max_degree_)
        throw RigidityError("Ext degree " + std::to_string(t) + " outside the precomputed range");
    return ext_[i][j][static_cast<std::size_t>(t)];
}

std::size_t TableCatalog::simples() const { return mods_.front().algebra()->vertex_count(); }

namespace {

void require_k(int k)
{
    if (k < 1)
        throw RigidityError("rigidity degree k must be >= 1");
}

bool ext_free(const ModuleCatalog& c, std::size_t i, std::size_t j, int k)
{
    if (k > c.ext_limit())
        throw RigidityError("catalog Ext data stops at degree " + std::to_string(c.ext_limit()));
    for (int t = 1; t <= k; ++t)
        if (c.ext(i, j, t) != 0)
            return false;
    return true;
}

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::size_t n;
    std::vector<Bits> nbr;  // in search order
    std::vector<std::size_t> current, best;

    bool test(const Bits& b, std::size_t i) const { return (b[i / 64] >> (i % 64)) & 1U; }
    static void clear(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    static bool empty(const Bits& b)
    {
        return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
    }

    // greedy sequential coloring; order[i] gets color bound[i], nondecreasing
    void color(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const
    {
        Bits left = cand;
        std::size_t col = 0;
        while (!empty(left)) {
            ++col;
            Bits q = left;
            for (std::size_t v = 0; v < n; ++v) {
                if (!test(q, v))
                    continue;
                clear(left, v);
                clear(q, v);
                for (std::size_t w = 0; w < q.size(); ++w)
                    q[w] &= ~nbr[v][w];
                order.push_back(v);
                bound.push_back(col);
            }
        }
    }

    void expand(Bits cand)
    {
        std::vector<std::size_t> order, bound;
        color(cand, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + bound[idx] <= best.size())
                return;
            std::size_t v = order[idx];
            current.push_back(v);
            Bits next(cand.size());
            for (std::size_t w = 0; w < cand.size(); ++w)
                next[w] = cand[w] & nbr[v][w];
            if (empty(next)) {
                if (current.size() > best.size())
                    best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            clear(cand, v);
        }
    }
};

}  // namespace

CompatGraph compat_graph(const ModuleCatalog& c, int k)
{
    require_k(k);
    CompatGraph g;
    g.k = k;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (ext_free(c, i, i, k))
            g.vertices.push_back(i);
    const std::size_t m = g.vertices.size();
    g.adjacent.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            bool ok = ext_free(c, g.vertices[a], g.vertices[b], k) && ext_free(c, g.vertices[b], g.vertices[a], k);
            g.adjacent[a][b] = g.adjacent[b][a] = ok;
        }
    return g;
}

std::vector<std::size_t> max_clique(const std::vector<std::vector<bool>>& adj)
{
    const std::size_t n = adj.size();
    if (n == 0)
        return {};
    for (const auto& row : adj)
        if (row.size() != n)
            throw RigidityError("adjacency matrix is not square");

    // degeneracy order: repeatedly remove a minimum-degree vertex (lowest index
    // on ties); search the removal order reversed so dense cores come first
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adj[i][j])
                ++deg[i];
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> removal;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick]))
                pick = v;
        removed[pick] = true;
        removal.push_back(pick);
        for (std::size_t u = 0; u < n; ++u)
            if (!removed[u] && u != pick && adj[u][pick])
                --deg[u];
    }
    std::vector<std::size_t> order(removal.rbegin(), removal.rend());

    CliqueSearch s;
    s.n = n;
    const std::size_t words = (n + 63) / 64;
    s.nbr.assign(n, Bits(words, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && adj[order[a]][order[b]])
                s.nbr[a][b / 64] |= std::uint64_t{1} << (b % 64);
    Bits all(words, 0);
    for (std::size_t v = 0; v < n; ++v)
        all[v / 64] |= std::uint64_t{1} << (v % 64);
    s.best = {0};
    s.expand(all);

    std::vector<std::size_t> out;
    for (auto v : s.best)
        out.push_back(order[v]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_k_rigid(const ModuleCatalog& c, const std::vector<std::size_t>& modules, int k)
{
    require_k(k);
    std::set<std::size_t> classes(modules.begin(), modules.end());
    for (auto i : classes) {
        if (i >= c.size())
            throw RigidityError("module index out of range");
        for (auto j : classes)
            if (!ext_free(c, i, j, k))
                return false;
    }
    return true;
}

bool is_k_rigid(const nakayama::NakAlgebra& a, const nakayama::ModuleMultiset& m, int k)
{
    require_k(k);
    std::set<nakayama::NakModule> classes(m.begin(), m.end());
    for (const auto& x : classes)
        nakayama::check_module(a, x);
    for (const auto& x : classes)
        for (const auto& y : classes)
            for (int t = 1; t <= k; ++t)
                if (nakayama::dim_ext(a, t, x, y) != 0)
                    return false;
    return true;
}

RigidityReport o_k(const ModuleCatalog& c, int k)
{
    require_k(k);
    if (!c.complete())
        throw RigidityError("o_k needs a complete list of indecomposables");
    CompatGraph g = compat_graph(c, k);
    RigidityReport r;
    r.k = k;
    r.graph_vertices = g.vertices.size();
    for (auto p : max_clique(g.adjacent))
        r.witness.push_back(g.vertices[p]);
    r.o_k = r.witness.size();
    for (auto i : r.witness)
        r.witness_labels.push_back(c.label(i));
    r.witness_verified = is_k_rigid(c, r.witness, k);
    return r;
}

RigidSequence rigid_sequence_module(const nakayama::NakAlgebra& a, int k, int cutoff)
{
    require_k(k);
    if (nakayama::is_selfinjective(a))
        throw RigidityError("rigid sequence needs a non-selfinjective algebra");
    BoundedValue dd = nakayama::domdim(a, cutoff);
    if (!dd.is_finite())
        throw RigidityError("domdim unresolved at cutoff " + std::to_string(cutoff));
    if (dd.value() < 2)
        throw RigidityError("rigid sequence needs domdim >= 2, got " + std::to_string(dd.value()));
    RigidSequence out;
    out.k = k;
    out.domdim = dd.value();
    out.w = static_cast<std::size_t>(a.n());
    const long n = static_cast<long>(dd.value()) - 2;
    const long step = k + 2;
    out.q = n >= k ? static_cast<std::size_t>((n - k) / step) : 0;

    std::set<nakayama::NakModule> summands;
    nakayama::ModuleMultiset da = nakayama::dual_regular(a);
    for (std::size_t l = 0; l <= out.q; ++l)
        for (const auto& x : nakayama::syzygy_power(a, da, static_cast<int>(step * static_cast<long>(l))))
            summands.insert(x);
    out.module.assign(summands.begin(), summands.end());
    out.size = out.module.size();
    out.rigid = is_k_rigid(a, out.module, k);
    out.size_bound = out.size >= out.w + out.q;
    return out;
}

MainInequality verify_main_inequality(const nakayama::NakAlgebra& a, int k, int cutoff, std::string gendo_provenance)
{
    require_k(k);
    if (gendo_provenance.empty())
        throw RigidityError("main inequality needs a recorded gendo-symmetric provenance");
    if (nakayama::is_selfinjective(a))
        throw RigidityError("main inequality needs a non-selfinjective algebra");
    BoundedValue dd = nakayama::domdim(a, cutoff);
    if (!dd.is_finite())
        throw RigidityError("domdim unresolved at cutoff " + std::to_string(cutoff));
    MainInequality m;
    m.k = k;
    m.domdim = dd.value();
    m.w = static_cast<std::size_t>(a.n());
    m.report = o_k(NakayamaCatalog(a), k);
    m.lhs = (static_cast<long>(m.report.o_k) + 2 - static_cast<long>(m.w)) * (k + 2) - 1;
    m.rhs = m.domdim;
    m.holds = m.report.witness_verified && m.lhs >= static_cast<long>(m.rhs);
    m.gendo_provenance = std::move(gendo_provenance);
    return m;
}

namespace {

void require_complete_selfinjective(const ModuleCatalog& c)
{
    if (!c.selfinjective())
        throw RigidityError("1-Extsymmetric checks need a selfinjective algebra");
    if (!c.complete())
        throw RigidityError("1-Extsymmetric checks need a complete list of indecomposables");
}

}  // namespace

bool is_ext1_symmetric(const ModuleCatalog& c)
{
    require_complete_selfinjective(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if ((c.ext(i, j, 1) != 0) != (c.ext(j, i, 1) != 0))
                return false;
    return true;
}

ExtSymBound verify_extsym_bound(const ModuleCatalog& c, int cutoff, const std::vector<BoundedValue>& end_domdims)
{
    require_complete_selfinjective(c);
    if (cutoff < 1)
        throw RigidityError("cutoff must be >= 1");
    ExtSymBound b;
    b.ext1_symmetric = is_ext1_symmetric(c);

    // phi of each non-projective indecomposable; the sup over all
    // generator-cogenerators is attained on a single summand
    const int limit = std::min(cutoff - 1, c.ext_limit());
    std::uint64_t best = 0;
    bool any = false, bounded = true;
    for (std::size_t i = 0; i < c.size() && bounded; ++i) {
        if (c.is_projective(i))
            continue;
        any = true;
        int found = 0;
        for (int t = 1; t <= limit && !found; ++t)
            if (c.ext(i, i, t) != 0)
                found = t;
        if (!found)
            bounded = false;
        else
            best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(found));
    }
    if (!any)
        throw RigidityError("no non-projective indecomposable: algebra is semisimple");
    b.delta = bounded ? BoundedValue::finite(best) : BoundedValue::at_least(static_cast<std::uint64_t>(limit + 1));

    b.o_1 = o_k(c, 1).o_k;
    b.s = c.simples();
    b.bound = static_cast<long>(b.o_1) + static_cast<long>(b.s) - 2;
    b.holds = b.delta.is_finite() && static_cast<long>(b.delta.value()) <= b.bound;
    for (const auto& d : end_domdims) {
        bool ok = b.delta.is_finite() && d.is_finite() && d.value() <= b.delta.value() + 1 &&
                  static_cast<long>(b.delta.value()) + 1 <= b.bound + 1;
        b.end_checks.push_back(ok);
    }
    return b;
}

}  // namespace domdimlab::rigidity
