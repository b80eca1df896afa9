#include "domdimlab/nakayama.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace domdimlab::nakayama {

std::string to_string(Orientation o) { return o == Orientation::cycle ? "cycle" : "line"; }

NakAlgebra NakAlgebra::validate(Orientation orientation, std::vector<int> c)
{
    if (c.empty())
        throw KupischError("empty Kupisch series");
    const long n = static_cast<long>(c.size());
    for (long i = 0; i < n; ++i)
        if (c[i] < 1)
            throw KupischError("c_" + std::to_string(i) + " must be positive");
    if (orientation == Orientation::cycle) {
        for (long i = 0; i < n; ++i)
            if (c[i] < 2)
                throw KupischError("cycle requires c_" + std::to_string(i) + " >= 2");
        for (long i = 0; i < n; ++i) {
            long next = (i + 1) % n;
            if (c[next] < c[i] - 1)
                throw KupischError("Kupisch condition c_{i+1} >= c_i - 1 fails at i=" + std::to_string(i) + " (" +
                                   std::to_string(c[i]) + " -> " + std::to_string(c[next]) + ")");
        }
    } else {
        if (c[n - 1] != 1)
            throw KupischError("line requires c_{n-1} = 1");
        for (long i = 0; i < n; ++i)
            if (c[i] > n - i)
                throw KupischError("line requires c_i <= n - i, fails at i=" + std::to_string(i));
        for (long i = 0; i + 1 < n; ++i) {
            if (c[i + 1] < c[i] - 1)
                throw KupischError("Kupisch condition c_{i+1} >= c_i - 1 fails at i=" + std::to_string(i));
            if (c[i] < 2)
                throw KupischError("line with c_" + std::to_string(i) + " = 1 before the end is not connected");
        }
        if (n == 1)
            throw KupischError("semisimple algebra (all c_i = 1)");
    }
    return NakAlgebra(orientation, std::move(c));
}

int NakAlgebra::dimension() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool NakAlgebra::vertex_exists(long i) const { return is_cycle() || (i >= 0 && i < n()); }

int NakAlgebra::normalize(long i) const
{
    const long nn = n();
    if (is_cycle())
        return static_cast<int>(((i % nn) + nn) % nn);
    if (i < 0 || i >= nn)
        throw std::out_of_range("vertex " + std::to_string(i) + " outside line of length " + std::to_string(nn));
    return static_cast<int>(i);
}

std::string NakAlgebra::str() const
{
    std::string s = to_string(orientation_) + "(";
    for (std::size_t i = 0; i < c_.size(); ++i)
        s += (i ? "," : "") + std::to_string(c_[i]);
    return s + ")";
}

void check_module(const NakAlgebra& a, const NakModule& m)
{
    if (m.vertex < 0 || m.vertex >= a.n() || m.length < 1 || m.length > a.c(m.vertex))
        throw std::invalid_argument("no indecomposable " + m.str() + " over " + a.str());
}

std::vector<NakModule> indecomposables(const NakAlgebra& a)
{
    std::vector<NakModule> out;
    for (int i = 0; i < a.n(); ++i)
        for (int k = 1; k <= a.c(i); ++k)
            out.push_back({i, k});
    return out;
}

NakModule projective(const NakAlgebra& a, int vertex)
{
    int v = a.normalize(vertex);
    return {v, a.c(v)};
}

NakModule simple(const NakAlgebra& a, int vertex) { return {a.normalize(vertex), 1}; }

int socle(const NakAlgebra& a, const NakModule& m) { return a.normalize(static_cast<long>(m.vertex) + m.length - 1); }

int dim_at(const NakAlgebra& a, const NakModule& m, int v)
{
    int count = 0;
    for (int s = 0; s < m.length; ++s) {
        long w = static_cast<long>(m.vertex) + s;
        if (a.is_cycle() ? a.normalize(w) == a.normalize(v) : w == v)
            ++count;
    }
    return count;
}

int injective_length(const NakAlgebra& a, int socle_vertex)
{
    // the set of l with c_{a-l+1} >= l is downward closed by the Kupisch condition
    int l = 0;
    while (true) {
        long start = static_cast<long>(socle_vertex) - l;
        if (!a.vertex_exists(start) || a.c(start) < l + 1)
            break;
        ++l;
    }
    return l;
}

NakModule injective_of_socle(const NakAlgebra& a, int socle_vertex)
{
    int d = injective_length(a, socle_vertex);
    return {a.normalize(static_cast<long>(socle_vertex) - d + 1), d};
}

bool is_projective(const NakAlgebra& a, const NakModule& m) { return m.length == a.c(m.vertex); }

bool is_injective(const NakAlgebra& a, const NakModule& m)
{
    return m.length == injective_length(a, socle(a, m));
}

std::optional<NakModule> syzygy(const NakAlgebra& a, const NakModule& m)
{
    check_module(a, m);
    if (is_projective(a, m))
        return std::nullopt;
    return NakModule{a.normalize(static_cast<long>(m.vertex) + m.length), a.c(m.vertex) - m.length};
}

std::optional<NakModule> cosyzygy(const NakAlgebra& a, const NakModule& m)
{
    check_module(a, m);
    NakModule env = injective_of_socle(a, socle(a, m));
    if (env.length == m.length)
        return std::nullopt;
    return NakModule{env.vertex, env.length - m.length};
}

ModuleMultiset syzygy_power(const NakAlgebra& a, const ModuleMultiset& ms, int t)
{
    ModuleMultiset cur = ms;
    for (int s = 0; s < t; ++s) {
        ModuleMultiset next;
        for (const auto& m : cur)
            if (auto o = syzygy(a, m))
                next.push_back(*o);
        cur = std::move(next);
    }
    return cur;
}

int dim_hom(const NakAlgebra& a, const NakModule& m, const NakModule& n)
{
    // image of M(i,k) -> M(j,l) is the submodule M(j+s, l-s) with j+s = i and l-s <= k
    int count = 0;
    for (int s = 0; s < n.length; ++s) {
        long w = static_cast<long>(n.vertex) + s;
        bool same = a.is_cycle() ? a.normalize(w) == m.vertex : w == m.vertex;
        if (same && n.length - s <= m.length)
            ++count;
    }
    return count;
}

int dim_ext(const NakAlgebra& a, int t, const NakModule& m, const NakModule& n)
{
    if (t < 1)
        throw std::invalid_argument("Ext degree must be >= 1");
    check_module(a, m);
    check_module(a, n);
    NakModule x = m;
    for (int s = 1; s < t; ++s) {
        auto o = syzygy(a, x);
        if (!o)
            return 0;
        x = *o;
    }
    auto omega = syzygy(a, x);
    if (!omega)
        return 0;
    // 0 -> Hom(X,N) -> Hom(P(X),N) -> Hom(Omega X,N) -> Ext^1(X,N) -> 0
    return dim_hom(a, *omega, n) - dim_at(a, n, x.vertex) + dim_hom(a, x, n);
}

std::vector<NakModule> one_rigid_indecomposables(const NakAlgebra& a)
{
    if (!a.is_cycle())
        throw std::invalid_argument("one_rigid_indecomposables needs a cyclic Nakayama algebra");
    if (a.n() < 2)
        throw std::invalid_argument("one_rigid_indecomposables needs n >= 2");
    std::vector<NakModule> out;
    const int n = a.n();
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= a.c(i); ++k)
            if (k <= n - 1 || k > a.c(i) - n)
                out.push_back({i, k});
    return out;
}

BoundedValue domdim_module(const NakAlgebra& a, const NakModule& m, int cutoff)
{
    if (cutoff < 1)
        throw std::invalid_argument("cutoff must be >= 1");
    check_module(a, m);
    std::optional<NakModule> cur = m;
    for (int idx = 0; idx < cutoff; ++idx) {
        if (!cur)
            break;  // coresolution ended with projective terms only
        NakModule env = injective_of_socle(a, socle(a, *cur));
        if (!is_projective(a, env))
            return BoundedValue::finite(static_cast<std::uint64_t>(idx));
        cur = cosyzygy(a, *cur);
    }
    return BoundedValue::at_least(static_cast<std::uint64_t>(cutoff));
}

BoundedValue domdim(const NakAlgebra& a, int cutoff)
{
    std::optional<BoundedValue> best;
    for (int i = 0; i < a.n(); ++i) {
        BoundedValue d = domdim_module(a, projective(a, i), cutoff);
        if (d.is_finite() && (!best || best->is_at_least() || d.value() < best->value()))
            best = d;
        else if (!best)
            best = d;
    }
    return *best;
}

bool is_selfinjective(const NakAlgebra& a)
{
    if (!a.is_cycle())
        return false;
    const auto& c = a.kupisch();
    return std::all_of(c.begin(), c.end(), [&](int x) { return x == c.front(); });
}

bool is_symmetric(const NakAlgebra& a)
{
    return is_selfinjective(a) && (a.c(0) - 1) % a.n() == 0;
}

std::vector<NakModule> dual_regular(const NakAlgebra& a)
{
    std::vector<NakModule> out;
    for (int v = 0; v < a.n(); ++v)
        out.push_back(injective_of_socle(a, v));
    return out;
}

std::vector<NakModule> regular(const NakAlgebra& a)
{
    std::vector<NakModule> out;
    for (int v = 0; v < a.n(); ++v)
        out.push_back(projective(a, v));
    return out;
}

NakAlgebra opposite(const NakAlgebra& a)
{
    const int n = a.n();
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int target = a.is_cycle() ? (n - v) % n : n - 1 - v;
        c[static_cast<std::size_t>(target)] = injective_length(a, v);
    }
    return NakAlgebra::validate(a.orientation(), std::move(c));
}

namespace {

ModuleMultiset distinct(const ModuleMultiset& ms)
{
    std::set<NakModule> s(ms.begin(), ms.end());
    return {s.begin(), s.end()};
}

}  // namespace

BoundedValue phi(const NakAlgebra& a, const ModuleMultiset& m, int cutoff)
{
    if (cutoff < 1)
        throw std::invalid_argument("cutoff must be >= 1");
    ModuleMultiset ms = distinct(m);
    if (std::all_of(ms.begin(), ms.end(), [&](const NakModule& x) { return is_projective(a, x); }))
        throw std::invalid_argument("phi is undefined on projective modules");
    for (int r = 1; r < cutoff; ++r)
        for (const auto& x : ms)
            for (const auto& y : ms)
                if (dim_ext(a, r, x, y) != 0)
                    return BoundedValue::finite(static_cast<std::uint64_t>(r));
    return BoundedValue::at_least(static_cast<std::uint64_t>(cutoff));
}

BoundedValue delta(const NakAlgebra& a, int cutoff)
{
    if (cutoff < 1)
        throw std::invalid_argument("cutoff must be >= 1");
    if (is_selfinjective(a)) {
        std::uint64_t best = 0;
        for (const auto& x : indecomposables(a)) {
            if (is_projective(a, x))
                continue;
            BoundedValue p = phi(a, {x}, cutoff);
            if (p.is_at_least())
                return BoundedValue::at_least(static_cast<std::uint64_t>(cutoff));
            best = std::max(best, p.value());
        }
        return BoundedValue::finite(best);
    }
    auto da = dual_regular(a);
    auto reg = regular(a);
    for (int r = 1; r < cutoff; ++r)
        for (const auto& x : da)
            for (const auto& p : reg)
                if (dim_ext(a, r, x, p) != 0)
                    return BoundedValue::finite(static_cast<std::uint64_t>(r));
    return BoundedValue::at_least(static_cast<std::uint64_t>(cutoff));
}

std::vector<NakAlgebra> cyclic_corpus(int n, int max_entry)
{
    std::vector<NakAlgebra> out;
    std::vector<int> c(static_cast<std::size_t>(n), 2);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            try {
                out.push_back(NakAlgebra::validate(Orientation::cycle, c));
            } catch (const KupischError&) {
            }
            return;
        }
        int lo = 2;
        if (pos > 0)
            lo = std::max(lo, c[static_cast<std::size_t>(pos - 1)] - 1);
        for (int v = lo; v <= max_entry; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<NakAlgebra> line_corpus(int n)
{
    std::vector<NakAlgebra> out;
    std::vector<int> c(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            try {
                out.push_back(NakAlgebra::validate(Orientation::line, c));
            } catch (const KupischError&) {
            }
            return;
        }
        for (int v = 1; v <= n - pos; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace domdimlab::nakayama
