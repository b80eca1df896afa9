#include "domdimlab/homology.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

namespace domdimlab::homology {

using exact::row_span;
using exact::span_contains;
using exact::span_coordinates;
using exact::span_pivots;
using exact::span_union;

namespace {

Matrix empty_span(const Field& f, std::size_t cols) { return Matrix(f, 0, cols); }

Matrix stack(const std::vector<Matrix>& parts, const Field& f, std::size_t cols)
{
    return Matrix::vstack(parts, f, cols);
}

Matrix span_of(const std::vector<Matrix>& parts, const Field& f, std::size_t cols)
{
    Matrix m = stack(parts, f, cols);
    return m.rows() ? row_span(m) : empty_span(f, cols);
}

Matrix power(Matrix x, std::size_t at_least)
{
    std::size_t p = 1;
    while (p < at_least) {
        x = x * x;
        p *= 2;
    }
    return x;
}

// Characteristic polynomial over Q (coefficients low to high) via reduction
// to upper Hessenberg form.
std::vector<mpq_class> charpoly(const Matrix& x)
{
    const std::size_t n = x.rows();
    std::vector<std::vector<mpq_class>> h(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i][j] = x.at(i, j).value();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1] == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (auto& row : h)
                std::swap(row[piv], row[m]);
        }
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0)
                continue;
            mpq_class u = h[i][m - 1] / h[m][m - 1];
            for (std::size_t j = 0; j < n; ++j)
                h[i][j] -= u * h[m][j];
            for (std::size_t r = 0; r < n; ++r)
                h[r][m] += u * h[r][i];
        }
    }
    std::vector<std::vector<mpq_class>> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        auto& cur = p[m];
        cur.assign(m + 1, 0);
        for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
            cur[k + 1] += p[m - 1][k];
            cur[k] -= h[m - 1][m - 1] * p[m - 1][k];
        }
        mpq_class t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t *= h[m - i][m - i - 1];
            mpq_class c = t * h[m - i - 1][m - 1];
            for (std::size_t k = 0; k < p[m - i - 1].size(); ++k)
                cur[k] -= c * p[m - i - 1][k];
        }
    }
    return p[n];
}

// Positive divisors by trial division; empty when |v| is too large to factor.
std::vector<mpz_class> divisors(mpz_class v)
{
    v = abs(v);
    if (v == 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 48)
        return {};
    std::vector<mpz_class> out{1};
    for (mpz_class p = 2; p * p <= v; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    if (v > 1) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; ++i)
            out.push_back(out[i] * v);
    }
    return out;
}

// Rational roots of a polynomial over Q by the rational root test.
std::vector<mpq_class> rational_roots(std::vector<mpq_class> c)
{
    std::vector<mpq_class> roots;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    if (c.size() < 2)
        return roots;
    mpz_class den = 1;
    for (const auto& q : c)
        den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> a;
    for (const auto& q : c)
        a.push_back(mpz_class(q * den));
    auto num = divisors(a.front());
    auto lead = divisors(a.back());
    for (const auto& p : num)
        for (const auto& q : lead)
            for (int sign : {1, -1}) {
                mpq_class r(sign * p, q);
                r.canonicalize();
                if (std::find(roots.begin(), roots.end(), r) != roots.end())
                    continue;
                mpq_class v = 0;
                for (std::size_t k = c.size(); k-- > 0;)
                    v = v * r + c[k];
                if (v == 0)
                    roots.push_back(r);
            }
    return roots;
}

}  // namespace

// ------------------------------------------------------------ Representation

Representation::Representation(AlgebraPtr a, std::vector<Matrix> actions, std::string name)
    : algebra_(std::move(a)), actions_(std::move(actions)), name_(std::move(name))
{
    if (actions_.size() != algebra_->dim())
        throw HomologyError("need one action matrix per algebra basis element");
    dim_ = actions_.front().rows();
    for (const auto& m : actions_)
        if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == algebra_->field()))
            throw HomologyError("action matrices must be square of equal size over the algebra's field");
}

Representation Representation::trusted(AlgebraPtr algebra, std::vector<Matrix> actions, std::string name)
{
    return Representation(std::move(algebra), std::move(actions), std::move(name));
}

Representation Representation::zero(AlgebraPtr algebra)
{
    std::vector<Matrix> acts(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return Representation(std::move(algebra), std::move(acts), "0");
}

Representation Representation::create(AlgebraPtr algebra, std::vector<Matrix> actions, std::string name)
{
    Representation m(std::move(algebra), std::move(actions), std::move(name));
    const auto& a = *m.algebra_;
    if (!(m.act(a.unit()) == Matrix::identity(a.field(), m.dim_)))
        throw HomologyError("unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(m.actions_[i] * m.actions_[j] == m.act(a.right_mult(j).row(i))))
                throw HomologyError("action does not respect the product " + a.basis_names()[i] + " * " +
                                    a.basis_names()[j]);
    return m;
}

Matrix Representation::act(const Matrix& element) const
{
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < element.cols(); ++i)
        if (!element.is_zero_at(0, i))
            out.add_scaled(actions_[i], element.at(0, i));
    return out;
}

std::vector<std::size_t> Representation::dim_vector() const
{
    std::vector<std::size_t> out;
    for (const auto& e : algebra_->idempotents())
        out.push_back(dim_ ? act(e.coords).rank() : 0);
    return out;
}

std::string Representation::fingerprint() const
{
    std::string s = std::to_string(reinterpret_cast<std::uintptr_t>(algebra_.get())) + "|" + std::to_string(dim_);
    for (const auto& m : actions_)
        s += "|" + m.str();
    return s;
}

AlgebraPtr opposite_of(const AlgebraPtr& a)
{
    // both directions are kept alive so that opposite_of(opposite_of(a)) == a
    static std::mutex mu;
    static std::map<const AlgebraTable*, AlgebraPtr> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(a.get()); it != cache.end())
        return it->second;
    AlgebraPtr op = quivalg::opposite(*a);
    cache[a.get()] = op;
    cache[op.get()] = a;
    return op;
}

// ------------------------------------------------------------ constructions

namespace {

Matrix projective_basis(const AlgebraTable& a, std::size_t v)
{
    return row_span(a.left_action(a.idempotents()[v].coords));
}

void check_vertex(const AlgebraPtr& a, std::size_t v)
{
    if (v >= a->vertex_count())
        throw HomologyError("vertex " + std::to_string(v) + " out of range");
}

/// Generators of A as an algebra: idempotents and radical generators.
std::vector<Matrix> algebra_generators(const AlgebraTable& a)
{
    std::vector<Matrix> g;
    for (const auto& e : a.idempotents())
        g.push_back(e.coords);
    for (const auto& x : a.radical_generators())
        g.push_back(x);
    return g;
}

}  // namespace

Representation simple(const AlgebraPtr& a, std::size_t vertex)
{
    check_vertex(a, vertex);
    const Field f = a->field();
    std::vector<Matrix> parts;
    for (const auto& e : a->idempotents())
        parts.push_back(e.coords);
    parts.push_back(a->radical());
    auto inv = stack(parts, f, a->dim()).inverse();
    if (!inv)
        throw HomologyError("top at vertex " + a->idempotents()[vertex].vertex + " is not split");
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix m(f, 1, 1);
        m.set(0, 0, inv->at(i, vertex));
        acts.push_back(m);
    }
    return Representation::trusted(a, std::move(acts), "S(" + a->idempotents()[vertex].vertex + ")");
}

Representation projective(const AlgebraPtr& a, std::size_t vertex)
{
    check_vertex(a, vertex);
    Matrix s = projective_basis(*a, vertex);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a->dim(); ++i)
        acts.push_back(span_coordinates(s, s * a->right_mult(i)));
    return Representation::trusted(a, std::move(acts), "P(" + a->idempotents()[vertex].vertex + ")");
}

Representation regular(const AlgebraPtr& a)
{
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a->dim(); ++i)
        acts.push_back(a->right_mult(i));
    return Representation::trusted(a, std::move(acts), "A");
}

Representation dual_regular(const AlgebraPtr& a)
{
    Representation d = dual(regular(opposite_of(a)));
    d.set_name("D(A)");
    return d;
}

Representation direct_sum(const std::vector<Representation>& parts)
{
    if (parts.empty())
        throw HomologyError("empty direct sum");
    const AlgebraPtr& a = parts.front().algebra();
    std::size_t total = 0;
    std::string name;
    for (const auto& p : parts) {
        if (p.algebra() != a)
            throw HomologyError("direct sum of modules over different algebras");
        total += p.dim();
        name += (name.empty() ? "" : " + ") + p.name();
    }
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix m(a->field(), total, total);
        std::size_t off = 0;
        for (const auto& p : parts) {
            if (p.dim())
                m.set_block(off, off, p.action(i));
            off += p.dim();
        }
        acts.push_back(std::move(m));
    }
    return Representation::trusted(a, std::move(acts), name);
}

Representation submodule(const Representation& m, const Matrix& span)
{
    if (span.rows() == 0)
        return Representation::zero(m.algebra());
    std::vector<Matrix> acts;
    for (const auto& x : m.actions())
        acts.push_back(span_coordinates(span, span * x));
    return Representation::trusted(m.algebra(), std::move(acts));
}

Quotient quotient(const Representation& m, const Matrix& span)
{
    const Field f = m.field();
    const std::size_t d = m.dim();
    auto piv = span_pivots(span);
    std::vector<bool> is_piv(d, false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_piv[c])
            rest.push_back(c);
    Matrix proj = exact::reduce_modulo(span, Matrix::identity(f, d)).select_cols(rest);
    if (rest.empty())
        return {Representation::zero(m.algebra()), proj};
    std::vector<Matrix> acts;
    for (const auto& x : m.actions())
        acts.push_back(x.select_rows(rest) * proj);
    return {Representation::trusted(m.algebra(), std::move(acts)), proj};
}

Matrix generated_submodule(const Representation& m, const Matrix& rows)
{
    const Field f = m.field();
    Matrix s = rows.rows() ? row_span(rows) : empty_span(f, m.dim());
    if (s.rows() == 0)
        return s;
    std::vector<Matrix> gens;
    for (const auto& g : algebra_generators(*m.algebra()))
        gens.push_back(m.act(g));
    Matrix frontier = s;
    while (frontier.rows()) {
        std::vector<Matrix> parts{s};
        for (const auto& g : gens)
            parts.push_back(frontier * g);
        Matrix next = row_span(stack(parts, f, m.dim()));
        if (next.rows() == s.rows())
            break;
        frontier = exact::reduce_modulo(s, next).nonzero_rows();
        s = next;
    }
    return s;
}

Representation dual(const Representation& m)
{
    AlgebraPtr op = opposite_of(m.algebra());
    if (m.dim() == 0)
        return Representation::zero(op);
    std::vector<Matrix> acts;
    for (const auto& x : m.actions())
        acts.push_back(x.transpose());
    return Representation::trusted(op, std::move(acts), m.name().empty() ? "" : "D(" + m.name() + ")");
}

Matrix radical_span(const Representation& m)
{
    const Field f = m.field();
    if (m.dim() == 0)
        return empty_span(f, 0);
    std::vector<Matrix> parts;
    for (const auto& g : m.algebra()->radical_generators())
        parts.push_back(m.act(g));
    Matrix rows = stack(parts, f, m.dim());
    return generated_submodule(m, rows.rows() ? rows.nonzero_rows() : rows);
}

Representation radical(const Representation& m) { return submodule(m, radical_span(m)); }

Representation top(const Representation& m) { return quotient(m, radical_span(m)).module; }

std::vector<std::size_t> top_dims(const Representation& m)
{
    std::vector<std::size_t> out;
    if (m.dim() == 0)
        return std::vector<std::size_t>(m.algebra()->vertex_count(), 0);
    Matrix r = radical_span(m);
    for (const auto& e : m.algebra()->idempotents()) {
        Matrix ev = m.act(e.coords);
        out.push_back(ev.rank() - (r.rows() ? (r * ev).rank() : 0));
    }
    return out;
}

Representation radical_quotient(const Representation& m, std::size_t k)
{
    Matrix s = Matrix::identity(m.field(), m.dim());
    for (std::size_t i = 0; i < k && s.rows(); ++i) {
        Representation sub = submodule(m, s);
        Matrix r = radical_span(sub);
        s = r.rows() ? row_span(r * s) : empty_span(m.field(), m.dim());
    }
    return quotient(m, s).module;
}

bool is_projective(const Representation& m)
{
    if (m.dim() == 0)
        return true;
    const auto& a = *m.algebra();
    auto t = top_dims(m);
    std::size_t cover = 0;
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t[v])
            cover += t[v] * a.left_action(a.idempotents()[v].coords).rank();
    return cover == m.dim();
}

bool is_injective(const Representation& m) { return is_projective(dual(m)); }

// ------------------------------------------------------------ covers and resolutions

CoverStep projective_cover(const Representation& m)
{
    if (m.dim() == 0)
        throw HomologyError("projective cover of the zero module");
    const AlgebraPtr& a = m.algebra();
    const Field f = m.field();
    const std::size_t d = m.dim();
    CoverStep st{{}, {}, Representation::zero(a), Matrix(f, 0, d), Matrix(), Matrix(), Representation::zero(a), false};

    Matrix r = radical_span(m);
    std::vector<Matrix> gens;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Matrix ev = m.act(a->idempotents()[v].coords);
        Matrix mv = row_span(ev);
        Matrix cur = r.rows() ? (r * ev).nonzero_rows() : empty_span(f, d);
        cur = cur.rows() ? row_span(cur) : empty_span(f, d);
        for (std::size_t i = 0; i < mv.rows(); ++i) {
            Matrix x = mv.row(i);
            if (span_contains(cur, x))
                continue;
            gens.push_back(x);
            st.vertices.push_back(v);
            cur = span_union(cur, x);
        }
    }
    st.generators = stack(gens, f, d);

    std::map<std::size_t, Representation> proj;
    std::map<std::size_t, Matrix> basis;
    std::vector<Representation> parts;
    std::vector<Matrix> map_parts;
    std::size_t off = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t v = st.vertices[i];
        if (!proj.count(v)) {
            proj.emplace(v, projective(a, v));
            basis.emplace(v, projective_basis(*a, v));
        }
        parts.push_back(proj.at(v));
        st.offsets.push_back(off);
        off += proj.at(v).dim();
        // g . b for every algebra basis element b, then restricted to e_v A
        std::vector<Matrix> images;
        for (std::size_t b = 0; b < a->dim(); ++b)
            images.push_back(gens[i] * m.action(b));
        map_parts.push_back(basis.at(v) * stack(images, f, d));
    }
    st.cover = direct_sum(parts);
    st.map = stack(map_parts, f, d);
    Matrix ker = st.map.left_kernel_basis();
    st.kernel = ker.rows() ? row_span(ker) : empty_span(f, off);
    st.syzygy = submodule(st.cover, st.kernel);
    st.minimal = st.kernel.rows() == 0 || span_contains(radical_span(st.cover), st.kernel);
    if (!st.minimal)
        throw HomologyError("projective cover failed the minimality certificate");
    return st;
}

Resolution::Resolution(Representation m) : module_(std::move(m)) {}

void Resolution::extend(std::size_t t)
{
    while (!terminated_ && steps_.size() <= t) {
        const Representation& cur = steps_.empty() ? module_ : steps_.back().syzygy;
        if (cur.dim() == 0) {
            terminated_ = true;
            break;
        }
        steps_.push_back(projective_cover(cur));
    }
}

const CoverStep* Resolution::step(std::size_t t) const { return t < steps_.size() ? &steps_[t] : nullptr; }

std::vector<std::size_t> Resolution::syzygy_dims(std::size_t t)
{
    std::vector<std::size_t> out;
    if (t == 0)
        return out;
    extend(t - 1);
    for (std::size_t i = 0; i < t; ++i)
        out.push_back(i < steps_.size() ? steps_[i].syzygy.dim() : 0);
    return out;
}

bool Resolution::minimal() const
{
    for (const auto& s : steps_)
        if (!s.minimal)
            return false;
    return true;
}

std::shared_ptr<const Resolution> ResolutionCache::get(const Representation& m, std::size_t length)
{
    std::string key = m.fingerprint();
    std::shared_ptr<const Resolution> have;
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            have = it->second;
    }
    if (have && (have->terminated() || have->computed() > length))
        return have;
    auto fresh = have ? std::make_shared<Resolution>(*have) : std::make_shared<Resolution>(m);
    fresh->extend(length);
    std::unique_lock lock(mutex_);
    auto& slot = cache_[key];
    if (!slot || slot->computed() < fresh->computed())
        slot = fresh;
    return slot;
}

// ------------------------------------------------------------ Ext

namespace {

/// Cohomology of Hom(P_*, N) for a fixed resolution.
class HomComplex {
  public:
    HomComplex(Resolution& r, const Representation& n) : res_(r), n_(n)
    {
        for (const auto& e : n.algebra()->idempotents()) {
            Matrix ev = n.dim() ? n.act(e.coords) : Matrix(n.field(), 0, 0);
            weight_.push_back(n.dim() ? row_span(ev) : ev);
        }
        for (std::size_t v = 0; v < n.algebra()->vertex_count(); ++v)
            pbasis_.push_back(projective_basis(*n.algebra(), v));
    }

    std::size_t hom_dim(std::size_t s)
    {
        res_.extend(s);
        const CoverStep* st = res_.step(s);
        if (!st || n_.dim() == 0)
            return 0;
        std::size_t total = 0;
        for (auto v : st->vertices)
            total += weight_[v].rows();
        return total;
    }

    /// rank of Hom(P_s, N) -> Hom(P_{s+1}, N)
    std::size_t delta_rank(std::size_t s)
    {
        if (auto it = ranks_.find(s); it != ranks_.end())
            return it->second;
        res_.extend(s + 1);
        const CoverStep* st = res_.step(s);
        const CoverStep* nx = res_.step(s + 1);
        std::size_t rank = 0;
        if (st && nx && n_.dim()) {
            const std::size_t nd = n_.dim();
            const Field f = n_.field();
            std::size_t rows = 0;
            for (auto v : st->vertices)
                rows += weight_[v].rows();
            Matrix delta(f, rows, nx->vertices.size() * nd);
            Matrix images = nx->generators * st->kernel;  // generators of P_{s+1} in P_s coordinates
            for (std::size_t j = 0; j < nx->vertices.size(); ++j) {
                std::size_t r0 = 0;
                for (std::size_t i = 0; i < st->vertices.size(); ++i) {
                    std::size_t v = st->vertices[i];
                    const Matrix& b = weight_[v];
                    if (b.rows()) {
                        Matrix z = images.block(j, st->offsets[i], 1, pbasis_[v].rows());
                        if (!z.is_zero())
                            delta.set_block(r0, j * nd, b * n_.act(z * pbasis_[v]));
                    }
                    r0 += b.rows();
                }
            }
            rank = delta.rank();
        }
        ranks_[s] = rank;
        return rank;
    }

    std::size_t ext(std::size_t t)
    {
        std::size_t h = hom_dim(t);
        std::size_t r = delta_rank(t);
        std::size_t prev = t ? delta_rank(t - 1) : 0;
        return h - r - prev;
    }

  private:
    Resolution& res_;
    const Representation& n_;
    std::vector<Matrix> weight_, pbasis_;
    std::map<std::size_t, std::size_t> ranks_;
};

}  // namespace

ExtTable ext_dims(Resolution& res, const Representation& n, std::size_t t)
{
    if (res.module().algebra() != n.algebra())
        throw HomologyError("Ext of modules over different algebras");
    HomComplex hc(res, n);
    ExtTable out{res.module().name(), n.name(), {}};
    for (std::size_t s = 0; s <= t; ++s)
        out.dims.push_back(hc.ext(s));
    return out;
}

ExtTable ext_dims(const Representation& m, const Representation& n, std::size_t t)
{
    Resolution r(m);
    return ext_dims(r, n, t);
}

std::size_t dim_hom(const Representation& m, const Representation& n) { return ext_dims(m, n, 0).dims[0]; }

BoundedValue first_ext_degree(const Representation& m, const Representation& n, std::size_t cutoff)
{
    if (m.algebra() != n.algebra())
        throw HomologyError("Ext of modules over different algebras");
    Resolution r(m);
    HomComplex hc(r, n);
    for (std::size_t t = 1; t < cutoff; ++t) {
        if (hc.ext(t) != 0)
            return BoundedValue::finite(t);
        if (r.terminated() && t >= r.computed())
            break;
    }
    return BoundedValue::at_least(cutoff);
}

// ------------------------------------------------------------ Hom spaces

std::vector<Matrix> intertwiners(const OperatorFamily& mf, const OperatorFamily& nf)
{
    if (mf.weights.size() != nf.weights.size() || mf.ops.size() != nf.ops.size())
        throw HomologyError("operator families do not match");
    if (mf.weights.empty())
        throw HomologyError("operator family needs at least one weight");
    const Field f = mf.weights.front().field();
    const std::size_t m = mf.weights.front().rows(), n = nf.weights.front().rows();
    if (m == 0 || n == 0)
        return {};

    // weight-adapted bases
    std::vector<Matrix> mparts, nparts;
    std::vector<std::size_t> moff, noff, mdim, ndim;
    std::size_t mo = 0, no = 0;
    for (std::size_t w = 0; w < mf.weights.size(); ++w) {
        Matrix a = mf.weights[w].rank() ? row_span(mf.weights[w]) : empty_span(f, m);
        Matrix b = nf.weights[w].rank() ? row_span(nf.weights[w]) : empty_span(f, n);
        moff.push_back(mo);
        noff.push_back(no);
        mdim.push_back(a.rows());
        ndim.push_back(b.rows());
        mo += a.rows();
        no += b.rows();
        mparts.push_back(a);
        nparts.push_back(b);
    }
    if (mo != m || no != n)
        throw HomologyError("weights do not decompose the space");
    Matrix qm = stack(mparts, f, m), qn = stack(nparts, f, n);
    Matrix qm_inv = *qm.inverse(), qn_inv = *qn.inverse();

    std::vector<Matrix> sol;
    for (std::size_t w = 0; w < mdim.size(); ++w)
        for (std::size_t r = 0; r < mdim[w]; ++r)
            for (std::size_t c = 0; c < ndim[w]; ++c) {
                Matrix x(f, m, n);
                x.set_int(moff[w] + r, noff[w] + c, 1);
                sol.push_back(std::move(x));
            }
    for (std::size_t k = 0; k < mf.ops.size() && !sol.empty(); ++k) {
        Matrix a = qm * mf.ops[k] * qm_inv;
        Matrix b = qn * nf.ops[k] * qn_inv;
        Matrix cols(f, m * n, sol.size());
        for (std::size_t j = 0; j < sol.size(); ++j) {
            Matrix e = a * sol[j] - sol[j] * b;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!e.is_zero_at(r, c))
                        cols.set(r * n + c, j, e.at(r, c));
        }
        if (cols.is_zero())
            continue;
        Matrix ker = cols.kernel_basis();
        std::vector<Matrix> next;
        for (std::size_t l = 0; l < ker.cols(); ++l) {
            Matrix x(f, m, n);
            for (std::size_t j = 0; j < sol.size(); ++j)
                if (!ker.is_zero_at(j, l))
                    x.add_scaled(sol[j], ker.at(j, l));
            next.push_back(std::move(x));
        }
        sol = std::move(next);
    }
    std::vector<Matrix> out;
    for (const auto& x : sol)
        out.push_back(qm_inv * x * qn);
    return out;
}

namespace {

OperatorFamily family_of(const Representation& m)
{
    OperatorFamily fam;
    const auto& a = *m.algebra();
    for (const auto& e : a.idempotents())
        fam.weights.push_back(m.act(e.coords));
    for (const auto& g : a.radical_generators())
        fam.ops.push_back(m.act(g));
    return fam;
}

}  // namespace

std::vector<Matrix> hom_space(const Representation& m, const Representation& n)
{
    if (m.algebra() != n.algebra())
        throw HomologyError("Hom of modules over different algebras");
    if (m.dim() == 0 || n.dim() == 0)
        return {};
    return intertwiners(family_of(m), family_of(n));
}

Tristate find_isomorphism(const OperatorFamily& mf, const OperatorFamily& nf, const SearchLimits& limits)
{
    if (mf.weights.size() != nf.weights.size())
        return Tristate::no;
    const std::size_t m = mf.weights.front().rows(), n = nf.weights.front().rows();
    if (m != n)
        return Tristate::no;
    if (m == 0)
        return Tristate::yes;
    for (std::size_t w = 0; w < mf.weights.size(); ++w)
        if (mf.weights[w].rank() != nf.weights[w].rank())
            return Tristate::no;
    auto hom = intertwiners(mf, nf);
    if (hom.empty())
        return Tristate::no;
    const Field f = hom.front().field();
    // every combination has image inside the joint image and kernel containing the joint kernel
    if (Matrix::vstack(hom, f, n).rank() < n)
        return Tristate::no;
    if (Matrix::hstack(hom, f, m).rank() < m)
        return Tristate::no;
    const std::size_t r = hom.size();
    auto invertible = [&](const std::vector<Scalar>& c) {
        Matrix x(f, m, n);
        for (std::size_t k = 0; k < r; ++k)
            if (!c[k].is_zero())
                x.add_scaled(hom[k], c[k]);
        return x.rank() == m;
    };
    if (f.is_prime()) {
        double total = std::pow(static_cast<double>(f.characteristic()), static_cast<double>(r));
        if (total <= static_cast<double>(limits.attempts)) {
            std::vector<long> digits(r, 0);
            for (;;) {
                std::size_t pos = 0;
                while (pos < r && ++digits[pos] == f.characteristic())
                    digits[pos++] = 0;
                if (pos == r)
                    return Tristate::no;
                std::vector<Scalar> c;
                for (long x : digits)
                    c.emplace_back(f, x);
                if (invertible(c))
                    return Tristate::yes;
            }
        }
    }
    std::mt19937_64 rng(limits.seed);
    for (std::size_t t = 0; t < limits.attempts; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < r; ++k) {
            long v = f.is_prime() ? static_cast<long>(rng() % static_cast<std::uint64_t>(f.characteristic()))
                                  : static_cast<long>(rng() % 2001) - 1000;
            c.emplace_back(f, v);
        }
        if (invertible(c))
            return Tristate::yes;
    }
    return Tristate::undetermined;
}

Tristate is_isomorphic(const Representation& m, const Representation& n, const SearchLimits& limits)
{
    if (m.algebra() != n.algebra())
        throw HomologyError("isomorphism test across different algebras");
    if (m.dim() != n.dim())
        return Tristate::no;
    if (m.dim() == 0)
        return Tristate::yes;
    return find_isomorphism(family_of(m), family_of(n), limits);
}

Tristate is_indecomposable(const Representation& m)
{
    const std::size_t d = m.dim();
    if (d == 0)
        throw HomologyError("the zero module is not indecomposable");
    const Field f = m.field();
    auto end = hom_space(m, m);
    if (end.size() == 1)
        return Tristate::yes;
    std::vector<Matrix> nil;
    const Matrix id = Matrix::identity(f, d);
    for (const auto& x : end) {
        std::vector<Scalar> cands;
        bool use_trace = f.is_rational() || static_cast<std::int64_t>(d) % f.characteristic() != 0;
        if (use_trace) {
            Scalar tr(f);
            for (std::size_t i = 0; i < d; ++i)
                tr = tr + x.at(i, i);
            cands.push_back(tr * Scalar(f, static_cast<long>(d)).inverse());
        } else {
            if (f.characteristic() > 1024)
                return Tristate::undetermined;
            for (long l = 0; l < f.characteristic(); ++l)
                cands.emplace_back(f, l);
        }
        bool found = false;
        for (std::size_t c = 0; c < cands.size() && !found; ++c) {
            Matrix g = x;
            g.add_scaled(id, -cands[c]);
            std::size_t r = power(g, d).rank();
            if (r > 0 && r < d)
                return Tristate::no;  // Fitting: M = im g^d (+) ker g^d
            if (r == 0) {
                nil.push_back(g);
                found = true;
            } else if (c + 1 == cands.size() && cands.size() == 1 && f.is_rational()) {
                // several eigenvalues: any rational one certifies a splitting
                for (const auto& root : rational_roots(charpoly(x)))
                    cands.emplace_back(f, root);
            }
        }
        if (!found)
            return Tristate::undetermined;
    }
    // span of the nilpotent parts must be a nilpotent subalgebra
    auto flat = [&](const Matrix& x) {
        Matrix row(f, 1, d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!x.is_zero_at(i, j))
                    row.set(0, i * d + j, x.at(i, j));
        return row;
    };
    std::vector<Matrix> flats;
    for (const auto& x : nil)
        flats.push_back(flat(x));
    Matrix span = span_of(flats, f, d * d);
    std::vector<Matrix> prods;
    for (const auto& x : nil)
        for (const auto& y : nil)
            prods.push_back(flat(x * y));
    if (!span_contains(span, stack(prods, f, d * d)))
        return Tristate::undetermined;
    std::vector<Matrix> cur = nil;
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<Matrix> next;
        for (const auto& x : cur)
            for (const auto& y : nil) {
                Matrix z = x * y;
                if (!z.is_zero())
                    next.push_back(z);
            }
        if (next.empty())
            return Tristate::yes;
        // keep a basis only
        std::vector<Matrix> nf;
        for (const auto& z : next)
            nf.push_back(flat(z));
        Matrix s = row_span(stack(nf, f, d * d));
        cur.clear();
        for (std::size_t i = 0; i < s.rows(); ++i) {
            Matrix z(f, d, d);
            for (std::size_t c = 0; c < d * d; ++c)
                if (!s.is_zero_at(i, c))
                    z.set(c / d, c % d, s.at(i, c));
            cur.push_back(z);
        }
    }
    return Tristate::undetermined;
}

}  // namespace domdimlab::homology
