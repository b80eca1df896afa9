#include "domdimlab/homology.hpp"

#include <algorithm>

namespace domdimlab::homology {

using exact::row_span;
using exact::span_coordinates;

Coresolution injective_coresolution(const Representation& m, std::size_t t)
{
    Coresolution out;
    Resolution r(dual(m));
    if (t == 0)
        return out;
    r.extend(t - 1);
    for (std::size_t s = 0; s < t; ++s) {
        const CoverStep* st = r.step(s);
        if (!st) {
            out.terminated = true;
            break;
        }
        out.terms.push_back(st->vertices);
        out.cosyzygy_dims.push_back(st->syzygy.dim());
    }
    if (r.terminated())
        out.terminated = true;
    return out;
}

std::vector<bool> projective_injective_vertices(const AlgebraPtr& a)
{
    AlgebraPtr op = opposite_of(a);
    std::vector<bool> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        out.push_back(is_projective(dual(projective(op, v))));
    return out;
}

BoundedValue domdim_module(const Representation& m, std::size_t cutoff)
{
    if (cutoff < 1)
        throw HomologyError("cutoff must be >= 1");
    auto pi = projective_injective_vertices(m.algebra());
    Resolution r(dual(m));
    for (std::size_t t = 0; t < cutoff; ++t) {
        r.extend(t);
        const CoverStep* st = r.step(t);
        if (!st)
            break;
        for (auto v : st->vertices)
            if (!pi[v])
                return BoundedValue::finite(t);
    }
    return BoundedValue::at_least(cutoff);
}

BoundedValue domdim(const AlgebraPtr& a, std::size_t cutoff)
{
    a->require_nonsemisimple();
    return domdim_module(regular(a), cutoff);
}

bool is_selfinjective(const AlgebraPtr& a)
{
    auto pi = projective_injective_vertices(a);
    return std::all_of(pi.begin(), pi.end(), [](bool b) { return b; });
}

BoundedValue phi(const Representation& m, std::size_t cutoff)
{
    if (cutoff < 1)
        throw HomologyError("cutoff must be >= 1");
    if (is_projective(m))
        throw HomologyError("phi is undefined on projective modules");
    return first_ext_degree(m, m, cutoff);
}

DeltaResult delta(const AlgebraPtr& a, std::size_t cutoff, const std::vector<Representation>& witnesses,
                  bool complete_witnesses)
{
    if (cutoff < 1)
        throw HomologyError("cutoff must be >= 1");
    a->require_nonsemisimple();
    if (!is_selfinjective(a))
        return {first_ext_degree(dual_regular(a), regular(a), cutoff), true};
    std::uint64_t best = 0;
    bool any = false;
    for (const auto& w : witnesses) {
        if (w.algebra() != a)
            throw HomologyError("witness over a different algebra");
        if (is_projective(w))
            continue;
        any = true;
        BoundedValue p = phi(w, cutoff);
        if (p.is_at_least())
            return {BoundedValue::at_least(cutoff), complete_witnesses};
        best = std::max(best, p.value());
    }
    if (!any)
        throw HomologyError("selfinjective algebra: delta needs a non-projective witness family");
    if (complete_witnesses)
        return {BoundedValue::finite(best), true};
    return {BoundedValue::at_least(best), false};
}

Ideal ideal_module(const AlgebraPtr& a, const std::vector<Matrix>& generators)
{
    const Field f = a->field();
    const std::size_t d = a->dim();
    if (generators.empty())
        throw HomologyError("ideal needs at least one generator");
    for (const auto& g : generators)
        if (g.is_zero())
            throw HomologyError("ideal generator is zero");
    Matrix s = row_span(Matrix::vstack(generators, f, d));
    for (;;) {
        std::vector<Matrix> parts{s};
        for (std::size_t i = 0; i < d; ++i) {
            parts.push_back(s * a->right_mult(i));
            parts.push_back(s * a->left_mult(i));
        }
        Matrix next = row_span(Matrix::vstack(parts, f, d));
        if (next.rows() == s.rows())
            break;
        s = next;
    }
    if (s.rows() == d)
        throw HomologyError("ideal is the whole algebra");
    Representation reg = regular(a);
    Representation x = submodule(reg, s);
    x.set_name("X");
    Representation q = quotient(reg, s).module;
    q.set_name("A/X");
    return {s, x, q};
}

Representation radical_power(const AlgebraPtr& a, std::size_t k)
{
    Matrix s = a->radical_power(k);
    if (s.rows() == 0)
        return Representation::zero(a);
    Representation m = submodule(regular(a), s);
    m.set_name("J^" + std::to_string(k));
    return m;
}

IdealRigidity check_ideal_rigidity(const AlgebraPtr& a, const Ideal& x)
{
    if (quivalg::is_symmetric(*a) != Tristate::yes)
        throw HomologyError("ideal rigidity check needs a certified symmetric algebra");
    if (x.span.rows() == 0 || x.span.rows() >= a->dim())
        throw HomologyError("ideal must be nonzero and proper");
    IdealRigidity out;
    out.hom_x_quotient = dim_hom(x.module, x.quotient);
    out.ext1 = ext_dims(x.module, x.module, 1).dims[1];
    out.local = quivalg::is_local(*a);
    out.holds = (out.hom_x_quotient == 0 || out.ext1 != 0) && (!out.local || out.hom_x_quotient != 0);
    return out;
}

AlgebraPtr endomorphism_algebra(const std::vector<Representation>& summands)
{
    if (summands.empty())
        throw HomologyError("endomorphism algebra of an empty list");
    const AlgebraPtr& a = summands.front().algebra();
    const Field f = a->field();
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (summands[i].algebra() != a)
            throw HomologyError("summands over different algebras");
        Tristate t = is_indecomposable(summands[i]);
        if (t == Tristate::no)
            throw HomologyError("summand " + std::to_string(i) + " is decomposable");
        if (t == Tristate::undetermined)
            throw HomologyError("indecomposability of summand " + std::to_string(i) + " is undetermined");
    }
    std::vector<std::size_t> off;
    std::size_t m = 0;
    for (const auto& s : summands) {
        off.push_back(m);
        m += s.dim();
    }

    quivalg::AlgebraTable::Data data;
    data.field = f;
    data.provenance = "endomorphism algebra";
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j) {
            auto h = hom_space(summands[i], summands[j]);
            for (std::size_t t = 0; t < h.size(); ++t) {
                Matrix x(f, m, m);
                x.set_block(off[i], off[j], h[t]);
                basis.push_back(std::move(x));
                data.basis.push_back("h" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t));
            }
        }
    const std::size_t r = basis.size();
    auto flat = [&](const Matrix& x) {
        Matrix row(f, 1, m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!x.is_zero_at(i, j))
                    row.set(0, i * m + j, x.at(i, j));
        return row;
    };
    std::vector<Matrix> flats;
    for (const auto& x : basis)
        flats.push_back(flat(x));
    Matrix span = row_span(Matrix::vstack(flats, f, m * m));
    Matrix to_basis = *span_coordinates(span, Matrix::vstack(flats, f, m * m)).inverse();
    auto coords = [&](const Matrix& x) { return span_coordinates(span, flat(x)) * to_basis; };

    // f * g = f o g, which is G F on row vectors
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix prod = basis[j] * basis[i];
            if (prod.is_zero())
                continue;
            Matrix c = coords(prod);
            for (std::size_t k = 0; k < r; ++k)
                if (!c.is_zero_at(0, k))
                    data.constants.push_back({i, j, k, c.at(0, k)});
        }
    data.unit = Matrix(f, 1, r);
    for (std::size_t i = 0; i < summands.size(); ++i) {
        Matrix e(f, m, m);
        e.set_block(off[i], off[i], Matrix::identity(f, summands[i].dim()));
        Matrix c = coords(e);
        std::string label = summands[i].name().empty() ? "M" + std::to_string(i) : summands[i].name();
        data.idempotents.push_back({label, c});
        data.unit = data.unit + c;
    }
    return quivalg::AlgebraTable::create(std::move(data));
}

Tristate is_gendo_symmetric(const AlgebraPtr& a, std::size_t cutoff, const SearchLimits& limits)
{
    BoundedValue dd = domdim(a, cutoff);
    if (dd.is_finite() && dd.value() < 2)
        return Tristate::no;
    if (dd.is_at_least() && dd.value() < 2)
        return Tristate::undetermined;
    auto pi = projective_injective_vertices(a);
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < pi.size(); ++v)
        if (pi[v])
            verts.push_back(v);
    if (verts.empty())
        return Tristate::no;
    const Field f = a->field();
    const std::size_t d = a->dim();
    Matrix e = a->zero_element();
    for (auto v : verts)
        e = e + a->idempotents()[v].coords;

    Matrix s = row_span(a->left_action(e));   // eA
    Matrix t = row_span(a->right_action(e));  // Ae
    if (s.rows() != t.rows())
        return Tristate::no;
    std::vector<Matrix> corner;
    for (auto u : verts)
        for (auto v : verts)
            corner.push_back(a->corner_span(u, v));
    Matrix eae = row_span(Matrix::vstack(corner, f, d));

    // operators on eA: x -> u x and x -> x a; on D(Ae): f -> u.f and f -> f.a
    auto left_x = [&](const Matrix& u) { return span_coordinates(s, s * a->left_action(u)); };
    auto right_x = [&](const Matrix& x) { return span_coordinates(s, s * a->right_action(x)); };
    auto left_y = [&](const Matrix& u) { return span_coordinates(t, t * a->right_action(u)).transpose(); };
    auto right_y = [&](const Matrix& x) { return span_coordinates(t, t * a->left_action(x)).transpose(); };

    OperatorFamily fx, fy;
    for (auto u : verts)
        for (std::size_t v = 0; v < a->vertex_count(); ++v) {
            const Matrix& eu = a->idempotents()[u].coords;
            const Matrix& ev = a->idempotents()[v].coords;
            fx.weights.push_back(left_x(eu) * right_x(ev));
            fy.weights.push_back(left_y(eu) * right_y(ev));
        }
    for (std::size_t i = 0; i < eae.rows(); ++i) {
        fx.ops.push_back(left_x(eae.row(i)));
        fy.ops.push_back(left_y(eae.row(i)));
    }
    for (const auto& g : a->radical_generators()) {
        fx.ops.push_back(right_x(g));
        fy.ops.push_back(right_y(g));
    }
    return find_isomorphism(fx, fy, limits);
}

}  // namespace domdimlab::homology
