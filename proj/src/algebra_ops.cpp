#include "domdimlab/quivalg.hpp"

#include <cmath>
#include <random>

namespace domdimlab::quivalg {

using exact::row_span;
using exact::span_coordinates;

namespace {

Matrix kron_row(const Matrix& x, const Matrix& y)
{
    Matrix out(x.field(), 1, x.cols() * y.cols());
    for (std::size_t i = 0; i < x.cols(); ++i) {
        if (x.is_zero_at(0, i))
            continue;
        Scalar s = x.at(0, i);
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (!y.is_zero_at(0, j))
                out.set(0, i * y.cols() + j, s * y.at(0, j));
    }
    return out;
}

AlgebraTable::Data data_of(const AlgebraTable& a)
{
    AlgebraTable::Data d;
    d.field = a.field();
    d.basis = a.basis_names();
    d.constants = a.structure_constants();
    d.unit = a.unit();
    d.idempotents = a.idempotents();
    d.radical = a.radical();
    d.named_elements = a.named_elements();
    d.provenance = a.provenance();
    return d;
}

}  // namespace

AlgebraPtr opposite(const AlgebraTable& a)
{
    AlgebraTable::Data d = data_of(a);
    for (auto& c : d.constants)
        std::swap(c.left, c.right);
    d.provenance = "opposite(" + a.provenance() + ")";
    if (a.provenance().rfind("opposite(", 0) == 0)
        d.provenance = a.provenance().substr(9, a.provenance().size() - 10);
    return AlgebraTable::create(std::move(d));
}

Enveloping enveloping(const AlgebraTable& a, std::size_t size_limit)
{
    const std::size_t n = a.dim();
    if (n * n > size_limit)
        throw AlgebraError("enveloping algebra of dimension " + std::to_string(n * n) + " exceeds the size limit " +
                           std::to_string(size_limit));
    const Field f = a.field();
    auto sc = a.structure_constants();
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> prod(
        n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
    for (const auto& c : sc)
        prod[c.left][c.right].emplace_back(c.result, c.value);

    AlgebraTable::Data d;
    d.field = f;
    d.provenance = "enveloping(" + a.provenance() + ")";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d.basis.push_back(a.basis_names()[i] + "@" + a.basis_names()[j]);
    // (a (x) b)(a' (x) b') = aa' (x) b'b
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (const auto& [m, c1] : prod[i][k])
                        for (const auto& [p, c2] : prod[l][j])
                            d.constants.push_back({i * n + j, k * n + l, m * n + p, c1 * c2});
    d.unit = kron_row(a.unit(), a.unit());
    for (const auto& e : a.idempotents())
        for (const auto& g : a.idempotents())
            d.idempotents.push_back({e.vertex + "@" + g.vertex, kron_row(e.coords, g.coords)});
    std::vector<Matrix> rad;
    const Matrix& j = a.radical();
    for (std::size_t r = 0; r < j.rows(); ++r)
        for (std::size_t b = 0; b < n; ++b) {
            rad.push_back(kron_row(j.row(r), a.basis_element(b)));
            rad.push_back(kron_row(a.basis_element(b), j.row(r)));
        }
    d.radical = rad.empty() ? Matrix(f, 0, n * n) : Matrix::vstack(rad, f, n * n);

    Enveloping out;
    out.algebra = AlgebraTable::create(std::move(d));
    // x . (b_i (x) b_j) = b_j x b_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
            out.bimodule_action.push_back(a.left_mult(jj) * a.right_mult(i));
    return out;
}

AlgebraPtr nakayama_to_table(const nakayama::NakAlgebra& na, Field field, std::size_t size_limit)
{
    const int n = na.n();
    if (static_cast<std::size_t>(na.dimension()) > size_limit)
        throw AlgebraError("Nakayama algebra of dimension " + std::to_string(na.dimension()) +
                           " exceeds the size limit");
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(na.c(i));
    const std::size_t d = offset.back();
    auto idx = [&](int i, int t) { return offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(t); };

    AlgebraTable::Data data;
    data.field = field;
    data.provenance = "nakayama " + na.str();
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < na.c(i); ++t)
            data.basis.push_back(t == 0 ? "e" + std::to_string(i) : "w" + std::to_string(i) + "_" + std::to_string(t));
    // w_{i,t} w_{j,u} = w_{i,t+u} when the path of w_{i,t} ends at j
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < na.c(i); ++t) {
            long end = i + t;
            if (!na.is_cycle() && end >= n)
                continue;
            int j = na.normalize(end);
            for (int u = 0; u < na.c(j) && t + u < na.c(i); ++u)
                data.constants.push_back({idx(i, t), idx(j, u), idx(i, t + u), Scalar(field, 1L)});
        }
    data.unit = Matrix(field, 1, d);
    std::vector<std::size_t> rad;
    for (int i = 0; i < n; ++i) {
        Matrix e = Matrix::unit_row(field, d, idx(i, 0));
        data.idempotents.push_back({"e" + std::to_string(i), e});
        data.unit = data.unit + e;
        for (int t = 1; t < na.c(i); ++t)
            rad.push_back(idx(i, t));
    }
    data.radical = Matrix::identity(field, d).select_rows(rad);
    return AlgebraTable::create(std::move(data));
}

AlgebraPtr corner_algebra(const AlgebraTable& a, const std::vector<std::size_t>& vertices)
{
    if (vertices.empty())
        throw AlgebraError("corner algebra needs at least one vertex");
    const Field f = a.field();
    std::vector<Matrix> blocks;
    for (std::size_t u : vertices)
        for (std::size_t v : vertices)
            blocks.push_back(a.corner_span(u, v));
    Matrix basis = row_span(Matrix::vstack(blocks, f, a.dim()));
    const std::size_t m = basis.rows();

    AlgebraTable::Data data;
    data.field = f;
    data.provenance = "corner(" + a.provenance() + ")";
    for (std::size_t r = 0; r < m; ++r) {
        Matrix row = basis.row(r);
        std::string name = "c" + std::to_string(r);
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (row == a.basis_element(c))
                name = a.basis_names()[c];
        data.basis.push_back(name);
    }
    for (std::size_t i = 0; i < m; ++i) {
        Matrix ri = a.right_action(basis.row(i));
        Matrix coords = span_coordinates(basis, basis * ri);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                if (!coords.is_zero_at(k, l))
                    data.constants.push_back({k, i, l, coords.at(k, l)});
    }
    data.unit = Matrix(f, 1, m);
    for (std::size_t v : vertices) {
        const auto& e = a.idempotents()[v];
        Matrix c = span_coordinates(basis, e.coords);
        data.idempotents.push_back({e.vertex, c});
        data.unit = data.unit + c;
    }
    Matrix e = a.zero_element();
    for (std::size_t v : vertices)
        e = e + a.idempotents()[v].coords;
    if (a.radical().rows()) {
        Matrix eje = a.radical() * (a.left_action(e) * a.right_action(e));
        Matrix rows = eje.nonzero_rows();
        data.radical = rows.rows() ? span_coordinates(basis, row_span(rows)) : Matrix(f, 0, m);
    } else {
        data.radical = Matrix(f, 0, m);
    }
    return AlgebraTable::create(std::move(data));
}

AlgebraPtr group_algebra(Field field, const std::vector<std::string>& names,
                         const std::vector<std::vector<std::size_t>>& table, std::string provenance)
{
    const std::size_t n = names.size();
    if (table.size() != n)
        throw AlgebraError("group table has the wrong size");
    std::optional<std::size_t> one;
    for (std::size_t g = 0; g < n && !one; ++g) {
        bool ok = table[g].size() == n;
        for (std::size_t h = 0; h < n && ok; ++h)
            ok = table[g][h] == h && table[h][g] == h;
        if (ok)
            one = g;
    }
    if (!one)
        throw AlgebraError("group table has no identity");
    AlgebraTable::Data d;
    d.field = field;
    d.basis = names;
    d.provenance = std::move(provenance);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            if (table[g][h] >= n)
                throw AlgebraError("group table entry out of range");
            d.constants.push_back({g, h, table[g][h], Scalar(field, 1L)});
        }
    d.unit = Matrix::unit_row(field, n, *one);
    d.idempotents.push_back({"v", d.unit});
    for (std::size_t g = 0; g < n; ++g)
        d.named_elements[names[g]] = Matrix::unit_row(field, n, g);
    return AlgebraTable::create(std::move(d));
}

bool is_local(const AlgebraTable& a) { return a.vertex_count() == 1; }

bool is_selfinjective(const AlgebraTable& a)
{
    // D(Ae_v) is projective iff its dimension equals that of its projective cover.
    const Field f = a.field();
    std::vector<std::size_t> proj_dim;
    for (const auto& e : a.idempotents())
        proj_dim.push_back(a.left_action(e.coords).rank());
    const Matrix& j = a.radical();
    for (const auto& ev : a.idempotents()) {
        Matrix s = row_span(a.right_action(ev.coords));  // basis of A e_v
        const std::size_t m = s.rows();
        auto act = [&](const Matrix& x) { return span_coordinates(s, s * a.left_action(x)).transpose(); };
        std::vector<Matrix> rad_parts;
        for (std::size_t r = 0; r < j.rows(); ++r)
            rad_parts.push_back(act(j.row(r)));
        Matrix rad = rad_parts.empty() ? Matrix(f, 0, m) : row_span(Matrix::vstack(rad_parts, f, m));
        std::size_t cover = 0;
        for (std::size_t u = 0; u < a.vertex_count(); ++u) {
            Matrix pu = act(a.idempotents()[u].coords);
            std::size_t top = pu.rank() - (rad.rows() ? (rad * pu).rank() : 0);
            cover += top * proj_dim[u];
        }
        if (cover != m)
            return false;
    }
    return true;
}

Tristate is_symmetric(const AlgebraTable& a, const SymmetricFormSearch& search)
{
    if (!is_selfinjective(a))
        return Tristate::no;
    const Field f = a.field();
    const std::size_t d = a.dim();
    // lambda (column) must vanish on every commutator b_i b_j - b_j b_i
    std::vector<Matrix> comm;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix bi = a.basis_element(i);
        for (std::size_t jx = i + 1; jx < d; ++jx) {
            Matrix bj = a.basis_element(jx);
            Matrix c = a.multiply(bi, bj) - a.multiply(bj, bi);
            if (!c.is_zero())
                comm.push_back(c);
        }
    }
    Matrix lambdas = comm.empty() ? Matrix::identity(f, d) : Matrix::vstack(comm, f, d).kernel_basis();
    const std::size_t r = lambdas.cols();
    if (r == 0)
        return Tristate::no;
    // Gram matrix of lambda: G[i][j] = lambda(b_i b_j) = (b_i * R_j) . lambda
    auto gram = [&](const Matrix& lambda) {
        Matrix g(f, d, d);
        for (std::size_t jx = 0; jx < d; ++jx) {
            Matrix col = a.right_mult(jx) * lambda;
            g.set_block(0, jx, col);
        }
        return g;
    };
    std::vector<Matrix> grams;
    for (std::size_t k = 0; k < r; ++k)
        grams.push_back(gram(lambdas.block(0, k, d, 1)));
    if (Matrix::hstack(grams, f, d).left_kernel_basis().rows() > 0)
        return Tristate::no;

    auto try_combo = [&](const std::vector<Scalar>& coeffs) {
        Matrix g(f, d, d);
        for (std::size_t k = 0; k < r; ++k)
            if (!coeffs[k].is_zero())
                g.add_scaled(grams[k], coeffs[k]);
        return g.rank() == d;
    };
    if (f.is_prime()) {
        // exhaustive when the coefficient space is small enough
        double total = std::pow(static_cast<double>(f.characteristic()), static_cast<double>(r));
        if (total <= static_cast<double>(search.attempts)) {
            std::vector<long> digits(r, 0);
            for (;;) {
                std::size_t pos = 0;
                while (pos < r && ++digits[pos] == f.characteristic())
                    digits[pos++] = 0;
                if (pos == r)
                    break;
                std::vector<Scalar> c;
                for (long x : digits)
                    c.emplace_back(f, x);
                if (try_combo(c))
                    return Tristate::yes;
            }
            return Tristate::no;
        }
    }
    std::mt19937_64 rng(search.seed);
    for (std::size_t t = 0; t < search.attempts; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < r; ++k) {
            long v = f.is_prime() ? static_cast<long>(rng() % static_cast<std::uint64_t>(f.characteristic()))
                                  : static_cast<long>(rng() % 2001) - 1000;
            c.emplace_back(f, v);
        }
        if (try_combo(c))
            return Tristate::yes;
    }
    return Tristate::undetermined;
}

}  // namespace domdimlab::quivalg
