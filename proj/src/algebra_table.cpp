#include "domdimlab/quivalg.hpp"

#include <algorithm>
#include <map>

namespace domdimlab::quivalg {

using exact::row_span;
using exact::span_contains;
using exact::span_coordinates;

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

void accumulate(std::map<std::size_t, Scalar>& acc, std::size_t k, const Scalar& v)
{
    auto it = acc.find(k);
    if (it == acc.end())
        acc.emplace(k, v);
    else
        it->second = it->second + v;
}

bool same_sparse(const std::map<std::size_t, Scalar>& a, const std::map<std::size_t, Scalar>& b)
{
    auto nz = [](const std::map<std::size_t, Scalar>& m) {
        std::vector<std::pair<std::size_t, std::string>> v;
        for (const auto& [k, s] : m)
            if (!s.is_zero())
                v.emplace_back(k, s.str());
        return v;
    };
    return nz(a) == nz(b);
}

bool is_nilpotent_element(const AlgebraTable& a, Matrix x)
{
    std::size_t power = 1;
    while (power <= a.dim() + 1) {
        x = a.multiply(x, x);
        power *= 2;
        if (x.is_zero())
            return true;
    }
    return x.is_zero();
}

}  // namespace

AlgebraPtr AlgebraTable::create(Data data)
{
    const std::size_t d = data.basis.size();
    if (d == 0)
        throw AlgebraError("algebra must have positive dimension");
    std::shared_ptr<AlgebraTable> t(new AlgebraTable());
    t->field_ = data.field;
    t->basis_ = std::move(data.basis);
    t->provenance_ = std::move(data.provenance);
    t->right_.assign(d, Matrix(t->field_, d, d));
    t->left_.assign(d, Matrix(t->field_, d, d));

    std::vector<std::vector<SparseRow>> prod(d, std::vector<SparseRow>(d));
    {
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> merged;
        for (const auto& sc : data.constants) {
            if (sc.left >= d || sc.right >= d || sc.result >= d)
                throw AlgebraError("structure constant index out of range");
            if (!(sc.value.field() == t->field_))
                throw AlgebraError("structure constant over the wrong field");
            auto key = std::make_tuple(sc.left, sc.right, sc.result);
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, sc.value);
            else
                it->second = it->second + sc.value;
        }
        for (const auto& [key, v] : merged) {
            if (v.is_zero())
                continue;
            auto [i, j, k] = key;
            t->right_[j].set(i, k, v);
            t->left_[i].set(j, k, v);
            prod[i][j].emplace_back(k, v);
        }
    }

    // (b_i b_j) b_k = b_i (b_j b_k)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::map<std::size_t, Scalar> lhs, rhs;
                for (const auto& [l, c] : prod[i][j])
                    for (const auto& [m, c2] : prod[l][k])
                        accumulate(lhs, m, c * c2);
                for (const auto& [l, c] : prod[j][k])
                    for (const auto& [m, c2] : prod[i][l])
                        accumulate(rhs, m, c * c2);
                if (!same_sparse(lhs, rhs))
                    throw AlgebraError("associativity fails on basis triple (" + t->basis_[i] + ", " + t->basis_[j] +
                                       ", " + t->basis_[k] + ")");
            }

    if (data.unit.rows() != 1 || data.unit.cols() != d)
        throw AlgebraError("unit must be a 1 x dim row");
    t->unit_ = data.unit;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix b = t->basis_element(i);
        if (!(t->multiply(t->unit_, b) == b) || !(t->multiply(b, t->unit_) == b))
            throw AlgebraError("unit does not act as identity on " + t->basis_[i]);
    }

    if (data.idempotents.empty())
        throw AlgebraError("at least one idempotent is required");
    Matrix sum = t->zero_element();
    for (std::size_t i = 0; i < data.idempotents.size(); ++i) {
        const auto& e = data.idempotents[i].coords;
        if (e.rows() != 1 || e.cols() != d)
            throw AlgebraError("idempotent must be a 1 x dim row");
        if (!(t->multiply(e, e) == e) || e.is_zero())
            throw AlgebraError("idempotent for vertex " + data.idempotents[i].vertex + " is not a nonzero idempotent");
        for (std::size_t j = 0; j < data.idempotents.size(); ++j)
            if (i != j && !t->multiply(e, data.idempotents[j].coords).is_zero())
                throw AlgebraError("idempotents " + data.idempotents[i].vertex + " and " +
                                   data.idempotents[j].vertex + " are not orthogonal");
        sum = sum + e;
        for (std::size_t j = 0; j < i; ++j)
            if (data.idempotents[j].vertex == data.idempotents[i].vertex)
                throw AlgebraError("duplicate vertex label " + data.idempotents[i].vertex);
    }
    if (!(sum == t->unit_))
        throw AlgebraError("idempotents do not sum to the unit");
    t->idempotents_ = std::move(data.idempotents);

    if (data.radical) {
        Matrix rad = data.radical->rows() ? row_span(*data.radical) : Matrix(t->field_, 0, d);
        t->verify_radical(rad);
        t->radical_ = rad;
    } else {
        Matrix rad = t->compute_radical();
        t->verify_radical(rad);
        t->radical_ = rad;
    }
    t->named_ = std::move(data.named_elements);
    return t;
}

Matrix AlgebraTable::basis_element(std::size_t i) const { return Matrix::unit_row(field_, dim(), i); }

Matrix AlgebraTable::right_action(const Matrix& y) const
{
    Matrix out(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!y.is_zero_at(0, i))
            out.add_scaled(right_[i], y.at(0, i));
    return out;
}

Matrix AlgebraTable::left_action(const Matrix& y) const
{
    Matrix out(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!y.is_zero_at(0, i))
            out.add_scaled(left_[i], y.at(0, i));
    return out;
}

Matrix AlgebraTable::multiply(const Matrix& x, const Matrix& y) const
{
    Matrix out(field_, 1, dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!y.is_zero_at(0, i))
            out.add_scaled(x * right_[i], y.at(0, i));
    return out;
}

std::size_t AlgebraTable::vertex_index(const std::string& name) const
{
    for (std::size_t i = 0; i < idempotents_.size(); ++i)
        if (idempotents_[i].vertex == name)
            return i;
    throw AlgebraError("unknown vertex '" + name + "'");
}

void AlgebraTable::require_nonsemisimple() const
{
    if (is_semisimple())
        throw AlgebraError("algebra is semisimple; analysis requires a non-semisimple algebra");
    if (dim() < 2)
        throw AlgebraError("algebra of dimension < 2");
}

Matrix AlgebraTable::corner_span(std::size_t u, std::size_t v) const
{
    Matrix m = left_action(idempotents_[u].coords) * right_action(idempotents_[v].coords);
    return row_span(m);
}

Matrix AlgebraTable::compute_radical() const
{
    std::vector<Matrix> parts;
    const std::size_t n = idempotents_.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            Matrix c = corner_span(u, v);
            if (u != v) {
                parts.push_back(c);
                continue;
            }
            const Matrix& e = idempotents_[u].coords;
            const std::size_t cd = c.rows();
            for (std::size_t r = 0; r < cd; ++r) {
                Matrix b = c.row(r);
                std::vector<Scalar> candidates;
                bool use_trace = field_.is_rational() || (static_cast<std::int64_t>(cd) % field_.characteristic()) != 0;
                if (use_trace) {
                    Matrix t = span_coordinates(c, c * left_action(b));
                    Scalar tr(field_);
                    for (std::size_t i = 0; i < cd; ++i)
                        tr = tr + t.at(i, i);
                    candidates.push_back(tr * Scalar(field_, static_cast<long>(cd)).inverse());
                } else {
                    if (field_.characteristic() > 1024)
                        throw AlgebraError("radical computation needs an explicit radical over large prime fields");
                    for (long l = 0; l < field_.characteristic(); ++l)
                        candidates.emplace_back(field_, l);
                }
                bool found = false;
                for (const auto& lam : candidates) {
                    Matrix x = b;
                    x.add_scaled(e, -lam);
                    if (is_nilpotent_element(*this, x)) {
                        parts.push_back(x);
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw AlgebraError("top at vertex " + idempotents_[u].vertex + " is not split over " +
                                       field_.name());
            }
        }
    Matrix all = Matrix::vstack(parts, field_, dim());
    return all.rows() ? row_span(all) : Matrix(field_, 0, dim());
}

void AlgebraTable::verify_radical(const Matrix& rad) const
{
    const std::size_t d = dim();
    if (rad.rows() > 0) {
        std::vector<Matrix> prods;
        for (std::size_t i = 0; i < d; ++i) {
            prods.push_back(rad * right_[i]);
            prods.push_back(rad * left_[i]);
        }
        if (!span_contains(rad, Matrix::vstack(prods, field_, d)))
            throw AlgebraError("radical is not a two-sided ideal (algebra not basic, or wrong radical)");
    }
    std::vector<Matrix> powers{Matrix::identity(field_, d), rad};
    Matrix cur = rad;
    std::vector<Matrix> rad_actions;
    for (std::size_t r = 0; r < rad.rows(); ++r)
        rad_actions.push_back(right_action(rad.row(r)));
    while (cur.rows() > 0) {
        if (powers.size() > d + 2)
            throw AlgebraError("radical candidate is not nilpotent");
        std::vector<Matrix> parts;
        for (const auto& ra : rad_actions)
            parts.push_back(cur * ra);
        Matrix next = Matrix::vstack(parts, field_, d);
        cur = next.rows() ? row_span(next) : Matrix(field_, 0, d);
        if (cur.rows() > 0 && cur.rows() == powers.back().rows())
            throw AlgebraError("radical candidate is not nilpotent");
        powers.push_back(cur);
    }
    if (d - rad.rows() != idempotents_.size())
        throw AlgebraError("algebra is not basic and split: dim A/J = " + std::to_string(d - rad.rows()) + " but " +
                           std::to_string(idempotents_.size()) + " primitive idempotents");
    for (const auto& e : idempotents_)
        if (rad.rows() && span_contains(rad, e.coords))
            throw AlgebraError("idempotent " + e.vertex + " lies in the radical");
    std::lock_guard lock(powers_mutex_);
    powers_ = std::move(powers);
}

Matrix AlgebraTable::radical_power(std::size_t k) const
{
    std::lock_guard lock(powers_mutex_);
    if (k < powers_.size())
        return powers_[k];
    return Matrix(field_, 0, dim());
}

std::size_t AlgebraTable::loewy_length() const
{
    std::lock_guard lock(powers_mutex_);
    for (std::size_t k = 0; k < powers_.size(); ++k)
        if (powers_[k].rows() == 0)
            return k;
    return powers_.size();
}

const std::vector<Matrix>& AlgebraTable::radical_generators() const
{
    std::call_once(gens_once_, [this] {
        const std::size_t n = idempotents_.size();
        Matrix j1 = radical_power(1), j2 = radical_power(2);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                Matrix lr = left_action(idempotents_[u].coords) * right_action(idempotents_[v].coords);
                Matrix block1 = j1.rows() ? j1 * lr : Matrix(field_, 0, dim());
                Matrix block2 = j2.rows() ? j2 * lr : Matrix(field_, 0, dim());
                Matrix have = block2.rows() ? row_span(block2) : Matrix(field_, 0, dim());
                for (std::size_t r = 0; r < block1.rows(); ++r) {
                    Matrix x = block1.row(r);
                    if (x.is_zero() || (have.rows() && span_contains(have, x)))
                        continue;
                    gens_.push_back(x);
                    have = exact::span_union(have, x);
                }
            }
    });
    return gens_;
}

std::vector<StructureConstant> AlgebraTable::structure_constants() const
{
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                if (!right_[j].is_zero_at(i, k))
                    out.push_back({i, j, k, right_[j].at(i, k)});
    return out;
}

bool AlgebraTable::operator==(const AlgebraTable& o) const
{
    if (!(field_ == o.field_) || basis_ != o.basis_ || !(unit_ == o.unit_) || idempotents_.size() != o.idempotents_.size())
        return false;
    for (std::size_t i = 0; i < idempotents_.size(); ++i)
        if (idempotents_[i].vertex != o.idempotents_[i].vertex || !(idempotents_[i].coords == o.idempotents_[i].coords))
            return false;
    return right_ == o.right_;
}

}  // namespace domdimlab::quivalg
