#include "domdimlab/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace domdimlab::exact {

namespace {

bool is_prime_number(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0)
        nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1)
        throw MathError("element not invertible modulo " + std::to_string(p));
    return t < 0 ? t + p : t;
}

struct FpOps {
    using T = std::int64_t;
    std::int64_t p;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const
    {
        T r = a + b;
        return r >= p ? r - p : r;
    }
    T sub(T a, T b) const
    {
        T r = a - b;
        return r < 0 ? r + p : r;
    }
    T mul(T a, T b) const { return (a * b) % p; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const { return mod_inverse(a, p); }
    // a -= f * b
    void submul(T& a, T f, T b) const { a = sub(a, mul(f, b)); }
    T from_mpq(const mpq_class& q) const
    {
        mpz_class num = q.get_num() % p;
        mpz_class den = q.get_den() % p;
        std::int64_t n = num.get_si(), d = den.get_si();
        if (n < 0)
            n += p;
        if (d < 0)
            d += p;
        return mul(n, inv(d));
    }
    mpq_class to_mpq(T a) const { return mpq_class(static_cast<long>(a)); }
};

struct QOps {
    using T = mpq_class;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    void submul(T& a, const T& f, const T& b) const
    {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b.get_mpq_t());
        mpq_sub(a.get_mpq_t(), a.get_mpq_t(), tmp.get_mpq_t());
    }
    T from_mpq(const mpq_class& q) const { return q; }
    mpq_class to_mpq(const T& a) const { return a; }
};

template <class Ops, class T>
RrefResult rref_inplace(const Ops& ops, std::vector<T>& a, std::size_t R, std::size_t C, Field f)
{
    RrefResult res{Matrix(f, 0, 0), 0, {}};
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (!ops.is_zero(a[i * C + c])) {
                piv = i;
                break;
            }
        if (piv == R)
            continue;
        if (piv != r)
            for (std::size_t j = c; j < C; ++j)
                std::swap(a[piv * C + j], a[r * C + j]);
        T inv = ops.inv(a[r * C + c]);
        for (std::size_t j = c; j < C; ++j)
            a[r * C + j] = ops.mul(a[r * C + j], inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || ops.is_zero(a[i * C + c]))
                continue;
            T factor = a[i * C + c];
            for (std::size_t j = c; j < C; ++j)
                if (!ops.is_zero(a[r * C + j]))
                    ops.submul(a[i * C + j], factor, a[r * C + j]);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31) || !is_prime_number(p))
        throw MathError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (t == "Q" || t == "QQ" || t == "RATIONAL")
        return rational();
    std::string digits;
    if (t.size() > 1 && t[0] == 'F' && t[1] != '(')
        digits = t.substr(1);
    else if (t.rfind("GF(", 0) == 0 && t.back() == ')')
        digits = t.substr(3, t.size() - 4);
    else if (t.rfind("F(", 0) == 0 && t.back() == ')')
        digits = t.substr(2, t.size() - 3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10)
        throw MathError("unknown field '" + text + "'");
    return prime(std::stoll(digits));
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f, long v) : field_(f), v_(v) { reduce(); }

Scalar::Scalar(Field f, const mpq_class& v) : field_(f), v_(v) { reduce(); }

void Scalar::reduce()
{
    v_.canonicalize();
    if (field_.is_prime())
        v_ = FpOps{field_.characteristic()}.from_mpq(v_);
}

Scalar Scalar::parse(Field f, const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t += ch;
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0)
        throw MathError("malformed scalar '" + text + "'");
    if (q.get_den() == 0)
        throw MathError("zero denominator in scalar '" + text + "'");
    q.canonicalize();
    if (f.is_prime() && q.get_den() % f.characteristic() == 0)
        throw MathError("denominator of '" + text + "' vanishes in " + f.name());
    return Scalar(f, q);
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(field_, mpq_class(v_ + o.v_)); }
Scalar Scalar::operator-(const Scalar& o) const { return Scalar(field_, mpq_class(v_ - o.v_)); }
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(field_, mpq_class(v_ * o.v_)); }
Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw MathError("division by zero");
    if (field_.is_prime())
        return Scalar(field_, static_cast<long>(mod_inverse(v_.get_num().get_si(), field_.characteristic())));
    return Scalar(field_, mpq_class(1 / v_));
}

// ---------------------------------------------------------------- Matrix

template <class Fn>
decltype(auto) Matrix::visit(Fn&& fn)
{
    if (field_.is_prime())
        return fn(FpOps{field_.characteristic()}, std::get<0>(data_));
    return fn(QOps{}, std::get<1>(data_));
}

template <class Fn>
decltype(auto) Matrix::visit(Fn&& fn) const
{
    if (field_.is_prime())
        return fn(FpOps{field_.characteristic()}, std::get<0>(data_));
    return fn(QOps{}, std::get<1>(data_));
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols)
{
    if (f.is_prime())
        data_ = std::vector<std::int64_t>(rows * cols, 0);
    else
        data_ = std::vector<mpq_class>(rows * cols);
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw MathError("ragged matrix literal");
        for (std::size_t j = 0; j < nc; ++j)
            m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::unit_row(Field f, std::size_t cols, std::size_t index)
{
    Matrix m(f, 1, cols);
    m.set_int(0, index, 1);
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    return visit([&](const auto& ops, const auto& d) { return Scalar(field_, ops.to_mpq(d[r * cols_ + c])); });
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& s)
{
    if (!(s.field() == field_))
        throw MathError("scalar field mismatch");
    visit([&](const auto& ops, auto& d) { d[r * cols_ + c] = ops.from_mpq(s.value()); });
}

void Matrix::set_int(std::size_t r, std::size_t c, long v)
{
    visit([&](const auto& ops, auto& d) { d[r * cols_ + c] = ops.from_mpq(mpq_class(v)); });
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const
{
    return visit([&](const auto& ops, const auto& d) { return ops.is_zero(d[r * cols_ + c]); });
}

bool Matrix::is_zero() const
{
    return visit([&](const auto& ops, const auto& d) {
        return std::all_of(d.begin(), d.end(), [&](const auto& x) { return ops.is_zero(x); });
    });
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw MathError("matrix addition shape mismatch");
    Matrix out = *this;
    out.visit([&](const auto& ops, auto& d) {
        const auto& od = std::get<std::decay_t<decltype(d)>>(o.data_);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = ops.add(d[i], od[i]);
    });
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw MathError("matrix subtraction shape mismatch");
    Matrix out = *this;
    out.visit([&](const auto& ops, auto& d) {
        const auto& od = std::get<std::decay_t<decltype(d)>>(o.data_);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = ops.sub(d[i], od[i]);
    });
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_ || !(field_ == o.field_))
        throw MathError("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    const std::size_t n = cols_, m = o.cols_;
    out.visit([&](const auto& ops, auto& d) {
        using Vec = std::decay_t<decltype(d)>;
        const auto& a = std::get<Vec>(data_);
        const auto& b = std::get<Vec>(o.data_);
        if constexpr (std::is_same_v<Vec, std::vector<std::int64_t>>) {
            // accumulate in unreduced form and reduce once per row chunk
            const std::int64_t p = ops.p;
            std::vector<std::uint64_t> acc(m);
            for (std::size_t i = 0; i < rows_; ++i) {
                std::fill(acc.begin(), acc.end(), 0);
                std::size_t pending = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    std::int64_t x = a[i * n + k];
                    if (x == 0)
                        continue;
                    for (std::size_t j = 0; j < m; ++j)
                        acc[j] += static_cast<std::uint64_t>(x * b[k * m + j]);
                    if (++pending == 3) {
                        for (auto& v : acc)
                            v %= static_cast<std::uint64_t>(p);
                        pending = 0;
                    }
                }
                for (std::size_t j = 0; j < m; ++j)
                    d[i * m + j] = static_cast<std::int64_t>(acc[j] % static_cast<std::uint64_t>(p));
            }
        } else {
            mpq_class tmp;
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& x = a[i * n + k];
                    if (ops.is_zero(x))
                        continue;
                    for (std::size_t j = 0; j < m; ++j) {
                        if (ops.is_zero(b[k * m + j]))
                            continue;
                        mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), b[k * m + j].get_mpq_t());
                        mpq_add(d[i * m + j].get_mpq_t(), d[i * m + j].get_mpq_t(), tmp.get_mpq_t());
                    }
                }
        }
    });
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out = *this;
    out.visit([&](const auto& ops, auto& d) {
        auto f = ops.from_mpq(s.value());
        for (auto& x : d)
            x = ops.mul(x, f);
    });
    return out;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw MathError("add_scaled shape mismatch");
    visit([&](const auto& ops, auto& d) {
        const auto& od = std::get<std::decay_t<decltype(d)>>(o.data_);
        auto f = ops.from_mpq(s.value());
        if (ops.is_zero(f))
            return;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (!ops.is_zero(od[i]))
                d[i] = ops.add(d[i], ops.mul(f, od[i]));
    });
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    out.visit([&](const auto&, auto& d) {
        const auto& s = std::get<std::decay_t<decltype(d)>>(data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                d[j * rows_ + i] = s[i * cols_ + j];
    });
    return out;
}

bool Matrix::operator==(const Matrix& o) const
{
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw MathError("block out of range");
    Matrix out(field_, nr, nc);
    out.visit([&](const auto&, auto& d) {
        const auto& s = std::get<std::decay_t<decltype(d)>>(data_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                d[i * nc + j] = s[(r0 + i) * cols_ + c0 + j];
    });
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, idx.size(), cols_);
    out.visit([&](const auto&, auto& d) {
        const auto& s = std::get<std::decay_t<decltype(d)>>(data_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                d[i * cols_ + j] = s[idx[i] * cols_ + j];
    });
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, rows_, idx.size());
    out.visit([&](const auto&, auto& d) {
        const auto& s = std::get<std::decay_t<decltype(d)>>(data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                d[i * idx.size() + j] = s[i * cols_ + idx[j]];
    });
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_ || !(b.field_ == field_))
        throw MathError("set_block out of range");
    visit([&](const auto&, auto& d) {
        const auto& s = std::get<std::decay_t<decltype(d)>>(b.data_);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                d[(r0 + i) * cols_ + c0 + j] = s[i * b.cols_ + j];
    });
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols)
{
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.rows_ > 0 && p.cols_ != cols)
            throw MathError("vstack column mismatch");
        total += p.rows_;
    }
    Matrix out(f, total, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        if (p.rows_ == 0)
            continue;
        out.set_block(r, 0, p);
        r += p.rows_;
    }
    return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows)
{
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.cols_ > 0 && p.rows_ != rows)
            throw MathError("hstack row mismatch");
        total += p.cols_;
    }
    Matrix out(f, rows, total);
    std::size_t c = 0;
    for (const auto& p : parts) {
        if (p.cols_ == 0)
            continue;
        out.set_block(0, c, p);
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::nonzero_rows() const
{
    std::vector<std::size_t> keep;
    visit([&](const auto& ops, const auto& d) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!ops.is_zero(d[i * cols_ + j])) {
                    keep.push_back(i);
                    break;
                }
    });
    return select_rows(keep);
}

RrefResult Matrix::rref() const
{
    Matrix work = *this;
    RrefResult res = work.visit(
        [&](const auto& ops, auto& d) { return rref_inplace(ops, d, rows_, cols_, field_); });
    res.reduced = std::move(work);
    return res;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const
{
    RrefResult r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix k(field_, cols_, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k.set_int(free[f], f, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (!r.reduced.is_zero_at(i, free[f]))
                k.set(r.pivots[i], f, -r.reduced.at(i, free[f]));
    }
    return k;
}

Matrix Matrix::left_kernel_basis() const { return transpose().kernel_basis().transpose(); }

std::optional<Matrix> Matrix::solve(const Matrix& b) const
{
    if (b.rows_ != rows_)
        throw MathError("solve: row count mismatch");
    Matrix aug = hstack({*this, b}, field_, rows_);
    RrefResult r = aug.rref();
    for (auto p : r.pivots)
        if (p >= cols_)
            return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!r.reduced.is_zero_at(i, cols_ + j))
                x.set(r.pivots[i], j, r.reduced.at(i, cols_ + j));
    return x;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    if (rank() != rows_)
        return std::nullopt;
    return solve(identity(field_, rows_));
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- spans

Matrix row_span(const Matrix& rows)
{
    RrefResult r = rows.rref();
    return r.reduced.block(0, 0, r.rank, rows.cols());
}

Matrix span_union(const Matrix& a, const Matrix& b)
{
    return row_span(Matrix::vstack({a, b}, a.field(), a.cols()));
}

std::vector<std::size_t> span_pivots(const Matrix& span)
{
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < span.rows(); ++i)
        for (std::size_t j = 0; j < span.cols(); ++j)
            if (!span.is_zero_at(i, j)) {
                piv.push_back(j);
                break;
            }
    return piv;
}

Matrix reduce_modulo(const Matrix& span, const Matrix& vectors)
{
    // span is reduced, so its pivot columns form an identity block
    if (span.rows() == 0 || vectors.rows() == 0)
        return vectors;
    return vectors - vectors.select_cols(span_pivots(span)) * span;
}

bool span_contains(const Matrix& span, const Matrix& vectors)
{
    if (vectors.rows() == 0)
        return true;
    if (span.rows() == 0)
        return vectors.is_zero();
    return reduce_modulo(span, vectors).is_zero();
}

Matrix span_coordinates(const Matrix& span, const Matrix& vectors)
{
    return vectors.select_cols(span_pivots(span));
}

}  // namespace domdimlab::exact
