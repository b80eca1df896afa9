#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace domdimlab::exact {

class MathError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ground field: a prime field F_p (p < 2^31) or the rationals.
class Field {
  public:
    static Field prime(std::int64_t p);
    static Field rational() { return Field{}; }
    /// Parses "Q", "F2", "F3", "GF(5)".
    static Field parse(const std::string& text);

    bool is_prime() const { return p_ != 0; }
    bool is_rational() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

  private:
    std::int64_t p_ = 0;
};

/// A field element. Over F_p the value is kept as an integer in [0,p).
class Scalar {
  public:
    explicit Scalar(Field f) : field_(f) {}
    Scalar(Field f, long v);
    Scalar(Field f, const mpq_class& v);
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return field_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::string str() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }

  private:
    void reduce();
    Field field_;
    mpq_class v_;
};

struct RrefResult;

/// Dense matrix over a Field. Storage is int64 residues over F_p and
/// arbitrary-precision rationals over Q; algorithms dispatch once per call.
class Matrix {
  public:
    Matrix() : Matrix(Field::rational(), 0, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
    static Matrix unit_row(Field f, std::size_t cols, std::size_t index);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& s);
    void set_int(std::size_t r, std::size_t c, long v);
    bool is_zero_at(std::size_t r, std::size_t c) const;
    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    /// this += s * o
    void add_scaled(const Matrix& o, const Scalar& s);
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;

    Matrix row(std::size_t r) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    static Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols);
    static Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows);
    /// Drops all-zero rows.
    Matrix nonzero_rows() const;

    RrefResult rref() const;
    std::size_t rank() const;
    /// Columns span the right null space {x : this * x = 0}.
    Matrix kernel_basis() const;
    /// Rows span the left null space {y : y * this = 0}.
    Matrix left_kernel_basis() const;
    /// Some x with this * x = b, or nullopt if inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;

    std::string str() const;

  private:
    template <class Fn>
    decltype(auto) visit(Fn&& fn);
    template <class Fn>
    decltype(auto) visit(Fn&& fn) const;

    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::variant<std::vector<std::int64_t>, std::vector<mpq_class>> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Row-space helpers. A "span" is a matrix in reduced row-echelon form
// without zero rows.

/// Reduced basis of the row space.
Matrix row_span(const Matrix& rows);
/// Row span of the union.
Matrix span_union(const Matrix& a, const Matrix& b);
bool span_contains(const Matrix& span, const Matrix& vectors);
/// Pivot columns of a span.
std::vector<std::size_t> span_pivots(const Matrix& span);
/// Coordinates of vectors (rows, assumed inside span) with respect to the span rows.
Matrix span_coordinates(const Matrix& span, const Matrix& vectors);
/// Reduces each row of vectors modulo the span (entries at pivot columns become 0).
Matrix reduce_modulo(const Matrix& span, const Matrix& vectors);

}  // namespace domdimlab::exact
