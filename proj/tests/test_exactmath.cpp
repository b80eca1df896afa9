#include "domdimlab/exactmath.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace domdimlab::exact;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int density = 2)
{
    std::uniform_int_distribution<long> d(-3, 3), z(0, density);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (z(rng) != 0)
                m.set_int(i, j, d(rng));
    return m;
}

// size of the row space over F_2 by enumerating all combinations
std::size_t row_space_size_f2(const Matrix& m)
{
    std::set<std::vector<int>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m.rows()); ++mask) {
        std::vector<int> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (mask >> i & 1U)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    v[j] ^= m.at(i, j).is_zero() ? 0 : 1;
        seen.insert(v);
    }
    return seen.size();
}

}  // namespace

TEST_SUITE("exactmath")
{
    TEST_CASE("field parsing and names")
    {
        CHECK(Field::parse("Q").is_rational());
        CHECK(Field::parse("F3") == Field::prime(3));
        CHECK(Field::parse("GF(5)").characteristic() == 5);
        CHECK(Field::prime(7).name() == "F7");
        CHECK_THROWS_AS(Field::parse("R"), MathError);
        CHECK_THROWS_AS(Field::prime(4), MathError);
        CHECK_THROWS_AS(Field::prime(1), MathError);
    }

    TEST_CASE("scalar arithmetic")
    {
        Field f5 = Field::prime(5);
        Scalar a(f5, 3), b(f5, 4);
        CHECK((a + b).str() == "2");
        CHECK((a * b).str() == "2");
        CHECK((a * a.inverse()).is_one());
        CHECK(Scalar(f5, -1).str() == "4");
        Field q = Field::rational();
        Scalar h = Scalar::parse(q, "3/4");
        CHECK((h * Scalar(q, 4)).str() == "3");
        CHECK((h - h).is_zero());
        CHECK_THROWS(Scalar(q, 0).inverse());
        CHECK(Scalar::parse(f5, "7").str() == "2");
    }

    TEST_CASE("rank matches enumeration of the row space over F2")
    {
        std::mt19937_64 rng(11);
        Field f2 = Field::prime(2);
        for (int trial = 0; trial < 60; ++trial) {
            Matrix m = random_matrix(f2, 1 + trial % 6, 1 + trial % 5, rng);
            CHECK(row_space_size_f2(m) == (std::size_t{1} << m.rank()));
        }
    }

    TEST_CASE("kernel, rank-nullity and transposition")
    {
        std::mt19937_64 rng(12);
        for (Field f : {Field::prime(2), Field::prime(5), Field::rational()}) {
            for (int trial = 0; trial < 40; ++trial) {
                Matrix m = random_matrix(f, 2 + trial % 5, 2 + trial % 7, rng);
                Matrix k = m.kernel_basis();
                CHECK((m * k).is_zero());
                CHECK(m.rank() + k.cols() == m.cols());
                CHECK(k.rank() == k.cols());
                Matrix l = m.left_kernel_basis();
                CHECK((l * m).is_zero());
                CHECK(m.rank() + l.rows() == m.rows());
                CHECK(m.rank() == m.transpose().rank());
            }
        }
    }

    TEST_CASE("inverse and solve")
    {
        std::mt19937_64 rng(13);
        for (Field f : {Field::prime(3), Field::rational()}) {
            int invertible = 0;
            for (int trial = 0; trial < 40; ++trial) {
                Matrix m = random_matrix(f, 4, 4, rng, 4);
                auto inv = m.inverse();
                CHECK(inv.has_value() == (m.rank() == 4));
                if (inv) {
                    ++invertible;
                    CHECK(*inv * m == Matrix::identity(f, 4));
                }
                Matrix x = random_matrix(f, 4, 1, rng);
                Matrix b = m * x;
                auto s = m.solve(b);
                REQUIRE(s.has_value());
                CHECK(m * *s == b);
            }
            CHECK(invertible > 0);
        }
        Matrix sing = Matrix::from_ints(Field::rational(), {{1, 2}, {2, 4}});
        CHECK_FALSE(sing.solve(Matrix::from_ints(Field::rational(), {{1}, {0}})).has_value());
    }

    TEST_CASE("rational entries stay exact")
    {
        Field q = Field::rational();
        Matrix m(q, 2, 2);
        m.set(0, 0, Scalar::parse(q, "1/3"));
        m.set(0, 1, Scalar::parse(q, "1/7"));
        m.set(1, 0, Scalar::parse(q, "1/5"));
        m.set(1, 1, Scalar::parse(q, "1/11"));
        auto inv = m.inverse();
        REQUIRE(inv);
        CHECK(*inv * m == Matrix::identity(q, 2));
    }

    TEST_CASE("span helpers")
    {
        std::mt19937_64 rng(14);
        for (Field f : {Field::prime(2), Field::prime(7), Field::rational()}) {
            for (int trial = 0; trial < 30; ++trial) {
                Matrix v = random_matrix(f, 4, 6, rng);
                Matrix s = row_span(v);
                CHECK(s.rows() == v.rank());
                CHECK(span_contains(s, v));
                CHECK(reduce_modulo(s, v).is_zero());
                CHECK(span_coordinates(s, v) * s == v);
                auto piv = span_pivots(s);
                CHECK(piv.size() == s.rows());
                Matrix w = random_matrix(f, 3, 6, rng);
                Matrix u = span_union(s, w);
                CHECK(u.rows() == Matrix::vstack({v, w}, f, 6).rank());
                Matrix r = reduce_modulo(s, w);
                CHECK(span_contains(u, r));
                for (std::size_t i = 0; i < r.rows(); ++i)
                    for (auto p : piv)
                        CHECK(r.is_zero_at(i, p));
            }
        }
    }

    TEST_CASE("mixing fields is rejected")
    {
        Matrix a = Matrix::identity(Field::prime(2), 2);
        Matrix b = Matrix::identity(Field::prime(3), 2);
        CHECK_THROWS_AS(a * b, MathError);
        CHECK_THROWS_AS(a + b, MathError);
    }
}
