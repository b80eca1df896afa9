#include "domdimlab/quivalg.hpp"

#include <doctest.h>

using namespace domdimlab;
using namespace domdimlab::quivalg;
using exact::Field;
using exact::Matrix;

namespace {

QuiverSpec one_loop(int relation_length, int bound, Field f = Field::rational())
{
    QuiverSpec q;
    q.vertices = {"v"};
    q.arrows = {{"x", "v", "v"}};
    std::string r = "x";
    for (int i = 1; i < relation_length; ++i)
        r += "*x";
    q.relations = {r};
    q.loewy_bound = bound;
    q.field = f;
    return q;
}

QuiverSpec three_loops_xyz()
{
    QuiverSpec q;
    q.vertices = {"v"};
    q.arrows = {{"x", "v", "v"}, {"y", "v", "v"}, {"z", "v", "v"}};
    q.relations = {"x*x", "y*y", "x*y - y*x", "x*z - z*y", "y*z - z*y - x", "z*z - x*y"};
    q.loewy_bound = 5;
    q.field = Field::prime(2);
    return q;
}

// associativity and unit by brute force over all basis triples
bool is_associative_unital(const AlgebraTable& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix bi = a.basis_element(i);
        if (!(a.multiply(a.unit(), bi) == bi) || !(a.multiply(bi, a.unit()) == bi))
            return false;
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Matrix bj = a.basis_element(j), bk = a.basis_element(k);
                if (!(a.multiply(a.multiply(bi, bj), bk) == a.multiply(bi, a.multiply(bj, bk))))
                    return false;
            }
    }
    return true;
}

}  // namespace

TEST_SUITE("quivalg")
{
    TEST_CASE("expression grammar")
    {
        auto t = parse_expression("2*a*b - c + x");
        REQUIRE(t.size() == 3);
        CHECK(t[0].coefficient == 2);
        CHECK(t[0].names == std::vector<std::string>{"a", "b"});
        CHECK(t[1].coefficient == -1);
        CHECK(t[2].names == std::vector<std::string>{"x"});
        CHECK_THROWS_AS(parse_expression("-a"), ParseError);
        CHECK_THROWS_AS(parse_expression("a*"), ParseError);
        CHECK_THROWS_AS(parse_expression("a + + b"), ParseError);
        CHECK_THROWS_AS(parse_expression(""), ParseError);
        try {
            parse_expression("a * $");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
    }

    TEST_CASE("relations bind to the quiver")
    {
        auto q = preset_quiver("preproj-a2");
        auto r = parse_relation("al*als", q);
        CHECK(r.terms.size() == 1);
        CHECK(r.terms[0].path.length() == 2);
        CHECK_THROWS(parse_relation("al*al", q));      // not composable
        CHECK_THROWS(parse_relation("al*als - al", q));  // endpoints differ
        CHECK_THROWS(parse_relation("nope", q));
    }

    TEST_CASE("truncated polynomial rings")
    {
        for (int n = 2; n <= 7; ++n) {
            auto a = compile(one_loop(n, n));
            CHECK(a->dim() == static_cast<std::size_t>(n));
            CHECK(a->loewy_length() == static_cast<std::size_t>(n));
            CHECK(is_local(*a));
            CHECK(is_selfinjective(*a));
            CHECK(is_symmetric(*a) == Tristate::yes);
            CHECK(*a == *preset("truncated-poly(" + std::to_string(n) + ",Q)"));
        }
        CHECK_THROWS_AS(preset("truncated-poly(1,Q)"), AlgebraError);
        CHECK_THROWS_AS(preset("truncated-poly(65,F2)"), AlgebraError);
    }

    TEST_CASE("compile needs a valid Loewy bound")
    {
        CHECK_THROWS_AS(compile(one_loop(5, 3)), AlgebraError);
        QuiverSpec q = one_loop(3, 3);
        q.relations = {"v"};
        CHECK_THROWS_AS(compile(q), AlgebraError);  // empty quotient
        q.relations = {"3*x*x"};
        q.field = Field::prime(3);
        CHECK_THROWS_AS(compile(q), AlgebraError);  // relation vanishes over F3
    }

    TEST_CASE("two-loop local Hopf presentation")
    {
        auto a = preset("hopf-a5-f2");
        CHECK(a->dim() == 8);
        CHECK(a->radical_power(2).rows() == 5);
        CHECK(is_local(*a));
        CHECK(is_selfinjective(*a));
        CHECK(is_symmetric(*a) == Tristate::yes);
        CHECK(is_associative_unital(*a));
    }

    TEST_CASE("three-loop presentation collapses to dimension 4")
    {
        auto a = compile(three_loops_xyz());
        CHECK(a->dim() == 4);
        CHECK(evaluate_expression(*a, "x") == evaluate_expression(*a, "y*z"));
        CHECK(evaluate_expression(*a, "z*y").is_zero());
    }

    TEST_CASE("group algebras of order 8 over F2")
    {
        for (auto name : {"dihedral8-f2", "quaternion8-f2", "dihedral8-quiver-f2"}) {
            auto a = preset(name);
            CHECK(a->dim() == 8);
            CHECK(is_local(*a));
            CHECK(is_selfinjective(*a));
            CHECK(is_symmetric(*a) == Tristate::yes);
        }
        auto d = preset("dihedral8-f2");
        CHECK(is_associative_unital(*d));
        // r^4 = e
        Matrix r = evaluate_expression(*d, "r");
        Matrix r4 = d->multiply(d->multiply(r, r), d->multiply(r, r));
        CHECK(r4 == d->unit());
    }

    TEST_CASE("preprojective algebra of A2")
    {
        auto a = preset("preproj-a2");
        CHECK(a->dim() == 4);
        CHECK(a->vertex_count() == 2);
        CHECK_FALSE(is_local(*a));
        CHECK(is_selfinjective(*a));
        CHECK(is_symmetric(*a) == Tristate::no);
    }

    TEST_CASE("structure constants are validated")
    {
        AlgebraTable::Data d;
        d.field = Field::rational();
        d.basis = {"1", "x"};
        // k[x]/(x^2 - 1) with x * 1 = 0: the unit fails
        d.constants = {{0, 0, 0, exact::Scalar(d.field, 1)}, {0, 1, 1, exact::Scalar(d.field, 1)},
                       {1, 0, 1, exact::Scalar(d.field, 0)}, {1, 1, 0, exact::Scalar(d.field, 1)}};
        d.unit = Matrix::unit_row(d.field, 2, 0);
        d.idempotents = {{"v", Matrix::unit_row(d.field, 2, 0)}};
        CHECK_THROWS_AS(AlgebraTable::create(d), AlgebraError);
    }

    TEST_CASE("opposite and enveloping algebras")
    {
        for (auto name : {"hopf-a5-f2", "preproj-a2", "truncated-poly(3,F3)"}) {
            auto a = preset(name);
            auto op = opposite(*a);
            CHECK(op->dim() == a->dim());
            CHECK(*opposite(*op) == *a);
            CHECK(is_associative_unital(*op));
        }
        auto a = preset("truncated-poly(3,F3)");
        auto env = enveloping(*a);
        CHECK(env.algebra->dim() == 9);
        CHECK(env.bimodule_action.size() == 9);
        CHECK_THROWS(enveloping(*a, 8));
    }

    TEST_CASE("Nakayama bridge agrees with combinatorial predicates")
    {
        for (int n = 1; n <= 3; ++n)
            for (const auto& na : nakayama::cyclic_corpus(n, 5)) {
                auto t = nakayama_to_table(na, Field::prime(2));
                CHECK(t->dim() == static_cast<std::size_t>(na.dimension()));
                CHECK(t->vertex_count() == static_cast<std::size_t>(na.n()));
                CHECK(is_selfinjective(*t) == nakayama::is_selfinjective(na));
                Tristate s = is_symmetric(*t);
                CHECK(s != Tristate::undetermined);
                CHECK((s == Tristate::yes) == nakayama::is_symmetric(na));
            }
        for (const auto& na : nakayama::line_corpus(4)) {
            auto t = nakayama_to_table(na, Field::rational());
            CHECK(t->dim() == static_cast<std::size_t>(na.dimension()));
            CHECK_FALSE(is_selfinjective(*t));
        }
    }

    TEST_CASE("corner algebras")
    {
        auto t = nakayama_to_table(nakayama::NakAlgebra::validate(nakayama::Orientation::cycle, {3, 3}), Field::prime(2));
        auto c = corner_algebra(*t, {0});
        CHECK(c->dim() == 2);
        CHECK(is_local(*c));
    }

    TEST_CASE("expression evaluation")
    {
        auto a = preset("truncated-poly(4,Q)");
        Matrix x = evaluate_expression(*a, "x");
        CHECK(evaluate_expression(*a, "x*x*x*x").is_zero());
        CHECK(a->multiply(x, x) == evaluate_expression(*a, "x*x"));
        CHECK(evaluate_expression(*a, "2*x - x") == x);
        CHECK_THROWS(evaluate_expression(*a, "y"));
    }

    TEST_CASE("unknown preset")
    {
        CHECK_THROWS_AS(preset("nope"), AlgebraError);
        CHECK(preset_names().size() >= 6);
    }
}
