#include "domdimlab/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace domdimlab;
using namespace domdimlab::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("sha256 test vectors")
    {
        CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    TEST_CASE("algebra files round-trip")
    {
        for (auto name : {"hopf-a5-f2", "preproj-a2", "truncated-poly(3,F3)", "dihedral8-f2"}) {
            auto a = quivalg::preset(name);
            auto back = algebra_from_json(algebra_to_json(*a));
            CHECK(back.kind == "table");
            CHECK(*back.table == *a);
        }
        auto n = nakayama::NakAlgebra::validate(nakayama::Orientation::cycle, {3, 4, 4});
        auto in = algebra_from_json(nakayama_to_json(n));
        REQUIRE(in.nakayama);
        CHECK(*in.nakayama == n);
        CHECK(in.table->dim() == 11);

        auto q = quivalg::preset_quiver("preproj-a2");
        auto qi = algebra_from_json(quiver_to_json(q));
        CHECK(qi.kind == "quiver");
        CHECK(*qi.table == *quivalg::preset("preproj-a2"));

        CHECK_THROWS(algebra_from_json(json{{"kind", "nope"}}));
        CHECK_THROWS(algebra_from_json(json{{"kind", "nakayama"}, {"orientation", "cycle"}, {"kupisch", {1, 2}}}));
    }

    TEST_CASE("module files round-trip")
    {
        auto a = quivalg::preset("preproj-a2");
        for (std::size_t v = 0; v < 2; ++v) {
            auto p = homology::projective(a, v);
            auto back = module_from_json(a, module_to_json(p));
            CHECK(homology::is_isomorphic(back, p) == Tristate::yes);
        }
    }

    TEST_CASE("module specs")
    {
        auto s = parse_module_spec("omega:2:projective:v1");
        CHECK(s.kind == ModuleSpec::Kind::omega);
        CHECK(s.t == 2);
        REQUIRE(s.inner);
        CHECK(s.inner->kind == ModuleSpec::Kind::projective);
        CHECK(s.inner->vertex == "v1");
        auto p = parse_module_spec("pair 1,3");
        CHECK(p.kind == ModuleSpec::Kind::pair);
        CHECK(p.i == 1);
        CHECK(p.k == 3);
        CHECK(parse_module_spec("pair:1,3").k == 3);
        CHECK(parse_module_spec("simple").kind == ModuleSpec::Kind::simple);
        CHECK(parse_module_spec("dual-regular").kind == ModuleSpec::Kind::dual_regular);
        for (auto bad : {"", "proj", "omega:x:simple", "pair 1", "omega:-1:simple"})
            CHECK_THROWS(parse_module_spec(bad));

        auto n = nakayama::NakAlgebra::validate(nakayama::Orientation::cycle, {5, 6, 6, 6, 6});
        auto m = realize(n, parse_module_spec("omega:1:pair 0,2"));
        REQUIRE(m.size() == 1);
        CHECK(m[0] == nakayama::NakModule{2, 3});
        CHECK(realize(n, parse_module_spec("dual-regular")).size() == 5);
    }

    TEST_CASE("report layout and determinism")
    {
        std::vector<std::string> args{"nakayama", "domdim", "--cycle", "--kupisch", "5,6,6,6,6"};
        auto a = call(args), b = call(args);
        CHECK(a.code == ExitCode::ok);
        CHECK(a.out == b.out);
        auto r = a.report();
        std::vector<std::string> keys;
        for (auto& [k, v] : r.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"tool", "version", "command", "input_digest", "cutoff", "results",
                                               "failures"});
        CHECK(r["version"] == kVersion);
        CHECK(r["cutoff"] == 64);
        CHECK(r["results"][0]["domdim"] == "finite(8)");
        CHECK(r["input_digest"].get<std::string>().size() == 64);
        CHECK(a.err.find("wall time") != std::string::npos);

        auto c = call({"nakayama", "domdim", "--cycle", "--kupisch", "5,6,6,6,6", "--cutoff", "5"});
        CHECK(c.report()["cutoff"] == 5);
        CHECK(c.report()["input_digest"] != r["input_digest"]);
    }

    TEST_CASE("cutoff from the environment")
    {
        ::setenv("DOMDIMLAB_CUTOFF", "7", 1);
        auto a = call({"nakayama", "domdim", "--cycle", "--kupisch", "3,3"});
        ::unsetenv("DOMDIMLAB_CUTOFF");
        CHECK(a.code == ExitCode::ok);
        CHECK(a.report()["cutoff"] == 7);
        CHECK(a.report()["results"][0]["domdim"] == "at_least(7)");
    }

    TEST_CASE("csv output")
    {
        auto a = call({"nakayama", "ext", "--cycle", "--kupisch", "3,3", "--module", "pair 0,1", "pair 1,1",
                       "--degree", "2", "--format", "csv"});
        CHECK(a.code == ExitCode::ok);
        CHECK(a.out.rfind("algebra,left,right,hom,ext\n", 0) == 0);
        CHECK(a.out.find("\"[1,1]\"") != std::string::npos);
    }

    TEST_CASE("exit codes")
    {
        CHECK(call({"--help"}).code == ExitCode::ok);
        CHECK(call({}).code == ExitCode::usage);
        CHECK(call({"nakayama", "domdim", "--bogus"}).code == ExitCode::usage);
        CHECK(call({"nakayama", "domdim", "--cycle", "--kupisch", "1,2"}).code == ExitCode::usage);
        CHECK(call({"verify", "--suite", "unknown"}).code == ExitCode::usage);
        CHECK(call({"nakayama", "verify-main", "--cycle", "--kupisch", "3,3", "--k", "1"}).code == ExitCode::usage);
        CHECK(call({"quiver", "predicates", "--preset", "nope"}).code == ExitCode::usage);
        auto p = call({"quiver", "predicates", "--preset", "preproj-a2"});
        CHECK(p.code == ExitCode::ok);
    }

    TEST_CASE("suites are deterministic and independent of the job count")
    {
        auto items = suite("paper-core", 64);
        CHECK(items.size() == 23);
        auto one = run_items(items, 1), many = run_items(items, 4);
        REQUIRE(one.size() == many.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].pass);
            CHECK(one[i].detail == many[i].detail);
        }
        CHECK_THROWS(suite("nope", 64));
        std::vector<SuiteItem> boom{{"x", [] () -> CheckResult { throw std::runtime_error("bad"); }}};
        auto r = run_items(boom, 2);
        CHECK_FALSE(r[0].pass);
    }
}
