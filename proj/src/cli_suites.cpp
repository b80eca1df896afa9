#include "domdimlab/cli.hpp"
#include "domdimlab/rigidity.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace domdimlab::cli {

namespace nk = nakayama;
namespace hm = homology;
namespace rg = rigidity;
using exact::Field;

namespace {

nk::NakAlgebra cycle(std::vector<int> c) { return nk::NakAlgebra::validate(nk::Orientation::cycle, std::move(c)); }

json pairs_json(const nk::ModuleMultiset& m)
{
    json out = json::array();
    for (const auto& x : m)
        out.push_back(json::array({x.vertex, x.length}));
    return out;
}

json pairs_json(const rg::NakayamaCatalog& c, const std::vector<std::size_t>& idx)
{
    nk::ModuleMultiset m;
    for (auto i : idx)
        m.push_back(c.modules()[i]);
    return pairs_json(m);
}

hm::Representation bridged(const quivalg::AlgebraPtr& t, const nk::NakModule& m)
{
    return hm::radical_quotient(hm::projective(t, static_cast<std::size_t>(m.vertex)),
                                static_cast<std::size_t>(m.length));
}

// ------------------------------------------------------------ paper-core

CheckResult domdim_family(int n, std::size_t cutoff)
{
    std::vector<int> c(static_cast<std::size_t>(n), n + 1);
    c[0] = n;
    auto a = cycle(c);
    auto comb = nk::domdim(a, static_cast<int>(cutoff));
    auto lin = hm::domdim(quivalg::nakayama_to_table(a, Field::prime(2)), cutoff);
    auto want = BoundedValue::finite(static_cast<std::uint64_t>(2 * n - 2));
    return {comb == want && lin == want,
            {{"algebra", a.str()}, {"expected", want.str()}, {"combinatorial", comb.str()}, {"linear", lin.str()}}};
}

CheckResult two_rigid_witness()
{
    auto a = cycle({5, 6, 6, 6, 6});
    auto da = nk::dual_regular(a);
    auto m = da;
    for (const auto& x : nk::syzygy_power(a, da, 4))
        m.push_back(x);
    bool rigid = rg::is_k_rigid(a, m, 2);
    auto seq = rg::rigid_sequence_module(a, 2, 64);
    return {rigid && seq.rigid && seq.q == 1 && seq.size_bound,
            {{"algebra", a.str()}, {"module", pairs_json(m)}, {"rigid", rigid}, {"q", seq.q}, {"size", seq.size}}};
}

CheckResult o1_two_two()
{
    auto a = cycle({2, 2});
    rg::NakayamaCatalog c(a);
    auto r = rg::o_k(c, 1);
    std::size_t brute = 0;
    const std::size_t n = c.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U)
                sub.push_back(i);
        if (rg::is_k_rigid(c, sub, 1))
            brute = std::max(brute, sub.size());
    }
    return {r.o_k == 3 && brute == 3 && r.witness_verified,
            {{"o_1", r.o_k}, {"exhaustive", brute}, {"witness", pairs_json(c, r.witness)}}};
}

CheckResult symmetric_delta(int s, int c)
{
    auto a = cycle(std::vector<int>(static_cast<std::size_t>(s), c));
    auto d = nk::delta(a, 12);
    auto want = BoundedValue::finite(static_cast<std::uint64_t>(2 * s - 1));
    return {nk::is_symmetric(a) && d == want, {{"algebra", a.str()}, {"delta", d.str()}, {"expected", want.str()}}};
}

CheckResult syzygy_fingerprint(const std::string& preset, const std::vector<std::size_t>& want, bool periodic)
{
    auto a = quivalg::preset(preset);
    hm::Resolution r(hm::simple(a, 0));
    auto dims = r.syzygy_dims(4);
    bool pass = r.minimal() && (want.empty() ? true : dims == want);
    json d{{"preset", preset}, {"syzygy_dims", dims}};
    if (!want.empty())
        d["expected"] = want;
    else
        pass = pass && dims.size() == 4 && dims[3] == 17;
    if (periodic) {
        Tristate iso = hm::is_isomorphic(r.step(3)->syzygy, hm::simple(a, 0));
        d["omega4_isomorphic_to_simple"] = to_string(iso);
        pass = pass && iso == Tristate::yes;
    }
    return {pass, d};
}

CheckResult endomorphism_domdim(std::size_t cutoff)
{
    auto na = cycle({3, 3});
    auto b = quivalg::nakayama_to_table(na, Field::prime(2));
    auto s0 = hm::simple(b, 0);
    auto end = hm::endomorphism_algebra({hm::projective(b, 0), hm::projective(b, 1), s0});
    auto dd = hm::domdim(end, cutoff);
    auto ph = hm::phi(hm::direct_sum({hm::regular(b), s0}), cutoff);
    auto ph_comb = nk::phi(na, {nk::projective(na, 0), nk::projective(na, 1), nk::simple(na, 0)}, static_cast<int>(cutoff));
    bool pass = dd == BoundedValue::finite(4) && ph == BoundedValue::finite(3) && ph_comb == ph;
    return {pass,
            {{"end_dim", end->dim()}, {"domdim_end", dd.str()}, {"phi_linear", ph.str()}, {"phi_combinatorial", ph_comb.str()}}};
}

CheckResult ideal_rigidity_truncated(int n)
{
    auto a = quivalg::preset("truncated-poly(" + std::to_string(n) + ",Q)");
    json rows = json::array();
    bool pass = true;
    for (int k = 1; k < n; ++k) {
        auto x = hm::ideal_module(a, {a->radical_power(static_cast<std::size_t>(k))});
        auto rep = hm::check_ideal_rigidity(a, x);
        pass = pass && rep.ext1 != 0 && rep.holds;
        rows.push_back({{"k", k}, {"hom_x_quotient", rep.hom_x_quotient}, {"ext1", rep.ext1}, {"holds", rep.holds}});
    }
    return {pass, {{"n", n}, {"ideals", rows}}};
}

CheckResult enveloping_ext()
{
    auto a = quivalg::preset("truncated-poly(3,F3)");
    auto env = quivalg::enveloping(*a);
    auto m = hm::Representation::create(env.algebra, env.bimodule_action, "A");
    auto e = hm::ext_dims(m, m, 1);
    return {e.dims[1] != 0, {{"algebra", "F3[x]/(x^3)"}, {"enveloping_dim", env.algebra->dim()}, {"ext1", e.dims[1]}}};
}

std::vector<hm::Representation> preproj_modules()
{
    auto a = quivalg::preset("preproj-a2");
    std::vector<hm::Representation> mods;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        auto p = hm::projective(a, v);
        p.set_name("P(" + a->idempotents()[v].vertex + ")");
        mods.push_back(p);
    }
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        auto s = hm::radical_quotient(hm::projective(a, v), 1);
        s.set_name("S(" + a->idempotents()[v].vertex + ")");
        mods.push_back(s);
    }
    return mods;
}

CheckResult extsym_preproj(std::size_t cutoff)
{
    rg::TableCatalog c(preproj_modules(), 4, true);
    auto b = rg::verify_extsym_bound(c, static_cast<int>(std::min<std::size_t>(cutoff, 12)));
    bool pass = b.ext1_symmetric && b.delta == BoundedValue::finite(2) && b.o_1 == 3 && b.s == 2 && b.holds;
    return {pass,
            {{"ext1_symmetric", b.ext1_symmetric}, {"delta", b.delta.str()}, {"o_1", b.o_1}, {"s", b.s}, {"bound", b.bound}}};
}

json main_json(const rg::MainInequality& m, const rg::NakayamaCatalog& c)
{
    return {{"algebra", c.algebra().str()}, {"k", m.k},     {"o_k", m.report.o_k},
            {"witness", pairs_json(c, m.report.witness)}, {"domdim", m.domdim}, {"lhs", m.lhs},
            {"rhs", m.rhs}, {"verdict", m.holds ? "holds" : "fails"}, {"gendo_provenance", m.gendo_provenance}};
}

/// Main inequality with the gendo-symmetric hypothesis checked by the bimodule
/// test; instances failing the hypothesis pass vacuously.
CheckResult main_inequality(const nk::NakAlgebra& a, const std::vector<int>& ks, std::size_t cutoff)
{
    json d{{"algebra", a.str()}};
    if (nk::is_selfinjective(a)) {
        d["skipped"] = "selfinjective";
        return {true, d};
    }
    auto dd = nk::domdim(a, static_cast<int>(cutoff));
    if (!dd.is_finite() || dd.value() < 2) {
        d["skipped"] = "domdim " + dd.str();
        return {true, d};
    }
    Tristate g = hm::is_gendo_symmetric(quivalg::nakayama_to_table(a, Field::prime(2)), cutoff);
    d["gendo_symmetric"] = to_string(g);
    if (g != Tristate::yes) {
        d["skipped"] = "not confirmed gendo-symmetric";
        return {true, d};
    }
    rg::NakayamaCatalog c(a);
    bool pass = true;
    json rows = json::array();
    for (int k : ks) {
        auto m = rg::verify_main_inequality(a, k, static_cast<int>(cutoff), "bimodule test over F2");
        auto seq = rg::rigid_sequence_module(a, k, static_cast<int>(cutoff));
        pass = pass && m.holds && seq.rigid && seq.size_bound;
        json r = main_json(m, c);
        r["rigid_sequence"] = {{"q", seq.q}, {"size", seq.size}, {"rigid", seq.rigid}, {"size_bound", seq.size_bound}};
        rows.push_back(r);
    }
    d["reports"] = rows;
    return {pass, d};
}

// ------------------------------------------------------------ oracle-cross

CheckResult oracle_cross(const nk::NakAlgebra& a, const Field& f)
{
    auto t = quivalg::nakayama_to_table(a, f);
    auto mods = nk::indecomposables(a);
    std::vector<hm::Representation> reps;
    for (const auto& m : mods)
        reps.push_back(bridged(t, m));
    std::size_t compared = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        hm::Resolution res(reps[i]);
        for (std::size_t j = 0; j < mods.size(); ++j) {
            auto e = hm::ext_dims(res, reps[j], 4);
            if (e.dims[0] != static_cast<std::size_t>(nk::dim_hom(a, mods[i], mods[j])))
                return {false, {{"algebra", a.str()}, {"field", f.name()}, {"left", mods[i].str()},
                                {"right", mods[j].str()}, {"degree", 0}}};
            for (int d = 1; d <= 4; ++d)
                if (e.dims[static_cast<std::size_t>(d)] != static_cast<std::size_t>(nk::dim_ext(a, d, mods[i], mods[j])))
                    return {false, {{"algebra", a.str()}, {"field", f.name()}, {"left", mods[i].str()},
                                    {"right", mods[j].str()}, {"degree", d}}};
            compared += 5;
        }
    }
    return {true, {{"algebra", a.str()}, {"field", f.name()}, {"indecomposables", mods.size()}, {"comparisons", compared}}};
}

// ------------------------------------------------------------ rigidity-sweep

CheckResult rigidity_sweep(int n, int max_entry)
{
    std::size_t count = 0;
    for (const auto& a : nk::cyclic_corpus(n, max_entry)) {
        ++count;
        rg::NakayamaCatalog c(a);
        json fail{{"algebra", a.str()}};
        if (n >= 2) {
            std::set<nk::NakModule> prop;
            for (const auto& m : nk::one_rigid_indecomposables(a))
                prop.insert(m);
            std::set<nk::NakModule> brute, graph;
            for (const auto& m : c.modules())
                if (nk::dim_ext(a, 1, m, m) == 0)
                    brute.insert(m);
            for (auto v : rg::compat_graph(c, 1).vertices)
                graph.insert(c.modules()[v]);
            if (prop != brute || graph != brute) {
                fail["failed"] = "one-rigid criterion";
                return {false, fail};
            }
        }
        auto r1 = rg::o_k(c, 1);
        auto r2 = rg::o_k(c, 2);
        const auto nn = static_cast<std::size_t>(n);
        if (!r1.witness_verified || !r2.witness_verified || r1.o_k > nn * (nn - 1) + nn * nn || r1.o_k < nn ||
            r2.o_k > r1.o_k || r2.o_k < nn) {
            fail["failed"] = "o_k bounds";
            fail["o_1"] = r1.o_k;
            fail["o_2"] = r2.o_k;
            return {false, fail};
        }
    }
    return {true, {{"n", n}, {"max_entry", max_entry}, {"algebras", count}}};
}

std::vector<nk::NakAlgebra> gendo_corpus()
{
    std::vector<nk::NakAlgebra> out;
    for (int n = 1; n <= 3; ++n)
        for (auto& a : nk::cyclic_corpus(n, 6))
            out.push_back(a);
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n), n + 1);
        c[0] = n;
        auto a = cycle(c);
        if (std::find(out.begin(), out.end(), a) == out.end())
            out.push_back(a);
    }
    for (int n = 1; n <= 4; ++n)
        for (auto& a : nk::line_corpus(n))
            out.push_back(a);
    return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper-core", "oracle-cross", "rigidity-sweep"}; }

std::vector<SuiteItem> suite(const std::string& name, std::size_t cutoff)
{
    std::vector<SuiteItem> items;
    if (name == "paper-core") {
        for (int n = 2; n <= 8; ++n)
            items.push_back({"domdim family n=" + std::to_string(n), [n, cutoff] { return domdim_family(n, cutoff); }});
        items.push_back({"2-rigid witness (5,6,6,6,6)", two_rigid_witness});
        items.push_back({"o_1 of cycle (2,2)", o1_two_two});
        items.push_back({"symmetric delta s=1", [] { return symmetric_delta(1, 3); }});
        items.push_back({"symmetric delta s=2", [] { return symmetric_delta(2, 3); }});
        items.push_back({"symmetric delta s=3", [] { return symmetric_delta(3, 4); }});
        items.push_back({"syzygies hopf-a5-f2", [] { return syzygy_fingerprint("hopf-a5-f2", {7, 9, 7, 9}, false); }});
        items.push_back({"syzygies dihedral8-f2", [] { return syzygy_fingerprint("dihedral8-f2", {}, false); }});
        items.push_back({"periodic quaternion8-f2", [] { return syzygy_fingerprint("quaternion8-f2", {7, 9, 7, 1}, true); }});
        items.push_back({"endomorphism domdim (3,3)", [cutoff] { return endomorphism_domdim(cutoff); }});
        for (int n = 3; n <= 6; ++n)
            items.push_back({"ideal rigidity k[x]/(x^" + std::to_string(n) + ")", [n] { return ideal_rigidity_truncated(n); }});
        items.push_back({"enveloping Ext^1 F3[x]/(x^3)", enveloping_ext});
        items.push_back({"1-Extsymmetric bound preproj-a2", [cutoff] { return extsym_preproj(cutoff); }});
        items.push_back({"main inequality (5,6,6,6,6)",
                         [cutoff] { return main_inequality(cycle({5, 6, 6, 6, 6}), {1, 2}, cutoff); }});
    } else if (name == "oracle-cross") {
        for (auto p : {2, 3})
            for (int n = 1; n <= 3; ++n)
                for (const auto& a : nk::cyclic_corpus(n, 6))
                    items.push_back({"ext oracle " + a.str() + " F" + std::to_string(p),
                                     [a, p] { return oracle_cross(a, Field::prime(p)); }});
    } else if (name == "rigidity-sweep") {
        for (int n = 1; n <= 5; ++n)
            items.push_back({"rigidity n=" + std::to_string(n), [n] { return rigidity_sweep(n, 10); }});
        for (const auto& a : gendo_corpus())
            items.push_back({"main inequality " + a.str(), [a, cutoff] { return main_inequality(a, {1, 2}, cutoff); }});
    } else {
        throw UsageError("unknown suite '" + name + "'");
    }
    return items;
}

std::vector<CheckResult> run_items(const std::vector<SuiteItem>& items, std::size_t jobs)
{
    std::vector<CheckResult> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = items[i].run();
            } catch (const std::exception& e) {
                out[i] = {false, {{"error", e.what()}}};
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return out;
}

}  // namespace domdimlab::cli
