// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "domdimlab/homology.hpp"
#include "domdimlab/nakayama.hpp"
#include "domdimlab/quivalg.hpp"
#include "domdimlab/rigidity.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace domdimlab;
namespace nk = domdimlab::nakayama;
namespace hm = domdimlab::homology;
namespace rg = domdimlab::rigidity;
using exact::Field;

namespace {

using Clock = std::chrono::steady_clock;

nk::NakAlgebra cycle(std::vector<int> c) { return nk::NakAlgebra::validate(nk::Orientation::cycle, std::move(c)); }

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why)
    {
        if (pass)
            detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

// runs one timed step and fails the verdict when it exceeds the limit
template <class F>
void timed(Verdict& v, const std::string& label, double limit, F&& step)
{
    auto t0 = Clock::now();
    step();
    double s = seconds_since(t0);
    if (s >= limit) {
        std::ostringstream m;
        m << label << " took " << s << " s (limit " << limit << " s)";
        v.fail(m.str());
    }
}

hm::Representation bridged(const quivalg::AlgebraPtr& t, const nk::NakModule& m)
{
    return hm::radical_quotient(hm::projective(t, static_cast<std::size_t>(m.vertex)),
                                static_cast<std::size_t>(m.length));
}

// ------------------------------------------------------------ criteria

void family_domdim(Verdict& v)
{
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n), n + 1);
        c[0] = n;
        auto a = cycle(c);
        auto want = BoundedValue::finite(static_cast<std::uint64_t>(2 * n - 2));
        timed(v, "n=" + std::to_string(n), 1.0, [&] {
            auto d = nk::domdim(a, 64);
            if (d != want)
                v.fail(a.str() + " domdim " + d.str());
            auto t = quivalg::nakayama_to_table(a, Field::prime(2));
            auto l = hm::domdim(t, 64);
            if (l != want)
                v.fail(a.str() + " linear domdim " + l.str());
            if (hm::is_gendo_symmetric(t, 64) != Tristate::yes)
                v.fail(a.str() + " not confirmed gendo-symmetric");
        });
    }
    if (v.pass)
        v.detail << "domdim = 2n-2 for n = 2..8, both engines, all confirmed gendo-symmetric";
}

void two_rigid_witness(Verdict& v)
{
    timed(v, "witness", 1.0, [&] {
        auto a = cycle({5, 6, 6, 6, 6});
        auto da = nk::dual_regular(a);
        auto m = da;
        for (const auto& x : nk::syzygy_power(a, da, 4))
            m.push_back(x);
        if (!rg::is_k_rigid(a, m, 2))
            v.fail("D(A) + Omega^4(D(A)) is not 2-rigid");
        else
            v.detail << "D(A) + Omega^4(D(A)) over (5,6,6,6,6) is 2-rigid, " << m.size() << " summands";
    });
}

void one_rigid_criterion(Verdict& v)
{
    std::size_t modules = 0;
    timed(v, "sweep", 600.0, [&] {
        for (int n = 1; n <= 5; ++n)
            for (const auto& a : nk::cyclic_corpus(n, 10)) {
                std::set<nk::NakModule> brute;
                for (const auto& m : nk::indecomposables(a))
                    if (nk::dim_ext(a, 1, m, m) == 0)
                        brute.insert(m);
                modules += nk::indecomposables(a).size();
                if (n == 1) {
                    // every non-projective module over k[x]/(x^c) has self-extensions
                    for (const auto& m : brute)
                        if (!nk::is_projective(a, m))
                            v.fail(a.str() + " rigid non-projective " + m.str());
                    continue;
                }
                std::set<nk::NakModule> crit;
                for (const auto& m : nk::one_rigid_indecomposables(a))
                    crit.insert(m);
                if (crit != brute)
                    v.fail(a.str() + " criterion disagrees with brute force");
            }
    });
    if (v.pass)
        v.detail << "criterion = brute force over " << modules << " indecomposables, n <= 5, entries <= 10";
}

void o1_bound(Verdict& v)
{
    std::size_t count = 0;
    timed(v, "sweep", 600.0, [&] {
        for (int n = 1; n <= 5; ++n)
            for (const auto& a : nk::cyclic_corpus(n, 10)) {
                ++count;
                rg::NakayamaCatalog c(a);
                auto r = rg::o_k(c, 1);
                const auto nn = static_cast<std::size_t>(n);
                if (!r.witness_verified || r.o_k > nn * (nn - 1) + nn * nn)
                    v.fail(a.str() + " o_1 = " + std::to_string(r.o_k));
            }
        rg::NakayamaCatalog c(cycle({2, 2}));
        std::size_t brute = 0;
        for (std::size_t mask = 1; mask < (std::size_t{1} << c.size()); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (mask >> i & 1U)
                    sub.push_back(i);
            if (rg::is_k_rigid(c, sub, 1))
                brute = std::max(brute, sub.size());
        }
        auto r = rg::o_k(c, 1).o_k;
        if (brute != 3 || r != 3)
            v.fail("o_1(2,2): clique " + std::to_string(r) + ", exhaustive " + std::to_string(brute));
    });
    if (v.pass)
        v.detail << "o_1 <= n(n-1)+n^2 on " << count << " algebras; o_1(2,2) = 3 by exhaustive search";
}

void main_inequality(Verdict& v)
{
    std::vector<nk::NakAlgebra> corpus;
    for (int n = 1; n <= 3; ++n)
        for (auto& a : nk::cyclic_corpus(n, 6))
            corpus.push_back(a);
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n), n + 1);
        c[0] = n;
        auto a = cycle(c);
        if (std::find(corpus.begin(), corpus.end(), a) == corpus.end())
            corpus.push_back(a);
    }
    for (int n = 2; n <= 4; ++n)
        for (auto& a : nk::line_corpus(n))
            corpus.push_back(a);

    std::size_t confirmed = 0;
    for (const auto& a : corpus) {
        if (nk::is_selfinjective(a))
            continue;
        auto dd = nk::domdim(a, 64);
        if (!dd.is_finite() || dd.value() < 2)
            continue;  // gendo-symmetric algebras have dominant dimension at least 2
        if (hm::is_gendo_symmetric(quivalg::nakayama_to_table(a, Field::prime(2)), 64) != Tristate::yes)
            continue;
        ++confirmed;
        for (int k : {1, 2}) {
            auto m = rg::verify_main_inequality(a, k, 64, "bimodule test over F2");
            if (!m.holds)
                v.fail("FALSIFICATION " + a.str() + " k=" + std::to_string(k) + ": " + std::to_string(m.lhs) +
                       " < " + std::to_string(m.rhs));
        }
    }
    if (confirmed == 0)
        v.fail("no gendo-symmetric instance in the corpus");
    if (v.pass)
        v.detail << "holds for k = 1, 2 on " << confirmed << " confirmed gendo-symmetric instances of " << corpus.size();
}

void symmetric_delta(Verdict& v)
{
    for (auto [s, c] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 4}}) {
        timed(v, "s=" + std::to_string(s), 1.0, [&] {
            auto a = cycle(std::vector<int>(static_cast<std::size_t>(s), c));
            auto d = nk::delta(a, 12);
            if (!nk::is_symmetric(a) || d != BoundedValue::finite(static_cast<std::uint64_t>(2 * s - 1)))
                v.fail(a.str() + " Delta " + d.str());
        });
    }
    if (v.pass)
        v.detail << "Delta = 2s-1 for s = 1, 2, 3";
}

void syzygy_fingerprints(Verdict& v)
{
    timed(v, "hopf", 1.0, [&] {
        auto a = quivalg::preset("hopf-a5-f2");
        auto dims = hm::Resolution(hm::simple(a, 0)).syzygy_dims(4);
        if (a->dim() != 8 || dims != std::vector<std::size_t>{7, 9, 7, 9})
            v.fail("hopf-a5-f2 fingerprint");
    });
    timed(v, "dihedral", 1.0, [&] {
        auto a = quivalg::preset("dihedral8-f2");
        auto dims = hm::Resolution(hm::simple(a, 0)).syzygy_dims(4);
        if (dims.size() != 4 || dims[3] != 17)
            v.fail("dihedral8-f2 Omega^4 dimension");
    });
    timed(v, "quaternion", 1.0, [&] {
        auto a = quivalg::preset("quaternion8-f2");
        hm::Resolution r(hm::simple(a, 0));
        r.extend(3);
        if (hm::is_isomorphic(r.step(3)->syzygy, hm::simple(a, 0)) != Tristate::yes)
            v.fail("quaternion8-f2 Omega^4(S) not isomorphic to S");
    });
    if (v.pass)
        v.detail << "hopf [7,9,7,9]; dihedral Omega^4 dim 17; quaternion Omega^4(S) = S";
}

void oracle_equivalence(Verdict& v)
{
    std::size_t comparisons = 0;
    timed(v, "sweep", 600.0, [&] {
        for (auto f : {Field::prime(2), Field::prime(3)})
            for (int n = 1; n <= 3; ++n)
                for (const auto& a : nk::cyclic_corpus(n, 6)) {
                    auto t = quivalg::nakayama_to_table(a, f);
                    auto mods = nk::indecomposables(a);
                    std::vector<hm::Representation> reps;
                    for (const auto& m : mods)
                        reps.push_back(bridged(t, m));
                    for (std::size_t i = 0; i < mods.size(); ++i) {
                        hm::Resolution res(reps[i]);
                        for (std::size_t j = 0; j < mods.size(); ++j) {
                            auto e = hm::ext_dims(res, reps[j], 4);
                            if (e.dims[0] != static_cast<std::size_t>(nk::dim_hom(a, mods[i], mods[j])))
                                v.fail(a.str() + " " + f.name() + " Hom " + mods[i].str() + "," + mods[j].str());
                            for (int d = 1; d <= 4; ++d)
                                if (e.dims[static_cast<std::size_t>(d)] !=
                                    static_cast<std::size_t>(nk::dim_ext(a, d, mods[i], mods[j])))
                                    v.fail(a.str() + " " + f.name() + " Ext^" + std::to_string(d) + " " +
                                           mods[i].str() + "," + mods[j].str());
                            comparisons += 5;
                        }
                    }
                }
    });
    if (v.pass)
        v.detail << comparisons << " Hom/Ext dimensions agree over F2 and F3";
}

void endomorphism_domdim(Verdict& v)
{
    timed(v, "check", 5.0, [&] {
        auto na = cycle({3, 3});
        auto b = quivalg::nakayama_to_table(na, Field::prime(2));
        auto s0 = hm::simple(b, 0);
        auto end = hm::endomorphism_algebra({hm::projective(b, 0), hm::projective(b, 1), s0});
        auto dd = hm::domdim(end, 64);
        auto ph = hm::phi(hm::direct_sum({hm::regular(b), s0}), 64);
        auto ph_comb = nk::phi(na, {nk::projective(na, 0), nk::projective(na, 1), nk::simple(na, 0)}, 64);
        if (dd != BoundedValue::finite(4) || ph != BoundedValue::finite(3) || ph_comb != ph)
            v.fail("domdim End " + dd.str() + ", phi " + ph.str() + ", combinatorial phi " + ph_comb.str());
        else
            v.detail << "domdim End_B(B+S_0) = 4 = phi + 1 (End dim " << end->dim() << ")";
    });
}

void ideal_rigidity(Verdict& v)
{
    timed(v, "check", 5.0, [&] {
        for (int n = 3; n <= 6; ++n) {
            auto a = quivalg::preset("truncated-poly(" + std::to_string(n) + ",Q)");
            for (int k = 1; k < n; ++k) {
                auto x = hm::ideal_module(a, {a->radical_power(static_cast<std::size_t>(k))});
                if (hm::ext_dims(x.module, x.module, 1).dims[1] == 0)
                    v.fail("Ext^1(J^" + std::to_string(k) + ", J^" + std::to_string(k) + ") = 0 for n = " +
                           std::to_string(n));
            }
        }
        auto a = quivalg::preset("truncated-poly(3,F3)");
        auto env = quivalg::enveloping(*a);
        auto m = hm::Representation::create(env.algebra, env.bimodule_action, "A");
        if (hm::ext_dims(m, m, 1).dims[1] == 0)
            v.fail("Ext^1 over the enveloping algebra vanishes");
    });
    if (v.pass)
        v.detail << "Ext^1(J^k, J^k) != 0 for n = 3..6; Ext^1_{A^e}(A, A) != 0 over F3";
}

void extsym_bound(Verdict& v)
{
    timed(v, "check", 1.0, [&] {
        auto a = quivalg::preset("preproj-a2");
        std::vector<hm::Representation> mods;
        for (std::size_t i = 0; i < a->vertex_count(); ++i)
            mods.push_back(hm::projective(a, i));
        for (std::size_t i = 0; i < a->vertex_count(); ++i)
            mods.push_back(hm::simple(a, i));
        rg::TableCatalog c(mods, 4, true);
        auto b = rg::verify_extsym_bound(c, 12);
        if (!b.ext1_symmetric || b.delta != BoundedValue::finite(2) || b.o_1 != 3 || b.s != 2 || b.bound != 3 ||
            !b.holds)
            v.fail("Delta " + b.delta.str() + ", o_1 " + std::to_string(b.o_1));
        else
            v.detail << "1-Extsymmetric, Delta = 2 <= o_1 + s - 2 = 3";
    });
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
        {"gendo-symmetric family domdim", family_domdim},
        {"2-rigid witness", two_rigid_witness},
        {"one-rigid criterion", one_rigid_criterion},
        {"o_1 bound", o1_bound},
        {"main inequality", main_inequality},
        {"symmetric Nakayama Delta", symmetric_delta},
        {"syzygy fingerprints", syzygy_fingerprints},
        {"dual-oracle equivalence", oracle_equivalence},
        {"endomorphism algebra domdim", endomorphism_domdim},
        {"ideal rigidity", ideal_rigidity},
        {"1-Extsymmetric bound", extsym_bound},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        auto t0 = Clock::now();
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        double s = seconds_since(t0);
        failed += !v.pass;
        std::cout << (v.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << v.detail.str() << ") " << s << " s\n";
    }
    return failed == 0 ? 0 : 1;
}
