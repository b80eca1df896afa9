#include "domdimlab/cli.hpp"
#include "domdimlab/rigidity.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace domdimlab::cli {

namespace nk = nakayama;
namespace hm = homology;
namespace rg = rigidity;

namespace {

struct Options {
    bool cycle = false, line = false;
    std::string kupisch;
    int k = 1;
    std::optional<std::size_t> cutoff;
    std::string preset, algebra;
    std::vector<std::string> modules;
    std::optional<int> degree, length;
    std::string generators;
    std::string report;
    std::string format = "json";
    std::size_t jobs = 1;
    std::string suite;
};

// A command's outcome: result rows plus failures; status escalates to
// undetermined when nothing failed outright but a search was inconclusive.
struct Outcome {
    json results = json::array();
    json failures = json::array();
    bool undetermined = false;
};

std::size_t effective_cutoff(const Options& o)
{
    if (o.cutoff) {
        if (*o.cutoff < 1)
            throw UsageError("--cutoff must be >= 1");
        return *o.cutoff;
    }
    if (const char* env = std::getenv("DOMDIMLAB_CUTOFF")) {
        std::string s(env);
        if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit) || std::stoul(s) < 1)
            throw UsageError("DOMDIMLAB_CUTOFF must be a positive integer, got '" + s + "'");
        return std::stoul(s);
    }
    return kDefaultCutoff;
}

std::vector<int> parse_kupisch(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item.size() > 6 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw UsageError("--kupisch expects a comma-separated list of positive integers");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw UsageError("--kupisch is empty");
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

nk::NakAlgebra nakayama_source(const Options& o)
{
    if (!o.algebra.empty()) {
        if (!o.kupisch.empty() || o.cycle || o.line)
            throw UsageError("give either --algebra or --kupisch with --cycle/--line");
        auto in = load_algebra_file(o.algebra);
        if (!in.nakayama)
            throw UsageError("nakayama commands need an algebra file of kind 'nakayama'");
        return *in.nakayama;
    }
    if (o.kupisch.empty())
        throw UsageError("missing --kupisch (or --algebra)");
    if (o.cycle == o.line)
        throw UsageError("give exactly one of --cycle and --line");
    return nk::NakAlgebra::validate(o.cycle ? nk::Orientation::cycle : nk::Orientation::line, parse_kupisch(o.kupisch));
}

AlgebraInput quiver_source(const Options& o)
{
    if (o.preset.empty() == o.algebra.empty())
        throw UsageError("give exactly one of --preset and --algebra");
    if (!o.algebra.empty())
        return load_algebra_file(o.algebra);
    AlgebraInput in;
    in.kind = "preset";
    try {
        in.table = quivalg::preset(o.preset);
    } catch (const quivalg::AlgebraError& e) {
        throw UsageError(e.what());
    }
    return in;
}

json pairs_json(const nk::ModuleMultiset& m)
{
    json out = json::array();
    for (const auto& x : m)
        out.push_back(json::array({x.vertex, x.length}));
    return out;
}

hm::Representation realize_any(const AlgebraInput& in, const ModuleSpec& s)
{
    if (s.kind == ModuleSpec::Kind::pair && in.nakayama) {
        nk::NakModule m{s.i, s.k};
        try {
            nk::check_module(*in.nakayama, m);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        auto r = hm::radical_quotient(hm::projective(in.table, static_cast<std::size_t>(s.i)),
                                      static_cast<std::size_t>(s.k));
        r.set_name(m.str());
        return r;
    }
    return realize(in.table, s);
}

std::vector<std::string> vertex_labels(const quivalg::AlgebraTable& a, const std::vector<std::size_t>& vs)
{
    std::vector<std::string> out;
    for (auto v : vs)
        out.push_back(a.idempotents()[v].vertex);
    return out;
}

BoundedValue min_domdim(const std::vector<BoundedValue>& vals, std::size_t cutoff)
{
    std::optional<std::uint64_t> best;
    for (const auto& v : vals)
        if (v.is_finite())
            best = best ? std::min(*best, v.value()) : v.value();
    return best ? BoundedValue::finite(*best) : BoundedValue::at_least(cutoff);
}

// ------------------------------------------------------------ nakayama

Outcome nakayama_command(const std::string& sub, const Options& o, std::size_t cutoff)
{
    Outcome out;
    auto a = nakayama_source(o);
    const int cut = static_cast<int>(cutoff);
    json r{{"algebra", nakayama_to_json(a)}};

    auto modules = [&](std::size_t lo, std::size_t hi) {
        if (o.modules.size() < lo || o.modules.size() > hi)
            throw UsageError("'" + sub + "' takes " + std::to_string(lo) + (hi > lo ? " or more" : "") + " --module");
        std::vector<nk::ModuleMultiset> ms;
        for (const auto& m : o.modules)
            ms.push_back(realize(a, parse_module_spec(m)));
        return ms;
    };
    auto require_k = [&] {
        if (o.k < 1)
            throw UsageError("--k must be >= 1");
    };

    if (sub == "info") {
        r["n"] = a.n();
        r["dimension"] = a.dimension();
        r["selfinjective"] = nk::is_selfinjective(a);
        r["symmetric"] = nk::is_symmetric(a);
        r["indecomposables"] = nk::indecomposables(a).size();
        r["projectives"] = pairs_json(nk::regular(a));
        r["injectives"] = pairs_json(nk::dual_regular(a));
        r["domdim"] = nk::domdim(a, cut).str();
    } else if (sub == "ext") {
        if (o.modules.size() == 1 || o.modules.size() == 2) {
            auto ms = modules(1, 2);
            const auto& x = ms.front();
            const auto& y = ms.back();
            const int deg = o.degree.value_or(1);
            if (deg < 1)
                throw UsageError("--degree must be >= 1");
            long hom = 0;
            std::vector<long> ext(static_cast<std::size_t>(deg), 0);
            for (const auto& m : x)
                for (const auto& n : y) {
                    hom += nk::dim_hom(a, m, n);
                    for (int t = 1; t <= deg; ++t)
                        ext[static_cast<std::size_t>(t - 1)] += nk::dim_ext(a, t, m, n);
                }
            r["left"] = pairs_json(x);
            r["right"] = pairs_json(y);
            r["hom"] = hom;
            r["ext"] = ext;
        } else {
            throw UsageError("'ext' takes one or two --module");
        }
    } else if (sub == "domdim") {
        if (o.modules.empty()) {
            r["domdim"] = nk::domdim(a, cut).str();
        } else {
            auto ms = modules(1, 1);
            if (ms[0].empty())
                throw UsageError("module is zero");
            std::vector<BoundedValue> vals;
            for (const auto& m : ms[0])
                vals.push_back(nk::domdim_module(a, m, cut));
            r["module"] = pairs_json(ms[0]);
            r["domdim"] = min_domdim(vals, cutoff).str();
        }
    } else if (sub == "rigid") {
        require_k();
        auto ms = modules(1, 1 << 20);
        nk::ModuleMultiset all;
        for (const auto& m : ms)
            all.insert(all.end(), m.begin(), m.end());
        r["k"] = o.k;
        r["module"] = pairs_json(all);
        r["rigid"] = rg::is_k_rigid(a, all, o.k);
    } else if (sub == "ok") {
        require_k();
        rg::NakayamaCatalog c(a);
        auto rep = rg::o_k(c, o.k);
        nk::ModuleMultiset w;
        for (auto i : rep.witness)
            w.push_back(c.modules()[i]);
        r["k"] = o.k;
        r["o_k"] = rep.o_k;
        r["witness"] = pairs_json(w);
        r["graph_vertices"] = rep.graph_vertices;
        r["witness_verified"] = rep.witness_verified;
        if (!rep.witness_verified)
            out.failures.push_back("witness of o_k failed the rigidity re-check");
    } else if (sub == "verify-main") {
        require_k();
        if (nk::is_selfinjective(a))
            throw UsageError("verify-main needs a non-selfinjective algebra");
        auto dd = nk::domdim(a, cut);
        r["k"] = o.k;
        r["domdim"] = dd.str();
        if (!dd.is_finite()) {
            out.undetermined = true;
            out.failures.push_back("domdim unresolved at cutoff " + std::to_string(cutoff));
            out.results.push_back(r);
            return out;
        }
        Tristate g = hm::is_gendo_symmetric(quivalg::nakayama_to_table(a, exact::Field::prime(2)), cutoff);
        r["gendo_symmetric"] = to_string(g);
        if (g == Tristate::no)
            throw UsageError("verify-main needs a gendo-symmetric algebra; the bimodule test says no");
        if (g == Tristate::undetermined) {
            out.undetermined = true;
            out.failures.push_back("gendo-symmetric status undetermined");
            out.results.push_back(r);
            return out;
        }
        rg::NakayamaCatalog c(a);
        auto m = rg::verify_main_inequality(a, o.k, cut, "bimodule test over F2");
        nk::ModuleMultiset w;
        for (auto i : m.report.witness)
            w.push_back(c.modules()[i]);
        r["o_k"] = m.report.o_k;
        r["witness"] = pairs_json(w);
        r["domdim"] = m.domdim;
        r["w"] = m.w;
        r["lhs"] = m.lhs;
        r["rhs"] = m.rhs;
        r["verdict"] = m.holds ? "holds" : "fails";
        r["gendo_provenance"] = m.gendo_provenance;
        if (m.domdim >= 2) {
            auto seq = rg::rigid_sequence_module(a, o.k, cut);
            r["rigid_sequence"] = {{"q", seq.q},       {"module", pairs_json(seq.module)}, {"size", seq.size},
                                   {"rigid", seq.rigid}, {"size_bound", seq.size_bound}};
            if (!seq.rigid || !seq.size_bound)
                out.failures.push_back("rigid sequence module check failed");
        }
        if (!m.holds)
            out.failures.push_back("main inequality fails on a gendo-symmetric algebra");
    } else {
        throw UsageError("unknown nakayama subcommand '" + sub + "'");
    }
    out.results.push_back(r);
    return out;
}

// ------------------------------------------------------------ quiver

Outcome quiver_command(const std::string& sub, const Options& o, std::size_t cutoff)
{
    Outcome out;
    auto in = quiver_source(o);
    const auto& a = in.table;
    json r;
    auto modules = [&](std::size_t lo, std::size_t hi, const char* fallback) {
        std::vector<std::string> specs = o.modules;
        if (specs.empty() && fallback)
            specs.push_back(fallback);
        if (specs.size() < lo || specs.size() > hi)
            throw UsageError("'" + sub + "' takes at most " + std::to_string(hi) + " --module");
        std::vector<hm::Representation> ms;
        for (const auto& s : specs) {
            auto m = realize_any(in, parse_module_spec(s));
            if (m.name().empty())
                m.set_name(s);
            ms.push_back(std::move(m));
        }
        return ms;
    };

    if (sub == "compile") {
        r["dim"] = a->dim();
        std::vector<std::string> verts;
        for (const auto& e : a->idempotents())
            verts.push_back(e.vertex);
        r["vertices"] = verts;
        r["loewy_length"] = a->loewy_length();
        r["algebra"] = algebra_to_json(*a);
    } else if (sub == "resolve") {
        auto m = modules(1, 1, "simple")[0];
        const int len = o.length.value_or(4);
        if (len < 1)
            throw UsageError("--length must be >= 1");
        hm::Resolution res(m);
        auto dims = res.syzygy_dims(static_cast<std::size_t>(len));
        json terms = json::array();
        for (std::size_t t = 0; t < res.computed() && t < static_cast<std::size_t>(len); ++t)
            terms.push_back(vertex_labels(*a, res.step(t)->vertices));
        r["module"] = m.name();
        r["dim"] = m.dim();
        r["syzygy_dims"] = dims;
        r["terms"] = terms;
        r["minimal"] = res.minimal();
        r["terminated"] = res.terminated();
    } else if (sub == "ext") {
        auto ms = modules(1, 2, nullptr);
        const int deg = o.degree.value_or(1);
        if (deg < 1)
            throw UsageError("--degree must be >= 1");
        auto e = hm::ext_dims(ms.front(), ms.back(), static_cast<std::size_t>(deg));
        r["left"] = ms.front().name();
        r["right"] = ms.back().name();
        r["hom"] = e.dims[0];
        r["ext"] = std::vector<std::size_t>(e.dims.begin() + 1, e.dims.end());
    } else if (sub == "domdim") {
        if (o.modules.empty()) {
            r["domdim"] = hm::domdim(a, cutoff).str();
        } else {
            auto m = modules(1, 1, nullptr)[0];
            r["module"] = m.name();
            r["domdim"] = hm::domdim_module(m, cutoff).str();
        }
    } else if (sub == "ideal") {
        if (o.generators.empty())
            throw UsageError("'ideal' needs --generators");
        std::vector<exact::Matrix> gens;
        std::vector<std::string> names;
        std::stringstream ss(o.generators);
        std::string g;
        while (std::getline(ss, g, ',')) {
            names.push_back(g);
            gens.push_back(quivalg::evaluate_expression(*a, g));
        }
        Tristate sym = quivalg::is_symmetric(*a);
        r["generators"] = names;
        r["symmetric"] = to_string(sym);
        if (sym == Tristate::no)
            throw UsageError("ideal rigidity needs a symmetric algebra; this one is certified not symmetric");
        if (sym == Tristate::undetermined) {
            out.undetermined = true;
            out.failures.push_back("symmetry of the algebra is undetermined");
            out.results.push_back(r);
            return out;
        }
        auto x = hm::ideal_module(a, gens);
        auto rep = hm::check_ideal_rigidity(a, x);
        r["ideal_dim"] = x.span.rows();
        r["hom_x_quotient"] = rep.hom_x_quotient;
        r["ext1"] = rep.ext1;
        r["local"] = rep.local;
        r["holds"] = rep.holds;
        if (!rep.holds)
            out.failures.push_back("ideal rigidity fails on a symmetric algebra");
    } else if (sub == "predicates") {
        Tristate sym = quivalg::is_symmetric(*a);
        Tristate gendo = hm::is_gendo_symmetric(a, cutoff);
        r["dim"] = a->dim();
        r["local"] = quivalg::is_local(*a);
        r["selfinjective"] = quivalg::is_selfinjective(*a);
        r["symmetric"] = to_string(sym);
        r["gendo_symmetric"] = to_string(gendo);
        for (auto [name, t] : {std::pair{"symmetric", sym}, std::pair{"gendo_symmetric", gendo}})
            if (t == Tristate::undetermined) {
                out.undetermined = true;
                out.failures.push_back(std::string(name) + " is undetermined");
            }
    } else {
        throw UsageError("unknown quiver subcommand '" + sub + "'");
    }
    out.results.push_back(r);
    return out;
}

// ------------------------------------------------------------ verify

Outcome verify_command(const Options& o, std::size_t cutoff)
{
    if (o.suite.empty())
        throw UsageError("verify needs --suite");
    if (o.jobs < 1)
        throw UsageError("--jobs must be >= 1");
    auto items = suite(o.suite, cutoff);
    auto results = run_items(items, o.jobs);
    Outcome out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out.results.push_back({{"name", items[i].name}, {"pass", results[i].pass}, {"detail", results[i].detail}});
        if (!results[i].pass)
            out.failures.push_back(items[i].name);
    }
    return out;
}

json canonical_input(const std::string& command, const Options& o, std::size_t cutoff)
{
    json j{{"command", command}, {"cutoff", cutoff}};
    if (o.cycle || o.line)
        j["orientation"] = o.cycle ? "cycle" : "line";
    if (!o.kupisch.empty())
        j["kupisch"] = parse_kupisch(o.kupisch);
    if (!o.preset.empty())
        j["preset"] = o.preset;
    if (!o.algebra.empty())
        j["algebra_sha256"] = sha256_hex(read_file(o.algebra));
    j["k"] = o.k;
    j["modules"] = o.modules;
    if (o.degree)
        j["degree"] = *o.degree;
    if (o.length)
        j["length"] = *o.length;
    if (!o.generators.empty())
        j["generators"] = o.generators;
    if (!o.suite.empty())
        j["suite"] = o.suite;
    return j;
}

std::string csv_cell(const json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string to_csv(const json& results)
{
    std::vector<std::string> cols;
    for (const auto& row : results)
        for (const auto& [k, v] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end())
                cols.push_back(k);
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + csv_cell(cols[i]);
    out += "\n";
    for (const auto& row : results) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i)
                out += ",";
            if (row.contains(cols[i]))
                out += csv_cell(row.at(cols[i]));
        }
        out += "\n";
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    Options o;
    CLI::App app{"Homological invariants of finite-dimensional algebras: syzygies, Ext, dominant dimension, "
                 "phi, Delta and o_k for Nakayama and bounded quiver algebras.",
                 "domdimlab"};
    app.footer("Cutoff: --cutoff, else DOMDIMLAB_CUTOFF, else 64. Symmetry and isomorphism searches are exact "
               "when they answer true/false; bounded random searches use 256 attempts with a fixed seed and "
               "report 'undetermined' when exhausted.\nExit codes: 0 ok, 1 falsification, 2 usage or "
               "precondition error, 3 undetermined.");
    app.require_subcommand(1);

    auto output_opts = [&](CLI::App* c) {
        c->add_option("--cutoff", o.cutoff, "Search cutoff for domdim, phi and Delta");
        c->add_option("--report", o.report, "Also write the report to FILE");
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto nak_source = [&](CLI::App* c) {
        c->add_flag("--cycle", o.cycle, "Cyclic quiver");
        c->add_flag("--line", o.line, "Linear quiver");
        c->add_option("--kupisch", o.kupisch, "Kupisch series, comma separated");
        c->add_option("--algebra", o.algebra, "Algebra description file (kind nakayama)");
        output_opts(c);
    };
    auto quiver_src = [&](CLI::App* c) {
        c->add_option("--preset", o.preset, "Preset algebra name");
        c->add_option("--algebra", o.algebra, "Algebra description file");
        output_opts(c);
    };
    const char* module_help = "simple[:vertex] | projective:vertex | dual-regular | omega:T:SPEC | pair i,k";

    auto* nak = app.add_subcommand("nakayama", "Nakayama algebras given by a Kupisch series");
    nak->require_subcommand(1);
    std::string command;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* c = parent->add_subcommand(name, desc);
        c->callback([&command, parent, name] { command = parent->get_name() + " " + name; });
        return c;
    };
    auto* n_info = leaf(nak, "info", "Basic data of the algebra");
    nak_source(n_info);
    auto* n_ext = leaf(nak, "ext", "Hom and Ext between modules");
    nak_source(n_ext);
    n_ext->add_option("--module", o.modules, module_help);
    n_ext->add_option("--degree", o.degree, "Highest Ext degree (default 1)");
    auto* n_dd = leaf(nak, "domdim", "Dominant dimension of the algebra or a module");
    nak_source(n_dd);
    n_dd->add_option("--module", o.modules, module_help);
    auto* n_rigid = leaf(nak, "rigid", "k-rigidity of a direct sum");
    nak_source(n_rigid);
    n_rigid->add_option("--module", o.modules, module_help);
    n_rigid->add_option("--k", o.k, "Rigidity degree");
    auto* n_ok = leaf(nak, "ok", "o_k with a witness");
    nak_source(n_ok);
    n_ok->add_option("--k", o.k, "Rigidity degree");
    auto* n_main = leaf(nak, "verify-main", "Check (o_k + 2 - w)(k + 2) - 1 >= domdim");
    nak_source(n_main);
    n_main->add_option("--k", o.k, "Rigidity degree");

    auto* qv = app.add_subcommand("quiver", "Bounded quiver algebras and structure-constant tables");
    qv->require_subcommand(1);
    auto* q_compile = leaf(qv, "compile", "Compile to a structure-constant table");
    quiver_src(q_compile);
    auto* q_res = leaf(qv, "resolve", "Minimal projective resolution");
    quiver_src(q_res);
    q_res->add_option("--module", o.modules, module_help);
    q_res->add_option("--length", o.length, "Number of syzygies (default 4)");
    auto* q_ext = leaf(qv, "ext", "Hom and Ext between modules");
    quiver_src(q_ext);
    q_ext->add_option("--module", o.modules, module_help);
    q_ext->add_option("--degree", o.degree, "Highest Ext degree (default 1)");
    auto* q_dd = leaf(qv, "domdim", "Dominant dimension of the algebra or a module");
    quiver_src(q_dd);
    q_dd->add_option("--module", o.modules, module_help);
    auto* q_ideal = leaf(qv, "ideal", "Rigidity of a two-sided ideal of a symmetric algebra");
    quiver_src(q_ideal);
    q_ideal->add_option("--generators", o.generators, "Comma-separated element expressions");
    auto* q_pred = leaf(qv, "predicates", "Local, selfinjective, symmetric, gendo-symmetric");
    quiver_src(q_pred);

    auto* ver = app.add_subcommand("verify", "Batch verification suites");
    ver->callback([&command] { command = "verify"; });
    ver->add_option("--suite", o.suite, "paper-core | oracle-cross | rigidity-sweep");
    ver->add_option("--jobs", o.jobs, "Worker threads");
    output_opts(ver);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitCode::usage;
    }

    json report;
    Outcome res;
    try {
        const std::size_t cutoff = effective_cutoff(o);
        if (command == "verify")
            res = verify_command(o, cutoff);
        else if (command.rfind("nakayama ", 0) == 0)
            res = nakayama_command(command.substr(9), o, cutoff);
        else
            res = quiver_command(command.substr(7), o, cutoff);
        report = json{{"tool", "domdimlab"},
                      {"version", kVersion},
                      {"command", command},
                      {"input_digest", sha256_hex(canonical_input(command, o, cutoff).dump())},
                      {"cutoff", cutoff},
                      {"results", res.results},
                      {"failures", res.failures}};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    }

    std::string text = o.format == "csv" ? to_csv(report["results"]) : report.dump(2) + "\n";
    out << text;
    if (!o.report.empty()) {
        std::ofstream f(o.report, std::ios::binary);
        if (!f) {
            err << "error: cannot write report '" << o.report << "'\n";
            return ExitCode::usage;
        }
        f << text;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "wall time: " << std::fixed << std::setprecision(3) << secs << " s\n";
    for (const auto& f : res.failures)
        err << (res.undetermined ? "undetermined: " : "failed: ") << f.get<std::string>() << "\n";
    if (res.failures.empty())
        return ExitCode::ok;
    return res.undetermined ? ExitCode::undetermined : ExitCode::falsified;
}

}  // namespace domdimlab::cli
