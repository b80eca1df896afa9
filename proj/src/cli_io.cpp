#include "domdimlab/cli.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace domdimlab::cli {

using exact::Field;
using exact::Matrix;
using exact::Scalar;

namespace {

Scalar scalar_from_json(const Field& f, const json& v)
{
    if (v.is_string())
        return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer())
        return Scalar(f, v.get<long>());
    throw UsageError("scalar must be a string or an integer");
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw UsageError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Field field_of(const json& j, const char* fallback)
{
    if (!j.contains("field"))
        return Field::parse(fallback);
    return Field::parse(j.at("field").get<std::string>());
}

}  // namespace

json field_to_json(const Field& f) { return f.name(); }

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t cols)
{
    if (!j.is_array())
        throw UsageError("matrix must be an array of rows");
    Matrix m(f, j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw UsageError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, scalar_from_json(f, j[r][c]));
    }
    return m;
}

namespace {

json row_to_json(const Matrix& m) { return matrix_to_json(m)[0]; }

Matrix row_from_json(const Field& f, const json& j, std::size_t cols)
{
    return matrix_from_json(f, json::array({j}), cols);
}

}  // namespace

json nakayama_to_json(const nakayama::NakAlgebra& a)
{
    return json{{"kind", "nakayama"}, {"orientation", nakayama::to_string(a.orientation())}, {"kupisch", a.kupisch()}};
}

json quiver_to_json(const quivalg::QuiverSpec& q)
{
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    return json{{"kind", "quiver"},   {"field", field_to_json(q.field)}, {"vertices", q.vertices},
                {"arrows", arrows},   {"relations", q.relations},       {"loewy_bound", q.loewy_bound}};
}

json algebra_to_json(const quivalg::AlgebraTable& a)
{
    json constants = json::array();
    for (const auto& c : a.structure_constants())
        constants.push_back(json::array({c.left, c.right, c.result, c.value.str()}));
    json idem = json::array();
    for (const auto& e : a.idempotents())
        idem.push_back({{"vertex", e.vertex}, {"coords", row_to_json(e.coords)}});
    json named = json::object();
    for (const auto& [k, v] : a.named_elements())
        named[k] = row_to_json(v);
    return json{{"kind", "table"},
                {"field", field_to_json(a.field())},
                {"provenance", a.provenance()},
                {"basis", a.basis_names()},
                {"constants", constants},
                {"unit", row_to_json(a.unit())},
                {"idempotents", idem},
                {"radical", matrix_to_json(a.radical())},
                {"named_elements", named}};
}

AlgebraInput algebra_from_json(const json& j)
{
    AlgebraInput in;
    try {
        in.kind = require(j, "kind").get<std::string>();
        if (in.kind == "nakayama") {
            std::string o = require(j, "orientation").get<std::string>();
            if (o != "cycle" && o != "line")
                throw UsageError("orientation must be 'cycle' or 'line'");
            in.nakayama = nakayama::NakAlgebra::validate(
                o == "cycle" ? nakayama::Orientation::cycle : nakayama::Orientation::line,
                require(j, "kupisch").get<std::vector<int>>());
            in.table = quivalg::nakayama_to_table(*in.nakayama, field_of(j, "Q"));
        } else if (in.kind == "quiver") {
            quivalg::QuiverSpec q;
            q.field = field_of(j, "Q");
            q.vertices = require(j, "vertices").get<std::vector<std::string>>();
            for (const auto& a : require(j, "arrows"))
                q.arrows.push_back({require(a, "name").get<std::string>(), require(a, "source").get<std::string>(),
                                    require(a, "target").get<std::string>()});
            if (j.contains("relations"))
                q.relations = j.at("relations").get<std::vector<std::string>>();
            q.loewy_bound = require(j, "loewy_bound").get<int>();
            in.quiver = q;
            in.table = quivalg::compile(q);
        } else if (in.kind == "table") {
            quivalg::AlgebraTable::Data d;
            d.field = field_of(j, "Q");
            d.basis = require(j, "basis").get<std::vector<std::string>>();
            const std::size_t n = d.basis.size();
            for (const auto& c : require(j, "constants")) {
                if (!c.is_array() || c.size() != 4)
                    throw UsageError("structure constant must be [i, j, k, scalar]");
                d.constants.push_back({c[0].get<std::size_t>(), c[1].get<std::size_t>(), c[2].get<std::size_t>(),
                                       scalar_from_json(d.field, c[3])});
            }
            d.unit = row_from_json(d.field, require(j, "unit"), n);
            for (const auto& e : require(j, "idempotents"))
                d.idempotents.push_back(
                    {require(e, "vertex").get<std::string>(), row_from_json(d.field, require(e, "coords"), n)});
            if (j.contains("radical"))
                d.radical = matrix_from_json(d.field, j.at("radical"), n);
            d.provenance = j.value("provenance", std::string("file"));
            if (j.contains("named_elements"))
                for (const auto& [k, v] : j.at("named_elements").items())
                    d.named_elements[k] = row_from_json(d.field, v, n);
            in.table = quivalg::AlgebraTable::create(std::move(d));
        } else {
            throw UsageError("unknown algebra kind '" + in.kind + "'");
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed algebra description: ") + e.what());
    }
    return in;
}

AlgebraInput load_algebra_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot open algebra file '" + path + "'");
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError("algebra file '" + path + "' is not valid JSON: " + e.what());
    }
    return algebra_from_json(j);
}

json module_to_json(const homology::Representation& m)
{
    json actions = json::object();
    const auto& names = m.algebra()->basis_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        actions[names[i]] = matrix_to_json(m.action(i));
    return json{{"name", m.name()}, {"field", field_to_json(m.field())}, {"dim", m.dim()}, {"actions", actions}};
}

homology::Representation module_from_json(const quivalg::AlgebraPtr& a, const json& j)
{
    try {
        const Field f = field_of(j, a->field().name().c_str());
        if (!(f == a->field()))
            throw UsageError("module field differs from the algebra field");
        const auto d = require(j, "dim").get<std::size_t>();
        const json& acts = require(j, "actions");
        std::vector<Matrix> mats;
        for (const auto& name : a->basis_names()) {
            if (!acts.contains(name))
                throw UsageError("module lacks the action of basis element '" + name + "'");
            Matrix m = matrix_from_json(f, acts.at(name), d);
            if (m.rows() != d)
                throw UsageError("action of '" + name + "' must be " + std::to_string(d) + " x " + std::to_string(d));
            mats.push_back(std::move(m));
        }
        return homology::Representation::create(a, std::move(mats), j.value("name", std::string()));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed module description: ") + e.what());
    }
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

// ------------------------------------------------------------ module specs

std::string ModuleSpec::str() const
{
    switch (kind) {
    case Kind::simple:
        return vertex.empty() ? "simple" : "simple:" + vertex;
    case Kind::projective:
        return "projective:" + vertex;
    case Kind::dual_regular:
        return "dual-regular";
    case Kind::omega:
        return "omega:" + std::to_string(t) + ":" + inner->str();
    default:
        return "pair " + std::to_string(i) + "," + std::to_string(k);
    }
}

namespace {

int parse_int(const std::string& s, const std::string& what)
{
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit))
        throw UsageError("expected a non-negative integer for " + what + ", got '" + s + "'");
    return std::stoi(s);
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& raw)
{
    const std::string text = trim(raw);
    ModuleSpec s;
    if (text == "simple")
        return s;
    if (text.rfind("simple:", 0) == 0) {
        s.vertex = trim(text.substr(7));
        if (s.vertex.empty())
            throw UsageError("module spec '" + raw + "': missing vertex");
        return s;
    }
    if (text.rfind("projective:", 0) == 0) {
        s.kind = ModuleSpec::Kind::projective;
        s.vertex = trim(text.substr(11));
        if (s.vertex.empty())
            throw UsageError("module spec '" + raw + "': missing vertex");
        return s;
    }
    if (text == "dual-regular") {
        s.kind = ModuleSpec::Kind::dual_regular;
        return s;
    }
    if (text.rfind("omega:", 0) == 0) {
        auto colon = text.find(':', 6);
        if (colon == std::string::npos)
            throw UsageError("module spec '" + raw + "': expected omega:T:SPEC");
        s.kind = ModuleSpec::Kind::omega;
        s.t = parse_int(text.substr(6, colon - 6), "omega degree");
        if (s.t < 0)
            throw UsageError("module spec '" + raw + "': negative omega degree");
        s.inner = std::make_shared<ModuleSpec>(parse_module_spec(text.substr(colon + 1)));
        return s;
    }
    if (text.rfind("pair", 0) == 0) {
        std::string rest = trim(text.substr(4));
        if (!rest.empty() && rest[0] == ':')
            rest = trim(rest.substr(1));
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw UsageError("module spec '" + raw + "': expected pair i,k");
        s.kind = ModuleSpec::Kind::pair;
        s.i = parse_int(trim(rest.substr(0, comma)), "pair vertex");
        s.k = parse_int(trim(rest.substr(comma + 1)), "pair length");
        return s;
    }
    throw UsageError("unknown module spec '" + raw + "'");
}

namespace {

int nak_vertex(const nakayama::NakAlgebra& a, const std::string& v)
{
    if (v.empty())
        return 0;
    std::string digits = (v.size() > 1 && v[0] == 'e') ? v.substr(1) : v;
    int i = parse_int(digits, "vertex");
    if (i >= a.n())
        throw UsageError("vertex " + v + " out of range");
    return i;
}

std::size_t table_vertex(const quivalg::AlgebraPtr& a, const std::string& v)
{
    if (v.empty())
        return 0;
    if (std::all_of(v.begin(), v.end(), ::isdigit)) {
        std::size_t i = static_cast<std::size_t>(parse_int(v, "vertex"));
        if (i >= a->vertex_count())
            throw UsageError("vertex " + v + " out of range");
        return i;
    }
    try {
        return a->vertex_index(v);
    } catch (const std::exception&) {
        throw UsageError("unknown vertex '" + v + "'");
    }
}

}  // namespace

nakayama::ModuleMultiset realize(const nakayama::NakAlgebra& a, const ModuleSpec& s)
{
    switch (s.kind) {
    case ModuleSpec::Kind::simple:
        return {nakayama::simple(a, nak_vertex(a, s.vertex))};
    case ModuleSpec::Kind::projective:
        return {nakayama::projective(a, nak_vertex(a, s.vertex))};
    case ModuleSpec::Kind::dual_regular:
        return nakayama::dual_regular(a);
    case ModuleSpec::Kind::omega:
        return nakayama::syzygy_power(a, realize(a, *s.inner), s.t);
    default: {
        nakayama::NakModule m{s.i, s.k};
        try {
            nakayama::check_module(a, m);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        return {m};
    }
    }
}

homology::Representation realize(const quivalg::AlgebraPtr& a, const ModuleSpec& s)
{
    switch (s.kind) {
    case ModuleSpec::Kind::simple: {
        auto m = homology::simple(a, table_vertex(a, s.vertex));
        m.set_name("S(" + a->idempotents()[table_vertex(a, s.vertex)].vertex + ")");
        return m;
    }
    case ModuleSpec::Kind::projective: {
        auto m = homology::projective(a, table_vertex(a, s.vertex));
        m.set_name("P(" + a->idempotents()[table_vertex(a, s.vertex)].vertex + ")");
        return m;
    }
    case ModuleSpec::Kind::dual_regular: {
        auto m = homology::dual_regular(a);
        m.set_name("D(A)");
        return m;
    }
    case ModuleSpec::Kind::omega: {
        auto base = realize(a, *s.inner);
        if (s.t == 0)
            return base;
        homology::Resolution r(base);
        r.extend(static_cast<std::size_t>(s.t - 1));
        const auto* st = r.step(static_cast<std::size_t>(s.t - 1));
        auto m = st ? st->syzygy : homology::Representation::zero(a);
        m.set_name("Omega^" + std::to_string(s.t) + "(" + base.name() + ")");
        return m;
    }
    default:
        throw UsageError("module spec 'pair i,k' needs a Nakayama algebra");
    }
}

}  // namespace domdimlab::cli
