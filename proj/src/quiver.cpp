#include "domdimlab/quivalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

namespace domdimlab::quivalg {

void QuiverSpec::validate() const
{
    if (vertices.empty())
        throw AlgebraError("quiver has no vertices");
    if (loewy_bound < 2)
        throw AlgebraError("loewy_bound must be >= 2");
    std::set<std::string> names;
    for (const auto& v : vertices)
        if (!names.insert(v).second)
            throw AlgebraError("duplicate name '" + v + "'");
    for (const auto& a : arrows) {
        if (!names.insert(a.name).second)
            throw AlgebraError("duplicate name '" + a.name + "'");
        vertex_index(a.source);
        vertex_index(a.target);
    }
}

std::size_t QuiverSpec::vertex_index(const std::string& name) const
{
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end())
        throw AlgebraError("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t QuiverSpec::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return i;
    throw AlgebraError("unknown arrow '" + name + "'");
}

std::size_t path_end(const QuiverSpec& q, const Path& p)
{
    if (p.arrows.empty())
        return p.start;
    return q.vertex_index(q.arrows[p.arrows.back()].target);
}

std::string path_name(const QuiverSpec& q, const Path& p)
{
    if (p.arrows.empty())
        return q.vertices[p.start];
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            out += "*";
        out += q.arrows[p.arrows[i]].name;
    }
    return out;
}

namespace {

bool deglex_less(const Path& a, const Path& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    return a < b;
}

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool at_end()
    {
        skip();
        return i >= s.size();
    }
    char peek()
    {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    std::string name()
    {
        skip();
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            throw ParseError("expected name", i);
        std::size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return s.substr(b, i - b);
    }
};

RawTerm parse_term(Cursor& c, bool negative)
{
    RawTerm t;
    c.skip();
    t.position = c.i;
    t.coefficient = 1;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        std::size_t b = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            ++c.i;
        t.coefficient = mpz_class(c.s.substr(b, c.i - b));
        if (c.peek() != '*')
            throw ParseError("expected '*' after coefficient", c.i);
        ++c.i;
    }
    t.names.push_back(c.name());
    while (c.peek() == '*') {
        ++c.i;
        t.names.push_back(c.name());
    }
    if (negative)
        t.coefficient = -t.coefficient;
    return t;
}

}  // namespace

std::vector<RawTerm> parse_expression(const std::string& text)
{
    Cursor c{text};
    std::vector<RawTerm> out;
    if (c.at_end())
        throw ParseError("empty expression", c.i);
    out.push_back(parse_term(c, false));
    while (!c.at_end()) {
        char op = c.peek();
        if (op != '+' && op != '-')
            throw ParseError(std::string("unexpected '") + op + "'", c.i);
        ++c.i;
        out.push_back(parse_term(c, op == '-'));
    }
    return out;
}

std::string RelationExpr::str(const QuiverSpec& q) const
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        mpz_class c = terms[i].coefficient;
        if (i == 0) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (c != 1)
            out += c.get_str() + "*";
        out += path_name(q, terms[i].path);
    }
    return out;
}

RelationExpr parse_relation(const std::string& text, const QuiverSpec& q)
{
    auto raw = parse_expression(text);
    std::map<Path, mpz_class> merged;
    for (const auto& t : raw) {
        std::optional<Path> p;
        for (const auto& name : t.names) {
            bool is_vertex = std::find(q.vertices.begin(), q.vertices.end(), name) != q.vertices.end();
            bool is_arrow = std::any_of(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) { return a.name == name; });
            if (!is_vertex && !is_arrow)
                throw ParseError("unknown name '" + name + "'", t.position);
            if (is_vertex) {
                std::size_t v = q.vertex_index(name);
                if (!p)
                    p = Path{v, {}};
                else if (path_end(q, *p) != v)
                    throw ParseError("non-composable path at '" + name + "'", t.position);
            } else {
                std::size_t a = q.arrow_index(name);
                std::size_t src = q.vertex_index(q.arrows[a].source);
                if (!p)
                    p = Path{src, {}};
                else if (path_end(q, *p) != src)
                    throw ParseError("non-composable path at '" + name + "'", t.position);
                p->arrows.push_back(a);
            }
        }
        merged[*p] += t.coefficient;
    }
    RelationExpr out;
    for (const auto& [p, c] : merged)
        if (c != 0)
            out.terms.push_back({c, p});
    if (out.terms.empty())
        throw ParseError("relation is zero", 0);
    std::stable_sort(out.terms.begin(), out.terms.end(),
                     [](const RelationTerm& a, const RelationTerm& b) { return deglex_less(a.path, b.path); });
    std::size_t s = out.terms.front().path.start, e = path_end(q, out.terms.front().path);
    for (const auto& t : out.terms)
        if (t.path.start != s || path_end(q, t.path) != e)
            throw ParseError("relation terms have different endpoints", 0);
    return out;
}

namespace {

AlgebraPtr compile_as(const QuiverSpec& spec, std::string provenance)
{
    spec.validate();
    const Field f = spec.field;
    const std::size_t L = static_cast<std::size_t>(spec.loewy_bound);

    std::vector<RelationExpr> rels;
    bool vertex_terms = false;
    for (const auto& text : spec.relations) {
        RelationExpr r = parse_relation(text, spec);
        bool nonzero = false;
        for (const auto& t : r.terms) {
            if (!Scalar(f, mpq_class(t.coefficient)).is_zero())
                nonzero = true;
            if (t.path.length() == 0)
                vertex_terms = true;
        }
        if (!nonzero)
            throw AlgebraError("relation '" + text + "' vanishes over " + f.name());
        rels.push_back(std::move(r));
    }

    // all paths of length <= L, degree-lexicographic
    std::vector<Path> paths;
    std::vector<std::vector<std::size_t>> by_start(spec.vertices.size()), by_end(spec.vertices.size());
    for (std::size_t v = 0; v < spec.vertices.size(); ++v)
        paths.push_back(Path{v, {}});
    std::size_t prev_begin = 0;
    for (std::size_t l = 1; l <= L; ++l) {
        std::size_t prev_end = paths.size();
        for (std::size_t i = prev_begin; i < prev_end; ++i) {
            std::size_t end = path_end(spec, paths[i]);
            for (std::size_t a = 0; a < spec.arrows.size(); ++a)
                if (spec.vertex_index(spec.arrows[a].source) == end) {
                    Path p = paths[i];
                    p.arrows.push_back(a);
                    paths.push_back(std::move(p));
                }
            if (paths.size() > 200000)
                throw AlgebraError("too many paths below the Loewy bound");
        }
        prev_begin = prev_end;
    }
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        index[paths[i]] = i;
        by_start[paths[i].start].push_back(i);
        by_end[path_end(spec, paths[i])].push_back(i);
    }
    const std::size_t P = paths.size();
    auto col = [&](std::size_t path_idx) { return P - 1 - path_idx; };

    std::vector<Matrix> rows;
    for (const auto& r : rels) {
        std::size_t u = r.terms.front().path.start, v = path_end(spec, r.terms.front().path);
        std::size_t minlen = r.terms.front().path.length();
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries;
        for (std::size_t pi : by_end[u]) {
            const Path& p = paths[pi];
            if (p.length() + minlen > L)
                continue;
            for (std::size_t qi : by_start[v]) {
                const Path& q = paths[qi];
                if (p.length() + minlen + q.length() > L)
                    continue;
                std::vector<std::pair<std::size_t, Scalar>> row;
                for (const auto& t : r.terms) {
                    if (p.length() + t.path.length() + q.length() > L)
                        continue;
                    Path w{p.start, p.arrows};
                    w.arrows.insert(w.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
                    w.arrows.insert(w.arrows.end(), q.arrows.begin(), q.arrows.end());
                    row.emplace_back(col(index.at(w)), Scalar(f, mpq_class(t.coefficient)));
                }
                if (!row.empty())
                    entries.push_back(std::move(row));
            }
        }
        Matrix m(f, entries.size(), P);
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (const auto& [c, s] : entries[i])
                m.set(i, c, m.at(i, c) + s);
        rows.push_back(std::move(m));
    }
    Matrix span = rows.empty() ? Matrix(f, 0, P) : Matrix::vstack(rows, f, P);
    if (span.rows())
        span = exact::row_span(span);
    std::vector<std::size_t> piv = exact::span_pivots(span);
    std::vector<long> pivot_row(P, -1);
    for (std::size_t r = 0; r < piv.size(); ++r)
        pivot_row[piv[r]] = static_cast<long>(r);

    for (std::size_t i = 0; i < P; ++i)
        if (paths[i].length() == L && pivot_row[col(i)] < 0)
            throw AlgebraError("Loewy bound " + std::to_string(L) + " violated: path " + path_name(spec, paths[i]) +
                               " is not in the ideal");

    std::vector<std::size_t> basis_paths;
    std::vector<long> basis_of(P, -1);
    for (std::size_t i = 0; i < P; ++i)
        if (paths[i].length() < L && pivot_row[col(i)] < 0) {
            basis_of[i] = static_cast<long>(basis_paths.size());
            basis_paths.push_back(i);
        }
    const std::size_t d = basis_paths.size();
    if (d == 0)
        throw AlgebraError("quotient algebra is zero");

    auto normal_form = [&](std::size_t path_idx) {
        Matrix out(f, 1, d);
        if (paths[path_idx].length() >= L)
            return out;
        if (basis_of[path_idx] >= 0) {
            out.set_int(0, static_cast<std::size_t>(basis_of[path_idx]), 1);
            return out;
        }
        std::size_t r = static_cast<std::size_t>(pivot_row[col(path_idx)]);
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t c = col(basis_paths[b]);
            if (!span.is_zero_at(r, c))
                out.set(0, b, -span.at(r, c));
        }
        return out;
    };
    auto concat_index = [&](const Path& a, const Path& b) -> std::optional<std::size_t> {
        if (path_end(spec, a) != b.start)
            return std::nullopt;
        if (a.length() + b.length() > L)
            return std::nullopt;
        Path w{a.start, a.arrows};
        w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
        return index.at(w);
    };

    AlgebraTable::Data data;
    data.field = f;
    data.provenance = std::move(provenance);
    for (std::size_t b : basis_paths)
        data.basis.push_back(path_name(spec, paths[b]));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto w = concat_index(paths[basis_paths[i]], paths[basis_paths[j]]);
            if (!w)
                continue;
            Matrix nf = normal_form(*w);
            for (std::size_t k = 0; k < d; ++k)
                if (!nf.is_zero_at(0, k))
                    data.constants.push_back({i, j, k, nf.at(0, k)});
        }
    data.unit = Matrix(f, 1, d);
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
        Matrix e = normal_form(v);
        data.idempotents.push_back({spec.vertices[v], e});
        data.unit = data.unit + e;
        data.named_elements[spec.vertices[v]] = e;
    }
    for (std::size_t a = 0; a < spec.arrows.size(); ++a)
        data.named_elements[spec.arrows[a].name] =
            L > 1 ? normal_form(index.at(Path{spec.vertex_index(spec.arrows[a].source), {a}})) : Matrix(f, 1, d);
    if (!vertex_terms) {
        std::vector<std::size_t> rad;
        for (std::size_t b = 0; b < d; ++b)
            if (paths[basis_paths[b]].length() > 0)
                rad.push_back(b);
        data.radical = Matrix::identity(f, d).select_rows(rad);
    }
    return AlgebraTable::create(std::move(data));
}

}  // namespace

AlgebraPtr compile(const QuiverSpec& spec) { return compile_as(spec, "compiled-from-quiver"); }

Matrix evaluate_expression(const AlgebraTable& a, const std::string& text)
{
    auto raw = parse_expression(text);
    Matrix out = a.zero_element();
    const auto& names = a.basis_names();
    for (const auto& t : raw) {
        std::optional<Matrix> prod;
        for (const auto& n : t.names) {
            Matrix x;
            if (auto it = a.named_elements().find(n); it != a.named_elements().end()) {
                x = it->second;
            } else if (auto bi = std::find(names.begin(), names.end(), n); bi != names.end()) {
                x = a.basis_element(static_cast<std::size_t>(bi - names.begin()));
            } else {
                auto ei = std::find_if(a.idempotents().begin(), a.idempotents().end(),
                                       [&](const Idempotent& e) { return e.vertex == n; });
                if (ei == a.idempotents().end())
                    throw ParseError("unknown name '" + n + "'", t.position);
                x = ei->coords;
            }
            prod = prod ? a.multiply(*prod, x) : x;
        }
        out.add_scaled(*prod, Scalar(a.field(), mpq_class(t.coefficient)));
    }
    return out;
}

// ------------------------------------------------------------ presets

namespace {

QuiverSpec one_vertex(std::vector<std::string> loops, std::vector<std::string> rels, int L, Field f)
{
    QuiverSpec q;
    q.vertices = {"v"};
    for (auto& l : loops)
        q.arrows.push_back({l, "v", "v"});
    q.relations = std::move(rels);
    q.loewy_bound = L;
    q.field = f;
    return q;
}

std::optional<std::pair<int, Field>> parse_truncated(const std::string& name)
{
    static const std::regex re(R"(truncated-poly\((\d+),\s*([A-Za-z0-9()]+)\))");
    std::smatch m;
    if (!std::regex_match(name, m, re))
        return std::nullopt;
    int n = std::stoi(m[1]);
    if (n < 2 || n > 64)
        throw AlgebraError("truncated-poly needs 2 <= N <= 64");
    return std::make_pair(n, Field::parse(m[2]));
}

AlgebraPtr dihedral8(Field f)
{
    // r^a s^b at index a + 4b; (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
    std::vector<std::string> names{"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
            int r = ((a + (b ? -c : c)) % 4 + 4) % 4;
            t[x][y] = static_cast<std::size_t>(r + 4 * ((b + d) % 2));
        }
    return group_algebra(f, names, t, "preset dihedral8-f2");
}

AlgebraPtr quaternion8(Field f)
{
    // +-u for u in {1,i,j,k}; index 2u + (sign < 0)
    std::vector<std::string> names{"e", "m", "i", "mi", "j", "mj", "k", "mk"};
    const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int u = x / 2, v = y / 2;
            int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[u][v];
            t[x][y] = static_cast<std::size_t>(2 * unit[u][v] + (s < 0));
        }
    return group_algebra(f, names, t, "preset quaternion8-f2");
}

}  // namespace

std::vector<std::string> preset_names()
{
    return {"hopf-a5-f2",     "dihedral8-f2", "dihedral8-quiver-f2",
            "quaternion8-f2", "preproj-a2",   "truncated-poly(N,FIELD)"};
}

QuiverSpec preset_quiver(const std::string& name)
{
    const Field f2 = Field::prime(2);
    if (name == "hopf-a5-f2")
        return one_vertex({"a", "b"}, {"a*a", "b*b - a*b*a"}, 5, f2);
    if (name == "dihedral8-quiver-f2")
        return one_vertex({"x", "y"}, {"x*x", "y*y", "x*y*x*y - y*x*y*x"}, 5, f2);
    if (name == "preproj-a2") {
        QuiverSpec q;
        q.vertices = {"v1", "v2"};
        q.arrows = {{"al", "v1", "v2"}, {"als", "v2", "v1"}};
        q.relations = {"al*als", "als*al"};
        q.loewy_bound = 2;
        q.field = Field::rational();
        return q;
    }
    if (auto tp = parse_truncated(name)) {
        std::string rel = "x";
        for (int i = 1; i < tp->first; ++i)
            rel += "*x";
        return one_vertex({"x"}, {rel}, tp->first, tp->second);
    }
    if (name == "dihedral8-f2" || name == "quaternion8-f2")
        throw AlgebraError("preset " + name + " is given by a table, not a quiver");
    throw AlgebraError("unknown preset '" + name + "'");
}

AlgebraPtr preset(const std::string& name)
{
    if (name == "dihedral8-f2")
        return dihedral8(Field::prime(2));
    if (name == "quaternion8-f2")
        return quaternion8(Field::prime(2));
    return compile_as(preset_quiver(name), "preset " + name);
}

}  // namespace domdimlab::quivalg
