#include "hibi/serialize.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace hibi {

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.empty()) fail(errc::parse_error, "empty string is not an integer");
        std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
        if (i == s.size()) fail(errc::parse_error, "'" + s + "' is not an integer");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                fail(errc::parse_error, "'" + s + "' is not an integer");
        return Int(s);
    }
    fail(errc::parse_error, "expected an integer or a decimal string, got " + v.dump());
}

std::string vertex_name(const Poset& p, HasseVertex v) {
    if (v.is_bot()) return "_bot";
    if (v.is_top()) return "_top";
    return p.name_of(v.index());
}

std::string edge_key(const Poset& p, const CoveringEdge& e) {
    return vertex_name(p, e.lower) + "<" + vertex_name(p, e.upper);
}

CoveringEdge edge_from_key(const AugmentedPoset& p, const std::string& key) {
    auto sep = key.find('<');
    if (sep == std::string::npos || key.find('<', sep + 1) != std::string::npos)
        fail(errc::parse_error, "edge key '" + key + "' must be 'lower<upper'");
    auto resolve = [&](const std::string& s) {
        if (s == "_bot") return HasseVertex::bot();
        if (s == "_top") return HasseVertex::top();
        return HasseVertex::element(p.base().index_of(s));
    };
    CoveringEdge e{resolve(key.substr(0, sep)), resolve(key.substr(sep + 1))};
    p.cover_index(e);  // throws NotACovering when absent
    return e;
}

json poset_to_json(const Poset& p) {
    json covers = json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({p.name_of(a), p.name_of(b)});
    return {{"elements", p.elements()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        fail(errc::parse_error, "poset JSON needs 'elements' and 'covers'");
    if (!j["elements"].is_array()) fail(errc::parse_error, "'elements' must be an array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) fail(errc::parse_error, "element names must be strings");
        elements.push_back(e.get<std::string>());
    }
    if (!j["covers"].is_array()) fail(errc::parse_error, "'covers' must be an array");
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            fail(errc::parse_error, "each cover must be a [lower, upper] pair of names");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return poset_from_covers(elements, covers);
}

namespace {

// Recursive-descent parser for the constructor DSL.
struct DslParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            fail(errc::parse_error, std::string("expected '") + c + "' at offset " +
                                        std::to_string(pos) + " in '" + text + "'");
        ++pos;
    }
    int number() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            fail(errc::parse_error, "expected a number at offset " + std::to_string(start));
        if (pos - start > 5) fail(errc::parse_error, "size argument is too large");
        int k = std::stoi(text.substr(start, pos - start));
        if (k > 10000) fail(errc::parse_error, "size argument is too large");
        return k;
    }
    Poset expr() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string word = text.substr(start, pos - start);
        if (word == "chain") {
            expect(':');
            return chain(number());
        }
        if (word == "antichain") {
            expect(':');
            return antichain(number());
        }
        if (word == "op") {
            expect('(');
            Poset inner = expr();
            expect(')');
            return opposite(inner);
        }
        if (word == "union" || word == "product") {
            expect('(');
            Poset a = expr();
            expect(',');
            Poset b = expr();
            expect(')');
            return word == "union" ? disjoint_union(a, b) : product(a, b);
        }
        fail(errc::parse_error, "unknown constructor '" + word + "' at offset " +
                                    std::to_string(start) + " in '" + text + "'");
    }
};

bool looks_like_dsl(const std::string& s) {
    for (const char* head : {"chain", "antichain", "op", "union", "product"}) {
        std::string h(head);
        if (s.size() > h.size() && s.compare(0, h.size(), h) == 0 &&
            (s[h.size()] == ':' || s[h.size()] == '(' ||
             std::isspace(static_cast<unsigned char>(s[h.size()]))))
            return true;
    }
    return false;
}

Poset poset_from_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed poset JSON");
        return poset_from_json(j);
    }
    return poset_from_dsl(text);
}

}  // namespace

Poset poset_from_dsl(const std::string& text) {
    DslParser parser{text};
    Poset p = parser.expr();
    parser.skip();
    if (parser.pos != text.size())
        fail(errc::parse_error,
             "trailing input at offset " + std::to_string(parser.pos) + " in '" + text + "'");
    return p;
}

Poset poset_from_source(const std::string& arg) {
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    std::string trimmed = first == std::string::npos ? "" : arg.substr(first);
    if (!trimmed.empty() && trimmed[0] == '{') return poset_from_text(arg);
    if (looks_like_dsl(trimmed)) return poset_from_dsl(arg);
    std::ifstream in(arg);
    if (!in) fail(errc::parse_error, "cannot read poset source '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return poset_from_text(buf.str());
}

json ideal_to_json(const Poset& p, const OrderIdeal& ideal) {
    return subset_to_json(p, ideal.members());
}

json subset_to_json(const Poset& p, const std::vector<int>& members) {
    json out = json::array();
    for (int v : members) out.push_back(p.name_of(v));
    return out;
}

json lattice_to_json(const Poset& p, const IdealLattice& lattice) {
    json ideals = json::array();
    for (const auto& ideal : lattice.ideals()) ideals.push_back(ideal_to_json(p, ideal));
    return {{"ideals", ideals}};
}

json polytope_to_json(const Poset& p, const OrderPolytope& poly) {
    json facets = json::array();
    for (const auto& f : poly.facets()) {
        facets.push_back({{"edge", {vertex_name(p, f.edge.lower), vertex_name(p, f.edge.upper)}},
                          {"normal", f.normal},
                          {"offset", f.offset}});
    }
    return {{"vertices", poly.vertices()}, {"facets", facets}};
}

json ring_to_json(const IdealLattice& lattice, const std::vector<MonomialGenerator>& gens,
                  const std::vector<HibiRelation>& rels) {
    json generators = json::array();
    for (const auto& g : gens) generators.push_back(g.exponent);
    json relations = json::array();
    for (const auto& r : rels)
        relations.push_back({lattice.index_of(r.lhs), lattice.index_of(r.rhs),
                             lattice.index_of(r.meet), lattice.index_of(r.join)});
    return {{"generators", generators}, {"relations", relations}};
}

json divisor_to_json(const Poset& p, const TorusDivisor& d) {
    json coeffs = json::object();
    for (const auto& [e, c] : d.coeffs) coeffs[edge_key(p, e)] = int_to_json(c);
    return {{"coeffs", coeffs}};
}

TorusDivisor divisor_from_json(const AugmentedPoset& p, const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        fail(errc::parse_error, "divisor JSON needs a 'coeffs' object");
    TorusDivisor d;
    for (const auto& [key, value] : j["coeffs"].items()) {
        Int c = int_from_json(value);
        if (c == 0) continue;
        CoveringEdge e = edge_from_key(p, key);
        if (!d.coeffs.emplace(e, std::move(c)).second)
            fail(errc::parse_error, "duplicate divisor key '" + key + "'");
    }
    return d;
}

json class_to_json(const Poset& p, const DivisorClass& c) {
    json tree = json::array();
    for (int v = 0; v < p.size(); ++v)
        tree.push_back(edge_key(p, {c.tree.parent[v], HasseVertex::element(v)}));
    json coords = json::object();
    for (const auto& [e, k] : c.coords) coords[edge_key(p, e)] = int_to_json(k);
    return {{"tree", tree}, {"coords", coords}};
}

std::string subset_to_text(const Poset& p, const std::vector<int>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += p.name_of(members[i]);
    }
    return out + "}";
}

std::string divisor_to_text(const Poset& p, const TorusDivisor& d) {
    if (d.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : d.coeffs) {
        Int a = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1) out += a.str() + "*";
        out += edge_key(p, e);
    }
    return out;
}

}  // namespace hibi
