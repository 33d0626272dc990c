#include "knotvol/diagram.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "knotvol/errors.hpp"

namespace knotvol {

SideRef SideRef::variable(int k) {
    if (k < 1) throw std::invalid_argument("SideRef: variable index must be >= 1");
    return SideRef(k);
}

std::string SideRef::str() const {
    return is_unit() ? "1" : "z" + std::to_string(index_);
}

void validate(const Triangulation& tri) {
    if (tri.num_variables < 1) {
        throw FormatError("triangulation: n must be >= 1");
    }
    if (tri.terms.empty()) {
        throw FormatError("triangulation: empty term list");
    }
    std::vector<bool> seen(static_cast<size_t>(tri.num_variables) + 1, false);
    for (size_t m = 0; m < tri.terms.size(); ++m) {
        const TetraTerm& t = tri.terms[m];
        const std::string where = "term " + std::to_string(m + 1) + ": ";
        if (t.sigma != 1 && t.sigma != -1) {
            throw FormatError(where + "sigma must be +1 or -1");
        }
        for (const SideRef& r : {t.numerator, t.denominator}) {
            if (!r.is_unit()) {
                if (r.index() > tri.num_variables) {
                    throw FormatError(where + "unknown variable " + r.str());
                }
                seen[static_cast<size_t>(r.index())] = true;
            }
        }
        if (t.numerator.is_unit() && t.denominator.is_unit()) {
            throw FormatError(where + "ratio 1/1 is not a valid shape");
        }
        if (!t.numerator.is_unit() && t.numerator == t.denominator) {
            throw FormatError(where + "ratio " + t.numerator.str() + "/" +
                              t.denominator.str() + " is identically 1");
        }
    }
    for (int k = 1; k <= tri.num_variables; ++k) {
        if (!seen[static_cast<size_t>(k)]) {
            throw FormatError("variable z" + std::to_string(k) + " appears in no term");
        }
    }
}

Triangulation twist_knot_triangulation(int n) {
    if (n < 1) throw std::invalid_argument("twist_knot_triangulation: n must be >= 1");
    const auto unit = SideRef::unit();
    Triangulation tri;
    tri.num_variables = n;
    // +Li2(1/z1)
    tri.terms.push_back({+1, unit, SideRef::variable(1)});
    for (int k = 2; k <= n; ++k) {
        // -Li2(z_{k-1}), +Li2(z_{k-1}/z_k), -Li2(1/z_k)
        tri.terms.push_back({-1, unit, SideRef::variable(k - 1)});
        tri.terms.push_back({+1, SideRef::variable(k - 1), SideRef::variable(k)});
        tri.terms.push_back({-1, SideRef::variable(k), unit});
    }
    // -Li2(z_n)
    tri.terms.push_back({-1, unit, SideRef::variable(n)});
    validate(tri);
    return tri;
}

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

SideRef parse_side(const json& j, int n, const std::string& where) {
    if (!j.is_string()) {
        throw FormatError(where + "side must be a string \"1\" or \"z<k>\"");
    }
    const std::string s = j.get<std::string>();
    if (s == "1") return SideRef::unit();
    if (s.size() >= 2 && s[0] == 'z') {
        size_t pos = 0;
        int k = 0;
        try {
            k = std::stoi(s.substr(1), &pos);
        } catch (const std::exception&) {
            throw FormatError(where + "bad side \"" + s + "\"");
        }
        if (pos + 1 == s.size() && k >= 1) {
            if (k > n) throw FormatError(where + "unknown variable \"" + s + "\" (n = " +
                                         std::to_string(n) + ")");
            return SideRef::variable(k);
        }
    }
    throw FormatError(where + "bad side \"" + s + "\" (expected \"1\" or \"z<k>\")");
}

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError("line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                          e.what());
    }
    if (!doc.is_object()) throw FormatError("document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "n" && key != "terms") {
            throw FormatError("unknown field \"" + key + "\"");
        }
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw FormatError("missing or non-integer field \"n\"");
    }
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        throw FormatError("missing or non-array field \"terms\"");
    }
    Triangulation tri;
    tri.num_variables = doc["n"].get<int>();
    if (tri.num_variables < 1) throw FormatError("\"n\" must be >= 1");
    int index = 0;
    for (const json& jt : doc["terms"]) {
        ++index;
        const std::string where = "term " + std::to_string(index) + ": ";
        if (!jt.is_object()) throw FormatError(where + "must be an object");
        for (const auto& [key, _] : jt.items()) {
            if (key != "sigma" && key != "num" && key != "den") {
                throw FormatError(where + "unknown field \"" + key + "\"");
            }
        }
        if (!jt.contains("sigma") || !jt["sigma"].is_number_integer()) {
            throw FormatError(where + "missing or non-integer \"sigma\"");
        }
        if (!jt.contains("num") || !jt.contains("den")) {
            throw FormatError(where + "missing \"num\" or \"den\"");
        }
        TetraTerm term;
        term.sigma = jt["sigma"].get<int>();
        if (term.sigma != 1 && term.sigma != -1) {
            throw FormatError(where + "sigma must be +1 or -1");
        }
        term.numerator = parse_side(jt["num"], tri.num_variables, where);
        term.denominator = parse_side(jt["den"], tri.num_variables, where);
        tri.terms.push_back(term);
    }
    validate(tri);
    return tri;
}

Triangulation load_triangulation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_triangulation(ss.str());
}

std::string to_json(const Triangulation& tri) {
    json doc;
    doc["n"] = tri.num_variables;
    doc["terms"] = json::array();
    for (const TetraTerm& t : tri.terms) {
        doc["terms"].push_back(
            {{"sigma", t.sigma}, {"num", t.numerator.str()}, {"den", t.denominator.str()}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace knotvol
