#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace knotvol {

// Reference to one side of the opened diagram: either the contributing side
// carrying variable z_k (k in 1..n) or a non-contributing side carrying the
// constant 1.
class SideRef {
public:
    static SideRef unit() { return SideRef(0); }
    static SideRef variable(int k);

    bool is_unit() const { return index_ == 0; }
    // 1-based variable index; only valid when !is_unit().
    int index() const { return index_; }

    bool operator==(const SideRef&) const = default;

    std::string str() const;  // "1" or "z<k>"

private:
    explicit SideRef(int index) : index_(index) {}
    int index_;
};

// One ideal tetrahedron: its sign and its shape parameter, stored as the
// ratio numerator/denominator of the two side values next to it.
struct TetraTerm {
    int sigma = 1;  // +1 or -1
    SideRef numerator = SideRef::unit();
    SideRef denominator = SideRef::unit();

    bool operator==(const TetraTerm&) const = default;
};

// Term list of an ideal triangulation: n contributing side variables and an
// ordered list of s tetrahedra.
struct Triangulation {
    int num_variables = 0;
    std::vector<TetraTerm> terms;

    int num_terms() const { return static_cast<int>(terms.size()); }
    bool operator==(const Triangulation&) const = default;
};

// Checks structural invariants; throws FormatError naming the offending
// term: sigma in {+1,-1}, variable indices in 1..n, no unit/unit ratio, no
// identical-variable ratio, non-empty term list, every variable referenced.
void validate(const Triangulation& tri);

// Canonical term list of the twist knot with n contributing sides
// (two terms for n = 1, 3n-1 for n >= 2). Throws std::invalid_argument
// for n < 1.
Triangulation twist_knot_triangulation(int n);

// Strict parser for the JSON fixture format:
//   {"n": <int>, "terms": [{"sigma": 1|-1, "num": "z<k>"|"1", "den": ...}, ...]}
// Unknown fields are rejected. Errors carry the line (syntax) or the term
// index (validation). The result is validated.
Triangulation parse_triangulation(const std::string& text);
Triangulation load_triangulation(const std::filesystem::path& path);

// Serializes in the same format parse_triangulation accepts; round-trips
// exactly.
std::string to_json(const Triangulation& tri);

}  // namespace knotvol
