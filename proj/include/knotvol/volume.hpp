#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotvol/polynomial.hpp"
#include "knotvol/solver.hpp"

namespace knotvol {

// vol + i*cs of a parabolic representation, read off the reduced potential:
// vol = Im V0 and cs = -Re V0 reduced modulo pi^2 into [-pi^2/2, pi^2/2).
struct ComplexVolume {
    double vol = 0.0;
    double cs = 0.0;
};

// Reduces x modulo pi^2 into [-pi^2/2, pi^2/2).
double reduce_mod_pi_squared(double x);

// Requires an essential solution; throws NonEssentialPointError otherwise.
ComplexVolume complex_volume(const PotentialFunction& v, const Solution& sol);

// |Im V0 - sum_m D2(t_m)| at an essential solution. The two sides go through
// disjoint code paths (log-corrected dilogarithm sum vs Bloch-Wigner values of
// the shapes), so this is the consistency check between the branch handling
// and the tetrahedra volumes; it should sit at rounding level.
double shape_volume_gap(const PotentialFunction& v, const Solution& sol);

// Index of the essential solution with maximal Im V0 (the geometric solution
// when the set contains it). Throws SolverError when the set has no essential
// solution, or when the maximum is positive but not unique within 1e-9. A set
// whose volumes all vanish (no complex solution) returns the first essential
// index; pair with has_complex_solution for the warning.
int select_geometric(const PotentialFunction& v, const SolutionSet& set);

bool has_complex_solution(const SolutionSet& set);

// Conjugation pairing of the essential solutions: complex ones must appear in
// conjugate pairs (r1 of them), real ones count toward r2. Solutions whose
// conjugate is missing from the set are listed in unpaired.
struct ConjugatePairing {
    int r1 = 0;
    int r2 = 0;
    std::vector<std::pair<int, int>> pairs;  // (i, j) with z_j = conj(z_i)
    std::vector<int> reals;
    std::vector<int> unpaired;
};
ConjugatePairing pair_conjugates(const SolutionSet& set, double tol_dedup = 1e-8);

// One positive value |Im V0| per conjugate pair, sorted descending. Throws
// SolverError when a complex essential solution has no conjugate partner.
std::vector<double> borel_components(const PotentialFunction& v, const SolutionSet& set);

// Continued-fraction numerator alpha(a_1,...,a_m) and the resulting bound
// floor((alpha-1)/2) on the trace-field degree of the 2-bridge link in Conway
// notation. Requires m >= 2, a_1 >= 2, a_m >= 2 and positive interior
// entries; exact integer arithmetic throughout.
BigInt two_bridge_alpha(const std::vector<long long>& a);
BigInt two_bridge_bound(const std::vector<long long>& a);

// essential count >= lower (the degree bound test).
bool meets_degree_lower_bound(const SolutionSet& set, int lower);

// Everything the reporting surface carries for one solved system.
struct VolumeReport {
    SolutionSet set;
    std::vector<std::optional<ComplexVolume>> volumes;  // per solution
    int essential_count = 0;
    int degree_lower_bound = 0;
    int geometric_index = -1;  // -1 when the set has no essential solution
    std::vector<double> borel;
    int r1 = 0;
    int r2 = 0;
    std::optional<BigInt> bound_two_bridge;
    std::vector<std::string> warnings;
};

// Assembles the report; pairing or selection defects become warnings rather
// than exceptions so that sparse generic-solver results still serialize.
VolumeReport build_report(const PotentialFunction& v, SolutionSet set,
                          double tol_dedup = 1e-8);

}  // namespace knotvol
