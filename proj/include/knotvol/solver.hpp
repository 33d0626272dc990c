#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "knotvol/polynomial.hpp"
#include "knotvol/potential.hpp"

namespace knotvol {

struct SolverConfig {
    int attempts = 1000;              // multi-start count for the generic solver
    std::uint64_t seed = 1729;        // RNG seed for start points
    double tol_essential = 1e-8;      // proxy distance from {0, 1, inf}
    double tol_dedup = 1e-8;          // max-norm distance identifying solutions
    double tol_residual = 1e-12;      // convergence target on |prod - 1|
    int newton_max_iterations = 120;
    int aberth_max_iterations = 400;
    double start_radius_min = 0.1;    // annulus for random starts
    double start_radius_max = 10.0;
};

// A solution candidate of the hyperbolicity equations with its derived data.
// essential: every shape stays away from {0, 1, inf} and every z_k from
// {0, inf}, within tol_essential. is_complex: some shape has an imaginary
// part above the tolerance.
struct Solution {
    Eigen::VectorXcd z;
    Eigen::VectorXcd shape_values;  // empty when shapes are degenerate
    double residual = 0.0;          // max |exp(z_k dV/dz_k) - 1| over k
    bool essential = false;
    bool is_complex = false;
};

// Deduplicated solutions in lexicographic order of (Re z1, Im z1, Re z2, ...).
// exhaustive is true only for the exact twist reduction; the multi-start
// solver makes no completeness claim.
struct SolutionSet {
    std::vector<Solution> solutions;
    bool exhaustive = false;
};

int count_essential(const SolutionSet& set);

// Elimination data for the twist knot with n contributing sides: rational
// expressions 1/z_k = p_k(z1)/q_k(z1) for k = 1..n-1 and the final integer
// polynomial in z1 of degree at most n+1 whose roots carry all essential
// solutions.
class TwistReduction {
public:
    explicit TwistReduction(int n);

    int n() const { return n_; }
    // valid for k = 1..n-1 (k = 1 is the seed 1/z1 = 1/z1)
    const IntPolynomial& p(int k) const;
    const IntPolynomial& q(int k) const;
    const IntPolynomial& final_polynomial() const { return final_; }

private:
    int n_;
    std::vector<IntPolynomial> p_, q_;
    IntPolynomial final_;
};

inline TwistReduction twist_reduce(int n) { return TwistReduction(n); }

// All complex roots of an integer polynomial (degree >= 1) by the
// Aberth-Ehrlich simultaneous iteration from perturbed-circle starts, with
// Newton polishing. Multiple roots are collapsed to one representative.
// Every returned root r satisfies |p(r)| <= 1e-12 * sum_i |a_i||r|^i;
// otherwise a SolverError reports the polynomial.
std::vector<Complex> solve_univariate(const IntPolynomial& poly,
                                      const SolverConfig& config = {});

// Reconstructs the full variable vector from a root of the final polynomial
// via the stored rational expressions and Eq-derived closed forms, then
// classifies it against the potential's equations. Division by zero during
// substitution yields a retained non-essential solution.
Solution back_substitute(Complex root, const TwistReduction& reduction,
                         const PotentialFunction& v, const SolverConfig& config = {});

// Exact path for twist knots: roots of the final polynomial, back
// substituted, deduplicated and ordered. The potential must be the one
// assembled from twist_knot_triangulation(reduction.n()).
SolutionSet solve_twist_exact(const PotentialFunction& v, const TwistReduction& reduction,
                              const SolverConfig& config = {});

// Multi-start damped Newton on the product-form residuals from random starts
// in the configured annulus. Deterministic for a fixed seed; the returned set
// is marked non-exhaustive. Finding nothing is an empty set, not an error.
SolutionSet solve_generic(const PotentialFunction& v, const SolverConfig& config = {});

}  // namespace knotvol
