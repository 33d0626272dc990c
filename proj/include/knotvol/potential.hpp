#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "knotvol/diagram.hpp"
#include "knotvol/dilog.hpp"

namespace knotvol {

using ZVector = Eigen::VectorXcd;

// One factor (1 - t_m^{sigma_m})^{exponent} of a product-form hyperbolicity
// equation.
struct EquationFactor {
    int term = 0;      // 0-based index into the triangulation's term list
    int exponent = 0;  // +1 or -1
};

// Product-form equation for one variable:  prod_m (1 - t_m^{sigma_m})^{eps} = 1,
// algebraically equivalent to exp(z_k dV/dz_k) = 1. A tetrahedron whose shape
// ratio has z_k in the numerator contributes exponent -1, in the denominator +1.
struct HyperbolicityEquation {
    int variable = 0;  // 1-based
    std::vector<EquationFactor> factors;
};

// Potential function V(z_1,...,z_n) = sum_m sigma_m (Li2(t_m^{sigma_m}) - pi^2/6)
// of a triangulation, together with its derived hyperbolicity equations.
class PotentialFunction {
public:
    explicit PotentialFunction(Triangulation tri);

    const Triangulation& triangulation() const { return tri_; }
    int num_variables() const { return tri_.num_variables; }
    int num_terms() const { return tri_.num_terms(); }
    const std::vector<HyperbolicityEquation>& equations() const { return equations_; }

private:
    Triangulation tri_;
    std::vector<HyperbolicityEquation> equations_;
};

PotentialFunction assemble(Triangulation tri);

// Shape vector (t_1,...,t_s) at z. Throws NonEssentialPointError when a
// denominator side evaluates to zero.
ZVector shapes(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z);

// V at z, principal branches. t_m = 1 is fine here (Li2(1) is finite);
// t_m in {0, inf} is not and throws, naming the term.
Complex eval_potential(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z);

// z_k dV/dz_k for every k, as the closed-form sum of -+log(1 - t_m^{sigma_m})
// terms. Throws when some t_m^{sigma_m} = 1 (log pole) or degenerates.
ZVector log_derivatives(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z);

// V0 = V - sum_k z_k (dV/dz_k) log z_k. Well defined modulo pi^2 under the
// principal-branch convention; Im V0 at an essential solution is the sum of
// the tetrahedra's signed volumes. Throws when some z_k = 0 or a shape
// degenerates.
Complex eval_reduced(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z);

// Product-form residual exp(z_k dV/dz_k) - 1 per variable, computed as the
// factor product (no 2*pi*i ambiguity). Degenerate points yield non-finite
// entries rather than throwing; solvers treat those as failed evaluations.
ZVector equation_residuals(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z);

// Deterministic plain-text rendering "Li2(z1/z4) - Li2(z2) + ... + pi^2/3":
// one Li2 term per tetrahedron in term order (sigma=-1 terms print as the
// reciprocal ratio), aggregated pi^2/6 constant last.
std::string render_potential(const PotentialFunction& v);

// The same rendering split into parts: signed term strings like "+Li2(1/z2)"
// plus the net constant as a multiple of pi^2/6. Comparison of printed
// formulas as term multisets is done on these.
struct RenderedPotential {
    std::vector<std::string> signed_terms;
    int constant_sixths = 0;  // net constant = constant_sixths * pi^2/6
};
RenderedPotential render_terms(const PotentialFunction& v);

}  // namespace knotvol
