#pragma once

#include <complex>

namespace knotvol {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPiSq = kPi * kPi;
inline constexpr double kPiSqOver6 = kPiSq / 6.0;

// Dilogarithm Li2(z) = -integral_0^z log(1-w)/w dw, principal branch, with
// the branch cut along [1, inf). A raw real argument x > 1 (imaginary part
// +0.0) evaluates to the limit from above the cut. Relative accuracy is a
// few ulp away from the cut. Throws NonEssentialPointError on non-finite
// input.
Complex li2(Complex z);

// Bloch-Wigner function D2(z) = Im Li2(z) + log|z| arg(1-z). Real analytic
// and single valued off {0, 1}; vanishes on the real line; antisymmetric
// under conjugation and inversion. Throws NonEssentialPointError for
// z in {0, 1} or non-finite z.
double bloch_wigner(Complex z);

}  // namespace knotvol
