#include "knotvol/dilog.hpp"

#include <cmath>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

// Direct power series sum z^k/k^2, for |z| <= 1/2.
Complex li2_power_series(Complex z) {
    Complex term = z;
    Complex total = z;
    for (int k = 2; k <= 300; ++k) {
        term *= z;
        Complex t = term / static_cast<double>(k * k);
        total += t;
        if (std::abs(t) < 1e-17 * std::max(1.0, std::abs(total))) break;
    }
    return total;
}

// Series in u = -log(1-z):  Li2(z) = u - u^2/4 + sum_k B_{2k} u^{2k+1}/(2k+1)!
// Converges for |u| < 2*pi; used on the part of the unit disk (Re z <= 1/2,
// 1/2 < |z|, |1-z| > 1/2) that neither the power series nor the reflection
// reaches, where |u| stays below ~1.4.
Complex li2_log_series(Complex z) {
    static constexpr double kEvenBernoulli[] = {
        +2.77777777777777762e-02, -2.77777777777777778e-04, +4.72411186696900978e-06,
        -9.18577307466196408e-08, +1.89788699889710005e-09, -4.06476164514422560e-11,
        +8.92169102045645230e-13, -1.99392958607210744e-14, +4.51898002961991825e-16,
        -1.03565176121812472e-17, +2.39521862102618698e-19, -5.58178587432500898e-21,
        +1.30915075541832125e-22, -3.08741980242674029e-24, +7.31597565270220293e-26,
        -1.74084565723400088e-27, +4.15763564461389988e-29, -9.96214848828462168e-31,
        +2.39403442489616522e-32, -5.76834735536738970e-34, +1.39317947964700803e-35,
        -3.37212196548508943e-37};
    Complex u = -std::log(1.0 - z);
    Complex u2 = u * u;
    Complex total = u - 0.25 * u2;
    Complex up = u * u2;
    for (double c : kEvenBernoulli) {
        Complex t = c * up;
        total += t;
        if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(total))) break;
        up *= u2;
    }
    return total;
}

// |z| <= 1 assumed.
Complex li2_unit_disk(Complex z) {
    if (std::abs(z) <= 0.5) return li2_power_series(z);
    if (std::abs(1.0 - z) <= 0.5) {
        return kPiSqOver6 - std::log(z) * std::log(1.0 - z) - li2_power_series(1.0 - z);
    }
    if (z.real() > 0.5) {
        return kPiSqOver6 - std::log(z) * std::log(1.0 - z) - li2_log_series(1.0 - z);
    }
    return li2_log_series(z);
}

}  // namespace

Complex li2(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw NonEssentialPointError("li2: non-finite argument");
    }
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
    if (z == Complex(1.0, 0.0)) return {kPiSqOver6, 0.0};
    if (std::abs(z) > 1.0) {
        // Inversion Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2. Componentwise
        // negation keeps the sign of a zero imaginary part, so real z > 1
        // lands on the from-above side of the cut.
        Complex lz = std::log(-z);
        return -li2_unit_disk(1.0 / z) - kPiSqOver6 - 0.5 * lz * lz;
    }
    return li2_unit_disk(z);
}

double bloch_wigner(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw NonEssentialPointError("bloch_wigner: non-finite argument");
    }
    if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0)) {
        throw NonEssentialPointError("bloch_wigner: argument on the degenerate set {0, 1}");
    }
    Complex w = 1.0 - z;
    return li2(z).imag() + std::log(std::abs(z)) * std::atan2(w.imag(), w.real());
}

}  // namespace knotvol
