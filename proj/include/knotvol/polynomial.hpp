#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotvol {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial with exact integer coefficients, ascending degree order.
// Normalized: no trailing zero coefficients; the zero polynomial is an empty
// coefficient vector with degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    IntPolynomial(std::initializer_list<long long> ascending);

    static IntPolynomial constant(long long c) { return IntPolynomial({c}); }
    // c * x^k
    static IntPolynomial monomial(long long c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int k) const;  // zero beyond the stored range
    const BigInt& leading() const;     // requires !is_zero()
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial&) const = default;

    std::complex<double> eval(std::complex<double> x) const;

    // Evaluation through fixed-point integer arithmetic: a double input is a
    // dyadic rational, so every Horner intermediate is exact up to the 2^-320
    // truncation, immune to the cancellation plain double Horner suffers on
    // ill-conditioned high-degree polynomials. Rounded to double on return.
    std::complex<double> eval_exact(std::complex<double> x) const;

    IntPolynomial derivative() const;

    // "z^3 - 3*z^2 + 2*z - 1" in descending order; "0" for the zero polynomial.
    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace knotvol
