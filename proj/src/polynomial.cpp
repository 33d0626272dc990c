#include "knotvol/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace knotvol {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
    coeffs_.assign(ascending.begin(), ascending.end());
    trim();
}

IntPolynomial IntPolynomial::monomial(long long c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigInt> v(static_cast<size_t>(k) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out(coeffs_);
    for (BigInt& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

std::complex<double> IntPolynomial::eval(std::complex<double> x) const {
    std::complex<double> r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = r * x + static_cast<double>(*it);
    }
    return r;
}

namespace {

constexpr int kFracBits = 320;

BigInt fixed_from_double(double v) {
    if (v == 0.0) return 0;
    int e = 0;
    double m = std::frexp(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
    auto mantissa = static_cast<long long>(std::ldexp(m, 53));
    BigInt out = mantissa;
    int shift = kFracBits + e - 53;
    if (shift >= 0) {
        out <<= shift;
    } else {
        out >>= -shift;
    }
    return out;
}

double fixed_to_double(const BigInt& v) {
    return std::ldexp(v.convert_to<double>(), -kFracBits);
}

struct FixedComplex {
    BigInt re, im;
};

FixedComplex fixed_mul(const FixedComplex& a, const FixedComplex& b) {
    return {(a.re * b.re - a.im * b.im) >> kFracBits,
            (a.re * b.im + a.im * b.re) >> kFracBits};
}

}  // namespace

std::complex<double> IntPolynomial::eval_exact(std::complex<double> x) const {
    FixedComplex xe{fixed_from_double(x.real()), fixed_from_double(x.imag())};
    FixedComplex acc{0, 0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = fixed_mul(acc, xe);
        acc.re += BigInt(*it) << kFracBits;
    }
    return {fixed_to_double(acc.re), fixed_to_double(acc.im)};
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * static_cast<long long>(k);
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace knotvol
