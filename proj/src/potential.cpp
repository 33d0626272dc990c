#include "knotvol/potential.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

Complex side_value(const SideRef& r, const Eigen::Ref<const ZVector>& z) {
    return r.is_unit() ? Complex(1.0, 0.0) : z[r.index() - 1];
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

[[noreturn]] void degenerate(int term, const char* what) {
    throw NonEssentialPointError("term " + std::to_string(term + 1) + ": " + what);
}

// t_m and u_m = t_m^{sigma_m} for every term; throws on 0/inf shapes.
void shape_values(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z,
                  ZVector& t, ZVector& u) {
    const auto& terms = v.triangulation().terms;
    const int s = v.num_terms();
    t.resize(s);
    u.resize(s);
    for (int m = 0; m < s; ++m) {
        Complex den = side_value(terms[m].denominator, z);
        if (den == 0.0) degenerate(m, "shape denominator is zero");
        Complex tm = side_value(terms[m].numerator, z) / den;
        if (!finite(tm)) degenerate(m, "shape is not finite");
        if (tm == 0.0) degenerate(m, "shape is zero");
        t[m] = tm;
        u[m] = terms[m].sigma == 1 ? tm : 1.0 / tm;
    }
}

}  // namespace

PotentialFunction::PotentialFunction(Triangulation tri) : tri_(std::move(tri)) {
    validate(tri_);
    equations_.resize(static_cast<size_t>(tri_.num_variables));
    for (int k = 1; k <= tri_.num_variables; ++k) {
        equations_[static_cast<size_t>(k - 1)].variable = k;
    }
    for (int m = 0; m < tri_.num_terms(); ++m) {
        const TetraTerm& term = tri_.terms[static_cast<size_t>(m)];
        if (!term.numerator.is_unit()) {
            equations_[static_cast<size_t>(term.numerator.index() - 1)].factors.push_back(
                {m, -1});
        }
        if (!term.denominator.is_unit()) {
            equations_[static_cast<size_t>(term.denominator.index() - 1)].factors.push_back(
                {m, +1});
        }
    }
    for (const auto& eq : equations_) {
        if (eq.factors.empty()) {
            throw FormatError("variable z" + std::to_string(eq.variable) +
                              " has an empty hyperbolicity equation");
        }
    }
}

PotentialFunction assemble(Triangulation tri) { return PotentialFunction(std::move(tri)); }

ZVector shapes(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z) {
    const auto& terms = v.triangulation().terms;
    ZVector t(v.num_terms());
    for (int m = 0; m < v.num_terms(); ++m) {
        Complex den = side_value(terms[static_cast<size_t>(m)].denominator, z);
        if (den == 0.0) degenerate(m, "shape denominator is zero");
        t[m] = side_value(terms[static_cast<size_t>(m)].numerator, z) / den;
    }
    return t;
}

Complex eval_potential(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z) {
    ZVector t, u;
    shape_values(v, z, t, u);
    Complex total = 0.0;
    for (int m = 0; m < v.num_terms(); ++m) {
        double sigma = v.triangulation().terms[static_cast<size_t>(m)].sigma;
        total += sigma * (li2(u[m]) - kPiSqOver6);
    }
    return total;
}

ZVector log_derivatives(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z) {
    ZVector t, u;
    shape_values(v, z, t, u);
    ZVector d = ZVector::Zero(v.num_variables());
    for (const HyperbolicityEquation& eq : v.equations()) {
        Complex sum = 0.0;
        for (const EquationFactor& f : eq.factors) {
            Complex w = 1.0 - u[f.term];
            if (w == 0.0) degenerate(f.term, "shape equals 1 (log pole)");
            sum += static_cast<double>(f.exponent) * std::log(w);
        }
        d[eq.variable - 1] = sum;
    }
    return d;
}

Complex eval_reduced(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z) {
    for (int k = 0; k < v.num_variables(); ++k) {
        if (z[k] == 0.0) {
            throw NonEssentialPointError("z" + std::to_string(k + 1) + " is zero");
        }
    }
    Complex total = eval_potential(v, z);
    ZVector t, u;
    shape_values(v, z, t, u);
    for (const HyperbolicityEquation& eq : v.equations()) {
        // log z_k = 0 kills the whole correction term, and that is also its
        // limit when shapes degenerate towards 1 there (log * log -> 0), so
        // the factor logs are not even evaluated.
        if (z[eq.variable - 1] == 1.0) continue;
        Complex sum = 0.0;
        for (const EquationFactor& f : eq.factors) {
            Complex w = 1.0 - u[f.term];
            if (w == 0.0) degenerate(f.term, "shape equals 1 (log pole)");
            sum += static_cast<double>(f.exponent) * std::log(w);
        }
        total -= sum * std::log(z[eq.variable - 1]);
    }
    return total;
}

ZVector equation_residuals(const PotentialFunction& v, const Eigen::Ref<const ZVector>& z) {
    const auto& terms = v.triangulation().terms;
    const int s = v.num_terms();
    ZVector u(s);
    for (int m = 0; m < s; ++m) {
        Complex den = side_value(terms[static_cast<size_t>(m)].denominator, z);
        Complex tm = side_value(terms[static_cast<size_t>(m)].numerator, z) / den;
        u[m] = terms[static_cast<size_t>(m)].sigma == 1 ? tm : 1.0 / tm;
    }
    ZVector r(v.num_variables());
    for (const HyperbolicityEquation& eq : v.equations()) {
        Complex prod = 1.0;
        for (const EquationFactor& f : eq.factors) {
            Complex w = 1.0 - u[f.term];
            if (f.exponent == 1) {
                prod *= w;
            } else {
                prod /= w;
            }
        }
        r[eq.variable - 1] = prod - 1.0;
    }
    return r;
}

namespace {

std::string ratio_str(const SideRef& num, const SideRef& den) {
    if (den.is_unit()) return num.str();
    return num.str() + "/" + den.str();
}

std::string constant_str(int sixths) {
    int a = std::abs(sixths);
    int b = 6;
    int g = std::gcd(a, b);
    a /= g;
    b /= g;
    std::string s = a == 1 ? "pi^2" : std::to_string(a) + "*pi^2";
    if (b != 1) s += "/" + std::to_string(b);
    return s;
}

}  // namespace

RenderedPotential render_terms(const PotentialFunction& v) {
    RenderedPotential out;
    for (const TetraTerm& t : v.triangulation().terms) {
        // sigma=+1: +Li2(num/den);  sigma=-1: -Li2(den/num)
        std::string body = t.sigma == 1 ? ratio_str(t.numerator, t.denominator)
                                        : ratio_str(t.denominator, t.numerator);
        out.signed_terms.push_back((t.sigma == 1 ? "+" : "-") + ("Li2(" + body + ")"));
        out.constant_sixths -= t.sigma;
    }
    return out;
}

std::string render_potential(const PotentialFunction& v) {
    RenderedPotential parts = render_terms(v);
    std::ostringstream os;
    bool first = true;
    for (const std::string& term : parts.signed_terms) {
        if (first) {
            if (term[0] == '-') os << "-";
            os << term.substr(1);
            first = false;
        } else {
            os << " " << term[0] << " " << term.substr(1);
        }
    }
    if (parts.constant_sixths != 0) {
        os << (parts.constant_sixths > 0 ? " + " : " - ")
           << constant_str(parts.constant_sixths);
    }
    return os.str();
}

}  // namespace knotvol
