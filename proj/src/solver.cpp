#include "knotvol/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool lex_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

double max_norm_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

int count_essential(const SolutionSet& set) {
    int c = 0;
    for (const Solution& s : set.solutions) c += s.essential ? 1 : 0;
    return c;
}

// ---------------------------------------------------------------------------
// Twist reduction
// ---------------------------------------------------------------------------

TwistReduction::TwistReduction(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("twist_reduce: n must be >= 1");
    if (n == 1) {
        // The single equation (1 - 1/z1)(1 - z1) = 1 clears to z1^2 - z1 + 1.
        final_ = IntPolynomial{1, -1, 1};
        return;
    }
    const IntPolynomial a{1, -2, 3};   // 3z^2 - 2z + 1 = z1^2 (1 + z_n)
    const IntPolynomial z2{0, 0, 1};
    p_.resize(static_cast<size_t>(n));  // index k, valid 1..n-1
    q_.resize(static_cast<size_t>(n));
    p_[1] = IntPolynomial{1};
    q_[1] = IntPolynomial{0, 1};
    if (n - 1 >= 2) {
        p_[2] = IntPolynomial{1, -1, 1};
        q_[2] = z2;
    }
    // 1/z_k = 1 - z_{k-2} + z_n  with  z_n = 1 + (1 - 1/z1)^2:
    // p_k/q_k = a/z^2 - q_{k-2}/p_{k-2}
    for (int k = 3; k <= n - 1; ++k) {
        const IntPolynomial& pp = p_[static_cast<size_t>(k - 2)];
        const IntPolynomial& qq = q_[static_cast<size_t>(k - 2)];
        p_[static_cast<size_t>(k)] = a * pp - z2 * qq;
        q_[static_cast<size_t>(k)] = z2 * pp;
    }
    // z_{n-1} = z_n + 1 = a/z^2 with z_{n-1} = q_{n-1}/p_{n-1}
    final_ = z2 * q_[static_cast<size_t>(n - 1)] - a * p_[static_cast<size_t>(n - 1)];
}

const IntPolynomial& TwistReduction::p(int k) const {
    if (k < 1 || k > n_ - 1) throw std::out_of_range("TwistReduction::p");
    return p_[static_cast<size_t>(k)];
}

const IntPolynomial& TwistReduction::q(int k) const {
    if (k < 1 || k > n_ - 1) throw std::out_of_range("TwistReduction::q");
    return q_[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// Univariate roots (Aberth-Ehrlich)
// ---------------------------------------------------------------------------

namespace {

struct DoublePoly {
    std::vector<double> c;  // ascending, scaled

    Complex eval(Complex x) const {
        Complex r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
    Complex deriv(Complex x) const {
        Complex r = 0.0;
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
            r = r * x + static_cast<double>(k) * c[static_cast<size_t>(k)];
        }
        return r;
    }
    // backward-error denominator sum_i |a_i| |x|^i
    double error_scale(Complex x) const {
        double ax = std::abs(x);
        double r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * ax + std::abs(*it);
        return std::max(r, 1e-300);
    }
};

}  // namespace

std::vector<Complex> solve_univariate(const IntPolynomial& poly, const SolverConfig& config) {
    const int deg = poly.degree();
    if (deg < 1) throw std::invalid_argument("solve_univariate: degree must be >= 1");

    DoublePoly p;
    double scale = 0.0;
    for (int k = 0; k <= deg; ++k) {
        scale = std::max(scale, std::abs(static_cast<double>(poly.coeff(k))));
    }
    for (int k = 0; k <= deg; ++k) {
        p.c.push_back(static_cast<double>(poly.coeff(k)) / scale);
    }

    // Perturbed-circle initial guesses; radius from the Fujiwara root bound.
    double bound = 0.0;
    double an = std::abs(p.c.back());
    for (int k = 1; k <= deg; ++k) {
        double r = std::pow(std::abs(p.c[static_cast<size_t>(deg - k)]) / an, 1.0 / k);
        bound = std::max(bound, r);
    }
    bound = std::max(2.0 * bound, 1e-3);
    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (int j = 0; j < deg; ++j) {
        double angle = 2.0 * kPi * (j + 0.35) / deg + 0.12;
        double radius = 0.5 * bound * (1.0 + 0.08 * std::sin(2.399963 * (j + 1)));
        roots[static_cast<size_t>(j)] = std::polar(radius, angle);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    const IntPolynomial dpoly = poly.derivative();
    auto sweep = [&](bool exact, double settle_tol) {
        bool settled = true;
        for (int i = 0; i < deg; ++i) {
            Complex zi = roots[static_cast<size_t>(i)];
            Complex pv, dv;
            if (exact) {
                pv = poly.eval_exact(zi);
                dv = dpoly.eval_exact(zi);
            } else {
                pv = p.eval(zi);
                if (std::abs(pv) <= 16.0 * eps * p.error_scale(zi)) continue;
                dv = p.deriv(zi);
            }
            Complex newton = dv == 0.0 ? Complex(0.1, 0.1) : pv / dv;
            Complex s = 0.0;
            for (int j = 0; j < deg; ++j) {
                if (j != i) s += 1.0 / (zi - roots[static_cast<size_t>(j)]);
            }
            Complex w = newton / (1.0 - newton * s);
            if (!finite(w)) w = newton;
            double limit = 0.5 * (1.0 + std::abs(zi));
            if (std::abs(w) > limit) w *= limit / std::abs(w);
            roots[static_cast<size_t>(i)] = zi - w;
            if (std::abs(w) > settle_tol * (1.0 + std::abs(zi))) settled = false;
        }
        return settled;
    };

    // Phase 1 in plain doubles until the configuration stops moving. Phase 2
    // repeats the sweep with exact fixed-point evaluation: the double Horner
    // noise floor of the larger twist polynomials exceeds what pins the
    // approximations down, and polishing roots one by one without the
    // mutual-repulsion term would let neighbours collapse onto one root.
    for (int it = 0; it < config.aberth_max_iterations; ++it) {
        if (sweep(false, 1e-13)) break;
    }
    for (int it = 0; it < 60; ++it) {
        if (sweep(true, 8.0 * eps)) break;
    }

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    // Collapse multiple roots to one representative.
    std::vector<Complex> unique_roots;
    for (Complex r : roots) {
        bool dup = false;
        for (Complex u : unique_roots) {
            if (std::abs(r - u) <= 1e-8 * std::max(1.0, std::abs(u))) {
                dup = true;
                break;
            }
        }
        if (!dup) unique_roots.push_back(r);
    }

    for (Complex r : unique_roots) {
        if (std::abs(p.eval(r)) > 1e-12 * p.error_scale(r)) {
            throw SolverError("solve_univariate: no convergence for " + poly.str());
        }
    }
    return unique_roots;
}

// ---------------------------------------------------------------------------
// Back substitution and classification
// ---------------------------------------------------------------------------

namespace {

Solution classify(const PotentialFunction& v, Eigen::VectorXcd z, const SolverConfig& config) {
    Solution s;
    s.z = std::move(z);
    bool vars_ok = true;
    for (int k = 0; k < s.z.size(); ++k) {
        double a = std::abs(s.z[k]);
        if (!finite(s.z[k]) || a < config.tol_essential || a > 1.0 / config.tol_essential) {
            vars_ok = false;
        }
    }
    bool shapes_ok = true;
    try {
        s.shape_values = shapes(v, s.z);
    } catch (const NonEssentialPointError&) {
        shapes_ok = false;
    }
    if (shapes_ok) {
        for (int m = 0; m < s.shape_values.size(); ++m) {
            Complex t = s.shape_values[m];
            double a = std::abs(t);
            if (!finite(t) || a < config.tol_essential || a > 1.0 / config.tol_essential ||
                std::abs(t - 1.0) < config.tol_essential) {
                shapes_ok = false;
            }
            if (finite(t) && std::abs(t.imag()) > config.tol_essential) s.is_complex = true;
        }
    }
    s.essential = vars_ok && shapes_ok;
    s.residual = std::numeric_limits<double>::infinity();
    if (vars_ok) {
        Eigen::VectorXcd r = equation_residuals(v, s.z);
        double worst = 0.0;
        bool ok = true;
        for (int k = 0; k < r.size(); ++k) {
            if (!finite(r[k])) ok = false;
            worst = std::max(worst, std::abs(r[k]));
        }
        if (ok) s.residual = worst;
    }
    return s;
}

void dedup_and_sort(std::vector<Solution>& sols, double tol) {
    std::sort(sols.begin(), sols.end(),
              [](const Solution& a, const Solution& b) { return lex_less(a.z, b.z); });
    std::vector<Solution> out;
    for (Solution& s : sols) {
        bool dup = false;
        for (const Solution& u : out) {
            if (max_norm_distance(s.z, u.z) < tol) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(s));
    }
    sols = std::move(out);
}

// ---------------------------------------------------------------------------
// Damped Newton on the product form
// ---------------------------------------------------------------------------

// Residuals F_k = prod (1-u_m)^{eps} - 1 and the analytic Jacobian dF/dz.
// Returns false when the point is degenerate.
bool residual_and_jacobian(const PotentialFunction& v, const Eigen::VectorXcd& z,
                           Eigen::VectorXcd& f, Eigen::MatrixXcd* jac) {
    const auto& terms = v.triangulation().terms;
    const int n = v.num_variables();
    const int s = v.num_terms();
    Eigen::VectorXcd u(s);
    for (int m = 0; m < s; ++m) {
        Complex num = terms[static_cast<size_t>(m)].numerator.is_unit()
                          ? Complex(1.0)
                          : z[terms[static_cast<size_t>(m)].numerator.index() - 1];
        Complex den = terms[static_cast<size_t>(m)].denominator.is_unit()
                          ? Complex(1.0)
                          : z[terms[static_cast<size_t>(m)].denominator.index() - 1];
        Complex t = num / den;
        u[m] = terms[static_cast<size_t>(m)].sigma == 1 ? t : 1.0 / t;
        if (!finite(u[m]) || u[m] == 1.0) return false;
    }
    f.resize(n);
    if (jac) jac->setZero(n, n);
    for (const HyperbolicityEquation& eq : v.equations()) {
        Complex prod = 1.0;
        for (const EquationFactor& fac : eq.factors) {
            Complex w = 1.0 - u[fac.term];
            prod = fac.exponent == 1 ? prod * w : prod / w;
        }
        if (!finite(prod)) return false;
        const int row = eq.variable - 1;
        f[row] = prod - 1.0;
        if (!jac) continue;
        for (const EquationFactor& fac : eq.factors) {
            const TetraTerm& term = terms[static_cast<size_t>(fac.term)];
            const Complex w = 1.0 - u[fac.term];
            // d u_m / d z_j = sigma * dt * u_m / z_j  (dt = +1 numerator, -1
            // denominator of the underlying ratio t_m)
            for (int which = 0; which < 2; ++which) {
                const SideRef& side = which == 0 ? term.numerator : term.denominator;
                if (side.is_unit()) continue;
                const int col = side.index() - 1;
                const double dt = which == 0 ? 1.0 : -1.0;
                (*jac)(row, col) += prod * static_cast<double>(fac.exponent) *
                                    (-static_cast<double>(term.sigma) * dt * u[fac.term]) /
                                    (z[col] * w);
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        if (!finite(f[k])) return false;
    }
    return true;
}

bool newton_from(const PotentialFunction& v, Eigen::VectorXcd z, const SolverConfig& config,
                 Eigen::VectorXcd& out) {
    const int n = v.num_variables();
    Eigen::VectorXcd f(n), f_next(n);
    Eigen::MatrixXcd jac(n, n);
    if (!residual_and_jacobian(v, z, f, &jac)) return false;
    for (int it = 0; it < config.newton_max_iterations; ++it) {
        double norm = f.lpNorm<Eigen::Infinity>();
        if (norm < config.tol_residual) {
            out = z;
            return true;
        }
        Eigen::VectorXcd dz = jac.partialPivLu().solve(-f);
        if (!dz.allFinite()) return false;
        double lambda = 1.0;
        bool stepped = false;
        for (; lambda > 1.0 / 4096.0; lambda *= 0.5) {
            Eigen::VectorXcd z_next = z + lambda * dz;
            if (!residual_and_jacobian(v, z_next, f_next, &jac)) continue;
            if (f_next.lpNorm<Eigen::Infinity>() < norm) {
                z = z_next;
                f = f_next;
                stepped = true;
                break;
            }
        }
        if (!stepped) return false;
    }
    return false;
}

}  // namespace

Solution back_substitute(Complex root, const TwistReduction& reduction,
                         const PotentialFunction& v, const SolverConfig& config) {
    const int n = reduction.n();
    if (v.num_variables() != n) {
        throw std::invalid_argument("back_substitute: potential does not match the reduction");
    }
    const Complex inf(std::numeric_limits<double>::infinity(), 0.0);
    Eigen::VectorXcd z(n);
    z[0] = root;
    Complex z_last = 0.0;
    if (n >= 2) {
        Complex w = 1.0 - 1.0 / root;
        z_last = 1.0 + w * w;
        z[n - 1] = z_last;
    }
    // z_k = q_k/p_k via exact fixed-point evaluation of the stored rational
    // functions; the plain double Horner loses the high-degree ones to
    // cancellation. A vanishing p_k is a genuine pole of the substitution
    // and keeps the point non-essential.
    for (int k = 2; k <= n - 1; ++k) {
        Complex pv = reduction.p(k).eval_exact(root);
        Complex qv = reduction.q(k).eval_exact(root);
        z[k - 1] = pv == 0.0 ? inf : qv / pv;
    }
    Solution s = classify(v, std::move(z), config);
    // Root error from an ill-conditioned final polynomial amplifies through
    // the reconstruction; a short Newton polish on the full system restores
    // residuals to rounding level without leaving the root's basin.
    if (s.essential && std::isfinite(s.residual) && s.residual > config.tol_residual) {
        Eigen::VectorXcd polished(n);
        if (newton_from(v, s.z, config, polished)) {
            s = classify(v, std::move(polished), config);
        }
    }
    return s;
}

SolutionSet solve_twist_exact(const PotentialFunction& v, const TwistReduction& reduction,
                              const SolverConfig& config) {
    SolutionSet set;
    set.exhaustive = true;
    for (Complex root : solve_univariate(reduction.final_polynomial(), config)) {
        set.solutions.push_back(back_substitute(root, reduction, v, config));
    }
    dedup_and_sort(set.solutions, config.tol_dedup);
    return set;
}

SolutionSet solve_generic(const PotentialFunction& v, const SolverConfig& config) {
    if (config.attempts < 1) throw std::invalid_argument("solve_generic: attempts must be >= 1");
    const int n = v.num_variables();
    std::mt19937_64 rng(config.seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double log_min = std::log(config.start_radius_min);
    const double log_max = std::log(config.start_radius_max);

    // A Newton run can also stall onto degenerate limit configurations
    // (variables drifting to 0 or infinity along which the product form
    // tends to 1). Those are not isolated solutions; accept a converged
    // point only when its recomputed residual stays finite and small.
    const double accept_residual = 1e3 * config.tol_residual;

    SolutionSet set;
    set.exhaustive = false;
    Eigen::VectorXcd start(n), converged(n);
    for (int attempt = 0; attempt < config.attempts; ++attempt) {
        for (int k = 0; k < n; ++k) {
            double radius = std::exp(log_min + (log_max - log_min) * uniform());
            double angle = 2.0 * kPi * uniform();
            start[k] = std::polar(radius, angle);
        }
        if (!newton_from(v, start, config, converged)) continue;
        bool dup = false;
        for (const Solution& u : set.solutions) {
            if (max_norm_distance(u.z, converged) < config.tol_dedup) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        Solution s = classify(v, converged, config);
        if (std::isfinite(s.residual) && s.residual <= accept_residual) {
            set.solutions.push_back(std::move(s));
        }
    }
    dedup_and_sort(set.solutions, config.tol_dedup);
    return set;
}

}  // namespace knotvol
