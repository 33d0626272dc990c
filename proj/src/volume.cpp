#include "knotvol/volume.hpp"

#include <algorithm>
#include <cmath>

#include "knotvol/dilog.hpp"
#include "knotvol/errors.hpp"

namespace knotvol {

namespace {
constexpr double kGeometricTieTol = 1e-9;

void require_essential(const Solution& sol, const char* op) {
    if (!sol.essential) {
        throw NonEssentialPointError(std::string(op) + ": solution is not essential");
    }
}
}  // namespace

double reduce_mod_pi_squared(double x) {
    double r = std::remainder(x, kPiSq);
    if (r >= kPiSq / 2.0) r -= kPiSq;
    if (r < -kPiSq / 2.0) r += kPiSq;
    return r;
}

ComplexVolume complex_volume(const PotentialFunction& v, const Solution& sol) {
    require_essential(sol, "complex_volume");
    Complex v0 = eval_reduced(v, sol.z);
    return {v0.imag(), reduce_mod_pi_squared(-v0.real())};
}

double shape_volume_gap(const PotentialFunction& v, const Solution& sol) {
    require_essential(sol, "shape_volume_gap");
    double sum = 0.0;
    Eigen::VectorXcd t = shapes(v, sol.z);
    for (int m = 0; m < t.size(); ++m) sum += bloch_wigner(t[m]);
    return std::abs(eval_reduced(v, sol.z).imag() - sum);
}

bool has_complex_solution(const SolutionSet& set) {
    for (const Solution& s : set.solutions) {
        if (s.essential && s.is_complex) return true;
    }
    return false;
}

int select_geometric(const PotentialFunction& v, const SolutionSet& set) {
    int best = -1;
    double best_vol = 0.0;
    int near_best = 0;
    std::vector<std::pair<int, double>> vols;
    for (size_t i = 0; i < set.solutions.size(); ++i) {
        const Solution& s = set.solutions[i];
        if (!s.essential) continue;
        double vol = eval_reduced(v, s.z).imag();
        vols.emplace_back(static_cast<int>(i), vol);
        if (best < 0 || vol > best_vol) {
            best = static_cast<int>(i);
            best_vol = vol;
        }
    }
    if (best < 0) throw SolverError("select_geometric: no essential solution in the set");
    if (best_vol < kGeometricTieTol) {
        // All volumes vanish (or the set is missing its complex part): hand
        // back the first essential solution; callers report the warning.
        return vols.front().first;
    }
    for (const auto& [idx, vol] : vols) {
        if (vol > best_vol - kGeometricTieTol) ++near_best;
    }
    if (near_best > 1) {
        throw SolverError("select_geometric: maximal volume is not unique within 1e-9");
    }
    return best;
}

ConjugatePairing pair_conjugates(const SolutionSet& set, double tol_dedup) {
    ConjugatePairing out;
    const auto& sols = set.solutions;
    std::vector<bool> used(sols.size(), false);
    for (size_t i = 0; i < sols.size(); ++i) {
        if (!sols[i].essential || used[i]) continue;
        if (!sols[i].is_complex) {
            out.reals.push_back(static_cast<int>(i));
            used[i] = true;
            continue;
        }
        Eigen::VectorXcd conj_z = sols[i].z.conjugate();
        bool paired = false;
        for (size_t j = i + 1; j < sols.size(); ++j) {
            if (used[j] || !sols[j].essential) continue;
            double d = (sols[j].z - conj_z).lpNorm<Eigen::Infinity>();
            if (d < tol_dedup) {
                out.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
                used[i] = used[j] = true;
                paired = true;
                break;
            }
        }
        if (!paired) {
            out.unpaired.push_back(static_cast<int>(i));
            used[i] = true;
        }
    }
    out.r1 = static_cast<int>(out.pairs.size());
    out.r2 = static_cast<int>(out.reals.size());
    return out;
}

std::vector<double> borel_components(const PotentialFunction& v, const SolutionSet& set) {
    ConjugatePairing pairing = pair_conjugates(set);
    if (!pairing.unpaired.empty()) {
        throw SolverError("borel_components: complex essential solution without its conjugate");
    }
    std::vector<double> out;
    for (const auto& [i, j] : pairing.pairs) {
        out.push_back(std::abs(eval_reduced(v, set.solutions[static_cast<size_t>(i)].z).imag()));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

BigInt two_bridge_alpha(const std::vector<long long>& a) {
    const size_t m = a.size();
    if (m < 2) throw std::invalid_argument("two_bridge_alpha: need at least two entries");
    if (a.front() < 2 || a.back() < 2) {
        throw std::invalid_argument("two_bridge_alpha: a_1 and a_m must be >= 2");
    }
    for (size_t i = 1; i + 1 < m; ++i) {
        if (a[i] < 1) throw std::invalid_argument("two_bridge_alpha: interior entries must be > 0");
    }
    // alpha(empty) = 1, alpha(a1) = a1, alpha(a1..ak) = ak*alpha(..k-1) + alpha(..k-2)
    BigInt prev = 1;
    BigInt cur = a[0];
    for (size_t i = 1; i < m; ++i) {
        BigInt next = a[i] * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt two_bridge_bound(const std::vector<long long>& a) {
    return (two_bridge_alpha(a) - 1) / 2;
}

bool meets_degree_lower_bound(const SolutionSet& set, int lower) {
    return count_essential(set) >= lower;
}

VolumeReport build_report(const PotentialFunction& v, SolutionSet set, double tol_dedup) {
    VolumeReport report;
    report.set = std::move(set);
    for (const Solution& s : report.set.solutions) {
        if (s.essential) {
            report.volumes.push_back(complex_volume(v, s));
        } else {
            report.volumes.push_back(std::nullopt);
        }
    }
    report.essential_count = count_essential(report.set);
    report.degree_lower_bound = report.essential_count;
    if (report.essential_count == 0) {
        report.warnings.push_back("no essential solutions found");
    } else {
        report.geometric_index = select_geometric(v, report.set);
        if (!has_complex_solution(report.set)) {
            report.warnings.push_back("no complex solution: reported geometric volume is zero");
        }
    }
    ConjugatePairing pairing = pair_conjugates(report.set, tol_dedup);
    report.r1 = pairing.r1;
    report.r2 = pairing.r2;
    for (const auto& [i, j] : pairing.pairs) {
        report.borel.push_back(std::abs(report.volumes[static_cast<size_t>(i)]->vol));
    }
    std::sort(report.borel.rbegin(), report.borel.rend());
    if (!pairing.unpaired.empty()) {
        report.warnings.push_back(
            "unpaired complex solution (conjugate not in set); borel list may be incomplete");
    }
    return report;
}

}  // namespace knotvol
