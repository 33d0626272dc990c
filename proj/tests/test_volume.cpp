#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "knotvol/dilog.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/solver.hpp"
#include "knotvol/volume.hpp"

using namespace knotvol;

namespace {

SolutionSet exact_set(const PotentialFunction& v, int n) {
    return solve_twist_exact(v, twist_reduce(n));
}

}  // namespace

TEST_CASE("figure-eight complex volume") {
    PotentialFunction v = assemble(twist_knot_triangulation(1));
    SolutionSet set = exact_set(v, 1);
    REQUIRE(count_essential(set) == 2);
    int geo = select_geometric(v, set);
    ComplexVolume cv = complex_volume(v, set.solutions[geo]);
    CHECK(cv.vol == doctest::Approx(2.029883212819307).epsilon(1e-12));
    CHECK(std::abs(cv.cs) < 1e-9);  // amphichiral
    // conjugate solution flips the volume
    for (size_t i = 0; i < set.solutions.size(); ++i) {
        if (static_cast<int>(i) == geo) continue;
        ComplexVolume other = complex_volume(v, set.solutions[i]);
        CHECK(other.vol == doctest::Approx(-cv.vol).epsilon(1e-12));
        CHECK(std::abs(other.cs) < 1e-9);
    }
}

TEST_CASE("complex_volume requires an essential solution") {
    PotentialFunction v = assemble(twist_knot_triangulation(2));
    Solution bogus;
    bogus.z = ZVector::Constant(2, Complex(2.0, 0.0));
    bogus.essential = false;
    CHECK_THROWS_AS(complex_volume(v, bogus), NonEssentialPointError);
    CHECK_THROWS_AS(shape_volume_gap(v, bogus), NonEssentialPointError);
}

TEST_CASE("twist n=2 volumes") {
    PotentialFunction v = assemble(twist_knot_triangulation(2));
    SolutionSet set = exact_set(v, 2);
    REQUIRE(count_essential(set) == 3);
    int geo = select_geometric(v, set);
    CHECK(complex_volume(v, set.solutions[geo]).vol ==
          doctest::Approx(2.8281220883307827).epsilon(1e-10));
    for (const Solution& s : set.solutions) {
        if (!s.is_complex) CHECK(std::abs(complex_volume(v, s).vol) < 1e-9);
    }
    std::vector<double> borel = borel_components(v, set);
    REQUIRE(borel.size() == 1);
    CHECK(borel[0] == doctest::Approx(2.8281220883307827).epsilon(1e-10));
    ConjugatePairing pairing = pair_conjugates(set);
    CHECK(pairing.r1 == 1);
    CHECK(pairing.r2 == 1);
}

TEST_CASE("twist n=3 borel components") {
    PotentialFunction v = assemble(twist_knot_triangulation(3));
    SolutionSet set = exact_set(v, 3);
    REQUIRE(count_essential(set) == 4);
    std::vector<double> borel = borel_components(v, set);
    REQUIRE(borel.size() == 2);
    CHECK(borel[0] == doctest::Approx(3.1639632288831433).epsilon(1e-9));
    CHECK(borel[1] == doctest::Approx(1.4151048972655631).epsilon(1e-9));
    // descending, leading entry equals the geometric volume
    int geo = select_geometric(v, set);
    CHECK(borel[0] == doctest::Approx(complex_volume(v, set.solutions[geo]).vol));
    ConjugatePairing pairing = pair_conjugates(set);
    CHECK(pairing.r1 == 2);
    CHECK(pairing.r2 == 0);
}

TEST_CASE("volume consistency and the maximality inequality across systems") {
    for (int n = 1; n <= 8; ++n) {
        PotentialFunction v = assemble(twist_knot_triangulation(n));
        SolutionSet set = exact_set(v, n);
        int geo = select_geometric(v, set);
        double geo_vol = complex_volume(v, set.solutions[geo]).vol;
        for (const Solution& s : set.solutions) {
            if (!s.essential) continue;
            CHECK(shape_volume_gap(v, s) < 1e-9);
            CHECK(std::abs(complex_volume(v, s).vol) <= geo_vol + 1e-9);
        }
    }
}

TEST_CASE("conjugation symmetry of vol and cs") {
    for (int n : {2, 3, 5}) {
        PotentialFunction v = assemble(twist_knot_triangulation(n));
        SolutionSet set = exact_set(v, n);
        ConjugatePairing pairing = pair_conjugates(set);
        REQUIRE(pairing.unpaired.empty());
        for (const auto& [i, j] : pairing.pairs) {
            ComplexVolume a = complex_volume(v, set.solutions[i]);
            ComplexVolume b = complex_volume(v, set.solutions[j]);
            CHECK(std::abs(a.vol + b.vol) < 1e-9);
            // Schwarz reflection: conjugating the solution conjugates V0, so
            // cs is invariant mod pi^2 (the volume is what changes sign)
            CHECK(std::abs(reduce_mod_pi_squared(a.cs - b.cs)) < 1e-9);
        }
    }
}

TEST_CASE("real solutions carry zero volume") {
    PotentialFunction v = assemble(twist_knot_triangulation(2));
    SolutionSet set = exact_set(v, 2);
    for (const Solution& s : set.solutions) {
        if (s.essential && !s.is_complex) {
            CHECK(std::abs(complex_volume(v, s).vol) < 1e-9);
        }
    }
}

TEST_CASE("geometric selection corner cases") {
    PotentialFunction v = assemble(twist_knot_triangulation(2));
    SolutionSet set = exact_set(v, 2);

    SolutionSet empty;
    CHECK_THROWS_AS(select_geometric(v, empty), SolverError);

    SolutionSet only_real;
    for (const Solution& s : set.solutions) {
        if (!s.is_complex) only_real.solutions.push_back(s);
    }
    REQUIRE(only_real.solutions.size() == 1);
    CHECK(select_geometric(v, only_real) == 0);
    CHECK_FALSE(has_complex_solution(only_real));

    // a duplicated maximal solution is ambiguous
    int geo = select_geometric(v, set);
    SolutionSet tied;
    tied.solutions.push_back(set.solutions[geo]);
    tied.solutions.push_back(set.solutions[geo]);
    CHECK_THROWS_AS(select_geometric(v, tied), SolverError);
}

TEST_CASE("borel pairing requires conjugates") {
    PotentialFunction v = assemble(twist_knot_triangulation(1));
    SolutionSet set = exact_set(v, 1);
    SolutionSet half;
    half.solutions.push_back(set.solutions[0]);  // one of the conjugate pair
    CHECK_THROWS_AS(borel_components(v, half), SolverError);
}

TEST_CASE("two-bridge recursion") {
    CHECK(two_bridge_alpha({2, 2}) == 5);
    CHECK(two_bridge_bound({2, 2}) == 2);
    CHECK(two_bridge_alpha({2, 3}) == 7);
    CHECK(two_bridge_bound({2, 3}) == 3);
    CHECK(two_bridge_alpha({3, 7, 4, 2}) == 204);  // 2*(4*(7*3+1)+3) + (4*22+3)
    CHECK(two_bridge_bound({3, 7, 4, 2}) == 101);

    CHECK_THROWS_AS(two_bridge_alpha({5}), std::invalid_argument);
    CHECK_THROWS_AS(two_bridge_alpha({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(two_bridge_alpha({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(two_bridge_alpha({2, 0, 2}), std::invalid_argument);

    // exact arithmetic well past 64 bits: alpha of one hundred 2s satisfies
    // the Pell recurrence a_k = 2 a_{k-1} + a_{k-2}
    std::vector<long long> twos(100, 2);
    BigInt expect_prev = 1, expect = 2;
    for (int k = 2; k <= 100; ++k) {
        BigInt next = 2 * expect + expect_prev;
        expect_prev = expect;
        expect = next;
    }
    CHECK(two_bridge_alpha(twos) == expect);
    CHECK(expect > BigInt("18446744073709551615"));
}

TEST_CASE("degree bound check") {
    PotentialFunction v4 = assemble(twist_knot_triangulation(4));
    SolutionSet set4 = exact_set(v4, 4);
    CHECK(meets_degree_lower_bound(set4, 5));

    SolutionSet empty;
    CHECK_FALSE(meets_degree_lower_bound(empty, 1));

    PotentialFunction v1 = assemble(twist_knot_triangulation(1));
    CHECK(meets_degree_lower_bound(exact_set(v1, 1), 2));
}

TEST_CASE("two-bridge bound matches essential counts for the twist family") {
    for (int n = 1; n <= 15; ++n) {
        PotentialFunction v = assemble(twist_knot_triangulation(n));
        CHECK(two_bridge_bound({2, static_cast<long long>(n) + 1}) == n + 1);
        CHECK(count_essential(exact_set(v, n)) == n + 1);
    }
}

TEST_CASE("fixture report regression") {
    PotentialFunction v = assemble(load_triangulation(KNOTVOL_FIXTURE_PATH));
    SolverConfig config;
    config.attempts = 1500;
    VolumeReport report = build_report(v, solve_generic(v, config));
    CHECK(report.essential_count == 5);
    CHECK(report.r1 == 2);
    CHECK(report.r2 == 1);
    REQUIRE(report.geometric_index >= 0);
    const ComplexVolume& geo = *report.volumes[report.geometric_index];
    CHECK(geo.vol == doctest::Approx(4.1249032518076762).epsilon(1e-9));
    CHECK(geo.cs == doctest::Approx(-2.0403126698595681).epsilon(1e-9));
    REQUIRE(report.borel.size() == 2);
    CHECK(report.borel[0] == doctest::Approx(4.1249032518076762).epsilon(1e-9));
    CHECK(report.borel[1] == doctest::Approx(1.1089146150245746).epsilon(1e-9));
    for (size_t i = 0; i < report.set.solutions.size(); ++i) {
        const Solution& s = report.set.solutions[i];
        if (!s.essential) continue;
        CHECK(shape_volume_gap(v, s) < 1e-9);
        CHECK(std::abs(report.volumes[i]->vol) <= geo.vol + 1e-9);
        if (!s.is_complex) {
            CHECK(std::abs(report.volumes[i]->vol) < 1e-9);
            CHECK(report.volumes[i]->cs == doctest::Approx(1.2036488591091273).epsilon(1e-9));
        }
    }
    CHECK(report.warnings.empty());
}

TEST_CASE("report on an empty solution set") {
    PotentialFunction v = assemble(twist_knot_triangulation(2));
    SolverConfig config;
    config.attempts = 1;
    config.seed = 3;  // known to find nothing
    SolutionSet set = solve_generic(v, config);
    if (set.solutions.empty()) {
        VolumeReport report = build_report(v, std::move(set));
        CHECK(report.essential_count == 0);
        CHECK(report.geometric_index == -1);
        REQUIRE(report.warnings.size() >= 1);
        CHECK(report.warnings[0] == "no essential solutions found");
    }
}

TEST_CASE("mod pi^2 reduction window") {
    CHECK(reduce_mod_pi_squared(0.0) == 0.0);
    CHECK(reduce_mod_pi_squared(kPiSq) == doctest::Approx(0.0));
    CHECK(reduce_mod_pi_squared(kPiSq / 2.0) == doctest::Approx(-kPiSq / 2.0));
    CHECK(reduce_mod_pi_squared(-kPiSq / 2.0) == doctest::Approx(-kPiSq / 2.0));
    CHECK(reduce_mod_pi_squared(3.0 * kPiSq + 1.25) == doctest::Approx(1.25));
    for (double x : {-31.4, -9.9, -1.0, 0.5, 7.7, 123.456}) {
        double r = reduce_mod_pi_squared(x);
        CHECK(r >= -kPiSq / 2.0);
        CHECK(r < kPiSq / 2.0);
        CHECK(std::abs(std::remainder(x - r, kPiSq)) < 1e-9);
    }
}
