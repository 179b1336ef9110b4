#include <random>

#include "doctest.h"
#include "spikeauct/optimizer.hpp"
#include "test_helpers.hpp"

using namespace spikeauct;

TEST_CASE("closed form reproduces the worked instance") {
    const CoefficientVector d({10.0, 8.0, 5.0});
    const CapacityParams eps({0.0, 0.1, 0.05});
    const auto sol = solve_closed_form(d, eps);
    CHECK(sol.gaps[0] == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(sol.gaps[1] == 0.1);
    CHECK(sol.gaps[2] == 0.05);
    CHECK(sol.objective_value == doctest::Approx(8.85).epsilon(1e-12));
    REQUIRE(sol.dual.size() == 4);
    CHECK(sol.dual[0] == 10.0);
    CHECK(sol.dual[1] == 0.0);
    CHECK(sol.dual[2] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sol.dual[3] == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(sol.kkt_certified);
    CHECK(evaluate_objective(sol.gaps, d) == doctest::Approx(sol.objective_value).epsilon(1e-12));
}

TEST_CASE("closed form with zero bounds puts everything on the first gap") {
    const CoefficientVector d({9.0, 4.0, 2.0, 1.0});
    const auto sol = solve_closed_form(d, CapacityParams({0.0, 0.0, 0.0, 0.0}));
    CHECK(sol.gaps.gaps() == std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(sol.objective_value == 9.0);
    CHECK(sol.kkt_certified);
}

TEST_CASE("equal coefficients pin the objective regardless of bounds") {
    const CoefficientVector d({7.0, 7.0, 7.0});
    const auto sol = solve_closed_form(d, CapacityParams({0.0, 0.2, 0.1}));
    CHECK(sol.objective_value == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(sol.kkt_certified);
}

TEST_CASE("closed form rejects non-monotone coefficients") {
    CHECK_THROWS_AS(solve_closed_form(CoefficientVector({2.0, 9.0}), CapacityParams({0.0, 0.0})),
                    MonotonicityError);
    CHECK_THROWS_AS(
        solve_closed_form(CoefficientVector({2.0, 9.0}), CapacityParams({0.1, 0.1})),
        RegimeError);  // monotonicity errors are regime errors
}

TEST_CASE("simplex places residual mass on the best coefficient") {
    const CoefficientVector d({2.0, 9.0, 1.0});
    const auto sol = solve_simplex(d, CapacityParams({0.1, 0.1, 0.1}));
    CHECK(sol.gaps[0] == 0.1);
    CHECK(sol.gaps[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(sol.gaps[2] == 0.1);
    CHECK(sol.objective_value == doctest::Approx(5.9).epsilon(1e-12));
    CHECK(sol.kkt_certified);
}

TEST_CASE("simplex with exhausted mass returns the bounds themselves") {
    // sum j*eps_j = 0.2 + 0.4 + 0.0 + 0.4 = 1 exactly
    const CapacityParams eps({0.2, 0.2, 0.0, 0.1});
    const auto sol = solve_simplex(CoefficientVector({1.0, 5.0, 2.0, 8.0}), eps);
    CHECK(sol.gaps.gaps() == eps.epsilons());
    CHECK(sol.kkt_certified);
}

TEST_CASE("simplex agrees with the closed form on monotone instances") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t m = testutil::pick_size(rng, 1, 50);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto eps = testutil::random_eps(rng, m);
        const auto closed = solve_closed_form(d, eps);
        const auto simplex = solve_simplex(d, eps);
        CHECK(std::abs(closed.objective_value - simplex.objective_value) <= 1e-9);
        CHECK(closed.kkt_certified);
        CHECK(simplex.kkt_certified);
    }
}

TEST_CASE("simplex matches vertex enumeration, including negative coefficients") {
    std::mt19937_64 rng(505);
    for (int iter = 0; iter < 400; ++iter) {
        const std::size_t m = testutil::pick_size(rng, 1, 6);
        std::vector<double> raw(m);
        for (auto& v : raw) v = testutil::uniform(rng, -50.0, 50.0);
        const CoefficientVector d(raw);
        const auto eps = testutil::random_eps(rng, m);
        const auto sol = solve_simplex(d, eps);
        CHECK(std::abs(sol.objective_value - testutil::vertex_enumeration_optimum(d, eps)) <=
              1e-9);
        CHECK(sol.kkt_certified);
    }
}

TEST_CASE("optimal gaps do not depend on monotone coefficients") {
    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t m = testutil::pick_size(rng, 2, 20);
        const auto eps = testutil::random_eps(rng, m);
        const auto reference = solve_closed_form(testutil::random_monotone_coeffs(rng, m), eps);
        for (int rep = 0; rep < 5; ++rep) {
            const auto sol = solve_closed_form(testutil::random_monotone_coeffs(rng, m), eps);
            CHECK(sol.gaps.gaps() == reference.gaps.gaps());
        }
    }
}

TEST_CASE("weak duality holds for any feasible point, tight at the optimum") {
    std::mt19937_64 rng(707);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t m = testutil::pick_size(rng, 1, 20);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto eps = testutil::random_eps(rng, m);
        const auto sol = solve_closed_form(d, eps);

        double dual_value = sol.dual[0];
        for (std::size_t j = 0; j < m; ++j) dual_value -= eps[j] * sol.dual[j + 1];
        CHECK(std::abs(dual_value - sol.objective_value) <= 1e-9);

        // random feasible primal point: distribute the residual arbitrarily
        std::vector<double> theta(eps.epsilons());
        double residual = 1.0 - eps.weighted_sum();
        std::vector<double> w(m);
        double total = 0.0;
        for (auto& v : w) total += (v = testutil::uniform(rng, 0.0, 1.0) + 1e-9);
        for (std::size_t j = 0; j < m; ++j) {
            theta[j] += residual * (w[j] / total) / static_cast<double>(j + 1);
        }
        const double primal = evaluate_objective(GapVector(theta), d);
        CHECK(primal <= dual_value + 1e-9);
    }
}

TEST_CASE("objective degrades as any single bound grows") {
    std::mt19937_64 rng(808);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t m = testutil::pick_size(rng, 2, 12);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto eps = testutil::random_eps(rng, m, 0.5);
        const std::size_t j = 1 + rng() % (m - 1);
        std::vector<double> bumped(eps.epsilons());
        bumped[j] += 0.4 / static_cast<double>(m * (j + 1));
        const double before = solve_closed_form(d, eps).objective_value;
        const double after = solve_closed_form(d, CapacityParams(bumped)).objective_value;
        CHECK(after <= before + 1e-9);
    }
}

TEST_CASE("check_kkt spots violations block by block") {
    const CoefficientVector d({10.0, 8.0, 5.0});
    const CapacityParams eps({0.0, 0.1, 0.05});
    const auto sol = solve_closed_form(d, eps);
    CHECK(check_kkt(d, eps, sol));

    // normalization broken
    CHECK_FALSE(check_kkt(d, eps, {0.64, 0.1, 0.05}, sol.dual));
    // primal bound broken
    CHECK_FALSE(check_kkt(d, eps, {0.67, 0.09, 0.05}, sol.dual));
    // complementary slackness broken: x_2 > 0 but theta_2 > eps_2
    CHECK_FALSE(check_kkt(d, eps, {0.45, 0.2, 0.05}, sol.dual));
    // dual feasibility broken
    CHECK_FALSE(check_kkt(d, eps, sol.gaps.gaps(), {10.0, 0.0, -4.0, 15.0}));
    // stationarity broken
    CHECK_FALSE(check_kkt(d, eps, sol.gaps.gaps(), {10.0, 1.0, 4.0, 15.0}));

    CHECK_THROWS_AS(check_kkt(d, eps, {1.0}, sol.dual), DimensionError);
}
