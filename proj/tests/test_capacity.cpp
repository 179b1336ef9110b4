#include <random>

#include "doctest.h"
#include "spikeauct/capacity.hpp"
#include "spikeauct/optimizer.hpp"
#include "test_helpers.hpp"

using namespace spikeauct;

TEST_CASE("compute_kappa finds the last positive bound") {
    CHECK(compute_kappa(CapacityParams({0.0, 0.1, 0.05, 0.0, 0.0})) == 3);
    CHECK(compute_kappa(CapacityParams({0.0, 0.0, 0.0})) == 0);
    CHECK(compute_kappa(CapacityParams({0.2})) == 1);
}

TEST_CASE("threshold_index scans for the first strict drop") {
    CHECK(threshold_index(CoefficientVector({10.0, 10.0, 4.0})) == 3);
    CHECK(threshold_index(CoefficientVector({10.0, 5.0})) == 2);
    CHECK_FALSE(threshold_index(CoefficientVector({7.0, 7.0, 7.0})).has_value());
    CHECK_FALSE(threshold_index(CoefficientVector({7.0})).has_value());
}

TEST_CASE("uniform capacity increase reproduces the worked bound") {
    // m = 2 uniform bounds of 0.2, coefficients (10, 8, 5)
    const CoefficientVector d({10.0, 8.0, 5.0});
    const double bound = uniform_increase_bound(d, 2, 0.2);
    CHECK(bound == doctest::Approx(4.0 / 95.0).epsilon(1e-12));

    const CapacityParams before({0.2, 0.2, 0.0});
    const CapacityParams after({bound, bound, bound});
    const double h_before = solve_closed_form(d, before).objective_value;
    const double h_after = solve_closed_form(d, after).objective_value;
    CHECK(h_before == doctest::Approx(9.2).epsilon(1e-12));
    CHECK(h_after == doctest::Approx(9.2).epsilon(1e-12));
}

TEST_CASE("increase_capacity adds one index without losing value") {
    const CoefficientVector d({10.0, 8.0, 5.0});
    const CapacityParams eps({0.2, 0.2, 0.0});
    const auto grown = increase_capacity(eps, d);
    CHECK(compute_kappa(grown) == 3);
    CHECK(grown[0] == 0.2);
    CHECK(grown[1] == 0.1);
    CHECK(grown[2] > 0.0);
    const double h_before = solve_closed_form(d, eps).objective_value;
    const double h_after = solve_closed_form(d, grown).objective_value;
    CHECK(h_after >= h_before - 1e-9);
}

TEST_CASE("increase_capacity handles the all-equal-coefficients regime") {
    // no threshold anywhere: any feasible bump is loss-free
    const CoefficientVector d({10.0, 10.0, 10.0});
    const auto grown = increase_capacity(CapacityParams({0.0, 0.1, 0.0}), d);
    CHECK(compute_kappa(grown) == 3);
    CHECK(solve_closed_form(d, grown).objective_value == doctest::Approx(10.0).epsilon(1e-12));

    const auto from_zero = increase_capacity(CapacityParams({0.0, 0.0, 0.0}), d);
    CHECK(compute_kappa(from_zero) == 1);
    CHECK(from_zero[0] > 0.0);
}

TEST_CASE("increase_capacity rejects exhausted and below-threshold regimes") {
    const CoefficientVector d({10.0, 8.0, 5.0});
    CHECK_THROWS_AS(increase_capacity(CapacityParams({0.1, 0.1, 0.1}), d),
                    CapacityExhaustedError);
    // kappa = 1 < a = 2: the step toward the threshold necessarily loses
    CHECK_THROWS_AS(increase_capacity(CapacityParams({0.3, 0.0, 0.0}), d), RegimeError);
    CHECK_THROWS_AS(increase_capacity(CapacityParams({0.0, 0.0, 0.0}), d), RegimeError);
    CHECK_THROWS_AS(increase_capacity(CapacityParams({0.1, 0.1}), d), DimensionError);
    CHECK_THROWS_AS(increase_capacity(CapacityParams({0.1, 0.1, 0.0}),
                                      CoefficientVector({1.0, 9.0, 2.0})),
                    MonotonicityError);
}

TEST_CASE("increase_capacity property: kappa + 1, feasible, loss-free") {
    std::mt19937_64 rng(909);
    int accepted = 0;
    while (accepted < 300) {
        const std::size_t m = testutil::pick_size(rng, 2, 20);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto a = threshold_index(d);
        const std::size_t lo = a ? *a : 1;
        if (lo >= m) continue;  // need kappa < M
        const std::size_t kappa = testutil::pick_size(rng, lo, m - 1);
        // positive bounds through kappa, zero beyond
        std::vector<double> e(m, 0.0);
        double weighted = 0.0;
        for (std::size_t j = 0; j < kappa; ++j) {
            e[j] = testutil::uniform(rng, 0.0, 1.0) + 1e-6;
            weighted += static_cast<double>(j + 1) * e[j];
        }
        const double mass = testutil::uniform(rng, 0.05, 0.9);
        for (std::size_t j = 0; j < kappa; ++j) e[j] *= mass / weighted;
        const CapacityParams eps(e);
        REQUIRE(compute_kappa(eps) == kappa);

        const auto grown = increase_capacity(eps, d);
        CHECK(compute_kappa(grown) == kappa + 1);
        CHECK(grown.weighted_sum() <= 1.0 + 1e-9);
        const double before = solve_closed_form(d, eps).objective_value;
        const double after = solve_closed_form(d, grown).objective_value;
        CHECK(after >= before - 1e-9);
        ++accepted;
    }
}

TEST_CASE("price_of_capacity reports the supremum ratio and its bound") {
    const auto report = price_of_capacity(CoefficientVector({10.0, 10.0, 4.0}));
    REQUIRE(report.a_index.has_value());
    CHECK(*report.a_index == 3);
    CHECK(report.nu == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(report.nu_upper_bound == doctest::Approx(2.5).epsilon(1e-12));

    const auto flat = price_of_capacity(CoefficientVector({6.0, 6.0}));
    CHECK_FALSE(flat.a_index.has_value());
    CHECK(flat.nu == 1.0);

    const auto degenerate = price_of_capacity(CoefficientVector({10.0, 0.0}));
    CHECK(std::isinf(degenerate.nu));
    CHECK(std::isinf(degenerate.nu_upper_bound));
}

TEST_CASE("uniform price of capacity matches the closed form") {
    CHECK(price_of_capacity_uniform(CoefficientVector({10.0, 5.0})) ==
          doctest::Approx(1.5).epsilon(1e-12));
    CHECK(price_of_capacity_uniform(CoefficientVector({10.0, 0.0})) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(price_of_capacity_uniform(CoefficientVector({10.0, 10.0, 10.0, 2.0})) ==
          doctest::Approx(5.0 / 3.4).epsilon(1e-12));
    CHECK_THROWS_AS(price_of_capacity_uniform(CoefficientVector({3.0, 3.0})), NoThresholdError);
}

TEST_CASE("uniform price of capacity respects the bound chain") {
    std::mt19937_64 rng(1010);
    int accepted = 0;
    while (accepted < 400) {
        const std::size_t m = testutil::pick_size(rng, 2, 30);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto a = threshold_index(d);
        if (!a) continue;
        const double nu = price_of_capacity_uniform(d);
        const double cap = 1.0 + 2.0 / (static_cast<double>(*a) - 1.0);
        CHECK(nu <= std::min(3.0, cap) + 1e-12);
        CHECK(nu >= 1.0 - 1e-12);
        ++accepted;
    }
}

TEST_CASE("the optimum stays unconstrained exactly below the threshold") {
    std::mt19937_64 rng(1111);
    int accepted = 0;
    while (accepted < 200) {
        const std::size_t m = testutil::pick_size(rng, 2, 15);
        const auto d = testutil::random_monotone_coeffs(rng, m);
        const auto a = threshold_index(d);
        if (!a) continue;
        const double d1 = d[0];

        // kappa < a: every bound sits on an index with d_j = d_1
        std::vector<double> low(m, 0.0);
        const std::size_t kappa_low = testutil::pick_size(rng, 1, *a - 1);
        for (std::size_t j = 0; j < kappa_low; ++j) {
            low[j] = 0.5 / (static_cast<double>(m) * static_cast<double>(j + 1));
        }
        const double h_low = solve_closed_form(d, CapacityParams(low)).objective_value;
        CHECK(h_low == doctest::Approx(d1).epsilon(1e-12));

        // kappa >= a with a positive bound at a: strict loss
        std::vector<double> high(m, 0.0);
        high[*a - 1] = 0.5 / static_cast<double>(*a);
        const double h_high = solve_closed_form(d, CapacityParams(high)).objective_value;
        CHECK(h_high < d1);
        ++accepted;
    }
}

TEST_CASE("nu shrinks as the threshold coefficient grows") {
    double previous = std::numeric_limits<double>::infinity();
    for (double da : {1.0, 2.0, 4.0, 8.0}) {
        const auto report = price_of_capacity(CoefficientVector({10.0, da}));
        CHECK(report.nu <= previous + 1e-12);
        previous = report.nu;
    }
}
