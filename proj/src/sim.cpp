#include "spikeauct/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace spikeauct {

namespace {

// 53-bit mantissa mapping; pinned so results reproduce across builds.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SimulationResult simulate(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes,
                          PaymentScheme scheme, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw ValidationError("simulate: trials must be at least 1");
    }
    const MechanismOutcome outcome = run_vcg(bidders, spikes);
    const std::size_t m = spikes.size();

    std::vector<double> cumulative(m);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        acc += spikes[j];
        cumulative[j] = acc;
    }

    SimulationResult result;
    result.trials = trials;
    result.scheme = scheme;
    result.seed = seed;
    result.win_counts.assign(m, 0);

    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double u = uniform01(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t winner = static_cast<std::size_t>(it - cumulative.begin());
        if (winner == m) {
            // u landed in normalization dust past the last cumulative value;
            // assign the last positively weighted rank.
            winner = m - 1;
            while (winner > 0 && spikes[winner] == 0.0) --winner;
        }
        ++result.win_counts[winner];
    }

    result.empirical_payment_means.assign(m, 0.0);
    result.empirical_payment_variances.assign(m, 0.0);
    if (scheme == PaymentScheme::betting) {
        // Charges are fixed at commit time, independent of the outcome.
        result.empirical_payment_means = outcome.expected_payments;
        result.empirical_revenue_mean = outcome.revenue;
    } else {
        const auto charges = per_acquisition_charges(outcome, spikes);
        double revenue = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double frac =
                static_cast<double>(result.win_counts[j]) / static_cast<double>(trials);
            const double mean = charges[j] * frac;
            result.empirical_payment_means[j] = mean;
            result.empirical_payment_variances[j] =
                std::max(charges[j] * charges[j] * frac - mean * mean, 0.0);
            revenue += mean;
        }
        result.empirical_revenue_mean = revenue;
    }
    return result;
}

SchemeComparison compare_schemes(const std::vector<BidderProfile>& bidders,
                                 const SpikeVector& spikes, std::uint64_t trials,
                                 std::uint64_t seed) {
    SchemeComparison cmp{
        simulate(bidders, spikes, PaymentScheme::betting, trials, seed),
        simulate(bidders, spikes, PaymentScheme::pay_per_acquisition, trials, seed),
        {},
        {},
        false,
        trials < 2,
    };
    const std::size_t m = spikes.size();
    cmp.mean_differences.assign(m, 0.0);
    cmp.standard_errors.assign(m, 0.0);
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j) {
        cmp.mean_differences[j] = cmp.pay_per_acquisition.empirical_payment_means[j] -
                                  cmp.betting.empirical_payment_means[j];
        cmp.standard_errors[j] =
            std::sqrt(cmp.pay_per_acquisition.empirical_payment_variances[j] /
                      static_cast<double>(trials));
        if (std::abs(cmp.mean_differences[j]) > 3.0 * cmp.standard_errors[j] + kFeasibilityTol) {
            ok = false;
        }
    }
    cmp.within_three_se = ok && !cmp.low_power;
    return cmp;
}

}  // namespace spikeauct
