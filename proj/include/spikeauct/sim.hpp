#pragma once

#include <cstdint>
#include <vector>

#include "spikeauct/core.hpp"
#include "spikeauct/vcg.hpp"

namespace spikeauct {

enum class PaymentScheme {
    betting,              // every prospective winner pays h_j each trial
    pay_per_acquisition,  // the winner alone pays h_j / p_j
};

/// Empirical payment statistics from repeated runs of the selling experiment.
/// Identical (inputs, seed) produce bit-identical results.
struct SimulationResult {
    std::uint64_t trials = 0;
    std::vector<double> empirical_payment_means;
    std::vector<double> empirical_payment_variances;  // population variance
    double empirical_revenue_mean = 0.0;
    std::vector<std::uint64_t> win_counts;  // per rank; sums to trials
    PaymentScheme scheme = PaymentScheme::betting;
    std::uint64_t seed = 0;
};

/// Side-by-side run of both payment schemes on common random numbers.
struct SchemeComparison {
    SimulationResult betting;
    SimulationResult pay_per_acquisition;
    /// pay-per-acquisition mean minus betting mean, per rank.
    std::vector<double> mean_differences;
    /// Empirical standard error of the pay-per-acquisition mean, per rank.
    std::vector<double> standard_errors;
    /// All differences within three standard errors. Meaningless (false)
    /// when low_power is set.
    bool within_three_se = false;
    /// Too few trials to estimate standard errors.
    bool low_power = false;
};

/// Runs `trials` independent draws of the categorical experiment over the
/// spikes (inverse-CDF with one uniform draw per trial, mt19937_64 seeded
/// with `seed`, 53-bit mantissa mapping to [0,1)).
SimulationResult simulate(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes,
                          PaymentScheme scheme, std::uint64_t trials, std::uint64_t seed);

SchemeComparison compare_schemes(const std::vector<BidderProfile>& bidders,
                                 const SpikeVector& spikes, std::uint64_t trials,
                                 std::uint64_t seed);

}  // namespace spikeauct
