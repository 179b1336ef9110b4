#pragma once

#include <cstddef>
#include <vector>

#include "spikeauct/core.hpp"

namespace spikeauct {

/// Result of running the VCG mechanism over probability spikes.
struct MechanismOutcome {
    /// rank -> index into the bidder list, sorted by value descending
    /// (ties broken by ascending id). Covers every bidder, assigned or not.
    std::vector<std::size_t> ranking;
    /// Bidder values in rank order (same length as ranking).
    std::vector<double> ranked_values;
    /// Expected payment h_j per spike, one entry per spike.
    std::vector<double> expected_payments;
    double revenue = 0.0;
    double efficiency = 0.0;
};

/// A quantity rewritten as sum_j theta_j * j * d_j over spike gaps.
struct GapwiseDecomposition {
    CoefficientVector coeffs;
    bool is_monotone = false;
};

/// Ranks bidders by value, assigns spike j to the rank-j bidder, and charges
/// opportunity costs: h_j = sum_{i=j}^{M-1} (p_i - p_{i+1}) v_{rank i+1}
/// + p_M v_{rank M+1}, with value 0 past the last bidder.
MechanismOutcome run_vcg(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes);

/// Revenue as a gap objective: d_i = value of the rank-(i+1) bidder.
/// Throws ConsistencyError when the outcome does not match the spikes.
GapwiseDecomposition revenue_decomposition(const MechanismOutcome& outcome,
                                           const SpikeVector& spikes);

/// Efficiency as a gap objective: d_i = mean of the top-i values.
GapwiseDecomposition efficiency_decomposition(const MechanismOutcome& outcome,
                                              const SpikeVector& spikes);

/// True when every bidder's realized utility under (ranking, payments)
/// equals the best utility it could achieve at those prices. Accepts
/// arbitrary allocations and payments so the equivalence with efficiency
/// can be tested in both directions.
bool check_walrasian(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes,
                     const std::vector<std::size_t>& ranking,
                     const std::vector<double>& payments);

/// Per-win charge h_j / p_j under pay-per-acquisition (0 where p_j = 0,
/// since that spike never wins).
std::vector<double> per_acquisition_charges(const MechanismOutcome& outcome,
                                            const SpikeVector& spikes);

/// Standalone coefficient builders used when no mechanism run is at hand.
CoefficientVector revenue_coefficients(const std::vector<BidderProfile>& bidders, std::size_t m);
CoefficientVector efficiency_coefficients(const std::vector<BidderProfile>& bidders, std::size_t m);

}  // namespace spikeauct
