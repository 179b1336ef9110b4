#pragma once

#include <cstddef>
#include <vector>

#include "spikeauct/core.hpp"
#include "spikeauct/optimizer.hpp"
#include "spikeauct/vcg.hpp"

namespace spikeauct {

/// A keyword auction with K position slots; the last slot is sold through
/// M probability spikes among the next M ranked bidders.
struct KeywordAuctionConfig {
    KeywordAuctionConfig(std::size_t slots, std::vector<double> position_ctrs,
                         std::size_t spike_count);

    std::size_t slots;                  // K
    std::vector<double> position_ctrs;  // gamma_1 > ... > gamma_K > 0
    std::size_t spike_count;            // M
};

/// Outcome of a rank-by-revenue auction evaluated at the symmetric Nash
/// equilibrium point (bids equal to values).
struct SsaOutcome {
    /// rank -> index into the bidder list, by score e_i*v_i descending
    /// (ties broken by ascending id).
    std::vector<std::size_t> ranking;
    std::vector<double> ranked_scores;
    double sne_revenue = 0.0;
    /// Per-click price for each slot: s_{rank i+1} / e_{rank i} (0 for
    /// phantom slots or zero-relevance winners).
    std::vector<double> per_slot_prices;
    /// The position CTRs the revenue was evaluated on (the modified
    /// CTRs for the combined auction).
    std::vector<double> effective_ctrs;
};

/// Equilibrium revenue sum_{j} (ctr_j - ctr_{j+1}) j s_{rank j+1} with
/// ctr = 0 past the last slot and score 0 past the last bidder. Accepts any
/// non-increasing, non-negative CTR list (ties arise from zero spike gaps).
SsaOutcome sne_revenue(const std::vector<BidderProfile>& bidders,
                       const std::vector<double>& ctrs);

/// The combined auction: slots 1..K-1 sold as usual, slot K sold via spikes.
/// Equivalent to a (K+M-1)-slot auction with CTRs
/// (gamma_1, ..., gamma_{K-1}, gamma_K p_1, ..., gamma_K p_M).
SsaOutcome combined_auction(const std::vector<BidderProfile>& bidders,
                            const KeywordAuctionConfig& config, const SpikeVector& spikes);

/// Coefficients of the spike-dependent part of the combined revenue:
/// d_j = ((K+j-1) s_{rank K+j} - (K-1) s_{rank K}) / j. May be negative and
/// need not be monotone; the flag records whether it is.
GapwiseDecomposition ssa_objective_coefficients(const std::vector<BidderProfile>& bidders,
                                                const KeywordAuctionConfig& config);

/// Revenue from the conventionally sold slots, independent of the spikes:
/// sum_{j=1}^{K-2} (gamma_j - gamma_{j+1}) j s_{rank j+1}
/// + gamma_{K-1} (K-1) s_{rank K}.
double ssa_fixed_revenue(const std::vector<BidderProfile>& bidders,
                         const KeywordAuctionConfig& config);

/// Picks the revenue-maximizing spikes for the combined auction subject to
/// the capacity bounds: closed form when the coefficients are monotone,
/// otherwise the general solver.
LpSolution optimize_ssa_spikes(const std::vector<BidderProfile>& bidders,
                               const KeywordAuctionConfig& config, const CapacityParams& eps);

}  // namespace spikeauct
