#include "spikeauct/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spikeauct {

namespace {

std::vector<std::size_t> score_ranking(const std::vector<BidderProfile>& bidders) {
    std::vector<std::size_t> order(bidders.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (bidders[a].score() != bidders[b].score()) return bidders[a].score() > bidders[b].score();
        return bidders[a].id < bidders[b].id;
    });
    return order;
}

}  // namespace

KeywordAuctionConfig::KeywordAuctionConfig(std::size_t slots_, std::vector<double> position_ctrs_,
                                           std::size_t spike_count_)
    : slots(slots_), position_ctrs(std::move(position_ctrs_)), spike_count(spike_count_) {
    if (slots < 1) {
        throw ValidationError("KeywordAuctionConfig: at least one slot required");
    }
    if (position_ctrs.size() != slots) {
        std::ostringstream msg;
        msg << "KeywordAuctionConfig: expected " << slots << " position CTRs, got "
            << position_ctrs.size();
        throw DimensionError(msg.str());
    }
    for (std::size_t j = 0; j < position_ctrs.size(); ++j) {
        if (!(position_ctrs[j] > 0.0)) {
            throw ValidationError("KeywordAuctionConfig: position CTRs must be positive");
        }
        if (j + 1 < position_ctrs.size() && !(position_ctrs[j] > position_ctrs[j + 1])) {
            throw ValidationError(
                "KeywordAuctionConfig: position CTRs must be strictly decreasing");
        }
    }
    if (spike_count < 1) {
        throw ValidationError("KeywordAuctionConfig: at least one spike required");
    }
}

SsaOutcome sne_revenue(const std::vector<BidderProfile>& bidders,
                       const std::vector<double>& ctrs) {
    if (bidders.empty()) {
        throw ValidationError("sne_revenue: bidder list must not be empty");
    }
    if (ctrs.empty()) {
        throw ValidationError("sne_revenue: at least one slot required");
    }
    for (std::size_t j = 0; j < ctrs.size(); ++j) {
        if (!(ctrs[j] >= 0.0)) {
            throw ValidationError("sne_revenue: CTRs must be non-negative");
        }
        if (j + 1 < ctrs.size() && ctrs[j] < ctrs[j + 1]) {
            std::ostringstream msg;
            msg << "sne_revenue: CTRs must be non-increasing (violated between slots " << j
                << " and " << j + 1 << ")";
            throw ValidationError(msg.str());
        }
    }

    const std::size_t n = bidders.size();
    const std::size_t k = ctrs.size();

    SsaOutcome out;
    out.ranking = score_ranking(bidders);
    out.ranked_scores.reserve(n);
    for (std::size_t idx : out.ranking) out.ranked_scores.push_back(bidders[idx].score());
    auto score_at = [&](std::size_t rank) { return rank < n ? out.ranked_scores[rank] : 0.0; };

    out.sne_revenue = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double next = j + 1 < k ? ctrs[j + 1] : 0.0;
        out.sne_revenue += (ctrs[j] - next) * static_cast<double>(j + 1) * score_at(j + 1);
    }

    out.per_slot_prices.assign(k, 0.0);
    for (std::size_t j = 0; j < std::min(n, k); ++j) {
        const double relevance = bidders[out.ranking[j]].relevance;
        out.per_slot_prices[j] = relevance > 0.0 ? score_at(j + 1) / relevance : 0.0;
    }

    out.effective_ctrs = ctrs;
    return out;
}

SsaOutcome combined_auction(const std::vector<BidderProfile>& bidders,
                            const KeywordAuctionConfig& config, const SpikeVector& spikes) {
    if (spikes.size() != config.spike_count) {
        std::ostringstream msg;
        msg << "combined_auction: expected " << config.spike_count << " spikes, got "
            << spikes.size();
        throw DimensionError(msg.str());
    }
    const std::size_t k = config.slots;
    std::vector<double> modified;
    modified.reserve(k - 1 + spikes.size());
    for (std::size_t j = 0; j + 1 < k; ++j) modified.push_back(config.position_ctrs[j]);
    const double last = config.position_ctrs[k - 1];
    for (std::size_t j = 0; j < spikes.size(); ++j) modified.push_back(last * spikes[j]);
    return sne_revenue(bidders, modified);
}

GapwiseDecomposition ssa_objective_coefficients(const std::vector<BidderProfile>& bidders,
                                                const KeywordAuctionConfig& config) {
    if (bidders.empty()) {
        throw ValidationError("ssa_objective_coefficients: bidder list must not be empty");
    }
    const auto order = score_ranking(bidders);
    const std::size_t n = bidders.size();
    auto score_at = [&](std::size_t rank) {
        return rank < n ? bidders[order[rank]].score() : 0.0;
    };

    const std::size_t k = config.slots;
    const double anchor = static_cast<double>(k - 1) * score_at(k - 1);  // (K-1) s_{rank K}
    std::vector<double> d(config.spike_count, 0.0);
    for (std::size_t j = 0; j < d.size(); ++j) {
        d[j] = (static_cast<double>(k + j) * score_at(k + j) - anchor) /
               static_cast<double>(j + 1);
    }
    GapwiseDecomposition dec{CoefficientVector(std::move(d)), false};
    dec.is_monotone = is_gapwise_monotone(dec.coeffs);
    return dec;
}

double ssa_fixed_revenue(const std::vector<BidderProfile>& bidders,
                         const KeywordAuctionConfig& config) {
    if (bidders.empty()) {
        throw ValidationError("ssa_fixed_revenue: bidder list must not be empty");
    }
    const auto order = score_ranking(bidders);
    const std::size_t n = bidders.size();
    auto score_at = [&](std::size_t rank) {
        return rank < n ? bidders[order[rank]].score() : 0.0;
    };

    const std::size_t k = config.slots;
    const auto& ctrs = config.position_ctrs;
    double fixed = 0.0;
    for (std::size_t j = 0; j + 2 < k; ++j) {  // 1-based j = 1..K-2
        fixed += (ctrs[j] - ctrs[j + 1]) * static_cast<double>(j + 1) * score_at(j + 1);
    }
    if (k >= 2) {
        fixed += ctrs[k - 2] * static_cast<double>(k - 1) * score_at(k - 1);
    }
    return fixed;
}

LpSolution optimize_ssa_spikes(const std::vector<BidderProfile>& bidders,
                               const KeywordAuctionConfig& config, const CapacityParams& eps) {
    if (eps.size() != config.spike_count) {
        std::ostringstream msg;
        msg << "optimize_ssa_spikes: expected " << config.spike_count
            << " capacity bounds, got " << eps.size();
        throw DimensionError(msg.str());
    }
    const auto dec = ssa_objective_coefficients(bidders, config);
    LpSolution sol = [&] {
        if (dec.is_monotone) {
            try {
                return solve_closed_form(dec.coeffs, eps);
            } catch (const RegimeError&) {
                // fall through to the general solver
            }
        }
        return solve_simplex(dec.coeffs, eps);
    }();

    // The LP objective and the full auction must tell the same story.
    const SpikeVector spikes = gaps_to_spikes(sol.gaps);
    const double revenue = combined_auction(bidders, config, spikes).sne_revenue;
    const double predicted = ssa_fixed_revenue(bidders, config) +
                             config.position_ctrs.back() * sol.objective_value;
    if (std::abs(revenue - predicted) > kFeasibilityTol) {
        throw std::logic_error("optimize_ssa_spikes: objective decomposition mismatch");
    }
    return sol;
}

}  // namespace spikeauct
