#include "spikeauct/vcg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace spikeauct {

namespace {

std::vector<std::size_t> value_ranking(const std::vector<BidderProfile>& bidders) {
    std::vector<std::size_t> order(bidders.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (bidders[a].value != bidders[b].value) return bidders[a].value > bidders[b].value;
        return bidders[a].id < bidders[b].id;
    });
    return order;
}

// d_i = ranked[i] shifted one rank down, zero past the end (1-based i).
std::vector<double> shifted_value_coeffs(const std::vector<double>& ranked, std::size_t m) {
    std::vector<double> c(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        c[i] = (i + 1 < ranked.size()) ? ranked[i + 1] : 0.0;
    }
    return c;
}

// d_i = mean of the first i ranked values, zero-padded past the end.
std::vector<double> prefix_mean_coeffs(const std::vector<double>& ranked, std::size_t m) {
    std::vector<double> c(m, 0.0);
    double running = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        running += (i < ranked.size()) ? ranked[i] : 0.0;
        c[i] = running / static_cast<double>(i + 1);
    }
    return c;
}

void require_outcome_matches(const MechanismOutcome& outcome, const SpikeVector& spikes,
                             const char* where) {
    if (outcome.expected_payments.size() != spikes.size() ||
        outcome.ranking.size() != outcome.ranked_values.size() || outcome.ranking.empty()) {
        throw ConsistencyError(std::string(where) + ": outcome does not match the given spikes");
    }
}

}  // namespace

MechanismOutcome run_vcg(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes) {
    if (bidders.empty()) {
        throw ValidationError("run_vcg: bidder list must not be empty");
    }
    const std::size_t n = bidders.size();
    const std::size_t m = spikes.size();

    MechanismOutcome out;
    out.ranking = value_ranking(bidders);
    out.ranked_values.reserve(n);
    for (std::size_t idx : out.ranking) out.ranked_values.push_back(bidders[idx].value);

    auto value_at = [&](std::size_t rank) {  // 0-based rank, 0 past the last bidder
        return rank < n ? out.ranked_values[rank] : 0.0;
    };

    // Opportunity costs, accumulated from the last spike upward.
    out.expected_payments.assign(m, 0.0);
    out.expected_payments[m - 1] = spikes[m - 1] * value_at(m);
    for (std::size_t j = m - 1; j-- > 0;) {
        out.expected_payments[j] =
            out.expected_payments[j + 1] + (spikes[j] - spikes[j + 1]) * value_at(j + 1);
    }

    out.revenue = 0.0;
    for (double h : out.expected_payments) out.revenue += h;
    out.efficiency = 0.0;
    for (std::size_t j = 0; j < std::min(n, m); ++j) {
        out.efficiency += spikes[j] * out.ranked_values[j];
    }
    return out;
}

GapwiseDecomposition revenue_decomposition(const MechanismOutcome& outcome,
                                           const SpikeVector& spikes) {
    require_outcome_matches(outcome, spikes, "revenue_decomposition");
    GapwiseDecomposition dec{
        CoefficientVector(shifted_value_coeffs(outcome.ranked_values, spikes.size())), false};
    dec.is_monotone = is_gapwise_monotone(dec.coeffs);
    double reproduced = evaluate_objective(spikes_to_gaps(spikes), dec.coeffs);
    if (std::abs(reproduced - outcome.revenue) > kFeasibilityTol) {
        std::ostringstream msg;
        msg << "revenue_decomposition: decomposition yields " << reproduced
            << " but the outcome reports revenue " << outcome.revenue;
        throw ConsistencyError(msg.str());
    }
    return dec;
}

GapwiseDecomposition efficiency_decomposition(const MechanismOutcome& outcome,
                                              const SpikeVector& spikes) {
    require_outcome_matches(outcome, spikes, "efficiency_decomposition");
    GapwiseDecomposition dec{
        CoefficientVector(prefix_mean_coeffs(outcome.ranked_values, spikes.size())), false};
    dec.is_monotone = is_gapwise_monotone(dec.coeffs);
    double reproduced = evaluate_objective(spikes_to_gaps(spikes), dec.coeffs);
    if (std::abs(reproduced - outcome.efficiency) > kFeasibilityTol) {
        std::ostringstream msg;
        msg << "efficiency_decomposition: decomposition yields " << reproduced
            << " but the outcome reports efficiency " << outcome.efficiency;
        throw ConsistencyError(msg.str());
    }
    return dec;
}

bool check_walrasian(const std::vector<BidderProfile>& bidders, const SpikeVector& spikes,
                     const std::vector<std::size_t>& ranking,
                     const std::vector<double>& payments) {
    const std::size_t n = bidders.size();
    const std::size_t m = spikes.size();
    if (payments.size() != m) {
        throw DimensionError("check_walrasian: one payment per spike required");
    }
    if (ranking.size() != n) {
        throw ValidationError("check_walrasian: ranking must cover every bidder exactly once");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t idx : ranking) {
        if (idx >= n || seen[idx]) {
            throw ValidationError("check_walrasian: ranking must cover every bidder exactly once");
        }
        seen[idx] = true;
    }

    for (std::size_t rank = 0; rank < n; ++rank) {
        const double v = bidders[ranking[rank]].value;
        double best = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            best = std::max(best, spikes[j] * v - payments[j]);
        }
        const double realized = rank < m ? spikes[rank] * v - payments[rank] : 0.0;
        if (std::abs(realized - best) > kFeasibilityTol) return false;
    }
    return true;
}

std::vector<double> per_acquisition_charges(const MechanismOutcome& outcome,
                                            const SpikeVector& spikes) {
    require_outcome_matches(outcome, spikes, "per_acquisition_charges");
    std::vector<double> charges(spikes.size(), 0.0);
    for (std::size_t j = 0; j < spikes.size(); ++j) {
        charges[j] = spikes[j] > 0.0 ? outcome.expected_payments[j] / spikes[j] : 0.0;
    }
    return charges;
}

CoefficientVector revenue_coefficients(const std::vector<BidderProfile>& bidders, std::size_t m) {
    if (bidders.empty()) throw ValidationError("revenue_coefficients: bidder list must not be empty");
    auto order = value_ranking(bidders);
    std::vector<double> ranked;
    ranked.reserve(order.size());
    for (std::size_t idx : order) ranked.push_back(bidders[idx].value);
    return CoefficientVector(shifted_value_coeffs(ranked, m));
}

CoefficientVector efficiency_coefficients(const std::vector<BidderProfile>& bidders, std::size_t m) {
    if (bidders.empty()) throw ValidationError("efficiency_coefficients: bidder list must not be empty");
    auto order = value_ranking(bidders);
    std::vector<double> ranked;
    ranked.reserve(order.size());
    for (std::size_t idx : order) ranked.push_back(bidders[idx].value);
    return CoefficientVector(prefix_mean_coeffs(ranked, m));
}

}  // namespace spikeauct
