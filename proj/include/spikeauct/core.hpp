#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spikeauct/errors.hpp"

namespace spikeauct {

/// Tolerance for normalization and feasibility checks.
inline constexpr double kFeasibilityTol = 1e-9;

/// Tolerance for algebraic round-trips (gaps <-> spikes).
inline constexpr double kRoundTripTol = 1e-12;

/// Winning probabilities (p_1 >= ... >= p_M >= 0) of the selling experiment,
/// summing to 1. The rank-j bidder receives the item with probability p_j.
/// Indices are 0-based in code, 1-based in the formulas quoted in comments.
class SpikeVector {
public:
    /// Validates non-emptiness, non-negativity, monotonicity, and
    /// normalization; throws ValidationError naming the violated invariant.
    explicit SpikeVector(std::vector<double> probs);

    const std::vector<double>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t j) const { return probs_[j]; }

private:
    std::vector<double> probs_;
};

/// Successive spike differences theta_j = p_j - p_{j+1}, with the last gap
/// equal to the last spike. Entries are non-negative and satisfy the
/// normalization sum_j j*theta_j = 1. These are the natural LP variables.
class GapVector {
public:
    explicit GapVector(std::vector<double> gaps);

    const std::vector<double>& gaps() const noexcept { return gaps_; }
    std::size_t size() const noexcept { return gaps_.size(); }
    double operator[](std::size_t j) const { return gaps_[j]; }

private:
    std::vector<double> gaps_;
};

/// One bidder: an opaque id, a non-negative value for the item, and a click
/// relevance in [0,1] (used by the sponsored-search module; defaults to 1).
struct BidderProfile {
    BidderProfile(std::string id, double value, double relevance = 1.0);

    std::string id;
    double value;
    double relevance;

    /// Ranking score s_i = e_i * v_i used by sponsored-search auctions.
    double score() const noexcept { return relevance * value; }
};

/// Per-gap lower bounds: theta_j >= epsilon_j. Feasible exactly when
/// sum_j j*epsilon_j <= 1, which this type enforces at construction.
class CapacityParams {
public:
    explicit CapacityParams(std::vector<double> epsilons);

    const std::vector<double>& epsilons() const noexcept { return epsilons_; }
    std::size_t size() const noexcept { return epsilons_.size(); }
    double operator[](std::size_t j) const { return epsilons_[j]; }

    /// sum_j j*epsilon_j with 1-based j.
    double weighted_sum() const noexcept;

private:
    std::vector<double> epsilons_;
};

/// Coefficients d_j of a linear gap objective H = sum_j theta_j * j * d_j.
/// Carries no intrinsic ordering invariant; see is_gapwise_monotone.
class CoefficientVector {
public:
    explicit CoefficientVector(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    double operator[](std::size_t j) const { return coeffs_[j]; }

private:
    std::vector<double> coeffs_;
};

/// True when the coefficients are non-increasing (d_j >= d_{j+1}).
bool is_gapwise_monotone(const CoefficientVector& coeffs) noexcept;

/// theta_j = p_j - p_{j+1} for j < M, theta_M = p_M.
GapVector spikes_to_gaps(const SpikeVector& spikes);

/// p_j = sum_{i >= j} theta_i. Inverse of spikes_to_gaps.
SpikeVector gaps_to_spikes(const GapVector& gaps);

/// H = sum_j gaps[j] * j * coeffs[j] with 1-based j.
/// Throws DimensionError on length mismatch.
double evaluate_objective(const GapVector& gaps, const CoefficientVector& coeffs);

}  // namespace spikeauct
