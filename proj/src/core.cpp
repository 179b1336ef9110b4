#include "spikeauct/core.hpp"

#include <cmath>
#include <sstream>

namespace spikeauct {

namespace {

void require_nonempty(const std::vector<double>& v, const char* type_name) {
    if (v.empty()) {
        throw ValidationError(std::string(type_name) + ": at least one entry required");
    }
}

void require_nonnegative(const std::vector<double>& v, const char* type_name) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!(v[j] >= 0.0)) {  // also rejects NaN
            std::ostringstream msg;
            msg << type_name << ": entries must be non-negative (entry " << j << " is " << v[j] << ")";
            throw ValidationError(msg.str());
        }
    }
}

double weighted_index_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        s += static_cast<double>(j + 1) * v[j];
    }
    return s;
}

}  // namespace

SpikeVector::SpikeVector(std::vector<double> probs) : probs_(std::move(probs)) {
    require_nonempty(probs_, "SpikeVector");
    require_nonnegative(probs_, "SpikeVector");
    for (std::size_t j = 0; j + 1 < probs_.size(); ++j) {
        if (probs_[j] < probs_[j + 1]) {
            std::ostringstream msg;
            msg << "SpikeVector: probabilities must be non-increasing (violated between entries "
                << j << " and " << j + 1 << ")";
            throw ValidationError(msg.str());
        }
    }
    double sum = 0.0;
    for (double p : probs_) sum += p;
    if (std::abs(sum - 1.0) > kFeasibilityTol) {
        std::ostringstream msg;
        msg << "SpikeVector: probabilities must sum to 1 (sum is " << sum << ")";
        throw ValidationError(msg.str());
    }
}

GapVector::GapVector(std::vector<double> gaps) : gaps_(std::move(gaps)) {
    require_nonempty(gaps_, "GapVector");
    require_nonnegative(gaps_, "GapVector");
    double sum = weighted_index_sum(gaps_);
    if (std::abs(sum - 1.0) > kFeasibilityTol) {
        std::ostringstream msg;
        msg << "GapVector: index-weighted gaps must sum to 1 (sum is " << sum << ")";
        throw ValidationError(msg.str());
    }
}

BidderProfile::BidderProfile(std::string id_, double value_, double relevance_)
    : id(std::move(id_)), value(value_), relevance(relevance_) {
    if (!(value >= 0.0)) {
        throw ValidationError("BidderProfile: value must be non-negative (bidder '" + id + "')");
    }
    if (!(relevance >= 0.0 && relevance <= 1.0)) {
        throw ValidationError("BidderProfile: relevance must lie in [0,1] (bidder '" + id + "')");
    }
}

CapacityParams::CapacityParams(std::vector<double> epsilons) : epsilons_(std::move(epsilons)) {
    require_nonempty(epsilons_, "CapacityParams");
    require_nonnegative(epsilons_, "CapacityParams");
    double sum = weighted_index_sum(epsilons_);
    if (sum > 1.0 + kFeasibilityTol) {
        std::ostringstream msg;
        msg << "CapacityParams: index-weighted bounds must not exceed 1 (sum is " << sum << ")";
        throw FeasibilityError(msg.str());
    }
}

double CapacityParams::weighted_sum() const noexcept {
    return weighted_index_sum(epsilons_);
}

CoefficientVector::CoefficientVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    require_nonempty(coeffs_, "CoefficientVector");
}

bool is_gapwise_monotone(const CoefficientVector& coeffs) noexcept {
    const auto& c = coeffs.coeffs();
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        if (!(c[j] >= c[j + 1])) return false;
    }
    return true;
}

GapVector spikes_to_gaps(const SpikeVector& spikes) {
    const auto& p = spikes.probs();
    std::vector<double> gaps(p.size());
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        gaps[j] = p[j] - p[j + 1];
    }
    gaps.back() = p.back();
    return GapVector(std::move(gaps));
}

SpikeVector gaps_to_spikes(const GapVector& gaps) {
    const auto& g = gaps.gaps();
    std::vector<double> probs(g.size());
    double suffix = 0.0;
    for (std::size_t j = g.size(); j-- > 0;) {
        suffix += g[j];
        probs[j] = suffix;
    }
    return SpikeVector(std::move(probs));
}

double evaluate_objective(const GapVector& gaps, const CoefficientVector& coeffs) {
    if (gaps.size() != coeffs.size()) {
        std::ostringstream msg;
        msg << "evaluate_objective: gaps and coefficients must have equal length ("
            << gaps.size() << " vs " << coeffs.size() << ")";
        throw DimensionError(msg.str());
    }
    double h = 0.0;
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        h += gaps[j] * static_cast<double>(j + 1) * coeffs[j];
    }
    return h;
}

}  // namespace spikeauct
