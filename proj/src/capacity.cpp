#include "spikeauct/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spikeauct/optimizer.hpp"

namespace spikeauct {

namespace {

void require_monotone(const CoefficientVector& coeffs, const char* where) {
    if (!is_gapwise_monotone(coeffs)) {
        throw MonotonicityError(std::string(where) + ": coefficients must be non-increasing");
    }
}

void require_nonnegative(const CoefficientVector& coeffs, const char* where) {
    for (double d : coeffs.coeffs()) {
        if (!(d >= 0.0)) {
            throw ValidationError(std::string(where) + ": coefficients must be non-negative");
        }
    }
}

double lp_optimum(const CoefficientVector& coeffs, const CapacityParams& eps) {
    try {
        return solve_closed_form(coeffs, eps).objective_value;
    } catch (const RegimeError&) {
        return solve_simplex(coeffs, eps).objective_value;
    }
}

}  // namespace

std::size_t compute_kappa(const CapacityParams& eps) noexcept {
    const auto& e = eps.epsilons();
    for (std::size_t j = e.size(); j-- > 0;) {
        if (e[j] > 0.0) return j + 1;
    }
    return 0;
}

std::optional<std::size_t> threshold_index(const CoefficientVector& coeffs) {
    const auto& d = coeffs.coeffs();
    for (std::size_t j = 1; j < d.size(); ++j) {
        if (d[0] > d[j]) return j + 1;
    }
    return std::nullopt;
}

CapacityParams increase_capacity(const CapacityParams& eps, const CoefficientVector& coeffs) {
    if (eps.size() != coeffs.size()) {
        throw DimensionError("increase_capacity: bounds and coefficients must have equal length");
    }
    require_monotone(coeffs, "increase_capacity");

    const std::size_t m = eps.size();
    const std::size_t kappa = compute_kappa(eps);
    if (kappa == m) {
        throw CapacityExhaustedError(
            "increase_capacity: every gap already has a positive bound (kappa = M)");
    }
    const auto a = threshold_index(coeffs);
    if (a && kappa < *a) {
        std::ostringstream msg;
        msg << "increase_capacity: raising capacity from " << kappa << " toward the threshold "
            << *a << " necessarily loses optimal value";
        throw RegimeError(msg.str());
    }

    const auto& d = coeffs.coeffs();
    std::vector<double> out(eps.epsilons());

    if (kappa == 0) {
        // All coefficients are equal here (a absent), so any feasible bound
        // on the first gap is loss-free.
        out[0] = 0.5;
    } else {
        const std::size_t k0 = kappa - 1;
        out[k0] = out[k0] / 2.0;
        const double released = eps[k0] - out[k0];
        const double feasible_room =
            static_cast<double>(kappa) * released / static_cast<double>(kappa + 1);
        const double gain = static_cast<double>(kappa) * released * (d[0] - d[k0]);
        const double cost_rate = static_cast<double>(kappa + 1) * (d[0] - d[kappa]);
        const double loss_free = cost_rate > 0.0 ? gain / cost_rate
                                                 : std::numeric_limits<double>::infinity();
        out[kappa] = std::min(loss_free, feasible_room) / 2.0;
    }

    CapacityParams result(std::move(out));
    if (compute_kappa(result) != kappa + 1) {
        throw std::logic_error("increase_capacity: construction failed to raise capacity");
    }
    if (lp_optimum(coeffs, result) < lp_optimum(coeffs, eps) - kFeasibilityTol) {
        throw std::logic_error("increase_capacity: construction lost optimal value");
    }
    return result;
}

CapacityReport price_of_capacity(const CoefficientVector& coeffs) {
    require_monotone(coeffs, "price_of_capacity");
    require_nonnegative(coeffs, "price_of_capacity");

    CapacityReport report;
    const auto a = threshold_index(coeffs);
    if (!a) return report;  // no loss at any reachable capacity

    const auto& d = coeffs.coeffs();
    const double d1 = d[0];
    const double da = d[*a - 1];
    const double d_prev = d[*a - 2];  // equals d1 by minimality of a
    report.kappa = *a;
    report.a_index = *a;
    report.nu = da > 0.0 ? d1 / da : std::numeric_limits<double>::infinity();
    report.nu_upper_bound = da > 0.0 ? d_prev / da : std::numeric_limits<double>::infinity();
    return report;
}

double price_of_capacity_uniform(const CoefficientVector& coeffs) {
    require_monotone(coeffs, "price_of_capacity_uniform");
    require_nonnegative(coeffs, "price_of_capacity_uniform");
    const auto a = threshold_index(coeffs);
    if (!a) {
        throw NoThresholdError(
            "price_of_capacity_uniform: all coefficients are equal; no capacity threshold exists");
    }
    const auto& d = coeffs.coeffs();
    const double aa = static_cast<double>(*a);
    return (aa + 1.0) / ((aa - 1.0) + 2.0 * (d[*a - 1] / d[0]));
}

double uniform_increase_bound(const CoefficientVector& coeffs, std::size_t m, double eps_value) {
    require_monotone(coeffs, "uniform_increase_bound");
    if (m < 1 || m >= coeffs.size()) {
        throw ValidationError("uniform_increase_bound: m must satisfy 1 <= m < M");
    }
    if (!(eps_value > 0.0)) {
        throw ValidationError("uniform_increase_bound: current uniform bound must be positive");
    }
    const double md = static_cast<double>(m);
    if (eps_value * md * (md + 1.0) / 2.0 > 1.0 + kFeasibilityTol) {
        throw FeasibilityError("uniform_increase_bound: current uniform bounds are infeasible");
    }
    const auto& d = coeffs.coeffs();
    const double cap = 2.0 / ((md + 1.0) * (md + 2.0));
    double numer = 0.0;  // sum_{j=2}^{m} j (d_1 - d_j)
    for (std::size_t j = 1; j < m; ++j) {
        numer += static_cast<double>(j + 1) * (d[0] - d[j]);
    }
    const double denom = numer + static_cast<double>(m + 1) * (d[0] - d[m]);
    if (denom <= 0.0) return cap;  // all coefficients equal through m+1
    return std::min(cap, eps_value * numer / denom);
}

}  // namespace spikeauct
