#include "spikeauct/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spikeauct {

namespace {

void require_same_length(const CoefficientVector& coeffs, const CapacityParams& eps,
                         const char* where) {
    if (coeffs.size() != eps.size()) {
        std::ostringstream msg;
        msg << where << ": coefficients and capacity bounds must have equal length ("
            << coeffs.size() << " vs " << eps.size() << ")";
        throw DimensionError(msg.str());
    }
}

}  // namespace

LpSolution solve_closed_form(const CoefficientVector& coeffs, const CapacityParams& eps) {
    require_same_length(coeffs, eps, "solve_closed_form");
    if (!is_gapwise_monotone(coeffs)) {
        throw MonotonicityError(
            "solve_closed_form: coefficients must be non-increasing; use solve_simplex");
    }
    const auto& d = coeffs.coeffs();
    const auto& e = eps.epsilons();
    const std::size_t m = d.size();

    double tail = 0.0;  // sum_{j>=2} j eps_j
    for (std::size_t j = 1; j < m; ++j) tail += static_cast<double>(j + 1) * e[j];
    double first = 1.0 - tail;
    if (first < e[0] - kFeasibilityTol) {
        throw RegimeError(
            "solve_closed_form: capacity bounds leave no room for the first gap; use solve_simplex");
    }
    first = std::max(first, e[0]);

    std::vector<double> gaps(e);
    gaps[0] = first;

    double objective = d[0];
    for (std::size_t j = 1; j < m; ++j) {
        objective -= static_cast<double>(j + 1) * e[j] * (d[0] - d[j]);
    }

    std::vector<double> dual(m + 1, 0.0);
    dual[0] = d[0];
    for (std::size_t j = 0; j < m; ++j) {
        dual[j + 1] = static_cast<double>(j + 1) * (d[0] - d[j]);
    }

    LpSolution sol{GapVector(std::move(gaps)), objective, std::move(dual), false};
    sol.kkt_certified = check_kkt(coeffs, eps, sol);
    return sol;
}

LpSolution solve_simplex(const CoefficientVector& coeffs, const CapacityParams& eps) {
    require_same_length(coeffs, eps, "solve_simplex");
    const auto& d = coeffs.coeffs();
    const auto& e = eps.epsilons();
    const std::size_t m = d.size();

    // After theta_j = eps_j + phi_j and psi_j = j phi_j, the LP becomes
    // max sum_j d_j psi_j over the simplex sum_j psi_j = residual, psi >= 0,
    // so the whole residual goes to the first index attaining max d_j.
    const double residual = std::max(1.0 - eps.weighted_sum(), 0.0);
    std::size_t best = 0;
    for (std::size_t j = 1; j < m; ++j) {
        if (d[j] > d[best]) best = j;
    }

    std::vector<double> gaps(e);
    gaps[best] += residual / static_cast<double>(best + 1);

    double objective = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        objective += gaps[j] * static_cast<double>(j + 1) * d[j];
    }

    std::vector<double> dual(m + 1, 0.0);
    dual[0] = d[best];
    for (std::size_t j = 0; j < m; ++j) {
        dual[j + 1] = static_cast<double>(j + 1) * (d[best] - d[j]);
    }

    LpSolution sol{GapVector(std::move(gaps)), objective, std::move(dual), false};
    sol.kkt_certified = check_kkt(coeffs, eps, sol);
    return sol;
}

bool check_kkt(const CoefficientVector& coeffs, const CapacityParams& eps,
               const std::vector<double>& gaps, const std::vector<double>& dual) {
    const std::size_t m = coeffs.size();
    if (eps.size() != m || gaps.size() != m || dual.size() != m + 1) {
        throw DimensionError("check_kkt: expected equal-length primal data and M+1 multipliers");
    }
    const auto& d = coeffs.coeffs();
    const auto& e = eps.epsilons();
    const double tol = kFeasibilityTol;

    double weighted = 0.0;
    for (std::size_t j = 0; j < m; ++j) weighted += static_cast<double>(j + 1) * gaps[j];
    if (std::abs(weighted - 1.0) > tol) return false;  // primal equality

    for (std::size_t j = 0; j < m; ++j) {
        const double jj = static_cast<double>(j + 1);
        if (gaps[j] < e[j] - tol) return false;                            // primal bounds
        if (dual[j + 1] < -tol) return false;                              // dual feasibility
        if (std::abs(-jj * d[j] + jj * dual[0] - dual[j + 1]) > tol) return false;  // stationarity
        if (std::abs(dual[j + 1] * (e[j] - gaps[j])) > tol) return false;  // compl. slackness
    }
    return true;
}

bool check_kkt(const CoefficientVector& coeffs, const CapacityParams& eps,
               const LpSolution& solution) {
    return check_kkt(coeffs, eps, solution.gaps.gaps(), solution.dual);
}

}  // namespace spikeauct
