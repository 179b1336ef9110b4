#pragma once

#include <vector>

#include "spikeauct/core.hpp"

namespace spikeauct {

/// Solution of the gap-selection LP
///   max sum_j theta_j j d_j   s.t.  sum_j j theta_j = 1,  theta_j >= eps_j.
struct LpSolution {
    GapVector gaps;
    double objective_value = 0.0;
    /// Multipliers (x_0, x_1, ..., x_M): x_0 for the normalization equality,
    /// x_j for the bound theta_j >= eps_j.
    std::vector<double> dual;
    bool kkt_certified = false;
};

/// Closed-form optimum for non-increasing coefficients: every gap sits at its
/// lower bound except the first, which absorbs the remaining mass. Throws
/// MonotonicityError for non-monotone coefficients and RegimeError when the
/// bounds leave no room for the first gap (use solve_simplex instead).
LpSolution solve_closed_form(const CoefficientVector& coeffs, const CapacityParams& eps);

/// Exact solver for arbitrary (possibly non-monotone, possibly negative)
/// coefficients. After substituting out the lower bounds the feasible set is
/// a scaled simplex, so the optimum places all residual mass on one index.
LpSolution solve_simplex(const CoefficientVector& coeffs, const CapacityParams& eps);

/// Verifies primal feasibility (both blocks), dual feasibility, stationarity,
/// and complementary slackness, each within 1e-9. The raw overload accepts
/// candidate points that are not valid GapVectors.
bool check_kkt(const CoefficientVector& coeffs, const CapacityParams& eps,
               const std::vector<double>& gaps, const std::vector<double>& dual);
bool check_kkt(const CoefficientVector& coeffs, const CapacityParams& eps,
               const LpSolution& solution);

}  // namespace spikeauct
