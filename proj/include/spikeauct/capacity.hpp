#pragma once

#include <cstddef>
#include <optional>

#include "spikeauct/core.hpp"

namespace spikeauct {

/// Price-of-capacity summary for a non-increasing coefficient vector.
struct CapacityReport {
    /// Capacity level at which the ratio is evaluated (the threshold index
    /// when one exists, otherwise 0).
    std::size_t kappa = 0;
    /// First index a with d_1 > d_a (1-based), absent when all d are equal.
    std::optional<std::size_t> a_index;
    /// Supremum of H_opt(unconstrained) / H_opt(eps) over bounds with
    /// capacity a. Equals 1 when no threshold exists; infinity when d_a = 0.
    /// The supremum is approached as eps_a -> 1/a but attained only in the
    /// limit.
    double nu = 1.0;
    /// The bound d_{a-1} / d_a (equals nu since d_{a-1} = d_1).
    double nu_upper_bound = 1.0;
};

/// Largest index with a positive lower bound; 0 when all bounds are zero.
std::size_t compute_kappa(const CapacityParams& eps) noexcept;

/// First index a with d_1 > d_a (1-based, always >= 2), or nullopt when all
/// coefficients are equal. Exact comparison, no tolerance.
std::optional<std::size_t> threshold_index(const CoefficientVector& coeffs);

/// Raises capacity by exactly one without losing optimal value: keeps the
/// bounds below kappa, halves the bound at kappa, and grants index kappa+1
/// half of the largest loss-free bound. Requires kappa >= a (RegimeError
/// otherwise, since stepping from a-1 to a necessarily loses value) and
/// kappa < M (CapacityExhaustedError otherwise).
CapacityParams increase_capacity(const CapacityParams& eps, const CoefficientVector& coeffs);

/// Worst-case ratio of the unconstrained optimum to the optimum constrained
/// at capacity a, reported as the supremum d_1 / d_a.
CapacityReport price_of_capacity(const CoefficientVector& coeffs);

/// Exact worst-case ratio when all positive bounds share one value:
/// (a+1) / ((a-1) + 2 d_a/d_1); always <= 1 + 2/(a-1) <= 3.
/// Throws NoThresholdError when no threshold index exists.
double price_of_capacity_uniform(const CoefficientVector& coeffs);

/// Largest uniform bound on indices 1..m+1 that raises capacity from m to
/// m+1 without loss, given the current uniform bound eps_value on 1..m:
/// min{ 2/((m+1)(m+2)), eps_value * sum_{j=2}^{m} j(d_1-d_j) /
/// sum_{j=2}^{m+1} j(d_1-d_j) }. Returns 0 when no loss-free uniform
/// increase exists.
double uniform_increase_bound(const CoefficientVector& coeffs, std::size_t m, double eps_value);

}  // namespace spikeauct
