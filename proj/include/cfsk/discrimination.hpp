#pragma once

/**
 * @file
 * Minimum-error discrimination figures of merit for equiprobable pure
 * states, computed from their Gram matrix: square-root-measurement (SRM)
 * success probability, the constant-diagonal optimality test, and lower /
 * upper bounds on the optimal success probability.
 */

#include <span>
#include <vector>

#include "cfsk/alphabet.hpp"

namespace cfsk {

/// Threshold on max - min of diag(G^{1/2}) below which the SRM is optimal.
inline constexpr double kOptimalityTolerance = 1e-10;

struct SrmResult {
    double p_srm = 0.0;
    std::vector<double> sqrt_diag; ///< (G^{1/2})_{mm} = <mu_m|alpha_m>
};

struct OptimalityGap {
    double gap = 0.0;
    bool srm_is_optimal = false;
};

struct SentisBounds {
    double p_lower = 0.0;     ///< (tr G^{1/2} / M)^2
    double p_upper = 0.0;     ///< raw upper bound clamped to 1
    double p_upper_raw = 0.0;
    double gamma_max = 0.0;   ///< largest eigenvalue of G
    std::vector<double> q;    ///< diag(G^{1/2}) / tr G^{1/2}
    double tv_term = 0.0;     ///< || q - u ||_1, u uniform
};

struct DiscriminationReport {
    double p_srm = 0.0;
    std::vector<double> sqrt_diag;
    double optimality_gap = 0.0;
    bool srm_is_optimal = false;
    double p_lower = 0.0;
    double p_upper = 0.0;
    double p_upper_raw = 0.0;
    double gamma_max = 0.0;
    std::vector<double> q_vector;
    double tv_distance_term = 0.0;
};

SrmResult srm_success(const GramMatrix &gram);
OptimalityGap srm_optimality_gap(std::span<const double> sqrt_diag);
SentisBounds sentis_bounds(const GramMatrix &gram);

/// Everything above from a single eigendecomposition.
DiscriminationReport discriminate(const GramMatrix &gram);

/// Optimal success probability for two equiprobable pure states with
/// overlap modulus c. Throws OutOfRange unless c is in [0, 1].
double helstrom_binary(double overlap_modulus);

} // namespace cfsk
