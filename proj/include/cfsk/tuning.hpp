#pragma once

/**
 * @file
 * Derivative-free search for CFSK phase / frequency steps that maximize a
 * discrimination or rate figure of merit.
 */

#include <optional>
#include <string>
#include <string_view>

namespace cfsk {

enum class Objective {
    SrmSuccess, ///< SRM success probability
    HolevoRate, ///< chi / M, bits per mode
    UpperBound, ///< clamped upper bound on the optimal success probability
};

std::string_view to_string(Objective objective) noexcept;
/// Accepts SRM_SUCCESS / HOLEVO_RATE / UPPER_BOUND (case-insensitive) and
/// the short forms srm / holevo / upper. Throws InvalidParameter otherwise.
Objective parse_objective(std::string_view name);

struct TuningOptions {
    int resolution = 64;
    /// A fixed axis is held at the given value and not searched.
    std::optional<double> fixed_delta_theta;
    std::optional<double> fixed_delta_omega_t;
    double tolerance = 1e-6; ///< radians
    int max_iterations = 100;
};

struct TuningResult {
    double best_delta_theta = 0.0;
    double best_delta_omega_t = 0.0;
    double objective_value = 0.0;
    Objective objective_kind = Objective::SrmSuccess;
    int grid_resolution = 0;
    int refinement_iterations = 0;
};

/// Objective of the CFSK alphabet (m, delta_theta, delta_omega_t) at
/// |alpha|^2 = total_photons.
double evaluate_objective(int m, double total_photons, Objective objective, double delta_theta,
                          double delta_omega_t);

/**
 * Scans a resolution x resolution grid over [0, 2pi)^2, then refines the
 * best cells by coordinate-wise golden-section search within one grid step.
 * Ties go to the lowest (delta_theta, delta_omega_t). Deterministic.
 */
TuningResult grid_optimize(int m, double total_photons, Objective objective, const TuningOptions &options = {});

} // namespace cfsk
