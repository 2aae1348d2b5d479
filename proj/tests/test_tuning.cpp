#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cfsk/alphabet.hpp"
#include "cfsk/discrimination.hpp"
#include "cfsk/error.hpp"
#include "cfsk/tuning.hpp"

using namespace cfsk;

TEST_CASE("binary tuning reaches the Helstrom optimum") {
    // the best binary pair is antipodal: overlap exp(-2 |alpha|^2)
    for (double e : {0.2, 0.5, 1.0}) {
        TuningOptions options;
        options.resolution = 16;
        const auto t = grid_optimize(2, e, Objective::SrmSuccess, options);
        CHECK(std::abs(t.objective_value - helstrom_binary(std::exp(-2.0 * e))) < 1e-9);

        double brute = 0.0;
        for (int i = 0; i < 64; ++i) {
            for (int j = 0; j < 64; ++j) {
                brute = std::max(brute,
                                 evaluate_objective(2, e, Objective::SrmSuccess, kTwoPi * i / 64, kTwoPi * j / 64));
            }
        }
        CHECK(t.objective_value >= brute - 1e-12);
    }
}

TEST_CASE("tuned CFSK matches or beats PSK on SRM success") {
    TuningOptions options;
    options.resolution = 32;
    const auto t = grid_optimize(4, 2.0, Objective::SrmSuccess, options);
    const double psk = srm_success(gram_psk({.m = 4, .photons = 2.0})).p_srm;
    CHECK(t.objective_value >= psk - 1e-12);
}

TEST_CASE("finer grids never lose") {
    for (auto obj : {Objective::SrmSuccess, Objective::HolevoRate, Objective::UpperBound}) {
        TuningOptions coarse;
        coarse.resolution = 8;
        TuningOptions fine;
        fine.resolution = 32;
        const auto a = grid_optimize(4, 1.0, obj, coarse);
        const auto b = grid_optimize(4, 1.0, obj, fine);
        CHECK(b.objective_value >= a.objective_value - 1e-6);
    }
}

TEST_CASE("tuning is deterministic and self-consistent") {
    TuningOptions options;
    options.resolution = 24;
    const auto a = grid_optimize(8, 1.0, Objective::HolevoRate, options);
    const auto b = grid_optimize(8, 1.0, Objective::HolevoRate, options);
    CHECK(a.best_delta_theta == b.best_delta_theta);
    CHECK(a.best_delta_omega_t == b.best_delta_omega_t);
    CHECK(a.objective_value == b.objective_value);
    CHECK(a.grid_resolution == 24);
    CHECK(a.objective_kind == Objective::HolevoRate);
    CHECK(std::abs(a.objective_value - evaluate_objective(8, 1.0, Objective::HolevoRate, a.best_delta_theta,
                                                          a.best_delta_omega_t)) < 1e-12);
    CHECK(a.best_delta_theta >= 0.0);
    CHECK(a.best_delta_theta < kTwoPi);
    CHECK(a.best_delta_omega_t >= 0.0);
    CHECK(a.best_delta_omega_t < kTwoPi);
}

TEST_CASE("a fixed axis is respected") {
    TuningOptions options;
    options.resolution = 16;
    options.fixed_delta_omega_t = std::numbers::pi;
    const auto t = grid_optimize(4, 1.0, Objective::SrmSuccess, options);
    CHECK(t.best_delta_omega_t == std::numbers::pi);

    options.fixed_delta_omega_t.reset();
    options.fixed_delta_theta = 0.5;
    const auto u = grid_optimize(4, 1.0, Objective::SrmSuccess, options);
    CHECK(u.best_delta_theta == 0.5);
}

TEST_CASE("tuning errors") {
    TuningOptions options;
    options.resolution = 4;
    CHECK_THROWS_AS(grid_optimize(4, 1.0, Objective::SrmSuccess, options), Error);
    try {
        parse_objective("fastest");
        FAIL("expected INVALID_PARAMETER");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvalidParameter);
    }
    CHECK(parse_objective("SRM_SUCCESS") == Objective::SrmSuccess);
    CHECK(parse_objective("holevo") == Objective::HolevoRate);
    CHECK(parse_objective("upper_bound") == Objective::UpperBound);
    CHECK(to_string(Objective::UpperBound) == "UPPER_BOUND");
}
