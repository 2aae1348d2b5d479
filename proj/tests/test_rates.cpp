#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cfsk/alphabet.hpp"
#include "cfsk/error.hpp"
#include "cfsk/rates.hpp"
#include "cfsk/tuning.hpp"
#include "test_helpers.hpp"

using namespace cfsk;

namespace {

/// chi from a general (non-Hermitian) eigensolver, as an independent route.
double chi_general(const ComplexMatrix &g) {
    const double m = static_cast<double>(g.rows());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(g / m);
    double h = 0.0;
    for (const Complex &e : solver.eigenvalues()) {
        if (e.real() > 1e-15) {
            h -= e.real() * std::log2(e.real());
        }
    }
    return h;
}

} // namespace

TEST_CASE("holevo_rate examples") {
    CHECK(std::abs(holevo_rate(GramMatrix(ComplexMatrix::Ones(4, 4)))) < 1e-12);
    CHECK(holevo_rate(GramMatrix(ComplexMatrix::Identity(8, 8))) == doctest::Approx(3.0).epsilon(1e-14));
    const double c = std::exp(-2.0);
    ComplexMatrix binary(2, 2);
    binary << 1.0, c, c, 1.0;
    CHECK(std::abs(holevo_rate(GramMatrix(binary)) - oracle::kBinaryChiEm2) < 1e-12);
}

TEST_CASE("capacity") {
    CHECK(capacity(0.0) == 0.0);
    CHECK(capacity(1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(capacity(0.1) - oracle::kCapacityTenth) < 1e-10);
    try {
        capacity(-0.5);
        FAIL("expected NEGATIVE_PHOTONS");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NegativePhotons);
    }
    double previous = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double c = capacity(std::pow(10.0, -4.0 + 6.0 * i / 200.0));
        CHECK(c > previous);
        previous = c;
    }
}

TEST_CASE("rate_cfsk") {
    SUBCASE("zero energy carries no information") {
        const auto r = rate_cfsk({.m = 4, .delta_theta = 1.0, .delta_omega_t = 2.0}, 0.0);
        CHECK(std::abs(r.holevo_bits) < 1e-12);
        CHECK(r.capacity == 0.0);
        CHECK_FALSE(r.ratio.has_value());
    }
    SUBCASE("binary CFSK with orthogonal-frequency antipodal phase") {
        // M = 2, delta_theta = pi, delta_omega_T = 0: overlap exp(-2 |alpha|^2), |alpha|^2 = 2 n
        const auto r = rate_cfsk({.m = 2, .delta_theta = std::numbers::pi, .delta_omega_t = 0.0}, 0.5);
        CHECK(r.modes == 2);
        CHECK(r.total_photons == doctest::Approx(1.0));
        CHECK(std::abs(r.holevo_bits - oracle::kBinaryChiEm2) < 1e-12);
        CHECK(std::abs(r.rate_per_mode - oracle::kBinaryChiEm2 / 2.0) < 1e-12);
    }
    SUBCASE("tuned M = 4 agrees with a general eigensolver") {
        TuningOptions options;
        options.resolution = 16;
        const auto t = grid_optimize(4, 4.0, Objective::HolevoRate, options);
        const CfskParams p{.m = 4, .delta_theta = t.best_delta_theta, .delta_omega_t = t.best_delta_omega_t};
        const auto r = rate_cfsk(p, 1.0);
        auto with_energy = p;
        with_energy.total_photons = 4.0;
        CHECK(std::abs(r.holevo_bits - chi_general(gram_cfsk(with_energy).entries())) < 1e-9);
        CHECK(std::abs(r.rate_per_mode - t.objective_value) < 1e-12);
    }
}

TEST_CASE("rate_psk") {
    CHECK(std::abs(rate_psk(4, 0.0).holevo_bits) < 1e-12);
    CHECK(std::abs(rate_psk(2, 20.0).holevo_bits - 1.0) < 1e-10);
    CHECK(std::abs(rate_psk(8, 1.0).holevo_bits - oracle::kPskM8N1Chi) < 1e-10);
    CHECK(rate_psk(8, 1.0).modes == 1);
    CHECK(std::abs(rate_psk(4, 50.0).holevo_bits - 2.0) < 1e-8);
}

TEST_CASE("rate_dcfsk") {
    const DcfskParams base{.m = 4, .l = 1, .delta_theta = std::numbers::pi / 2, .delta_omega_t = std::numbers::pi};
    SUBCASE("zero energy") {
        CHECK(std::abs(rate_dcfsk(base, 0.0).holevo_bits) < 1e-12);
    }
    SUBCASE("three modes at the oracle point") {
        const auto r = rate_dcfsk(base, 1.0);
        CHECK(r.modes == 3);
        CHECK(r.total_photons == doctest::Approx(3.0));
        CHECK(std::abs(r.holevo_bits - oracle::kDcfskM4L1N1Chi) < 1e-10);
        CHECK(std::abs(r.rate_per_mode - oracle::kDcfskM4L1N1Chi / 3.0) < 1e-10);
    }
    SUBCASE("single tone with PSK spacing reduces to PSK") {
        for (int m : {2, 4, 8}) {
            DcfskParams p{.m = m, .l = 0, .delta_theta = 0.0, .delta_omega_t = 1.0};
            p.phase_offset = {.mode = PhaseOffset::Mode::Explicit, .value = kTwoPi / m};
            for (double n : {0.1, 1.0, 3.0}) {
                CHECK(std::abs(rate_dcfsk(p, n).holevo_bits - rate_psk(m, n).holevo_bits) < 1e-12);
            }
        }
    }
}

TEST_CASE("rate invariants") {
    for (int m : {2, 4, 8, 16}) {
        double previous = -1.0;
        for (int i = 0; i < 25; ++i) {
            const double n = std::pow(10.0, -2.0 + 3.0 * i / 24.0);
            const auto psk = rate_psk(m, n);
            const auto cfsk = rate_cfsk({.m = m, .delta_theta = 0.9, .delta_omega_t = 3.7}, n);
            CHECK(psk.holevo_bits >= previous - 1e-12);
            previous = psk.holevo_bits;
            for (const auto &r : {psk, cfsk}) {
                CHECK(r.rate_per_mode <= r.capacity + 1e-9);
                CHECK(r.holevo_bits <= std::log2(static_cast<double>(m)) + 1e-12);
                CHECK(r.rate_per_mode * r.modes == doctest::Approx(r.holevo_bits).epsilon(1e-14));
                REQUIRE(r.ratio.has_value());
                CHECK(*r.ratio <= 1.0 + 1e-9);
            }
        }
    }
}
