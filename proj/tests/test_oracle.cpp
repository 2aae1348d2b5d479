// Every quantity of a handful of alphabets against high-precision values.

#include <cmath>
#include <string_view>

#include <doctest.h>

#include "cfsk/alphabet.hpp"
#include "cfsk/discrimination.hpp"
#include "cfsk/rates.hpp"
#include "test_helpers.hpp"

using namespace cfsk;

namespace {

constexpr double kTol = 1e-9;

GramMatrix build(const oracle::OracleInstance &inst) {
    const std::string_view kind = inst.alphabet;
    if (kind == "psk") {
        return gram_psk({.m = inst.m, .photons = inst.photons});
    }
    if (kind == "cfsk") {
        return gram_cfsk({.m = inst.m,
                          .delta_theta = inst.delta_theta,
                          .delta_omega_t = inst.delta_omega_t,
                          .total_photons = inst.photons});
    }
    return gram_dcfsk({.m = inst.m,
                       .l = inst.l,
                       .delta_theta = inst.delta_theta,
                       .delta_omega_t = inst.delta_omega_t,
                       .total_photons = inst.photons});
}

} // namespace

TEST_CASE("oracle instances") {
    for (const auto &inst : oracle::kOracleInstances) {
        CAPTURE(inst.alphabet);
        CAPTURE(inst.m);
        CAPTURE(inst.l);
        const GramMatrix g = build(inst);
        REQUIRE(g.dim() == inst.m);
        for (int j = 0; j < inst.m; ++j) {
            for (int k = 0; k < inst.m; ++k) {
                const auto d = static_cast<std::size_t>(std::abs(j - k));
                const Complex want = j >= k ? inst.generator[d] : std::conj(inst.generator[d]);
                CHECK(std::abs(g(j, k) - want) < kTol);
            }
        }
        const auto r = discriminate(g);
        for (int i = 0; i < inst.m; ++i) {
            CHECK(std::abs(r.sqrt_diag[static_cast<std::size_t>(i)] - inst.sqrt_diag[static_cast<std::size_t>(i)]) <
                  kTol);
        }
        CHECK(std::abs(r.p_srm - inst.p_srm) < kTol);
        CHECK(std::abs(r.p_lower - inst.p_lower) < kTol);
        CHECK(std::abs(r.p_upper_raw - inst.p_upper_raw) < kTol);
        CHECK(std::abs(r.gamma_max - inst.gamma_max) < kTol);
        CHECK(std::abs(holevo_rate(g) - inst.chi) < kTol);
    }
}
