#pragma once

/**
 * @file
 * Holevo quantity of a pure-state alphabet and its mode efficiency under a
 * per-mode photon budget, compared against the lossy bosonic capacity.
 */

#include <optional>

#include "cfsk/alphabet.hpp"

namespace cfsk {

struct RateReport {
    double holevo_bits = 0.0;
    int modes = 1;
    double photons_per_mode = 0.0;
    double total_photons = 0.0;
    double rate_per_mode = 0.0; ///< holevo_bits / modes
    double capacity = 0.0;      ///< C(photons_per_mode)
    std::optional<double> ratio; ///< rate_per_mode / capacity, absent at n = 0
};

/// chi = H(G / M) in bits.
double holevo_rate(const GramMatrix &gram);

/// (n+1) log2(n+1) - n log2 n. Throws NegativePhotons for n < 0.
double capacity(double photons_per_mode);

/// CFSK occupies M modes: |alpha|^2 = M n. `params.total_photons` is ignored.
RateReport rate_cfsk(const CfskParams &params, double photons_per_mode);

/// PSK occupies a single mode.
RateReport rate_psk(int m, double photons_per_mode);

/// dCFSK occupies 2L+1 modes: a^2 = (2L+1) n. `params.total_photons` is ignored.
RateReport rate_dcfsk(const DcfskParams &params, double photons_per_mode);
RateReport rate_dcfsk(const DcfskParams &params, const FourierExpansion &expansion, double photons_per_mode);

} // namespace cfsk
