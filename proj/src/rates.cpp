#include "cfsk/rates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cfsk/error.hpp"
#include "cfsk/spectral.hpp"

namespace cfsk {

namespace {

void require_photons(double n) {
    if (!std::isfinite(n) || n < 0.0) {
        throw Error(ErrorCode::NegativePhotons, "photons per mode " + std::to_string(n) + " must be >= 0");
    }
}

RateReport make_report(const GramMatrix &gram, int modes, double n) {
    RateReport out;
    out.holevo_bits = holevo_rate(gram);
    out.modes = modes;
    out.photons_per_mode = n;
    out.total_photons = modes * n;
    out.rate_per_mode = out.holevo_bits / modes;
    out.capacity = capacity(n);
    if (out.capacity > 0.0) {
        out.ratio = out.rate_per_mode / out.capacity;
    }
    return out;
}

} // namespace

double holevo_rate(const GramMatrix &gram) {
    const ComplexMatrix state = gram.entries() / static_cast<double>(gram.dim());
    return von_neumann_entropy(state);
}

double capacity(double photons_per_mode) {
    require_photons(photons_per_mode);
    const double n = photons_per_mode;
    if (n == 0.0) {
        return 0.0;
    }
    return (n + 1.0) * std::log1p(n) / std::numbers::ln2 - n * std::log2(n);
}

RateReport rate_cfsk(const CfskParams &params, double photons_per_mode) {
    require_photons(photons_per_mode);
    CfskParams scaled = params;
    scaled.total_photons = params.m * photons_per_mode;
    return make_report(gram_cfsk(scaled), params.m, photons_per_mode);
}

RateReport rate_psk(int m, double photons_per_mode) {
    require_photons(photons_per_mode);
    return make_report(gram_psk({.m = m, .photons = photons_per_mode}), 1, photons_per_mode);
}

RateReport rate_dcfsk(const DcfskParams &params, const FourierExpansion &expansion, double photons_per_mode) {
    require_photons(photons_per_mode);
    const int modes = 2 * params.l + 1;
    DcfskParams scaled = params;
    scaled.total_photons = modes * photons_per_mode;
    return make_report(gram_dcfsk(scaled, expansion), modes, photons_per_mode);
}

RateReport rate_dcfsk(const DcfskParams &params, double photons_per_mode) {
    validate(params);
    return rate_dcfsk(params, fourier_coefficients(params.m, params.l, params.delta_omega_t), photons_per_mode);
}

} // namespace cfsk
