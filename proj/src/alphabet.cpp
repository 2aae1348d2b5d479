#include "cfsk/alphabet.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "cfsk/error.hpp"

namespace cfsk {

namespace {

constexpr double kGramTolerance = 1e-12;

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::InvalidParameter, what);
    }
}

void require_angle(double value, const char *name) {
    std::ostringstream os;
    os << name << " = " << value << " outside [0, 2pi)";
    require(std::isfinite(value) && value >= 0.0 && value < kTwoPi, os.str());
}

void require_size(int m) {
    require(m >= 2, "alphabet size M = " + std::to_string(m) + " must be >= 2");
}

void require_photons(double photons, const char *name) {
    std::ostringstream os;
    os << name << " = " << photons << " must be finite and >= 0";
    require(std::isfinite(photons) && photons >= 0.0, os.str());
}

} // namespace

double sinc(double x) noexcept {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

void validate(const CfskParams &params) {
    require_size(params.m);
    require_angle(params.delta_theta, "delta_theta");
    require_angle(params.delta_omega_t, "delta_omega_t");
    require_photons(params.total_photons, "total_photons");
}

void validate(const PskParams &params) {
    require_size(params.m);
    require_photons(params.photons, "photons");
}

void validate(const DcfskParams &params) {
    require_size(params.m);
    require(params.l >= 0, "half-bandwidth L = " + std::to_string(params.l) + " must be >= 0");
    require_angle(params.delta_theta, "delta_theta");
    require_angle(params.delta_omega_t, "delta_omega_t");
    require_photons(params.total_photons, "total_photons");
    if (params.phase_offset.mode == PhaseOffset::Mode::Explicit) {
        require(std::isfinite(params.phase_offset.value), "explicit phase offset must be finite");
    }
}

double resolved_phase_step(const DcfskParams &params) noexcept {
    switch (params.phase_offset.mode) {
    case PhaseOffset::Mode::CfskMatched:
        return params.delta_theta + 0.5 * params.delta_omega_t;
    case PhaseOffset::Mode::HalfPi:
        return params.delta_theta + 0.5 * std::numbers::pi;
    case PhaseOffset::Mode::Explicit:
        return params.phase_offset.value;
    }
    return params.delta_theta;
}

GramMatrix::GramMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square and non-empty");
    }
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kGramTolerance) {
        throw Error(ErrorCode::NotHermitian, "Gram matrix asymmetry " + std::to_string(asym));
    }
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        if (std::abs(entries_(i, i) - 1.0) > kGramTolerance) {
            throw Error(ErrorCode::InvalidParameter, "Gram matrix diagonal entry " + std::to_string(i) +
                                                         " is not 1");
        }
    }
}

GramMatrix GramMatrix::from_generator(std::span<const Complex> generator) {
    const auto m = static_cast<Eigen::Index>(generator.size());
    if (m == 0) {
        throw Error(ErrorCode::DimensionMismatch, "empty Toeplitz generator");
    }
    ComplexMatrix g(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index k = 0; k < m; ++k) {
            const auto d = static_cast<std::size_t>(j >= k ? j - k : k - j);
            g(j, k) = j >= k ? generator[d] : std::conj(generator[d]);
        }
    }
    return GramMatrix(std::move(g), Unchecked{});
}

Complex cfsk_overlap(const CfskParams &params, int d) {
    if (d == 0) {
        return {1.0, 0.0};
    }
    // Rectangular pulse: sqrt(2pi) F_r(d dw) = exp(i d dwT/2) sinc(d dwT/2).
    const double half = 0.5 * d * params.delta_omega_t;
    const Complex z = std::polar(1.0, d * params.delta_theta) * std::polar(1.0, half) * sinc(half);
    return std::exp(-params.total_photons * (1.0 - z));
}

GramMatrix gram_cfsk(const CfskParams &params) {
    validate(params);
    std::vector<Complex> generator(static_cast<std::size_t>(params.m));
    for (int d = 0; d < params.m; ++d) {
        generator[static_cast<std::size_t>(d)] = cfsk_overlap(params, d);
    }
    return GramMatrix::from_generator(generator);
}

GramMatrix gram_psk(const PskParams &params) {
    validate(params);
    return gram_cfsk({.m = params.m,
                      .delta_theta = kTwoPi / params.m,
                      .delta_omega_t = 0.0,
                      .total_photons = params.photons});
}

GramMatrix gram_dcfsk(const DcfskParams &params, const FourierExpansion &expansion) {
    validate(params);
    if (expansion.m != params.m || expansion.l != params.l) {
        std::ostringstream os;
        os << "expansion built for (M=" << expansion.m << ", L=" << expansion.l << ") but alphabet has (M="
           << params.m << ", L=" << params.l << ")";
        throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    const double step = resolved_phase_step(params);
    std::vector<Complex> generator(static_cast<std::size_t>(params.m));
    generator[0] = {1.0, 0.0};
    for (int d = 1; d < params.m; ++d) {
        const Complex z = std::polar(1.0, d * step) * expansion.normalized_series(d);
        generator[static_cast<std::size_t>(d)] = std::exp(-params.total_photons * (1.0 - z));
    }
    return GramMatrix::from_generator(generator);
}

GramMatrix gram_dcfsk(const DcfskParams &params) {
    validate(params);
    return gram_dcfsk(params, fourier_coefficients(params.m, params.l, params.delta_omega_t));
}

} // namespace cfsk
