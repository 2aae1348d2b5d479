#pragma once

/**
 * @file
 * Coherent-state keying alphabets (CFSK, PSK and the discrete-mode dCFSK)
 * and the Gram matrices of their state overlaps.
 */

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cfsk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// sin(x)/x with the removable singularity filled in.
double sinc(double x) noexcept;

/**
 * @brief Coherent frequency-shift keying alphabet.
 *
 * State m carries phase m*delta_theta and frequency offset m*delta_omega
 * on a rectangular pulse of duration T. Only the product delta_omega*T
 * enters any overlap, so it is stored as one dimensionless angle.
 */
struct CfskParams {
    int m = 2;
    double delta_theta = 0.0;   ///< radians, in [0, 2pi)
    double delta_omega_t = 0.0; ///< radians, in [0, 2pi)
    double total_photons = 0.0; ///< |alpha|^2 per signal
};

/// Single-mode PSK: phases 2*pi*m/M at photon number `photons`.
struct PskParams {
    int m = 2;
    double photons = 0.0;
};

/// How the per-index phase step of a dCFSK alphabet is chosen.
struct PhaseOffset {
    enum class Mode {
        CfskMatched, ///< delta_theta + delta_omega_t / 2
        HalfPi, ///< delta_theta + pi / 2
        Explicit,    ///< `value` used verbatim
    };
    Mode mode = Mode::CfskMatched;
    double value = 0.0;
};

/**
 * @brief Discrete CFSK: M products of 2L+1 single-mode coherent states.
 *
 * Mode l of signal m has amplitude a_l and phase m*(theta' + l*Delta) with
 * Delta = pi/(M-1). The energy fractions (a_l/a)^2 come from a truncated
 * Fourier series of sinc(t * delta_omega_t / 2).
 */
struct DcfskParams {
    int m = 2;
    int l = 1;
    double delta_theta = 0.0;
    double delta_omega_t = 0.0; ///< shape parameter of the expanded sinc
    double total_photons = 0.0; ///< a^2, summed over all 2L+1 modes
    PhaseOffset phase_offset{};
};

void validate(const CfskParams &params);
void validate(const PskParams &params);
void validate(const DcfskParams &params);

/// Resolved per-index phase step theta' of a dCFSK alphabet.
double resolved_phase_step(const DcfskParams &params) noexcept;

/**
 * @brief Order-L Fourier expansion of sinc(t * delta_omega_t / 2) on
 * [-pi/Delta, pi/Delta] with Delta = pi/(M-1).
 */
struct FourierExpansion {
    int m = 2;
    int l = 0;
    double shape_param = 0.0;
    double delta = 0.0;
    std::vector<double> coeffs;    ///< c_{-L} .. c_{+L}
    std::vector<double> fractions; ///< c_l / S_L(0)
    double s_zero = 0.0;           ///< S_L(0) = sum of coeffs

    [[nodiscard]] double coefficient(int ell) const { return coeffs.at(static_cast<std::size_t>(ell + l)); }
    [[nodiscard]] double fraction(int ell) const { return fractions.at(static_cast<std::size_t>(ell + l)); }
    /// S_L(t) / S_L(0) at integer argument t.
    [[nodiscard]] Complex normalized_series(int t) const;
};

/// Quadrature-noise floor below which a negative coefficient is a genuine
/// regime violation rather than rounding.
inline constexpr double kNegativeCoefficientTolerance = 1e-12;

FourierExpansion fourier_coefficients(int m, int l, double shape_param);

/**
 * @brief Hermitian, unit-diagonal matrix of pairwise state overlaps.
 *
 * Entry (j, k) is <alpha_j|alpha_k>.
 */
class GramMatrix {
  public:
    /// Validates squareness, Hermiticity (1e-12) and unit diagonal (1e-12).
    explicit GramMatrix(ComplexMatrix entries);

    /// Toeplitz matrix with G(j, k) = g_{j-k}; `generator` holds g_0..g_{M-1}
    /// and g_{-d} = conj(g_d).
    static GramMatrix from_generator(std::span<const Complex> generator);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] const ComplexMatrix &entries() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(int j, int k) const { return entries_(j, k); }

  private:
    struct Unchecked {};
    GramMatrix(ComplexMatrix entries, Unchecked) : entries_(std::move(entries)) {}

    ComplexMatrix entries_;
};

/// Overlap g_d between CFSK states whose indices differ by d.
Complex cfsk_overlap(const CfskParams &params, int d);

GramMatrix gram_cfsk(const CfskParams &params);
GramMatrix gram_psk(const PskParams &params);

/// Throws DimensionMismatch when `expansion` was built for another (M, L).
GramMatrix gram_dcfsk(const DcfskParams &params, const FourierExpansion &expansion);
GramMatrix gram_dcfsk(const DcfskParams &params);

} // namespace cfsk
