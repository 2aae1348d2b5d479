#include "cfsk/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfsk/error.hpp"
#include "cfsk/spectral.hpp"

namespace cfsk {

namespace {

std::vector<double> diagonal_of(const ComplexMatrix &root) {
    std::vector<double> diag(static_cast<std::size_t>(root.rows()));
    for (Eigen::Index i = 0; i < root.rows(); ++i) {
        diag[static_cast<std::size_t>(i)] = std::max(root(i, i).real(), 0.0);
    }
    return diag;
}

double mean_square(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v * v;
    }
    return sum / static_cast<double>(values.size());
}

SentisBounds bounds_from(std::span<const double> sqrt_diag, double gamma_max) {
    const auto m = static_cast<double>(sqrt_diag.size());
    double trace = 0.0;
    for (double v : sqrt_diag) {
        trace += v;
    }
    SentisBounds out;
    out.gamma_max = gamma_max;
    out.p_lower = (trace / m) * (trace / m);
    out.q.reserve(sqrt_diag.size());
    for (double v : sqrt_diag) {
        const double q = v / trace;
        out.q.push_back(q);
        out.tv_term += std::abs(q - 1.0 / m);
    }
    out.p_upper_raw = out.p_lower + std::sqrt(std::max(gamma_max, 0.0)) * out.tv_term;
    out.p_upper = std::min(1.0, out.p_upper_raw);
    return out;
}

} // namespace

SrmResult srm_success(const GramMatrix &gram) {
    SrmResult out;
    out.sqrt_diag = diagonal_of(matrix_sqrt(gram.entries()));
    out.p_srm = mean_square(out.sqrt_diag);
    return out;
}

OptimalityGap srm_optimality_gap(std::span<const double> sqrt_diag) {
    if (sqrt_diag.empty()) {
        throw Error(ErrorCode::InvalidParameter, "empty diagonal");
    }
    const auto [lo, hi] = std::minmax_element(sqrt_diag.begin(), sqrt_diag.end());
    const double gap = *hi - *lo;
    return {gap, gap <= kOptimalityTolerance};
}

SentisBounds sentis_bounds(const GramMatrix &gram) {
    const HermitianSpectrum spectrum = hermitian_eig(gram.entries());
    const auto diag = diagonal_of(matrix_sqrt(spectrum));
    return bounds_from(diag, spectrum.max_eigenvalue());
}

DiscriminationReport discriminate(const GramMatrix &gram) {
    const HermitianSpectrum spectrum = hermitian_eig(gram.entries());
    DiscriminationReport out;
    out.sqrt_diag = diagonal_of(matrix_sqrt(spectrum));
    out.p_srm = mean_square(out.sqrt_diag);
    const auto gap = srm_optimality_gap(out.sqrt_diag);
    out.optimality_gap = gap.gap;
    out.srm_is_optimal = gap.srm_is_optimal;
    auto bounds = bounds_from(out.sqrt_diag, spectrum.max_eigenvalue());
    out.p_lower = bounds.p_lower;
    out.p_upper = bounds.p_upper;
    out.p_upper_raw = bounds.p_upper_raw;
    out.gamma_max = bounds.gamma_max;
    out.q_vector = std::move(bounds.q);
    out.tv_distance_term = bounds.tv_term;
    return out;
}

double helstrom_binary(double overlap_modulus) {
    if (!(overlap_modulus >= 0.0 && overlap_modulus <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "overlap modulus " + std::to_string(overlap_modulus) + " outside [0, 1]");
    }
    return 0.5 * (1.0 + std::sqrt(1.0 - overlap_modulus * overlap_modulus));
}

} // namespace cfsk
