#include "cfsk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>
#include <string>

#include "cfsk/error.hpp"

namespace cfsk {

namespace {

constexpr double kEntropyFloor = 1e-15;
constexpr double kStructureTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
// Circulant inputs within this of exact structure use the Fourier basis.
constexpr double kCirculantTolerance = 1e-14;

void require_psd(const HermitianSpectrum &spectrum) {
    const double low = spectrum.min_eigenvalue();
    if (low < -kPsdTolerance) {
        throw Error(ErrorCode::NotPsd, "minimum eigenvalue " + std::to_string(low) + " below -1e-10");
    }
}

double circulant_deviation(const ComplexMatrix &a) {
    const Eigen::Index n = a.rows();
    double dev = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            dev = std::max(dev, std::abs(a(j, k) - a(0, ((k - j) % n + n) % n)));
        }
    }
    return dev;
}

// Circulant matrices are diagonalized exactly by the DFT, so every
// eigenvector has flat modulus 1/sqrt(n). Rounding then cannot leak into
// quantities such as the diagonal of the square root.
HermitianSpectrum circulant_eig(const ComplexMatrix &a) {
    const Eigen::Index n = a.rows();
    const double nd = static_cast<double>(n);
    Eigen::VectorXd lambda(n);
    for (Eigen::Index q = 0; q < n; ++q) {
        Complex sum{0.0, 0.0};
        for (Eigen::Index m = 0; m < n; ++m) {
            sum += a(0, m) * std::polar(1.0, kTwoPi * static_cast<double>((m * q) % n) / nd);
        }
        lambda(q) = sum.real();
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return lambda(x) > lambda(y); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    const double norm = 1.0 / std::sqrt(nd);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index q = order[static_cast<std::size_t>(c)];
        out.eigenvalues(c) = lambda(q);
        for (Eigen::Index j = 0; j < n; ++j) {
            out.eigenvectors(j, c) = std::polar(norm, kTwoPi * static_cast<double>((j * q) % n) / nd);
        }
    }
    return out;
}

} // namespace

HermitianSpectrum hermitian_eig(const ComplexMatrix &a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "matrix must be square and non-empty");
    }
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(asym) + " exceeds 1e-12");
    }
    if (circulant_deviation(a) <= kCirculantTolerance) {
        return circulant_eig(a);
    }
    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver did not converge");
    }
    // Eigen sorts ascending.
    HermitianSpectrum out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexMatrix matrix_sqrt(const HermitianSpectrum &spectrum) {
    require_psd(spectrum);
    const Eigen::VectorXd roots = spectrum.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix &v = spectrum.eigenvectors;
    ComplexMatrix root = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
    return 0.5 * (root + root.adjoint());
}

ComplexMatrix matrix_sqrt(const ComplexMatrix &a) { return matrix_sqrt(hermitian_eig(a)); }

double entropy_bits(const Eigen::VectorXd &probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > kEntropyFloor) {
            h -= p * std::log2(p);
        }
    }
    return std::max(h, 0.0);
}

double von_neumann_entropy(const ComplexMatrix &a) {
    const Complex trace = a.trace();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw Error(ErrorCode::NotNormalized, "trace " + std::to_string(trace.real()) + " is not 1");
    }
    const HermitianSpectrum spectrum = hermitian_eig(a);
    require_psd(spectrum);
    const double h = entropy_bits(spectrum.eigenvalues);
    return std::min(h, std::log2(static_cast<double>(a.rows())));
}

StructureReport structure_check(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "structure_check needs a square matrix");
    }
    const Eigen::Index n = a.rows();
    StructureReport out;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex head = j >= k ? a(j - k, 0) : a(0, k - j);
            out.max_toeplitz_dev = std::max(out.max_toeplitz_dev, std::abs(a(j, k) - head));
            const Complex wrapped = a(0, ((k - j) % n + n) % n);
            out.max_circulant_dev = std::max(out.max_circulant_dev, std::abs(a(j, k) - wrapped));
        }
    }
    out.is_toeplitz = out.max_toeplitz_dev <= kStructureTolerance;
    out.is_circulant = out.max_circulant_dev <= kStructureTolerance;
    return out;
}

} // namespace cfsk
