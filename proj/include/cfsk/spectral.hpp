#pragma once

/**
 * @file
 * Dense Hermitian spectral machinery: eigendecomposition, PSD square root,
 * von Neumann entropy and Toeplitz/circulant structure checks.
 */

#include <Eigen/Dense>

#include "cfsk/alphabet.hpp"

namespace cfsk {

/// Eigenvalues below -kPsdTolerance mean the matrix is not PSD; values in
/// [-kPsdTolerance, 0) are clamped to zero.
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;

struct HermitianSpectrum {
    Eigen::VectorXd eigenvalues;  ///< descending
    ComplexMatrix eigenvectors;   ///< columns, unitary

    [[nodiscard]] double max_eigenvalue() const { return eigenvalues(0); }
    [[nodiscard]] double min_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
};

/// Symmetrizes (A + A^H)/2 before decomposing. Circulant input is
/// decomposed in the Fourier basis instead of by the dense solver. Throws NotHermitian when
/// the asymmetry exceeds 1e-12 and NoConvergence if the solver fails.
HermitianSpectrum hermitian_eig(const ComplexMatrix &a);

/// Principal square root of a PSD matrix. Throws NotPsd.
ComplexMatrix matrix_sqrt(const ComplexMatrix &a);
ComplexMatrix matrix_sqrt(const HermitianSpectrum &spectrum);

/// -sum lambda log2 lambda of a unit-trace PSD matrix, in bits.
double von_neumann_entropy(const ComplexMatrix &a);

/// Entropy in bits of a probability spectrum; entries below 1e-15 count as 0.
double entropy_bits(const Eigen::VectorXd &probabilities);

struct StructureReport {
    bool is_toeplitz = false;
    bool is_circulant = false;
    double max_toeplitz_dev = 0.0;
    double max_circulant_dev = 0.0;
};

StructureReport structure_check(const ComplexMatrix &a);

} // namespace cfsk
