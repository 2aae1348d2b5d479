#pragma once

#include <array>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "cfsk/alphabet.hpp"

namespace oracle {
#include "oracle/frozen_values.inc"
} // namespace oracle

namespace testing {

inline double max_abs(const Eigen::MatrixXcd &a) { return a.cwiseAbs().maxCoeff(); }

/// Haar-ish random unitary from the QR factorization of a complex Gaussian.
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd z(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            z(j, k) = {gauss(rng), gauss(rng)};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

/// U diag(d) U^H with nonnegative d.
inline Eigen::MatrixXcd random_psd(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0);
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) {
        d(i) = uni(rng);
    }
    if (n > 2) {
        d(0) = 0.0; // exercise the singular case
    }
    const Eigen::MatrixXcd u = random_unitary(n, rng);
    Eigen::MatrixXcd a = u * d.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    return 0.5 * (a + a.adjoint());
}

inline double random_angle(std::mt19937_64 &rng) {
    return std::uniform_real_distribution<double>(0.0, std::nextafter(cfsk::kTwoPi, 0.0))(rng);
}

} // namespace testing
