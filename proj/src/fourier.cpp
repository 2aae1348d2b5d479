#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cfsk/alphabet.hpp"
#include "cfsk/error.hpp"

namespace cfsk {

namespace {

constexpr double kQuadratureTolerance = 1e-10;
constexpr long kMaxEvaluations = 1'000'000;
constexpr unsigned kMaxDepth = 15;

struct EvaluationBudgetExceeded {};

/// Break points of [-half, half]: the origin and every zero of
/// sinc(t * shape / 2) inside the interval.
std::vector<double> break_points(double half, double shape) {
    std::vector<double> pts{0.0};
    if (shape > 0.0) {
        const double spacing = kTwoPi / shape;
        for (int k = 1; k * spacing < half; ++k) {
            pts.push_back(k * spacing);
        }
    }
    std::vector<double> all;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        if (*it > 0.0) {
            all.push_back(-*it);
        }
    }
    all.insert(all.begin(), -half);
    all.insert(all.end(), pts.begin(), pts.end());
    all.push_back(half);
    return all;
}

} // namespace

Complex FourierExpansion::normalized_series(int t) const {
    Complex sum{0.0, 0.0};
    for (int ell = -l; ell <= l; ++ell) {
        sum += fraction(ell) * std::polar(1.0, t * ell * delta);
    }
    return sum;
}

FourierExpansion fourier_coefficients(int m, int l, double shape_param) {
    if (m < 2) {
        throw Error(ErrorCode::InvalidParameter, "alphabet size M = " + std::to_string(m) + " must be >= 2");
    }
    if (l < 0) {
        throw Error(ErrorCode::InvalidParameter, "half-bandwidth L = " + std::to_string(l) + " must be >= 0");
    }
    if (!std::isfinite(shape_param) || shape_param < 0.0 || shape_param >= kTwoPi) {
        std::ostringstream os;
        os << "delta_omega_t = " << shape_param << " outside [0, 2pi)";
        throw Error(ErrorCode::InvalidParameter, os.str());
    }

    FourierExpansion out;
    out.m = m;
    out.l = l;
    out.shape_param = shape_param;
    out.delta = std::numbers::pi / (m - 1);
    const double half = std::numbers::pi / out.delta;
    const auto pts = break_points(half, shape_param);

    long evaluations = 0;
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
    for (int ell = -l; ell <= l; ++ell) {
        // The shape is real and even, so only the cosine part survives.
        auto integrand = [&](double t) {
            if (++evaluations > kMaxEvaluations) {
                throw EvaluationBudgetExceeded{};
            }
            return sinc(0.5 * t * shape_param) * std::cos(t * ell * out.delta);
        };
        double value = 0.0;
        try {
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                double error = 0.0;
                double l1 = 0.0;
                value += Quadrature::integrate(integrand, pts[i], pts[i + 1], kMaxDepth, kQuadratureTolerance,
                                               &error, &l1);
                if (error > kQuadratureTolerance * std::max(1.0, l1)) {
                    throw Error(ErrorCode::NoConvergence, "Fourier coefficient quadrature did not converge");
                }
            }
        } catch (const EvaluationBudgetExceeded &) {
            throw Error(ErrorCode::NoConvergence, "Fourier coefficient quadrature exceeded 1e6 evaluations");
        }
        out.coeffs.push_back(out.delta / kTwoPi * value);
    }

    for (int ell = -l; ell <= l; ++ell) {
        double &c = out.coeffs[static_cast<std::size_t>(ell + l)];
        if (c < -kNegativeCoefficientTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "c_" << ell << " = " << c << " < 0 for (M=" << m << ", L=" << l << ", delta_omega_t=" << shape_param
               << ")";
            throw Error(ErrorCode::NegativeCoefficient, os.str());
        }
        if (c < 0.0) {
            c = 0.0;
        }
    }

    for (double c : out.coeffs) {
        out.s_zero += c;
    }
    if (!(out.s_zero > 0.0)) {
        throw Error(ErrorCode::NegativeCoefficient, "S_L(0) is not positive");
    }
    out.fractions.reserve(out.coeffs.size());
    for (double c : out.coeffs) {
        out.fractions.push_back(c / out.s_zero);
    }
    return out;
}

} // namespace cfsk
