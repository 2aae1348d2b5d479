#include "cfsk/tuning.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "cfsk/alphabet.hpp"
#include "cfsk/discrimination.hpp"
#include "cfsk/error.hpp"
#include "cfsk/parallel.hpp"
#include "cfsk/rates.hpp"

namespace cfsk {

namespace {

constexpr int kRefinementStarts = 4;
constexpr double kInvPhi = 0.6180339887498948482;

const double kUpperAngle = std::nextafter(kTwoPi, 0.0);

struct Point {
    double theta = 0.0;
    double omega = 0.0;
    double value = 0.0;
};

/// Higher value wins; ties go to the lexicographically lower point.
bool better(const Point &a, const Point &b) {
    if (a.value != b.value) {
        return a.value > b.value;
    }
    if (a.theta != b.theta) {
        return a.theta < b.theta;
    }
    return a.omega < b.omega;
}

template <class F> double golden_section_max(F &&f, double lo, double hi, double tolerance) {
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

void require_angle(const std::optional<double> &value, const char *name) {
    if (value && !(std::isfinite(*value) && *value >= 0.0 && *value < kTwoPi)) {
        std::ostringstream os;
        os << "fixed " << name << " = " << *value << " outside [0, 2pi)";
        throw Error(ErrorCode::InvalidParameter, os.str());
    }
}

} // namespace

std::string_view to_string(Objective objective) noexcept {
    switch (objective) {
    case Objective::SrmSuccess:
        return "SRM_SUCCESS";
    case Objective::HolevoRate:
        return "HOLEVO_RATE";
    case Objective::UpperBound:
        return "UPPER_BOUND";
    }
    return "UNKNOWN";
}

Objective parse_objective(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
    if (key == "SRM_SUCCESS" || key == "SRM") {
        return Objective::SrmSuccess;
    }
    if (key == "HOLEVO_RATE" || key == "HOLEVO") {
        return Objective::HolevoRate;
    }
    if (key == "UPPER_BOUND" || key == "UPPER") {
        return Objective::UpperBound;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown objective '" + std::string(name) + "'");
}

double evaluate_objective(int m, double total_photons, Objective objective, double delta_theta,
                          double delta_omega_t) {
    const GramMatrix gram = gram_cfsk(
        {.m = m, .delta_theta = delta_theta, .delta_omega_t = delta_omega_t, .total_photons = total_photons});
    switch (objective) {
    case Objective::SrmSuccess:
        return srm_success(gram).p_srm;
    case Objective::HolevoRate:
        return holevo_rate(gram) / m;
    case Objective::UpperBound:
        return sentis_bounds(gram).p_upper;
    }
    return 0.0;
}

TuningResult grid_optimize(int m, double total_photons, Objective objective, const TuningOptions &options) {
    if (options.resolution < 8) {
        throw Error(ErrorCode::InvalidParameter,
                    "grid resolution " + std::to_string(options.resolution) + " must be >= 8");
    }
    require_angle(options.fixed_delta_theta, "delta_theta");
    require_angle(options.fixed_delta_omega_t, "delta_omega_t");
    validate(CfskParams{.m = m, .total_photons = total_photons});

    const double step = kTwoPi / options.resolution;
    auto axis = [&](const std::optional<double> &fixed) {
        std::vector<double> values;
        if (fixed) {
            values.push_back(*fixed);
        } else {
            for (int i = 0; i < options.resolution; ++i) {
                values.push_back(i * step);
            }
        }
        return values;
    };
    const auto thetas = axis(options.fixed_delta_theta);
    const auto omegas = axis(options.fixed_delta_omega_t);

    auto f = [&](double theta, double omega) { return evaluate_objective(m, total_photons, objective, theta, omega); };

    std::vector<Point> grid(thetas.size() * omegas.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const double theta = thetas[idx / omegas.size()];
        const double omega = omegas[idx % omegas.size()];
        grid[idx] = {theta, omega, f(theta, omega)};
    });

    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), 0);
    const auto starts = std::min<std::size_t>(kRefinementStarts, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts), order.end(),
                      [&](std::size_t a, std::size_t b) { return better(grid[a], grid[b]); });

    Point best = grid[order[0]];
    int best_iterations = 0;
    for (std::size_t s = 0; s < starts; ++s) {
        Point current = grid[order[s]];
        int iterations = 0;
        while (iterations < options.max_iterations) {
            ++iterations;
            double moved = 0.0;
            if (!options.fixed_delta_theta) {
                const double lo = std::max(0.0, current.theta - step);
                const double hi = std::min(kUpperAngle, current.theta + step);
                const double x = golden_section_max([&](double t) { return f(t, current.omega); }, lo, hi,
                                                    options.tolerance);
                const double v = f(x, current.omega);
                if (v > current.value) {
                    moved = std::max(moved, std::abs(x - current.theta));
                    current.theta = x;
                    current.value = v;
                }
            }
            if (!options.fixed_delta_omega_t) {
                const double lo = std::max(0.0, current.omega - step);
                const double hi = std::min(kUpperAngle, current.omega + step);
                const double x = golden_section_max([&](double w) { return f(current.theta, w); }, lo, hi,
                                                    options.tolerance);
                const double v = f(current.theta, x);
                if (v > current.value) {
                    moved = std::max(moved, std::abs(x - current.omega));
                    current.omega = x;
                    current.value = v;
                }
            }
            if (moved < options.tolerance) {
                break;
            }
        }
        if (s == 0 || better(current, best)) {
            best = current;
            best_iterations = iterations;
        }
    }

    TuningResult out;
    out.best_delta_theta = best.theta;
    out.best_delta_omega_t = best.omega;
    out.objective_value = f(best.theta, best.omega);
    out.objective_kind = objective;
    out.grid_resolution = options.resolution;
    out.refinement_iterations = best_iterations;
    return out;
}

} // namespace cfsk
