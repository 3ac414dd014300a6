#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "hoc/order.hpp"

namespace hoc {

/// Floating-point mirror of Configuration.
struct FloatConfig {
    std::vector<double> values;  ///< sorted descending

    explicit FloatConfig(std::vector<double> v);
    size_t n() const { return values.size(); }
};

struct PathSample {
    double t;
    FloatConfig config;
};

/// A sampled increasing path p : [0,1] -> S_k from samples.front() to
/// samples.back(). conservation_error is the max drift of the power sums
/// s_1..s_{k-1}; monotonicity_margin is the min over consecutive sample
/// pairs of the numeric r_k minimum of the difference problem.
struct PathResult {
    std::vector<PathSample> samples;
    double conservation_error = 0.0;
    double monotonicity_margin = 0.0;
};

enum class NumericVerdict { Holds, Fails, MomentViolation };

struct PathTolerances {
    double conservation = 1e-8;
    double margin = 1e-8;
    double newton_residual = 1e-10;
};

/// Tolerance-relaxed version of the exact decision: moment sums must
/// vanish within tol (relative to their magnitude scale) and the minimum
/// of r_k on a refined grid over the hull must be >= -tol.
NumericVerdict numeric_decide(const std::vector<std::pair<double, double>>& nodes, int k,
                              double tol);

/// Minimum of r_k over a dense grid on the argument hull, refined around
/// the minimizer.
double numeric_rk_min(const std::vector<std::pair<double, double>>& nodes, int k,
                      int grid_points = 4096);

/// Weighted difference nodes (+1 on upper, -1 on lower).
std::vector<std::pair<double, double>> difference_nodes(const FloatConfig& upper,
                                                        const FloatConfig& lower);

/// The extremal configuration sharing x's power sums s_1..s_{k-1},
/// solved by Newton iteration on the block values of the extremal
/// pattern. Throws when no real solution is found.
FloatConfig find_extremal_numeric(const FloatConfig& x, int k,
                                  ExtremalRole role, double residual_tol = 1e-10);

/// Increasing path for k = 3 built by repeated one-parameter triple
/// deformations (equal s_1, s_2) with coordinate cancellation.
PathResult increasing_path_k3(const FloatConfig& a, const FloatConfig& b, int steps = 256);

/// Increasing path for n = k+1: ascend from b toward the maximal element
/// until an end coordinate matches a, cancel it, finish in the n = k
/// stratum. Implemented for k = 3.
PathResult increasing_path_nk1(const FloatConfig& a, const FloatConfig& b, int k,
                               int steps = 256);

/// Integrates dx/dt = 1/(x(x-y)(x-z)) (cyclically) with RK4 plus
/// projection back onto the (s_2, s_3) level set; samples are the
/// symmetric six-point configurations (x, y, z, -z, -y, -x).
PathResult ode_demo_path(const std::array<double, 3>& x0, std::pair<double, double> t_span,
                         int steps = 256);

using GradientProvider =
    std::function<std::array<double, 3>(const std::array<double, 3>&)>;

struct SchurCheckResult {
    bool pass = true;
    std::array<double, 3> witness{};
    size_t skipped = 0;  ///< samples with coincident coordinates
};

/// Generalized Schur-convexity test at each sample point.
SchurCheckResult schur3_check(const GradientProvider& gradient,
                              const std::vector<std::array<double, 3>>& samples,
                              double tol = 1e-9);

}  // namespace hoc
