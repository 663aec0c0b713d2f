#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "dmpfx/forcing.hpp"
#include "dmpfx/trajectory.hpp"
#include "dmpfx/vec3.hpp"

namespace dmpfx {

/// Coefficient ratios of the assumed spring-damper system: inertia M
/// (doubles as the temporal scale), damping ratio D/M and stiffness
/// ratio K/M.
struct DynamicFeatures {
    double m = 1.0;    // > 0
    double d_m = 0.0;  // D/M, 1/s
    double k_m = 0.0;  // K/M, 1/s^2
};

/// zeta = D_M / (2 sqrt(K_M)); throws UndefinedForZeroStiffness.
double damping_ratio(const DynamicFeatures& features);

/// Phase variable: exponential decay from 1 at t=0 to exp(-decay) at t=1.
double canonical_x(double t, double decay);

/// Gaussian basis layout over the phase variable. Centers are evenly
/// spaced in time (hence geometric in x), widths follow the center gaps.
struct BasisConfig {
    int count = 100;
    double decay = 4.6;  // canonical decay alpha_x
    std::vector<double> centers;  // strictly decreasing, in (0, 1]
    std::vector<double> widths;   // > 0

    static BasisConfig make(int count = 100, double decay = 4.6);
};

/// psi_i(x) = exp(-(x - c_i)^2 / (2 sigma_i^2)) for each basis.
std::vector<double> basis_activations(double x, const BasisConfig& basis);

/// Basis activations precomputed on the unit-time grid with `steps`
/// intervals. Shared, immutable and reused across fits and rollouts.
struct BasisTable {
    BasisConfig basis;
    int steps = 0;
    std::vector<double> x;         // phase at each grid node, steps+1
    std::vector<double> psi;       // (steps+1) x count, node-major
    std::vector<double> psi_sum;   // per node
    std::vector<double> fit_denom; // per basis: sum_t psi * x^2

    BasisTable(const BasisConfig& config, int steps);

    // normalized weighted activation sum at grid node k
    double mix(std::span<const double> weights, int k) const;
};

/// A learned movement primitive: per-axis basis weights plus the
/// start/goal the weights were fitted against.
struct DmpModel {
    DynamicFeatures features;
    BasisConfig basis;
    std::array<std::vector<double>, 3> weights;
    Vec3 start;
    Vec3 goal;
};

struct FitResult {
    std::array<std::vector<double>, 3> weights;
    // axes whose spatial scale was below eps get zero weights
    std::array<bool, 3> degenerate_scale{false, false, false};
};

/// Locally weighted regression: one scalar least-squares problem per
/// basis function, per axis. `spatial_scale` is start - goal per axis;
/// axes with |scale| < 1e-9 are flagged degenerate and zeroed.
FitResult fit_weights(const ForcingSeries& target, const BasisConfig& basis,
                      const Vec3& spatial_scale);
FitResult fit_weights(const ForcingSeries& target, const BasisTable& table,
                      const Vec3& spatial_scale);

/// Forcing-term samples of a model on the unit grid (not divided by M):
/// f_k = mix(w, x_k) * x_k * (start - goal) per axis.
std::vector<Vec3> forcing_sequence(const DmpModel& model, const BasisTable& table,
                                   std::optional<Vec3> goal_override = std::nullopt);

/// Acceleration of the point-attractor system. Every integrator in this
/// project must obtain accelerations through this function so that
/// trajectories produced from identical inputs agree bitwise.
inline Vec3 attractor_acceleration(const Vec3& y, const Vec3& v, const Vec3& goal,
                                   const DynamicFeatures& f, const Vec3& forcing) {
    Vec3 a;
    for (int i = 0; i < 3; ++i)
        a[i] = forcing[i] / f.m - f.d_m * v[i] - f.k_m * (y[i] - goal[i]);
    return a;
}

/// Semi-implicit Euler update: velocity first, then position with the
/// updated velocity.
inline void semi_implicit_step(Vec3& y, Vec3& v, const Vec3& a, double dt) {
    for (int i = 0; i < 3; ++i) {
        v[i] += a[i] * dt;
        y[i] += v[i] * dt;
    }
}

/// Integrates the model over unit time from rest at model.start.
/// Throws NumericalBlowup when any state component exceeds 1e6.
KinematicTrajectory rollout(const DmpModel& model, const DynamicFeatures& features,
                            int steps, std::optional<Vec3> goal_override = std::nullopt);
KinematicTrajectory rollout(const DmpModel& model, const DynamicFeatures& features,
                            const BasisTable& table,
                            std::optional<Vec3> goal_override = std::nullopt);

}  // namespace dmpfx
