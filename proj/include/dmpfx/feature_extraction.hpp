#pragma once

#include <span>
#include <vector>

#include "dmpfx/dmp.hpp"
#include "dmpfx/forcing.hpp"
#include "dmpfx/trajectory.hpp"

namespace dmpfx {

/// Execution policy for the grid/population kernels. Results are
/// identical either way; the serial path is the reference the parallel
/// one is tested against.
enum class Exec { serial, parallel };

/// f_target = ydd + D_M * yd + K_M * (y - g), per axis on the unit grid.
ForcingSeries target_forcing(const KinematicTrajectory& demo, double d_m, double k_m);

/// Per-axis (f - mean) / sd over time. Constant axes (sd < 1e-12) map to
/// zeros and are flagged rather than failing.
ForcingSeries standardize_forcing(const ForcingSeries& target);

/// Time integral of the cross-demonstration standard deviation of the
/// standardized forcing terms. Zero when all demos share one forcing
/// shape. Throws InsufficientDemos when fewer than two demos are given.
double similarity(std::span<const KinematicTrajectory> demos, double d_m, double k_m);

/// Accumulated position distance between the demo and its own DMP
/// regeneration at the given ratios. Divergent rollouts yield +infinity
/// so grid sweeps stay total.
double distance_error(const KinematicTrajectory& demo, double d_m, double k_m,
                      const BasisConfig& basis);
double distance_error(const KinematicTrajectory& demo, double d_m, double k_m,
                      const BasisTable& table);

/// Objective values over a (D_M, K_M) grid, row-major with K_M fastest.
struct ObjectiveSurface {
    std::vector<double> d_m_grid;
    std::vector<double> k_m_grid;
    std::vector<double> sum_d;       // accumulated distance error, summed over demos
    std::vector<double> similarity;  // S
    std::vector<double> objective;   // S + k_gain * sum_d
    double k_gain = 20.0;
    std::size_t argmin_row = 0;  // index into d_m_grid
    std::size_t argmin_col = 0;  // index into k_m_grid

    std::size_t index(std::size_t row, std::size_t col) const {
        return row * k_m_grid.size() + col;
    }
    double argmin_d_m() const { return d_m_grid[argmin_row]; }
    double argmin_k_m() const { return k_m_grid[argmin_col]; }
};

/// Fills the three matrices cell by cell; each cell is an independent
/// pure computation. Throws InsufficientDemos; throws NoFiniteCell when
/// every cell diverged.
ObjectiveSurface evaluate_surface(std::span<const KinematicTrajectory> demos,
                                  std::span<const double> d_m_grid,
                                  std::span<const double> k_m_grid, double k_gain,
                                  const BasisConfig& basis, Exec exec = Exec::parallel);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int n);

struct ExtractConfig {
    std::vector<double> d_m_grid = log_spaced(0.1, 120.0, 60);
    std::vector<double> k_m_grid = log_spaced(0.1, 250.0, 60);
    double k_gain = 20.0;
    BasisConfig basis = BasisConfig::make();
    int refine_max_iters = 200;
    double refine_rel_tol = 1e-3;
    Exec exec = Exec::parallel;
};

struct ExtractionResult {
    DynamicFeatures features;  // m = 1, refined ratios
    ObjectiveSurface surface;
};

/// Coarse grid search over the objective followed by a simplex
/// refinement from the best cell. Ratios are optimized in log space so
/// they stay positive.
ExtractionResult extract_features(std::span<const KinematicTrajectory> demos,
                                  const ExtractConfig& config = {});

struct TrajectoryMetrics {
    double d_mean = 0.0;      // m, accumulated distance error over duration
    double a_peak = 0.0;      // m/s^2, max acceleration norm of the regeneration
    double goal_error = 0.0;  // m, |y(1) - g|
};

/// Table-style comparison of a regenerated trajectory against the
/// normalized demo it was learned from. Throws GridMismatch.
TrajectoryMetrics evaluate_metrics(const KinematicTrajectory& regen,
                                   const KinematicTrajectory& demo);

}  // namespace dmpfx
