#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dmpfx/vec3.hpp"

namespace dmpfx {

/// Uniformly sampled 3D position series, the raw demonstration record.
struct TimedTrajectory {
    std::vector<Vec3> samples;
    double dt = 0.0;  // seconds, > 0

    std::size_t size() const { return samples.size(); }
    double duration() const {
        return samples.empty() ? 0.0 : static_cast<double>(samples.size() - 1) * dt;
    }
};

/// Position series with velocity and acceleration, start and goal taken
/// from the first and last samples.
struct KinematicTrajectory {
    std::vector<Vec3> position;
    std::vector<Vec3> velocity;
    std::vector<Vec3> acceleration;
    double dt = 0.0;
    Vec3 start;  // == position.front()
    Vec3 goal;   // == position.back()

    std::size_t size() const { return position.size(); }
    double duration() const {
        return position.empty() ? 0.0 : static_cast<double>(position.size() - 1) * dt;
    }
};

enum class TrajectoryFormat { csv };

/// Reads a demonstration file (header `t,x,y,z`, SI units) and resamples
/// it onto a uniform grid with dt equal to the median source spacing.
/// Throws MalformedFile, TooShort, NonMonotonicTime, IoError.
TimedTrajectory load_trajectory(const std::filesystem::path& path,
                                TrajectoryFormat format = TrajectoryFormat::csv);

/// Same contract as load_trajectory but reading from a stream.
TimedTrajectory parse_trajectory_csv(std::istream& in);

/// Savitzky-Golay smoothing plus first/second derivatives. Window must be
/// odd and larger than the polynomial order; the trajectory must be at
/// least one window long.
KinematicTrajectory smooth_and_differentiate(const TimedTrajectory& traj,
                                             int window = 21, int polyorder = 3);

/// Temporal normalization: resamples onto a unit-duration grid with
/// `steps` intervals, shifts the start to the origin and rescales
/// velocity by the original duration and acceleration by its square.
KinematicTrajectory normalize_demo(const KinematicTrajectory& traj, int steps = 1000);

/// Sum of sample-to-sample position distances.
double path_length(const KinematicTrajectory& traj);

/// Trapezoidal time integral of a sampled series.
double trapezoid(std::span<const double> values, double dt);

}  // namespace dmpfx
