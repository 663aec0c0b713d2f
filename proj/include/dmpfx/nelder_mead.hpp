#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dmpfx {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Downhill simplex with standard coefficients (reflect 1, expand 2,
/// contract 0.5, shrink 0.5). Stops when the simplex diameter falls
/// below rel_tol relative to the point scale, or after max_iters.
/// +infinity objective values are handled (treated as worst).
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::span<const double> start,
                             std::span<const double> step, double rel_tol = 1e-3,
                             int max_iters = 200);

}  // namespace dmpfx
