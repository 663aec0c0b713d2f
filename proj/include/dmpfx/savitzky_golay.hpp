#pragma once

#include <span>
#include <vector>

namespace dmpfx {

/// Least-squares polynomial smoothing filter on uniformly spaced samples.
///
/// Convolution weights are solved once per (window, order) pair; apply()
/// evaluates the fitted polynomial (or one of its derivatives) at the
/// window center. Derivative outputs are in sample units: divide by dt^d
/// for time units. Edges are handled by mirroring half a window of
/// samples on each side so outputs keep the input length.
class SavitzkyGolay {
public:
    SavitzkyGolay(int window, int polyorder);  // throws InvalidWindow

    std::vector<double> apply(std::span<const double> signal, int deriv) const;

    std::span<const double> coefficients(int deriv) const;
    int window() const { return window_; }
    int polyorder() const { return polyorder_; }

private:
    int window_ = 0;
    int polyorder_ = 0;
    // one weight row per derivative order 0..polyorder
    std::vector<std::vector<double>> coeffs_;
};

}  // namespace dmpfx
