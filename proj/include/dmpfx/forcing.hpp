#pragma once

#include <array>
#include <vector>

namespace dmpfx {

/// Per-axis forcing-term samples over the unit-time grid.
struct ForcingSeries {
    enum class Kind { target, standardized };

    Kind kind = Kind::target;
    std::array<std::vector<double>, 3> axis;
    // set per axis by standardization when the series is constant
    // (zero variance); such axes are emitted as all zeros
    std::array<bool, 3> constant_axis{false, false, false};

    std::size_t size() const { return axis[0].size(); }
};

}  // namespace dmpfx
