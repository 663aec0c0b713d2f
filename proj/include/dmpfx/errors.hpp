#pragma once

#include <stdexcept>
#include <string>

namespace dmpfx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
struct IoError : Error {
    using Error::Error;
};

// A demonstration file violates the CSV contract.
struct MalformedFile : Error {
    using Error::Error;
};

// Fewer samples than the minimum needed for 3rd-order fitting.
struct TooShort : Error {
    using Error::Error;
};

// Timestamps are not strictly increasing.
struct NonMonotonicTime : Error {
    using Error::Error;
};

// Filter window even or not larger than the polynomial order.
struct InvalidWindow : Error {
    using Error::Error;
};

// Signal shorter than the filter window.
struct WindowTooLarge : Error {
    using Error::Error;
};

// Cross-demonstration statistics need at least two demonstrations.
struct InsufficientDemos : Error {
    using Error::Error;
};

// Every cell of the objective surface diverged.
struct NoFiniteCell : Error {
    using Error::Error;
};

// Two trajectories compared on different time grids.
struct GridMismatch : Error {
    using Error::Error;
};

// Damping ratio is undefined when the stiffness ratio is zero.
struct UndefinedForZeroStiffness : Error {
    using Error::Error;
};

// Integration state left the sane range; signals an unstable
// feature choice rather than a bug.
struct NumericalBlowup : Error {
    using Error::Error;
};

// Synthetic-demo specification is inconsistent.
struct InvalidSpec : Error {
    using Error::Error;
};

}  // namespace dmpfx
