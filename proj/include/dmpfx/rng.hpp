#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dmpfx {

/// Deterministic Gaussian sampler. mt19937_64 output is fully specified
/// by the standard and the polar transform below is plain arithmetic, so
/// a seed reproduces the same stream on every platform (the distribution
/// adapters in <random> give no such guarantee).
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        has_spare_ = true;
        return u * factor;
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace dmpfx
