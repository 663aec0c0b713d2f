#pragma once

#include <cmath>

namespace dmpfx {

/// Cartesian task-space sample. Units depend on context
/// (m, m/s or m/s^2).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm1() const { return std::abs(x) + std::abs(y) + std::abs(z); }
    double max_abs() const {
        return std::max(std::abs(x), std::max(std::abs(y), std::abs(z)));
    }
    bool all_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

}  // namespace dmpfx
