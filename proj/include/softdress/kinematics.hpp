#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

// Minkowski four-vector algebra and mass-shell kinematics.
// Natural units (hbar = c = 1), metric signature (+,-,-,-).

namespace softdress {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

inline Vec3 scale3(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 add3(const Vec3& a, const Vec3& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    FourVector(double t_, const Vec3& s) : t(t_), x(s[0]), y(s[1]), z(s[2]) {}

    Vec3 spatial() const { return {x, y, z}; }

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    FourVector operator/(double s) const { return {t / s, x / s, y / s, z / s}; }
};

inline double minkowski_dot(const FourVector& a, const FourVector& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double lorentz_gamma(const Vec3& v)
{
    const double v2 = dot3(v, v);
    if (v2 >= 1.0)
        throw std::invalid_argument("lorentz_gamma: |v| >= 1 (superluminal velocity)");
    return 1.0 / std::sqrt(1.0 - v2);
}

// p = m*gamma*(eta + v) with eta = (1, 0).
inline FourVector make_on_shell(double m, const Vec3& v)
{
    if (m <= 0.0)
        throw std::invalid_argument("make_on_shell: mass must be positive");
    const double g = lorentz_gamma(v);  // throws on |v| >= 1
    return {m * g, m * g * v[0], m * g * v[1], m * g * v[2]};
}

struct Particle {
    double mass;
    int charge_sign;  // +1 particle, -1 antiparticle
    Vec3 velocity;

    Particle(double m, const Vec3& v, int sign = +1)
        : mass(m), charge_sign(sign), velocity(v)
    {
        if (m <= 0.0) throw std::invalid_argument("Particle: mass must be positive");
        if (norm3(v) >= 1.0) throw std::invalid_argument("Particle: |v| >= 1");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("Particle: charge sign must be +1 or -1");
    }

    double gamma() const { return lorentz_gamma(velocity); }
    FourVector momentum() const { return make_on_shell(mass, velocity); }
};

// u(p,q) = sqrt(1 - m^4/(p.q)^2), the invariant relative speed of two
// equal-mass on-shell momenta. Requires both momenta on the same mass shell.
inline double relative_speed(const FourVector& p, const FourVector& q)
{
    const double m2p = minkowski_dot(p, p);
    const double m2q = minkowski_dot(q, q);
    if (m2p <= 0.0 || m2q <= 0.0)
        throw std::invalid_argument("relative_speed: momenta must be timelike");
    if (p.t <= 0.0 || q.t <= 0.0)
        throw std::invalid_argument("relative_speed: momenta must have positive energy");
    if (std::abs(m2p - m2q) > 1e-9 * std::max(m2p, m2q))
        throw std::invalid_argument("relative_speed: unequal masses (formula assumes one species)");

    const double pq = minkowski_dot(p, q);
    double rad = 1.0 - (m2p * m2q) / (pq * pq);
    if (rad < 0.0) {
        if (rad > -1e-12)
            rad = 0.0;  // rounding noise at p = q
        else
            throw std::invalid_argument("relative_speed: momenta off shell");
    }
    return std::sqrt(rad);
}

}  // namespace softdress
