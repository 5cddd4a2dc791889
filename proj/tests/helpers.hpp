#pragma once

#include <array>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "softdress/kinematics.hpp"

// Shared generators for the property tests.

namespace softdress::testing {

using Rotation = std::array<std::array<double, 3>, 3>;

inline Rotation random_rotation(std::mt19937& rng)
{
    // uniform unit quaternion
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double norm = 0.0;
    for (double& c : q) {
        c = gauss(rng);
        norm += c * c;
    }
    norm = std::sqrt(norm);
    for (double& c : q) c /= norm;
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

inline Vec3 rotate(const Rotation& r, const Vec3& v)
{
    Vec3 out{};
    for (int i = 0; i < 3; ++i)
        out[i] = r[i][0] * v[0] + r[i][1] * v[1] + r[i][2] * v[2];
    return out;
}

inline Vec3 random_velocity(std::mt19937& rng, double max_speed)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> speed(0.0, max_speed);
    Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm3(dir);
    return scale3(dir, speed(rng) / n);
}

inline Vec3 random_unit(std::mt19937& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
    return scale3(dir, 1.0 / norm3(dir));
}

inline Eigen::MatrixXcd random_psd(std::mt19937& rng, int dim)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return a * a.adjoint();
}

}  // namespace softdress::testing
