#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "softdress/kinematics.hpp"

namespace softdress {

struct QuadratureSpec {
    int n_polar = 64;      // Gauss-Legendre nodes in cos(theta)
    int n_azimuthal = 64;  // uniform nodes in phi

    QuadratureSpec() = default;
    QuadratureSpec(int np, int na) : n_polar(np), n_azimuthal(na)
    {
        if (np < 4 || na < 4)
            throw std::invalid_argument("QuadratureSpec: need at least 4 nodes per direction");
    }
};

// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

struct SphereNode {
    Vec3 direction;  // unit vector
    double weight;   // node weights sum to 4*pi
};

// Product rule on the unit sphere: Gauss-Legendre in cos(theta), uniform
// (trapezoid, periodic) in phi.
inline std::vector<SphereNode> sphere_quadrature(const QuadratureSpec& spec)
{
    std::vector<double> ct, wt;
    gauss_legendre(spec.n_polar, ct, wt);
    const double wphi = 2.0 * std::numbers::pi / spec.n_azimuthal;

    std::vector<SphereNode> nodes;
    nodes.reserve(static_cast<std::size_t>(spec.n_polar) * spec.n_azimuthal);
    for (int i = 0; i < spec.n_polar; ++i) {
        const double c = ct[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < spec.n_azimuthal; ++j) {
            const double phi = wphi * j;
            nodes.push_back({{s * std::cos(phi), s * std::sin(phi), c}, wt[i] * wphi});
        }
    }
    return nodes;
}

}  // namespace softdress
