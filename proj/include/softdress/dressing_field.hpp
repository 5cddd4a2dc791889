#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "softdress/kinematics.hpp"
#include "softdress/quadrature.hpp"

// Spatial structure of the phase dressing: the boosted Green function G(x),
// the convolution action of 1/(G.del), and a worldline line-integral utility.

namespace softdress {

// G(x) = -(1/4pi) gamma / sqrt(x^2 + gamma^2 (v.x)^2)
inline double green_g(const Vec3& x, const Vec3& v)
{
    const double x2 = dot3(x, x);
    if (x2 == 0.0)
        throw std::invalid_argument("green_g: singular at x = 0");
    const double g = lorentz_gamma(v);
    const double vx = dot3(v, x);
    return -g / (4.0 * std::numbers::pi * std::sqrt(x2 + g * g * vx * vx));
}

// Regular 3-D lattice of scalar samples. Node (i,j,k) sits at
// origin + h*(i,j,k); values are stored i-major.
struct ScalarFieldSample {
    Vec3 origin{0.0, 0.0, 0.0};
    double spacing = 1.0;
    int n = 0;  // nodes per axis
    std::vector<double> values;

    ScalarFieldSample(const Vec3& orig, double h, int nodes)
        : origin(orig), spacing(h), n(nodes), values(static_cast<std::size_t>(nodes) * nodes * nodes, 0.0)
    {
        if (h <= 0.0) throw std::invalid_argument("ScalarFieldSample: spacing must be positive");
        if (nodes < 1) throw std::invalid_argument("ScalarFieldSample: need at least one node");
    }

    std::size_t index(int i, int j, int k) const
    {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }

    double& at(int i, int j, int k) { return values[index(i, j, k)]; }
    double at(int i, int j, int k) const { return values[index(i, j, k)]; }

    Vec3 position(int i, int j, int k) const
    {
        return {origin[0] + spacing * i, origin[1] + spacing * j, origin[2] + spacing * k};
    }

    bool contains(const Vec3& x) const
    {
        const double lo = -0.5 * spacing, hi = spacing * (n - 0.5);
        for (int a = 0; a < 3; ++a) {
            const double r = x[a] - origin[a];
            if (r < lo || r > hi) return false;
        }
        return true;
    }
};

namespace detail {

// \int_0^a \int_0^b \int_0^c dV / r  (Newtonian potential of a box corner)
inline double box_inverse_r_integral(double a, double b, double c)
{
    const double r = std::sqrt(a * a + b * b + c * c);
    auto term = [](double u, double v, double w, double r_) {
        return v * w * std::asinh(u / std::sqrt(v * v + w * w)) -
               0.5 * u * u * std::atan(v * w / (u * r_));
    };
    return term(a, b, c, r) + term(b, c, a, r) + term(c, a, b, r);
}

// \int_cell G d^3x for the cell centered on the singular node. Substituting
// x_par -> gamma * x_par maps G onto the Coulomb kernel over a cell stretched
// by gamma along the motion; the stretched cell is approximated by the
// axis-aligned box h x h x gamma*h (exact for axis-aligned v).
inline double singular_cell_integral(double h, const Vec3& v)
{
    const double g = lorentz_gamma(v);
    const double box = 8.0 * box_inverse_r_integral(0.5 * h, 0.5 * h, 0.5 * g * h);
    return -(1.0 / (4.0 * std::numbers::pi)) * box / g;
}

}  // namespace detail

// (1/(G.del)) f(x) = \int d^3z G(x - z) f(z), as a Riemann sum over the
// sample lattice with the singular node replaced by the analytic cell
// integral of G.
inline double inverse_gdot_apply(const ScalarFieldSample& f, const Vec3& v, const Vec3& x)
{
    if (!f.contains(x))
        throw std::invalid_argument("inverse_gdot_apply: evaluation point outside the sample grid");

    const double h = f.spacing;
    const double cell = h * h * h;
    double sum = 0.0;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            for (int k = 0; k < f.n; ++k) {
                const double fv = f.at(i, j, k);
                if (fv == 0.0) continue;
                const Vec3 z = f.position(i, j, k);
                const Vec3 d = {x[0] - z[0], x[1] - z[1], x[2] - z[2]};
                if (norm3(d) < 0.5 * h) {
                    sum += fv * detail::singular_cell_integral(h, v);
                } else {
                    sum += fv * green_g(d, v) * cell;
                }
            }
    return sum;
}

struct Worldline {
    FourVector base;  // x^mu
    Vec3 velocity;    // |v| < 1
    double s_begin;   // t'
    double s_end;     // t

    Worldline(const FourVector& x, const Vec3& v, double t_ref, double t)
        : base(x), velocity(v), s_begin(t_ref), s_end(t)
    {
        if (norm3(v) >= 1.0) throw std::invalid_argument("Worldline: |v| >= 1");
    }

    // x^mu(s) = x^mu + (s - x^0) (eta + v)^mu
    FourVector point(double s) const
    {
        const double ds = s - base.t;
        return base + FourVector(1.0, velocity) * ds;
    }
};

// Composite-Simpson value of \int field(x(s)) ds over [t', t].
inline double worldline_integral(const std::function<double(const FourVector&)>& field,
                                 const Worldline& w, int n_steps)
{
    if (n_steps < 2) throw std::invalid_argument("worldline_integral: need n_steps >= 2");
    if (n_steps % 2 != 0) ++n_steps;  // Simpson needs an even panel count

    const double a = w.s_begin, b = w.s_end;
    const double h = (b - a) / n_steps;
    double sum = field(w.point(a)) + field(w.point(b));
    for (int i = 1; i < n_steps; ++i)
        sum += field(w.point(a + h * i)) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace softdress
