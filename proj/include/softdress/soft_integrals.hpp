#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "softdress/kinematics.hpp"
#include "softdress/quadrature.hpp"

// Eikonal and dressing-vertex angular factors, soft-photon loop coefficients
// with IR regulator lambda and soft scale Delta, and the assembly of the
// D, C, G, F exponents of the dressed amplitude.
//
// Regulator scheme: sharp momentum cutoffs lambda <= |k| <= Delta with
// massless photons. In the eikonal (degree-0) region every loop factorizes
// as (angular coefficient) x ln(Delta/lambda), so each exponent is
//     e^2 * kappa0 * c * ln(Delta/lambda),   kappa0 = -1/(16 pi^2),
// with photon contractions in Feynman gauge (numerator -g_{mu nu}) and
// pairings weighted by the charge signs eta_i eta_j.

namespace softdress {

inline constexpr double kExponentConvention = -1.0 / (16.0 * std::numbers::pi * std::numbers::pi);

enum class VertexType { Eikonal, Dressing };

struct VertexKind {
    VertexType kind;
    Vec3 velocity;

    VertexKind(VertexType k, const Vec3& v) : kind(k), velocity(v)
    {
        if (norm3(v) >= 1.0) throw std::invalid_argument("VertexKind: |v| >= 1");
    }
};

struct Regulators {
    double lambda;  // IR cutoff
    double delta;   // soft upper scale

    Regulators(double lam, double del) : lambda(lam), delta(del)
    {
        if (!(0.0 < lam && lam < del))
            throw std::invalid_argument("Regulators: require 0 < lambda < delta");
    }

    double log_ratio() const { return std::log(delta / lambda); }
};

// Eikonal current in degree-0 form: w/(w.khat) with w = (1,v), khat = (1,nhat).
inline FourVector eikonal_factor(const Vec3& v, const Vec3& nhat)
{
    const double denom = 1.0 - dot3(v, nhat);
    return FourVector(1.0, v) / denom;
}

// Dressing vertex V/(V.khat), V = w (wbar.khat) - khat with wbar = (1,-v).
// For null khat, V.khat = (w.khat)(wbar.khat).
inline FourVector dressing_vertex_factor(const Vec3& v, const Vec3& nhat)
{
    const FourVector w(1.0, v);
    const FourVector khat(1.0, nhat);
    const double w_k = 1.0 - dot3(v, nhat);
    const double wbar_k = 1.0 + dot3(v, nhat);
    const FourVector V = w * wbar_k - khat;
    return V / (w_k * wbar_k);
}

inline FourVector vertex_factor(const VertexKind& vk, const Vec3& nhat)
{
    return vk.kind == VertexType::Eikonal ? eikonal_factor(vk.velocity, nhat)
                                          : dressing_vertex_factor(vk.velocity, nhat);
}

// c_AB = (1/4pi) \oint dOmega (-g_{mu nu}) A^mu(nhat) B^nu(nhat)
inline double pair_coefficient(const VertexKind& a, const VertexKind& b,
                               const QuadratureSpec& quad)
{
    double sum = 0.0;
    for (const auto& node : sphere_quadrature(quad)) {
        const FourVector fa = vertex_factor(a, node.direction);
        const FourVector fb = vertex_factor(b, node.direction);
        sum += node.weight * (-minkowski_dot(fa, fb));
    }
    return sum / (4.0 * std::numbers::pi);
}

struct SoftFactorBreakdown {
    double c_D = 0.0;       // all eikonal-eikonal pairings
    double c_C_cross = 0.0; // C_{v1 v2}
    double c_C_self_1 = 0.0;
    double c_C_self_2 = 0.0;
    double c_G_1 = 0.0;
    double c_G_2 = 0.0;
    double c_F = 0.0;

    double assembled() const
    {
        return c_D + c_C_cross + 0.5 * (c_C_self_1 + c_C_self_2) + c_G_1 + c_G_2;
    }
};

// All angular coefficients of the two-particle soft exponents on a shared
// node set. Dressing velocities default to the particle velocities; making
// them independent inputs exposes the mass-shell sensitivity of c_F.
inline SoftFactorBreakdown soft_breakdown(const Particle& p1, const Particle& p2,
                                          const Vec3& dressing_v1, const Vec3& dressing_v2,
                                          const QuadratureSpec& quad)
{
    const double eta1 = p1.charge_sign;
    const double eta2 = p2.charge_sign;
    const auto nodes = sphere_quadrature(quad);

    double ee11 = 0.0, ee22 = 0.0, ee12 = 0.0;
    double dd11 = 0.0, dd22 = 0.0, dd12 = 0.0;
    double ed11 = 0.0, ed12 = 0.0, ed21 = 0.0, ed22 = 0.0;
    for (const auto& node : nodes) {
        const FourVector e1 = eikonal_factor(p1.velocity, node.direction);
        const FourVector e2 = eikonal_factor(p2.velocity, node.direction);
        const FourVector d1 = dressing_vertex_factor(dressing_v1, node.direction);
        const FourVector d2 = dressing_vertex_factor(dressing_v2, node.direction);
        ee11 += node.weight * -minkowski_dot(e1, e1);
        ee22 += node.weight * -minkowski_dot(e2, e2);
        ee12 += node.weight * -minkowski_dot(e1, e2);
        dd11 += node.weight * -minkowski_dot(d1, d1);
        dd22 += node.weight * -minkowski_dot(d2, d2);
        dd12 += node.weight * -minkowski_dot(d1, d2);
        ed11 += node.weight * -minkowski_dot(e1, d1);
        ed12 += node.weight * -minkowski_dot(e1, d2);
        ed21 += node.weight * -minkowski_dot(e2, d1);
        ed22 += node.weight * -minkowski_dot(e2, d2);
    }
    const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
    ee11 *= inv4pi; ee22 *= inv4pi; ee12 *= inv4pi;
    dd11 *= inv4pi; dd22 *= inv4pi; dd12 *= inv4pi;
    ed11 *= inv4pi; ed12 *= inv4pi; ed21 *= inv4pi; ed22 *= inv4pi;

    SoftFactorBreakdown b;
    b.c_D = ee11 + ee22 + 2.0 * eta1 * eta2 * ee12;
    b.c_C_cross = 2.0 * eta1 * eta2 * dd12;
    b.c_C_self_1 = 2.0 * dd11;
    b.c_C_self_2 = 2.0 * dd22;
    // photons connecting a dressing vertex to any eikonal leg
    b.c_G_1 = -2.0 * (ed11 + eta1 * eta2 * ed21);
    b.c_G_2 = -2.0 * (ed22 + eta1 * eta2 * ed12);
    b.c_F = b.assembled();
    return b;
}

inline SoftFactorBreakdown soft_breakdown(const Particle& p1, const Particle& p2,
                                          const QuadratureSpec& quad)
{
    return soft_breakdown(p1, p2, p1.velocity, p2.velocity, quad);
}

// Max over quadrature nodes of |(-g) J.J| for the total combined current
// J = sum_i eta_i (E_i - V_i). On shell each per-particle difference is
// proportional to the null direction khat, so this vanishes pointwise.
inline double max_pointwise_cancellation_residual(const Particle& p1, const Particle& p2,
                                                  const QuadratureSpec& quad)
{
    double worst = 0.0;
    for (const auto& node : sphere_quadrature(quad)) {
        const FourVector j1 = eikonal_factor(p1.velocity, node.direction) -
                              dressing_vertex_factor(p1.velocity, node.direction);
        const FourVector j2 = eikonal_factor(p2.velocity, node.direction) -
                              dressing_vertex_factor(p2.velocity, node.direction);
        const FourVector j = j1 * static_cast<double>(p1.charge_sign) +
                             j2 * static_cast<double>(p2.charge_sign);
        worst = std::max(worst, std::abs(-minkowski_dot(j, j)));
    }
    return worst;
}

struct SoftExponents {
    double D = 0.0;
    double C = 0.0;
    double G1 = 0.0;
    double G2 = 0.0;
    double F = 0.0;
};

inline SoftExponents exponent_at(const SoftFactorBreakdown& b, const Regulators& reg, double e2)
{
    const double unit = e2 * kExponentConvention * reg.log_ratio();
    SoftExponents ex;
    ex.D = unit * b.c_D;
    ex.C = unit * (b.c_C_cross + 0.5 * (b.c_C_self_1 + b.c_C_self_2));
    ex.G1 = unit * b.c_G_1;
    ex.G2 = unit * b.c_G_2;
    ex.F = unit * b.c_F;
    return ex;
}

struct ScanRow {
    double lambda;
    double exp_D;
    double exp_C;
    double exp_F;
};

// One row per lambda; rows are assembled in grid order so results are
// bit-identical regardless of worker count.
inline std::vector<ScanRow> regulator_scan(const Particle& p1, const Particle& p2,
                                           const Vec3& dressing_v1, const Vec3& dressing_v2,
                                           const QuadratureSpec& quad,
                                           const std::vector<double>& lambda_grid, double delta,
                                           double e2, int workers = 1)
{
    for (double lam : lambda_grid)
        if (!(0.0 < lam && lam < delta))
            throw std::invalid_argument("regulator_scan: lambda grid must lie inside (0, delta)");
    if (workers < 1) throw std::invalid_argument("regulator_scan: workers must be >= 1");

    const SoftFactorBreakdown b = soft_breakdown(p1, p2, dressing_v1, dressing_v2, quad);
    std::vector<ScanRow> rows(lambda_grid.size());
    auto compute = [&](std::size_t i) {
        const SoftExponents ex = exponent_at(b, Regulators(lambda_grid[i], delta), e2);
        rows[i] = {lambda_grid[i], std::exp(ex.D), std::exp(ex.C), std::exp(ex.F)};
    };

    if (workers == 1 || lambda_grid.size() < 2) {
        for (std::size_t i = 0; i < lambda_grid.size(); ++i) compute(i);
    } else {
        std::vector<std::thread> pool;
        const std::size_t n = lambda_grid.size();
        const std::size_t nw = std::min<std::size_t>(workers, n);
        for (std::size_t w = 0; w < nw; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += nw) compute(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

// phi^d / phi = e^{i e^2 zeta} e^F
inline std::complex<double> dressed_amplitude_factor(double f_exponent, double zeta, double e2)
{
    return std::exp(std::complex<double>(f_exponent, e2 * zeta));
}

}  // namespace softdress
