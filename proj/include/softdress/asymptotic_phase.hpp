#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "softdress/kinematics.hpp"

// C-number kernels of the asymptotic phase operator and the two-particle
// Coulomb phase, with explicit log-regulator bookkeeping. The divergent
// large-time behavior lives entirely in the explicit sign(t)*ln(|t|/t')
// factor; the kernels themselves are finite away from the comoving limit.

namespace softdress {

inline constexpr double kRelativeSpeedFloor = 1e-6;

struct PhaseRecord {
    double kernel = 0.0;                    // per unit e^2, per unit log factor
    double two_particle_coefficient = 0.0;  // (1/4pi) / u_r
    double log_factor = 0.0;                // sign(t) * ln(|t|/t')
    double zeta = 0.0;                      // opaque finite phase, configured
    double kappa = 0.0;                     // opaque continuum commutator phase, configured
};

namespace detail {

inline void check_phase_pair(const FourVector& p, const FourVector& q)
{
    const double m2 = minkowski_dot(p, p);
    const double pq = minkowski_dot(p, q);
    if (pq <= m2 * (1.0 + 1e-12))
        throw std::invalid_argument("phase kernel: p.q must exceed m^2 (self-pair singularity)");
}

}  // namespace detail

// Kernel of the normal-ordered phase operator: (1/8pi) p.q / sqrt((p.q)^2 - m^4).
inline double phase_kernel(const FourVector& p, const FourVector& q)
{
    detail::check_phase_pair(p, q);
    const double pq = minkowski_dot(p, q);
    const double m4 = minkowski_dot(p, p) * minkowski_dot(q, q);
    return pq / (8.0 * std::numbers::pi * std::sqrt(pq * pq - m4));
}

// Two-particle phase coefficient (1/4pi) / u_r(p1, p2).
inline double two_particle_phase_coefficient(const FourVector& p1, const FourVector& p2,
                                             double speed_floor = kRelativeSpeedFloor)
{
    detail::check_phase_pair(p1, p2);
    const double u = relative_speed(p1, p2);
    if (u < speed_floor)
        throw std::invalid_argument(
            "two_particle_phase_coefficient: relative speed below floor (Coulomb phase diverges)");
    return 1.0 / (4.0 * std::numbers::pi * u);
}

inline double phase_log(double t, double t_ref)
{
    if (t == 0.0) throw std::invalid_argument("phase_log: t must be nonzero");
    if (t_ref <= 0.0) throw std::invalid_argument("phase_log: t_ref must be positive");
    const double sign = t > 0.0 ? 1.0 : -1.0;
    return sign * std::log(std::abs(t) / t_ref);
}

// |2 * kernel - (1/4pi)/u_r|; vanishes identically since
// 1/u = p.q / sqrt((p.q)^2 - m^4) on shell.
inline double kernel_consistency_residual(const FourVector& p1, const FourVector& p2)
{
    return std::abs(2.0 * phase_kernel(p1, p2) - two_particle_phase_coefficient(p1, p2));
}

inline PhaseRecord make_phase_record(const FourVector& p1, const FourVector& p2, double t,
                                     double t_ref, double zeta = 0.0, double kappa = 0.0)
{
    PhaseRecord rec;
    rec.kernel = phase_kernel(p1, p2);
    rec.two_particle_coefficient = two_particle_phase_coefficient(p1, p2);
    rec.log_factor = phase_log(t, t_ref);
    rec.zeta = zeta;
    rec.kappa = kappa;
    return rec;
}

}  // namespace softdress
