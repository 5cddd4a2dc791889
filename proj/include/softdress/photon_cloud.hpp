#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "softdress/kinematics.hpp"
#include "softdress/quadrature.hpp"
#include "softdress/soft_integrals.hpp"

// Coherent soft-photon cloud of the asymptotic state: classical mode
// amplitudes, the cutoff-regulated expected photon number and vacuum
// overlap, and a truncated multi-mode Fock simulator.

namespace softdress {

using Complex = std::complex<double>;

struct ComplexFourVector {
    Complex t, x, y, z;
    std::array<Complex, 3> spatial() const { return {x, y, z}; }
};

struct CloudSpec {
    std::vector<Particle> particles;
    double time = 0.0;
    double e2 = 1.0;

    CloudSpec(std::vector<Particle> parts, double t = 0.0, double coupling = 1.0)
        : particles(std::move(parts)), time(t), e2(coupling)
    {
        if (particles.empty()) throw std::invalid_argument("CloudSpec: particle list empty");
        if (e2 <= 0.0) throw std::invalid_argument("CloudSpec: coupling must be positive");
    }
};

// f^mu(k) = e/((2pi)^{3/2} sqrt(2 k0)) sum_j eta_j (p_j^mu / p_j.k) e^{i k.p_j t / p_j0}
inline ComplexFourVector cloud_amplitude(const CloudSpec& spec, const FourVector& k)
{
    const double k0 = k.t;
    if (k0 <= 0.0) throw std::invalid_argument("cloud_amplitude: k0 must be positive");
    if (std::abs(minkowski_dot(k, k)) > 1e-10 * k0 * k0)
        throw std::invalid_argument("cloud_amplitude: k must be null");

    const double e = std::sqrt(spec.e2);
    const double norm = e / (std::pow(2.0 * std::numbers::pi, 1.5) * std::sqrt(2.0 * k0));
    ComplexFourVector f{0.0, 0.0, 0.0, 0.0};
    for (const auto& part : spec.particles) {
        const FourVector p = part.momentum();
        const double pk = minkowski_dot(p, k);
        const Complex phase = std::exp(Complex(0.0, pk / p.t * spec.time));
        const Complex c = static_cast<double>(part.charge_sign) * norm / pk * phase;
        f.t += c * p.t;
        f.x += c * p.x;
        f.y += c * p.y;
        f.z += c * p.z;
    }
    return f;
}

// Angular coefficient A of <N> = e^2 A ln(Delta/lambda): the transverse
// (physical polarization) content of the degree-0 eikonal current,
// A = (1/(2 (2pi)^3)) \oint dOmega |J_perp(nhat)|^2 with
// J = sum_j eta_j w_j/(w_j.khat).
inline double cloud_angular_coefficient(const CloudSpec& spec, const QuadratureSpec& quad)
{
    double sum = 0.0;
    for (const auto& node : sphere_quadrature(quad)) {
        Vec3 j{0.0, 0.0, 0.0};
        for (const auto& part : spec.particles) {
            const FourVector e = eikonal_factor(part.velocity, node.direction);
            j = add3(j, scale3(e.spatial(), static_cast<double>(part.charge_sign)));
        }
        const Vec3 jp = add3(j, scale3(node.direction, -dot3(j, node.direction)));
        sum += node.weight * dot3(jp, jp);
    }
    return sum / (2.0 * std::pow(2.0 * std::numbers::pi, 3.0));
}

// <N> = \int_{lambda <= |k| <= Delta} d^3k sum_pol |eps.f|^2. The integrand
// is degree -3 in |k|, so the radial integral is exactly ln(Delta/lambda).
inline double expected_photon_number(const CloudSpec& spec, const Regulators& reg,
                                     const QuadratureSpec& quad)
{
    return spec.e2 * cloud_angular_coefficient(spec, quad) * reg.log_ratio();
}

inline double vacuum_overlap(double n_expected)
{
    if (n_expected < 0.0) throw std::invalid_argument("vacuum_overlap: <N> must be >= 0");
    return std::exp(-0.5 * n_expected);
}

// ---------------------------------------------------------------------------
// Truncated multi-mode Fock simulator
// ---------------------------------------------------------------------------

struct FockState {
    std::vector<int> mode_truncations;     // levels 0..n_max per mode
    Eigen::VectorXcd amplitudes;           // product occupation basis, mode 0 slowest
    double norm = 0.0;
    double vacuum_overlap = 0.0;           // |<0|psi>|
    std::vector<double> mean_occupation;   // per mode
    double truncation_leakage = 0.0;       // probability of any mode at its top level
};

namespace detail {

inline Eigen::Index fock_dim(const std::vector<int>& truncs)
{
    Eigen::Index d = 1;
    for (int n : truncs) d *= (n + 1);
    return d;
}

// occupation of `mode` for basis index `idx`
inline int fock_occ(const std::vector<int>& truncs, Eigen::Index idx, std::size_t mode)
{
    for (std::size_t m = truncs.size(); m-- > 0;) {
        const int base = truncs[m] + 1;
        const int occ = static_cast<int>(idx % base);
        if (m == mode) return occ;
        idx /= base;
    }
    throw std::logic_error("fock_occ: mode out of range");
}

// A = sum_m (alpha_m a_m^dag - alpha_m^* a_m) on the truncated product basis
inline Eigen::MatrixXcd displacement_generator(const std::vector<Complex>& alphas,
                                               const std::vector<int>& truncs)
{
    const Eigen::Index dim = fock_dim(truncs);
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::Index stride = 1;
    for (std::size_t m = alphas.size(); m-- > 0;) {
        const int base = truncs[m] + 1;
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            const int occ = static_cast<int>((idx / stride) % base);
            if (occ + 1 < base) {
                const double amp = std::sqrt(occ + 1.0);  // a^dag |n> = sqrt(n+1)|n+1>
                gen(idx + stride, idx) += alphas[m] * amp;
                gen(idx, idx + stride) -= std::conj(alphas[m]) * amp;
            }
        }
        stride *= base;
    }
    return gen;
}

inline FockState analyze_state(Eigen::VectorXcd psi, const std::vector<int>& truncs)
{
    FockState st;
    st.mode_truncations = truncs;
    st.norm = psi.norm();
    if (st.norm > 0.0) psi /= st.norm;
    st.amplitudes = psi;
    st.vacuum_overlap = std::abs(psi(0));
    st.mean_occupation.assign(truncs.size(), 0.0);
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        const double prob = std::norm(psi(idx));
        bool at_top = false;
        for (std::size_t m = 0; m < truncs.size(); ++m) {
            const int occ = fock_occ(truncs, idx, m);
            st.mean_occupation[m] += prob * occ;
            at_top = at_top || (occ == truncs[m]);
        }
        if (at_top) st.truncation_leakage += prob;
    }
    return st;
}

inline void check_fock_args(const std::vector<Complex>& alphas, int n_max)
{
    if (alphas.empty() || alphas.size() > 4)
        throw std::invalid_argument("fock simulator: 1-4 modes supported");
    if (n_max < 1 || n_max > 64)
        throw std::invalid_argument("fock simulator: n_max must be in [1, 64]");
}

}  // namespace detail

// exp[sum_m (alpha_m a_m^dag - h.c.)] |0> by dense matrix exponential.
inline FockState fock_displacement_sim(const std::vector<Complex>& alphas, int n_max,
                                       double leakage_bound = 1e-10)
{
    detail::check_fock_args(alphas, n_max);
    const std::vector<int> truncs(alphas.size(), n_max);
    const Eigen::MatrixXcd gen = detail::displacement_generator(alphas, truncs);
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(gen.rows());
    vac(0) = 1.0;
    FockState st = detail::analyze_state(gen.exp() * vac, truncs);
    if (st.truncation_leakage > leakage_bound)
        throw std::runtime_error("fock_displacement_sim: truncation leakage above bound");
    return st;
}

// Same state via the order-by-order Taylor sum of the exponential.
inline FockState fock_displacement_taylor(const std::vector<Complex>& alphas, int n_max,
                                          int order)
{
    detail::check_fock_args(alphas, n_max);
    if (order < 1) throw std::invalid_argument("fock_displacement_taylor: order must be >= 1");
    const std::vector<int> truncs(alphas.size(), n_max);
    const Eigen::MatrixXcd gen = detail::displacement_generator(alphas, truncs);
    Eigen::VectorXcd term = Eigen::VectorXcd::Zero(gen.rows());
    term(0) = 1.0;
    Eigen::VectorXcd psi = term;
    for (int k = 1; k <= order; ++k) {
        term = (gen * term) / static_cast<double>(k);
        psi += term;
    }
    return detail::analyze_state(psi, truncs);
}

// Scalar c with e^A e^B = e^{A+B} e^{c/2}, extracted from truncated matrix
// exponentials applied to the vacuum. For displacement generators c is the
// central commutator [A, B].
inline Complex hadamard_phase_sim(const std::vector<Complex>& alphas_a,
                                  const std::vector<Complex>& alphas_b, int n_max,
                                  double leakage_bound = 1e-8)
{
    if (alphas_a.size() != alphas_b.size())
        throw std::invalid_argument("hadamard_phase_sim: exponents must share the mode set");
    detail::check_fock_args(alphas_a, n_max);
    const std::vector<int> truncs(alphas_a.size(), n_max);
    const Eigen::MatrixXcd ga = detail::displacement_generator(alphas_a, truncs);
    const Eigen::MatrixXcd gb = detail::displacement_generator(alphas_b, truncs);

    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(ga.rows());
    vac(0) = 1.0;
    const Eigen::VectorXcd prod = ga.exp() * (gb.exp() * vac);
    const Eigen::VectorXcd both = Eigen::MatrixXcd(ga + gb).exp() * vac;

    const FockState leak_a = detail::analyze_state(prod, truncs);
    const FockState leak_b = detail::analyze_state(both, truncs);
    if (leak_a.truncation_leakage > leakage_bound || leak_b.truncation_leakage > leakage_bound)
        throw std::runtime_error("hadamard_phase_sim: truncation leakage above bound");

    const Complex ratio = both.dot(prod) / both.squaredNorm();
    return 2.0 * std::log(ratio);
}

}  // namespace softdress
