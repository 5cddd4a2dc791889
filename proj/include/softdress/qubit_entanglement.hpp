#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "softdress/kinematics.hpp"

// Two-qubit spin states of charged particles: dressed density matrices,
// partial traces, and the entropy identity relating dressed and bare values.
// Entropy conventions: `paper` is Tr(rho log rho), `standard` is the usual
// -Tr(rho log rho); natural logarithm throughout.

namespace softdress {

enum class EntropyConvention { Paper, Standard };
enum class NormalizationMode { BareNormalized, DressedNormalized };

struct SpinAmplitude {
    Eigen::Matrix2cd phi;  // phi_{sigma1 sigma2}, sigma in {up, down}
    double v = 0.0;        // CoM kinematic tag
    double theta = 0.0;

    double norm_squared() const { return phi.squaredNorm(); }

    static SpinAmplitude bell_singlet()
    {
        SpinAmplitude a;
        a.phi << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
        return a;
    }
    static SpinAmplitude bell_triplet()
    {
        SpinAmplitude a;
        a.phi << 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
        return a;
    }
    static SpinAmplitude product_up_up()
    {
        SpinAmplitude a;
        a.phi << 1.0, 0.0, 0.0, 0.0;
        return a;
    }
};

struct DensityMatrix {
    Eigen::MatrixXcd entries;  // 2x2 or 4x4 Hermitian PSD
    double trace = 0.0;

    explicit DensityMatrix(const Eigen::MatrixXcd& m) : entries(m), trace(m.trace().real())
    {
        const auto dim = m.rows();
        if ((dim != 2 && dim != 4) || m.cols() != dim)
            throw std::invalid_argument("DensityMatrix: must be 2x2 or 4x4");
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("DensityMatrix: not Hermitian");
    }

    Eigen::Index dim() const { return entries.rows(); }

    Eigen::VectorXd eigenvalues() const
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

    void require_psd(double tol = 1e-10) const
    {
        if (eigenvalues().minCoeff() < -tol)
            throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
};

// rho^d = e^{2F} phi phi^dagger on the product basis
// {up up, up down, down up, down down} (particle 1 slot slowest).
inline DensityMatrix density_from_amplitude(const SpinAmplitude& a, double f_exponent)
{
    Eigen::Vector4cd vec;
    vec << a.phi(0, 0), a.phi(0, 1), a.phi(1, 0), a.phi(1, 1);
    const Eigen::Matrix4cd rho = std::exp(2.0 * f_exponent) * (vec * vec.adjoint());
    return DensityMatrix(rho);
}

// Partial trace over particle 2.
inline DensityMatrix reduce_particle1(const DensityMatrix& rho4)
{
    if (rho4.dim() != 4)
        throw std::invalid_argument("reduce_particle1: input must be 4x4");
    Eigen::Matrix2cd red;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            red(i, j) = rho4.entries(2 * i, 2 * j) + rho4.entries(2 * i + 1, 2 * j + 1);
    return DensityMatrix(red);
}

// Tr(rho log rho) (paper) or -Tr(rho log rho) (standard), with 0 log 0 := 0.
inline double entropy_trace(const DensityMatrix& rho,
                            EntropyConvention conv = EntropyConvention::Paper)
{
    rho.require_psd();
    double s = 0.0;
    const Eigen::VectorXd ev = rho.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double p = ev(i);
        if (p > 0.0) s += p * std::log(p);
    }
    return conv == EntropyConvention::Paper ? s : -s;
}

// | Tr(e^{2F} rho log(e^{2F} rho)) - e^{2F} (Tr(rho log rho) + 2F Tr rho) |
inline double dressed_entropy_identity_check(const DensityMatrix& rho, double f_exponent)
{
    const double scale = std::exp(2.0 * f_exponent);
    const DensityMatrix dressed(Eigen::MatrixXcd(scale * rho.entries));
    const double lhs = entropy_trace(dressed, EntropyConvention::Paper);
    const double rhs = scale * (entropy_trace(rho, EntropyConvention::Paper) +
                                2.0 * f_exponent * rho.trace);
    return std::abs(lhs - rhs);
}

// S^d from S under either normalization reading:
// bare normalized (Tr rho = 1):    e^{2F} (S + 2F)
// dressed normalized (Tr rho^d = 1): e^{2F} S + 2F
inline double dressed_entropy(double s, double f_exponent, double trace_rho,
                              NormalizationMode mode)
{
    const double scale = std::exp(2.0 * f_exponent);
    if (mode == NormalizationMode::BareNormalized) {
        if (std::abs(trace_rho - 1.0) > 1e-9)
            throw std::invalid_argument("dressed_entropy: bare mode requires Tr rho = 1");
        return scale * (s + 2.0 * f_exponent);
    }
    if (std::abs(scale * trace_rho - 1.0) > 1e-9)
        throw std::invalid_argument("dressed_entropy: dressed mode requires Tr rho^d = 1");
    return scale * s + 2.0 * f_exponent;
}

// Standard-convention von Neumann entropy of the normalized reduced state of
// particle 1; the global e^{2F} scale drops out under normalization.
inline double normalized_entanglement(const DensityMatrix& rho4, double f_exponent)
{
    const double scale = std::exp(2.0 * f_exponent);
    Eigen::MatrixXcd dressed = scale * rho4.entries;
    const double tr = dressed.trace().real();
    if (std::abs(tr) < 1e-300)
        throw std::invalid_argument("normalized_entanglement: zero trace");
    const DensityMatrix red = reduce_particle1(DensityMatrix(dressed));
    const DensityMatrix normalized(Eigen::MatrixXcd(red.entries / tr));
    return entropy_trace(normalized, EntropyConvention::Standard);
}

}  // namespace softdress
