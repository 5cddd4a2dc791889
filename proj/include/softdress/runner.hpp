#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "softdress/asymptotic_phase.hpp"
#include "softdress/photon_cloud.hpp"
#include "softdress/qubit_entanglement.hpp"
#include "softdress/result_table.hpp"
#include "softdress/run_config.hpp"
#include "softdress/soft_integrals.hpp"

// Maps CLI subcommands onto the library modules and assembles deterministic
// result tables. All reductions run in fixed grid order.

namespace softdress {

struct RunOptions {
    double offshell = 0.0;  // shrink |dv1| by this amount (cancel subcommand)
    int workers = 1;
};

namespace detail {

inline SpinAmplitude state_from_config(const RunConfig& cfg)
{
    if (cfg.preset == "bell_singlet") return SpinAmplitude::bell_singlet();
    if (cfg.preset == "bell_triplet") return SpinAmplitude::bell_triplet();
    if (cfg.preset == "product") return SpinAmplitude::product_up_up();
    SpinAmplitude a;
    a.phi << cfg.amplitudes[0], cfg.amplitudes[1], cfg.amplitudes[2], cfg.amplitudes[3];
    return a;
}

}  // namespace detail

inline ResultTable run(const std::string& subcommand, const RunConfig& cfg,
                       const RunOptions& opts = {})
{
    const Particle p1(cfg.mass, cfg.v1, cfg.charge1);
    const Particle p2(cfg.mass, cfg.v2, cfg.charge2);
    const QuadratureSpec quad(cfg.n_polar, cfg.n_azimuthal);

    ResultTable t;
    t.meta["config_hash"] = config_hash(cfg.raw_text);
    t.meta["tool_version"] = kToolVersion;
    t.meta["subcommand"] = subcommand;

    if (subcommand == "kin") {
        const FourVector q1 = p1.momentum();
        const FourVector q2 = p2.momentum();
        t.columns = {"u_rel", "p1_t", "p1_x", "p1_y", "p1_z", "p2_t", "p2_x", "p2_y", "p2_z"};
        t.add_row({relative_speed(q1, q2), q1.t, q1.x, q1.y, q1.z, q2.t, q2.x, q2.y, q2.z});
        return t;
    }

    if (subcommand == "phase") {
        const PhaseRecord rec = make_phase_record(p1.momentum(), p2.momentum(), cfg.t, cfg.t_ref,
                                                  cfg.zeta, cfg.kappa);
        t.columns = {"kernel", "two_particle_coefficient", "log_factor", "zeta", "kappa",
                     "consistency_residual"};
        t.add_row({rec.kernel, rec.two_particle_coefficient, rec.log_factor, rec.zeta, rec.kappa,
                   kernel_consistency_residual(p1.momentum(), p2.momentum())});
        return t;
    }

    if (subcommand == "soft") {
        const SoftFactorBreakdown b = soft_breakdown(p1, p2, cfg.dv1, cfg.dv2, quad);
        t.columns = {"lambda", "c_D", "c_C_cross", "c_C_self_1", "c_C_self_2", "c_G_1", "c_G_2",
                     "c_F", "D", "C", "G1", "G2", "F"};
        for (double lam : cfg.lambda_list) {
            const SoftExponents ex = exponent_at(b, Regulators(lam, cfg.delta), cfg.e2);
            t.add_row({lam, b.c_D, b.c_C_cross, b.c_C_self_1, b.c_C_self_2, b.c_G_1, b.c_G_2,
                       b.c_F, ex.D, ex.C, ex.G1, ex.G2, ex.F});
        }
        return t;
    }

    if (subcommand == "scan") {
        t.columns = {"lambda", "expD", "expC", "expF"};
        for (const ScanRow& r : regulator_scan(p1, p2, cfg.dv1, cfg.dv2, quad, cfg.lambda_list,
                                               cfg.delta, cfg.e2, opts.workers))
            t.add_row({r.lambda, r.exp_D, r.exp_C, r.exp_F});
        return t;
    }

    if (subcommand == "cancel") {
        Vec3 dv1 = cfg.dv1;
        if (opts.offshell != 0.0) {
            const double speed = norm3(cfg.v1);
            if (speed == 0.0)
                throw std::invalid_argument("cancel: --offshell needs a moving particle 1");
            dv1 = scale3(cfg.v1, (speed - opts.offshell) / speed);
        }
        const SoftFactorBreakdown b = soft_breakdown(p1, p2, dv1, cfg.dv2, quad);
        t.columns = {"offshell", "c_D", "c_F", "max_pointwise_residual"};
        t.add_row({opts.offshell, b.c_D, b.c_F,
                   max_pointwise_cancellation_residual(p1, p2, quad)});
        return t;
    }

    if (subcommand == "cloud") {
        const CloudSpec spec({p1, p2}, cfg.t, cfg.e2);
        const double coeff = cloud_angular_coefficient(spec, quad);
        t.columns = {"lambda", "angular_coefficient", "n_expected", "vacuum_overlap"};
        for (double lam : cfg.lambda_list) {
            const double n = expected_photon_number(spec, Regulators(lam, cfg.delta), quad);
            t.add_row({lam, coeff, n, vacuum_overlap(n)});
        }
        return t;
    }

    if (subcommand == "fock") {
        const FockState st = fock_displacement_sim(cfg.alphas, cfg.n_max);
        double total_occ = 0.0;
        for (double n : st.mean_occupation) total_occ += n;
        t.columns = {"norm", "vacuum_overlap", "total_mean_occupation", "truncation_leakage"};
        t.add_row({st.norm, st.vacuum_overlap, total_occ, st.truncation_leakage});
        return t;
    }

    if (subcommand == "entangle") {
        const SoftFactorBreakdown b = soft_breakdown(p1, p2, cfg.dv1, cfg.dv2, quad);
        const SoftExponents ex =
            exponent_at(b, Regulators(cfg.lambda_list.front(), cfg.delta), cfg.e2);

        SpinAmplitude amp = detail::state_from_config(cfg);
        amp.phi /= std::sqrt(amp.norm_squared());  // bare state normalized to one

        const DensityMatrix bare = density_from_amplitude(amp, 0.0);
        const DensityMatrix dressed = density_from_amplitude(amp, ex.F);
        const DensityMatrix reduced = reduce_particle1(bare);
        const double s_paper = entropy_trace(reduced, EntropyConvention::Paper);
        const double s_standard = entropy_trace(reduced, EntropyConvention::Standard);

        // dressed-normalized reading: Tr rho^d = 1, so Tr rho = e^{-2F}
        const double c = std::exp(-2.0 * ex.F);
        const DensityMatrix bare_scaled(Eigen::MatrixXcd(c * reduced.entries));
        const double s_scaled = entropy_trace(bare_scaled, EntropyConvention::Paper);

        t.columns = {"F", "trace_rho", "trace_rho_d", "S_paper", "S_standard",
                     "identity_residual", "S_d_bare_normalized", "S_d_dressed_normalized",
                     "normalized_entanglement"};
        t.add_row({ex.F, bare.trace, dressed.trace, s_paper, s_standard,
                   dressed_entropy_identity_check(reduced, ex.F),
                   dressed_entropy(s_paper, ex.F, bare.trace, NormalizationMode::BareNormalized),
                   dressed_entropy(s_scaled, ex.F, c, NormalizationMode::DressedNormalized),
                   normalized_entanglement(bare, ex.F)});
        return t;
    }

    throw std::invalid_argument("unknown subcommand '" + subcommand + "'");
}

}  // namespace softdress
