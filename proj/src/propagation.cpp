#include "fwm/propagation.hpp"

#include <string>

namespace fwm {

void MediumParams::validate() const
{
    atom.validate();
    if (!(optical_depth >= 0))
        throw domain_error("MediumParams: optical_depth must be >= 0");
    if (!(langevin_scale > 0))
        throw domain_error("MediumParams: langevin_scale must be > 0");
}

GeneratorParts generator_parts(const MediumParams& mp, const SteadyState& ss, double omega)
{
    const CoherenceSystem cs = build_coherence_system(mp.atom, ss, omega);
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(cs.m1prime);
    const auto sv = svd.singularValues();
    if (!(sv(3) > 0) || sv(0) / sv(3) > kPoleCondition)
        throw pole_error("M1'(omega) is singular at omega = " + std::to_string(omega), omega);

    GeneratorParts gp;
    gp.k = cs.t * cs.m1prime.inverse();
    const double pref = mp.optical_depth * mp.atom.gamma_e / 4;
    gp.g = cd(0, pref) * gp.k * cs.s1;
    return gp;
}

Eigen::Matrix2cd generator(const MediumParams& mp, double omega)
{
    mp.validate();
    return generator_parts(mp, steady_state(mp.atom), omega).g;
}

TwoModeTransfer transfer_from_generators(double omega, const Eigen::Matrix2cd& g_pos,
                                         const Eigen::Matrix2cd& g_neg)
{
    TwoModeTransfer t;
    t.freq = omega;
    t.abcd = expm(g_pos);
    t.abcd_adjoint = expm(g_neg).conjugate();
    return t;
}

TwoModeTransfer transfer(const MediumParams& mp, double omega)
{
    mp.validate();
    const SteadyState ss = steady_state(mp.atom);
    return transfer_from_generators(omega, generator_parts(mp, ss, omega).g,
                                    generator_parts(mp, ss, -omega).g);
}

MeanFieldOut gains_from_transfer(const Eigen::Matrix2cd& t0)
{
    MeanFieldOut m;
    m.gain_a = std::norm(t0(0, 0));
    m.gain_b = std::norm(t0(1, 0));
    m.phase_a = std::arg(t0(0, 0));
    m.phase_b = std::arg(t0(1, 0));
    return m;
}

MeanFieldOut gains(const MediumParams& mp)
{
    return gains_from_transfer(expm(generator(mp, 0.0)));
}

namespace {

double real_diag(const Eigen::Matrix2cd& m, int i)
{
    const cd v = m(i, i);
    if (std::abs(v.imag()) > kRealCastTol * std::max(std::abs(v), 1e-300))
        throw normalization_error("diffusion coefficient has an imaginary residue");
    return v.real();
}

// (alpha L Gamma / 4) * Int_0^1 X(z) D X(z)^H dz, X = exp(-G z) K
Eigen::Matrix2cd input_referred(const MediumParams& mp, const GeneratorParts& gp,
                                const Eigen::Matrix4cd& d, int nodes)
{
    const Eigen::Matrix2cd acc = quad_unit([&](double z) {
        const Matrix24cd x = expm(Eigen::Matrix2cd(-z * gp.g)) * gp.k;
        return Eigen::Matrix2cd(x * d * x.adjoint());
    }, nodes);
    return mp.optical_depth * mp.atom.gamma_e / 4 * acc;
}

} // namespace

IntegratedDiffusion integrated_diffusion(const MediumParams& mp, double omega, int nodes)
{
    mp.validate();
    if (nodes < 8)
        throw domain_error("integrated_diffusion: nodes must be >= 8");
    IntegratedDiffusion out;
    if (mp.optical_depth == 0)
        return out;
    const SteadyState ss = steady_state(mp.atom);
    const Eigen::Matrix4cd d = diffusion_set(mp.atom).dsym;
    const Eigen::Matrix2cd np = input_referred(mp, generator_parts(mp, ss, omega), d, nodes);
    const Eigen::Matrix2cd nm =
        input_referred(mp, generator_parts(mp, ss, -omega), d, nodes).conjugate();
    const double s = mp.langevin_scale;
    out.d_aa = s * real_diag(np, 0);
    out.d_bb = s * real_diag(np, 1);
    out.d_aa_rev = s * real_diag(nm, 0);
    out.d_bb_rev = s * real_diag(nm, 1);
    return out;
}

Eigen::Vector2d commutator_diffusion(const MediumParams& mp, double omega, int nodes)
{
    mp.validate();
    if (mp.optical_depth == 0)
        return Eigen::Vector2d::Zero();
    const SteadyState ss = steady_state(mp.atom);
    const DiffusionSet ds = diffusion_set(mp.atom);
    const Eigen::Matrix4cd dd = ds.d1 - ds.d2.transpose();
    const GeneratorParts gp = generator_parts(mp, ss, omega);
    const Eigen::Matrix2cd acc = quad_unit([&](double z) {
        const Matrix24cd x = expm(Eigen::Matrix2cd((1 - z) * gp.g)) * gp.k;
        return Eigen::Matrix2cd(x * dd * x.adjoint());
    }, nodes);
    const Eigen::Matrix2cd c = mp.optical_depth * mp.atom.gamma_e / 4 * acc;
    return {real_diag(c, 0), real_diag(c, 1)};
}

double commutator_residual(const MediumParams& mp, double omega, int nodes)
{
    const Eigen::Matrix2cd t = expm(generator(mp, omega));
    const double c = commutator_diffusion(mp, omega, nodes)(0);
    return std::norm(t(0, 0)) - std::norm(t(0, 1)) + mp.langevin_scale * c - 1.0;
}

double calibration_scale(const Eigen::Matrix2cd& t, double c)
{
    const double miss = 1.0 - (std::norm(t(0, 0)) - std::norm(t(0, 1)));
    if (std::abs(miss) < 1e-14)
        return 1.0;
    if (std::abs(c) < 1e-14)
        throw calibration_error("calibrate_langevin_scale: no diffusion to restore commutator");
    const double s = miss / c;
    if (!(s > 0))
        throw calibration_error("calibrate_langevin_scale: non-positive scale "
                                + std::to_string(s));
    return s;
}

double calibrate_langevin_scale(const MediumParams& mp, double omega_ref, int nodes)
{
    const Eigen::Matrix2cd t = expm(generator(mp, omega_ref));
    const double miss = 1.0 - (std::norm(t(0, 0)) - std::norm(t(0, 1)));
    if (std::abs(miss) < 1e-14)
        return 1.0;
    return calibration_scale(t, commutator_diffusion(mp, omega_ref, nodes)(0));
}

} // namespace fwm
