#include "fwm/spectra.hpp"

namespace fwm {

namespace {

struct Entries {
    cd A, B, C, D;      // at +omega
    cd Am, Bm, Cm, Dm;  // at -omega
    cd A0, C0;
};

Entries entries(const SpectralInputs& in)
{
    Entries e;
    e.A = in.t.abcd(0, 0); e.B = in.t.abcd(0, 1);
    e.C = in.t.abcd(1, 0); e.D = in.t.abcd(1, 1);
    const Eigen::Matrix2cd neg = in.t.abcd_adjoint.conjugate();
    e.Am = neg(0, 0); e.Bm = neg(0, 1);
    e.Cm = neg(1, 0); e.Dm = neg(1, 1);
    e.A0 = in.t0(0, 0);
    e.C0 = in.t0(1, 0);
    return e;
}

double two_mode_norm(const Entries& e)
{
    const double n = std::norm(e.A0) + std::norm(e.C0);
    if (n < 1e-30)
        throw normalization_error("two-mode spectrum: no output mean field");
    return 2 * n;
}

} // namespace

double probe_intensity_noise(const SpectralInputs& in)
{
    const Entries e = entries(in);
    if (std::norm(e.A0) == 0)
        throw normalization_error("probe noise: Ga = 0");
    const auto& d = in.d;
    return 0.5 * (std::norm(e.A) * (1 + d.d_aa) + std::norm(e.Am) * (1 + d.d_aa_rev)
                  + std::norm(e.B) * (1 + d.d_bb) + std::norm(e.Bm) * (1 + d.d_bb_rev));
}

// Same normalized expression as the intensity noise.
double probe_phase_noise(const SpectralInputs& in) { return probe_intensity_noise(in); }

double intensity_difference_noise(const SpectralInputs& in)
{
    const Entries e = entries(in);
    const auto& d = in.d;
    const cd A0s = std::conj(e.A0), C0s = std::conj(e.C0);
    const double num =
        std::norm(A0s * e.A - C0s * e.C) * (1 + d.d_aa)
        + std::norm(e.A0 * std::conj(e.Am) - e.C0 * std::conj(e.Cm)) * (1 + d.d_aa_rev)
        + std::norm(A0s * e.B - C0s * e.D) * (1 + d.d_bb)
        + std::norm(e.A0 * std::conj(e.Bm) - e.C0 * std::conj(e.Dm)) * (1 + d.d_bb_rev);
    return num / two_mode_norm(e);
}

double phase_sum_noise(const SpectralInputs& in)
{
    const Entries e = entries(in);
    const auto& d = in.d;
    const double num = std::norm(e.A0 * e.C - e.C0 * e.A) * (1 + d.d_aa)
                       + std::norm(e.A0 * e.Cm - e.C0 * e.Am) * (1 + d.d_aa_rev)
                       + std::norm(e.A0 * e.D - e.C0 * e.B) * (1 + d.d_bb)
                       + std::norm(e.A0 * e.Dm - e.C0 * e.Bm) * (1 + d.d_bb_rev);
    return num / two_mode_norm(e);
}

double inseparability(const SpectralInputs& in)
{
    return 0.5 * (intensity_difference_noise(in) + phase_sum_noise(in));
}

SpectralPoint evaluate(const SpectralInputs& in)
{
    SpectralPoint p;
    p.omega = in.t.freq;
    const MeanFieldOut mf = gains_from_transfer(in.t0);
    p.gain_a = mf.gain_a;
    p.gain_b = mf.gain_b;
    p.s_nminus = intensity_difference_noise(in);
    p.s_phiplus = phase_sum_noise(in);
    p.insep = 0.5 * (p.s_nminus + p.s_phiplus);
    p.s_na = probe_intensity_noise(in);
    return p;
}

SpectralInputs spectral_inputs(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    SpectralInputs in;
    in.t = transfer(mp, omega);
    in.t0 = expm(generator(mp, 0.0));
    if (opt.langevin)
        in.d = integrated_diffusion(mp, omega, opt.nodes);
    return in;
}

double probe_intensity_noise(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return probe_intensity_noise(spectral_inputs(mp, omega, opt));
}

double probe_phase_noise(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return probe_phase_noise(spectral_inputs(mp, omega, opt));
}

double intensity_difference_noise(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return intensity_difference_noise(spectral_inputs(mp, omega, opt));
}

double phase_sum_noise(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return phase_sum_noise(spectral_inputs(mp, omega, opt));
}

double inseparability(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return inseparability(spectral_inputs(mp, omega, opt));
}

SpectralPoint evaluate(const MediumParams& mp, double omega, const SpectraOptions& opt)
{
    return evaluate(spectral_inputs(mp, omega, opt));
}

Eigen::Matrix2cd ideal_amplifier_abcd(double G)
{
    if (!(G >= 1))
        throw domain_error("ideal_amplifier_abcd: G must be >= 1");
    // a_out = sqrt(G) a + sqrt(G-1) b^dag ; the b-row is written for b^dag
    Eigen::Matrix2cd m;
    m << std::sqrt(G), std::sqrt(G - 1),
         std::sqrt(G - 1), std::sqrt(G);
    return m;
}

SpectralInputs ideal_amplifier_inputs(double G, double omega)
{
    SpectralInputs in;
    in.t.freq = omega;
    in.t.abcd = ideal_amplifier_abcd(G);
    in.t.abcd_adjoint = in.t.abcd.conjugate();
    in.t0 = in.t.abcd;
    return in;
}

double to_dB(double s)
{
    if (!(s > 0))
        throw domain_error("to_dB: value must be > 0");
    return 10 * std::log10(s);
}

std::vector<double> symmetric_grid(double wmax, int n)
{
    std::vector<double> g(2 * n + 1);
    for (int i = -n; i <= n; ++i)
        g[i + n] = n ? wmax * i / n : 0.0;
    return g;
}

} // namespace fwm
