#include "fwm/reference.hpp"

namespace fwm {

void SliceChainParams::validate() const
{
    if (!(slice_gain >= 1)) throw domain_error("SliceChainParams: slice_gain must be >= 1");
    if (!(slice_transmission > 0 && slice_transmission <= 1))
        throw domain_error("SliceChainParams: slice_transmission must be in (0, 1]");
    if (n_slices < 1) throw domain_error("SliceChainParams: n_slices must be >= 1");
}

double ideal_pia_noise(double G)
{
    if (!(G >= 1)) throw domain_error("ideal_pia_noise: G must be >= 1");
    return 1.0 / (2 * G - 1);
}

PiaMeans ideal_pia_means(double G, double n_in)
{
    if (!(G >= 1)) throw domain_error("ideal_pia_means: G must be >= 1");
    if (n_in < 0) throw domain_error("ideal_pia_means: n_in must be >= 0");
    return {G * n_in, (G - 1) * n_in, n_in};
}

ChainResult sliced_amp_loss(const SliceChainParams& p)
{
    p.validate();
    const double g = p.slice_gain, t = p.slice_transmission;
    const double c = std::sqrt(g * (g - 1));
    // symmetric-order quadrature correlations, coherent input
    double xaa = 1, xbb = 1, xab = 0;
    // mean fields, real with a real seed
    double a = 1, b = 0;
    for (int i = 0; i < p.n_slices; ++i) {
        const double naa = g * t * xaa + (g - 1) * t * xbb + 2 * t * c * xab + (1 - t);
        const double nbb = (g - 1) * xaa + g * xbb + 2 * c * xab;
        const double nab = std::sqrt(t) * (c * (xaa + xbb) + (2 * g - 1) * xab);
        xaa = naa; xbb = nbb; xab = nab;
        const double na = std::sqrt(t) * (std::sqrt(g) * a + std::sqrt(g - 1) * b);
        const double nb = std::sqrt(g) * b + std::sqrt(g - 1) * a;
        a = na; b = nb;
    }
    ChainResult r;
    r.gain_a = a * a;
    r.gain_b = b * b;
    r.s_nminus = (r.gain_a * xaa + r.gain_b * xbb - 2 * std::sqrt(r.gain_a * r.gain_b) * xab)
                 / (r.gain_a + r.gain_b);
    return r;
}

SliceChainParams chain_for_totals(double G_tot, double T_tot, int n_slices)
{
    if (!(G_tot >= 1)) throw domain_error("chain_for_totals: G_tot must be >= 1");
    if (!(T_tot > 0 && T_tot <= 1)) throw domain_error("chain_for_totals: T_tot in (0, 1]");
    if (n_slices < 1) throw domain_error("chain_for_totals: n_slices must be >= 1");
    const double r = std::acosh(std::sqrt(G_tot)) / n_slices;
    const double ch = std::cosh(r);
    return {ch * ch, std::pow(T_tot, 1.0 / n_slices), n_slices};
}

double psa_gain(double G, double theta)
{
    if (!(G >= 1)) throw domain_error("psa_gain: G must be >= 1");
    return 2 * G - 1 + 2 * std::sqrt(G * (G - 1)) * std::cos(theta);
}

double psa_noise(double G, double theta, double Theta)
{
    const double den = psa_gain(G, theta);
    if (!(den > 0)) throw pole_error("psa_noise: vanishing PSA gain", theta);
    return psa_gain(G, Theta) / den;
}

Eigen::Matrix2cd nlo_pia_transfer(double eta_mag, double L, double eta_arg)
{
    if (eta_mag < 0) throw domain_error("nlo_pia_transfer: |eta| must be >= 0");
    const double x = eta_mag * L;
    const cd I(0, 1);
    const cd ph = std::exp(I * eta_arg);
    Eigen::Matrix2cd m;
    m << std::cosh(x), I * ph * std::sinh(x),
         -I * std::conj(ph) * std::sinh(x), std::cosh(x);
    return m;
}

PsaField nlo_psa_field(double kappa, cd eta, double L)
{
    const double e2 = std::norm(eta);
    if (kappa * kappa < e2) throw domain_error("nlo_psa_field: need kappa^2 >= |eta|^2");
    const double dp = std::sqrt(kappa * kappa - e2);
    const cd I(0, 1);
    PsaField f;
    if (dp == 0) {
        // limit sin(dp L)/dp -> L
        f.c1 = 1.0 + I * kappa * L;
        f.c2 = I * eta * L;
        f.gain = 1 + e2 * L * L;
        return f;
    }
    const double s = std::sin(dp * L);
    f.c1 = std::cos(dp * L) + I * (kappa / dp) * s;
    f.c2 = I * (eta / dp) * s;
    f.gain = 1 + e2 / (dp * dp) * s * s;
    return f;
}

double detection_loss(double S, double eta_T)
{
    if (!(eta_T >= 0 && eta_T <= 1)) throw domain_error("detection_loss: eta in [0, 1]");
    return eta_T * S + (1 - eta_T);
}

double unbalanced_loss(double Sa, double Sb, double cross, double eta_prime)
{
    if (!(eta_prime >= 0 && eta_prime <= 1))
        throw domain_error("unbalanced_loss: eta' in [0, 1]");
    const double e = eta_prime;
    return (e * e * Sa + Sb - 2 * e * cross + e * (1 - e)) / (1 + e);
}

} // namespace fwm
