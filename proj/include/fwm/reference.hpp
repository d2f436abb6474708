#ifndef FWM_REFERENCE_HPP
#define FWM_REFERENCE_HPP

#include "fwm/numkernel.hpp"

namespace fwm {

struct SliceChainParams {
    double slice_gain = 1;          // g >= 1
    double slice_transmission = 1;  // t in (0, 1], applied to the probe only
    int n_slices = 1;

    void validate() const;
};

struct PiaMeans {
    double n_a, n_b, n_minus;
};

struct ChainResult {
    double gain_a, gain_b, s_nminus;
};

struct PsaField {
    cd c1, c2;  // sqrt(G) e^{i phi1}, sqrt(G-1) e^{i phi2}
    double gain;
};

double ideal_pia_noise(double G);
PiaMeans ideal_pia_means(double G, double n_in);

ChainResult sliced_amp_loss(const SliceChainParams& p);
// Per-slice (g, t) giving total lossless gain G_tot and total transmission T_tot.
SliceChainParams chain_for_totals(double G_tot, double T_tot, int n_slices);

double psa_gain(double G, double theta);
double psa_noise(double G, double theta, double Theta);

Eigen::Matrix2cd nlo_pia_transfer(double eta_mag, double L, double eta_arg = 0);
PsaField nlo_psa_field(double kappa, cd eta, double L);

double detection_loss(double S, double eta_T);
double unbalanced_loss(double Sa, double Sb, double cross, double eta_prime);

} // namespace fwm

#endif
