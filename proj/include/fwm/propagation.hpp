#ifndef FWM_PROPAGATION_HPP
#define FWM_PROPAGATION_HPP

#include "fwm/atom.hpp"

namespace fwm {

struct MediumParams {
    AtomParams atom;
    double optical_depth = 0;   // alpha L
    double langevin_scale = 1;

    void validate() const;
};

struct TwoModeTransfer {
    double freq = 0;
    Eigen::Matrix2cd abcd;          // (A B; C D) at +freq
    Eigen::Matrix2cd abcd_adjoint;  // entrywise conjugate of the transfer at -freq
};

struct IntegratedDiffusion {
    double d_aa = 0, d_aa_rev = 0, d_bb = 0, d_bb_rev = 0;
};

struct MeanFieldOut {
    double gain_a = 1, gain_b = 0, phase_a = 0, phase_b = 0;
};

// Pieces shared by the generator and the Langevin integrals.
struct GeneratorParts {
    Eigen::Matrix2cd g;  // full exponent over z in [0, 1]
    Matrix24cd k;        // T * M1'(omega)^-1
};

GeneratorParts generator_parts(const MediumParams& mp, const SteadyState& ss, double omega);
Eigen::Matrix2cd generator(const MediumParams& mp, double omega);

TwoModeTransfer transfer_from_generators(double omega, const Eigen::Matrix2cd& g_pos,
                                         const Eigen::Matrix2cd& g_neg);
TwoModeTransfer transfer(const MediumParams& mp, double omega);

MeanFieldOut gains_from_transfer(const Eigen::Matrix2cd& t0);
MeanFieldOut gains(const MediumParams& mp);

/*
 * z-integrated Langevin coefficients in symmetric order, referred to the
 * medium input. Multiplied by mp.langevin_scale.
 */
IntegratedDiffusion integrated_diffusion(const MediumParams& mp, double omega,
                                         int nodes = kZNodes);

/*
 * Output-referred commutator correction
 *   (alpha L Gamma / 4) * Int_0^1 Z (d1 - d2^T) Z^H dz,  Z = exp(G (1 - z)) K
 * without the Langevin scale. Diagonal (a, b) entries.
 */
Eigen::Vector2d commutator_diffusion(const MediumParams& mp, double omega,
                                     int nodes = kZNodes);

// |A|^2 - |B|^2 + s * dD - 1 at omega, using mp.langevin_scale as s.
double commutator_residual(const MediumParams& mp, double omega, int nodes = kZNodes);

// Scale s solving |A|^2 - |B|^2 + s c = 1 for a given transfer; 1 if already unitary.
double calibration_scale(const Eigen::Matrix2cd& t, double c);

inline constexpr double kCalibrationOmega = 2 * 3.14159265358979323846;

double calibrate_langevin_scale(const MediumParams& mp, double omega_ref = kCalibrationOmega,
                                int nodes = kZNodes);

} // namespace fwm

#endif
