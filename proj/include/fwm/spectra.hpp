#ifndef FWM_SPECTRA_HPP
#define FWM_SPECTRA_HPP

#include <vector>

#include "fwm/propagation.hpp"
#include "fwm/spectrum.hpp"

namespace fwm {

struct SpectraOptions {
    int nodes = kZNodes;
    bool langevin = true;
};

// Everything a spectrum needs at one analysis frequency.
struct SpectralInputs {
    TwoModeTransfer t;        // at +omega, with the -omega partner
    Eigen::Matrix2cd t0;      // transfer at omega = 0 (mean fields)
    IntegratedDiffusion d;
};

struct SpectralPoint {
    double omega = 0;
    double gain_a = 0, gain_b = 0;
    double s_nminus = 0, s_phiplus = 0, insep = 0, s_na = 0;
};

double probe_intensity_noise(const SpectralInputs& in);
double probe_phase_noise(const SpectralInputs& in);
double intensity_difference_noise(const SpectralInputs& in);
double phase_sum_noise(const SpectralInputs& in);
double inseparability(const SpectralInputs& in);
SpectralPoint evaluate(const SpectralInputs& in);

SpectralInputs spectral_inputs(const MediumParams& mp, double omega,
                               const SpectraOptions& opt = {});

double probe_intensity_noise(const MediumParams& mp, double omega, const SpectraOptions& opt = {});
double probe_phase_noise(const MediumParams& mp, double omega, const SpectraOptions& opt = {});
double intensity_difference_noise(const MediumParams& mp, double omega,
                                  const SpectraOptions& opt = {});
double phase_sum_noise(const MediumParams& mp, double omega, const SpectraOptions& opt = {});
double inseparability(const MediumParams& mp, double omega, const SpectraOptions& opt = {});
SpectralPoint evaluate(const MediumParams& mp, double omega, const SpectraOptions& opt = {});

// Bogoliubov transfer of an ideal amplifier of gain G (real, phases zero).
Eigen::Matrix2cd ideal_amplifier_abcd(double G);
SpectralInputs ideal_amplifier_inputs(double G, double omega = 0);

double to_dB(double s);

// Symmetric grid of 2n+1 points, -wmax .. wmax.
std::vector<double> symmetric_grid(double wmax, int n);

} // namespace fwm

#endif
