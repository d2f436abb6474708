#ifndef FWM_EIT_HPP
#define FWM_EIT_HPP

#include <vector>

#include "fwm/numkernel.hpp"
#include "fwm/spectrum.hpp"

namespace fwm {

// Three-level Lambda system probed on one leg. Rates in rad/us.
struct LambdaParams {
    double gamma_e = 0;
    double gamma_g = 0;
    double delta1 = 0;
    double rabi_c = 0;
    double chi_scale = 1;  // stands for N d^2 / (hbar eps0)

    void validate() const;
};

cd susceptibility(const LambdaParams& lp, double delta2);

// sqrt(2 gamma / Gamma) * Omega_c
double transparency_window(const LambdaParams& lp);

// Im chi on the grid.
NoiseSpectrum absorption_spectrum(const LambdaParams& lp, const std::vector<double>& grid);

// Distance between the two strongest local maxima of Im chi on the grid,
// refined by a parabola through each peak. Returns 0 if fewer than two.
double peak_separation(const LambdaParams& lp, const std::vector<double>& grid);

} // namespace fwm

#endif
