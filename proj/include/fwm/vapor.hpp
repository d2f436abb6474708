#ifndef FWM_VAPOR_HPP
#define FWM_VAPOR_HPP

#include <cstdint>
#include <vector>

#include "fwm/propagation.hpp"

namespace fwm {

inline constexpr double kBoltzmann = 1.380649e-23;      // J/K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kRb85Mass = 84.911789738 * kAtomicMassUnit;
inline constexpr double kAtmToTorr = 760.0;
inline constexpr double kAtmToPa = 101325.0;

// SI units throughout except where a name says otherwise.
struct VaporParams {
    double temperature = 393.15;
    double atomic_mass = kRb85Mass;
    double wavelength = 795e-9;
    double pump_waist = 600e-6;
    double probe_waist = 300e-6;
    double cell_length = 12.5e-3;
    double cross_section = 1e-13;

    void validate() const;
};

double velocity_sigma(const VaporParams& vp);  // m/s
double mean_speed(const VaporParams& vp);      // sqrt(2 kB T / m), m/s
double wavenumber(const VaporParams& vp);      // 1/m
double doppler_sigma(const VaporParams& vp);   // rad/us
double maxwell_pdf(const VaporParams& vp, double v);

struct doppler_pole_error : pole_error {
    std::vector<double> velocities;  // nodes (m/s) that hit a pole
    doppler_pole_error(const std::string& what, double w, std::vector<double> v)
        : pole_error(what, w), velocities(std::move(v)) {}
};

// Velocity-averaged exponent, Delta -> Delta + k v.
Eigen::Matrix2cd doppler_generator(const MediumParams& mp, const VaporParams& vp, double omega,
                                   int order = kVelocityOrder);
TwoModeTransfer doppler_transfer(const MediumParams& mp, const VaporParams& vp, double omega,
                                 int order = kVelocityOrder);

struct SliceResult {
    double deviation = 0;            // ordered product vs exp of summed exponents
    double reshuffle_deviation = 0;  // shuffled product vs exp of summed exponents
};

SliceResult slice_consistency(const MediumParams& mp, const VaporParams& vp, double omega,
                              int n_slices, std::uint64_t seed);

double transit_time(const VaporParams& vp);  // us

struct ResidualTransmission {
    double prepared_fraction = 1;
    double front_loss_factor = 1;
};

// resonant_od_fraction scales u * alpha L, the optical depth left to unprepared atoms.
ResidualTransmission residual_transmission(const MediumParams& mp, const VaporParams& vp,
                                           double resonant_od_fraction = 1.0);

// Both gains take the same factor.
MeanFieldOut apply_front_loss(const MeanFieldOut& m, double factor);

double vapor_pressure_atm(double temperature);
double density_correction(double temperature);  // x(T)

struct VaporDensity {
    double density = 0;  // atoms / m^3
    bool in_range = true;
};
VaporDensity vapor_density(const VaporParams& vp);
double optical_depth(const VaporParams& vp);  // n sigma L

double doppler_absorption(const VaporParams& vp, double detuning, double peak_od);

} // namespace fwm

#endif
