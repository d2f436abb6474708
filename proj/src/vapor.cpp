#include "fwm/vapor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fwm {

void VaporParams::validate() const
{
    if (!(temperature > 0)) throw domain_error("VaporParams: temperature must be > 0");
    if (!(atomic_mass > 0)) throw domain_error("VaporParams: atomic_mass must be > 0");
    if (!(wavelength > 0)) throw domain_error("VaporParams: wavelength must be > 0");
    if (!(probe_waist > 0) || !(pump_waist > probe_waist))
        throw domain_error("VaporParams: need pump_waist > probe_waist > 0");
    if (!(cell_length > 0)) throw domain_error("VaporParams: cell_length must be > 0");
}

double velocity_sigma(const VaporParams& vp)
{
    return std::sqrt(kBoltzmann * vp.temperature / vp.atomic_mass);
}

double mean_speed(const VaporParams& vp) { return std::sqrt(2.0) * velocity_sigma(vp); }

double wavenumber(const VaporParams& vp) { return 2 * M_PI / vp.wavelength; }

// k [1/m] * v [m/s] is rad/s; 1e-6 brings it to rad/us
double doppler_sigma(const VaporParams& vp) { return wavenumber(vp) * velocity_sigma(vp) * 1e-6; }

double maxwell_pdf(const VaporParams& vp, double v)
{
    const double s = velocity_sigma(vp);
    return std::exp(-0.5 * v * v / (s * s)) / (s * std::sqrt(2 * M_PI));
}

namespace {

MediumParams shifted(const MediumParams& mp, double shift)
{
    MediumParams m = mp;
    m.atom.delta1 += shift;
    return m;
}

Eigen::Matrix2cd gen_at(const MediumParams& mp, double shift, double omega)
{
    const MediumParams m = shifted(mp, shift);
    return generator_parts(m, steady_state(m.atom), omega).g;
}

} // namespace

Eigen::Matrix2cd doppler_generator(const MediumParams& mp, const VaporParams& vp, double omega,
                                   int order)
{
    mp.validate();
    vp.validate();
    if (order < 16)
        throw config_error("doppler_generator: order must be >= 16");
    const double kk = wavenumber(vp) * 1e-6;
    std::vector<double> bad;
    const Eigen::Matrix2cd avg = quad_gauss_hermite([&](double v) -> Eigen::Matrix2cd {
        try {
            return gen_at(mp, kk * v, omega);
        } catch (const pole_error&) {
            bad.push_back(v);
            return Eigen::Matrix2cd::Zero();
        }
    }, order, velocity_sigma(vp));
    if (!bad.empty())
        throw doppler_pole_error("doppler_generator: pole at velocity nodes", omega, bad);
    return avg;
}

TwoModeTransfer doppler_transfer(const MediumParams& mp, const VaporParams& vp, double omega,
                                 int order)
{
    return transfer_from_generators(omega, doppler_generator(mp, vp, omega, order),
                                    doppler_generator(mp, vp, -omega, order));
}

SliceResult slice_consistency(const MediumParams& mp, const VaporParams& vp, double omega,
                              int n_slices, std::uint64_t seed)
{
    mp.validate();
    vp.validate();
    if (n_slices < 100)
        throw domain_error("slice_consistency: n_slices must be >= 100");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> vel(0.0, velocity_sigma(vp));
    const double kk = wavenumber(vp) * 1e-6;

    std::vector<Eigen::Matrix2cd> step(n_slices);
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (auto& s : step) {
        s = gen_at(mp, kk * vel(rng), omega) / double(n_slices);
        sum += s;
    }
    const Eigen::Matrix2cd whole = expm(sum);

    std::vector<Eigen::Matrix2cd> e(n_slices);
    std::transform(step.begin(), step.end(), e.begin(),
                   [](const Eigen::Matrix2cd& s) { return expm(s); });

    // slice 0 is at the input face, so it acts first
    Eigen::Matrix2cd prod = Eigen::Matrix2cd::Identity();
    for (const auto& x : e)
        prod = x * prod;

    std::vector<int> order(n_slices);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Eigen::Matrix2cd shuf = Eigen::Matrix2cd::Identity();
    for (int i : order)
        shuf = e[i] * shuf;

    SliceResult r;
    r.deviation = (prod - whole).cwiseAbs().maxCoeff();
    r.reshuffle_deviation = (shuf - whole).cwiseAbs().maxCoeff();
    return r;
}

double transit_time(const VaporParams& vp)
{
    if (!(vp.pump_waist > vp.probe_waist))
        throw domain_error("transit_time: pump waist must exceed probe waist");
    return (vp.pump_waist - vp.probe_waist) / mean_speed(vp) * 1e6;
}

ResidualTransmission residual_transmission(const MediumParams& mp, const VaporParams& vp,
                                           double resonant_od_fraction)
{
    mp.validate();
    ResidualTransmission r;
    r.prepared_fraction = preparation_probability(mp.atom, transit_time(vp));
    const double u = 1.0 - r.prepared_fraction;
    const double probe_detuning = mp.atom.delta1 - mp.atom.delta2;
    r.front_loss_factor =
        doppler_absorption(vp, probe_detuning, resonant_od_fraction * u * mp.optical_depth);
    return r;
}

MeanFieldOut apply_front_loss(const MeanFieldOut& m, double factor)
{
    MeanFieldOut out = m;
    out.gain_a *= factor;
    out.gain_b *= factor;
    return out;
}

// Liquid-phase Alcock form, valid roughly 312 K .. 550 K for Rb.
double vapor_pressure_atm(double temperature)
{
    return std::pow(10.0, 4.312 - 4040.0 / temperature);
}

double density_correction(double temperature)
{
    const double celsius = temperature - 273.15;
    return (20.7 - 0.11 * celsius) / 100.0;
}

VaporDensity vapor_density(const VaporParams& vp)
{
    const double T = vp.temperature;
    VaporDensity d;
    d.in_range = T >= 290.0 && T <= 430.0;
    d.density = density_correction(T) * vapor_pressure_atm(T) * kAtmToPa / (kBoltzmann * T);
    return d;
}

double optical_depth(const VaporParams& vp)
{
    return vapor_density(vp).density * vp.cross_section * vp.cell_length;
}

double doppler_absorption(const VaporParams& vp, double detuning, double peak_od)
{
    if (peak_od < 0)
        throw domain_error("doppler_absorption: peak_od must be >= 0");
    const double s = doppler_sigma(vp);
    return std::exp(-peak_od * std::exp(-0.5 * detuning * detuning / (s * s)));
}

} // namespace fwm
