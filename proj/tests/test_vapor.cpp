#include <doctest.h>

#include "fwm/vapor.hpp"
#include "oracles.hpp"

using namespace fwm;

namespace {

constexpr double tp = 2 * M_PI;

MediumParams hot_medium(double rabi = 300)
{
    MediumParams mp;
    mp.atom.gamma_e = tp * 5.75;
    mp.atom.omega0 = tp * 3036;
    mp.atom.gamma_g = tp * 1;
    mp.atom.rabi = tp * rabi;
    mp.atom.delta1 = tp * 700;
    mp.atom.delta2 = tp * 4;
    mp.optical_depth = 4500;
    return mp;
}

VaporParams at(double kelvin)
{
    VaporParams vp;
    vp.temperature = kelvin;
    return vp;
}

} // namespace

TEST_CASE("Maxwell-Boltzmann distribution")
{
    const VaporParams vp = at(373.15);
    const double s = velocity_sigma(vp);
    using M1 = Eigen::Matrix<double, 1, 1>;
    const M1 norm = quad_unit([&](double u) {
        // map [0,1] onto [-10 s, 10 s]
        const double v = -10 * s + 20 * s * u;
        return M1(20 * s * maxwell_pdf(vp, v));
    }, 64);
    CHECK(std::abs(norm(0) - 1) < 1e-8);
    CHECK(maxwell_pdf(vp, 123.0) == maxwell_pdf(vp, -123.0));
    CHECK(mean_speed(vp) == doctest::Approx(270).epsilon(0.02));
    CHECK(std::abs(mean_speed(vp) - 300) / 300 < 0.15);
}

TEST_CASE("mean speed and transit time scale with temperature")
{
    const VaporParams a = at(300), b = at(1200);
    CHECK(mean_speed(b) == doctest::Approx(2 * mean_speed(a)));
    CHECK(transit_time(b) == doctest::Approx(transit_time(a) / 2));
}

TEST_CASE("transit time")
{
    VaporParams vp = at(393);
    CHECK(transit_time(vp) == doctest::Approx(1.0).epsilon(0.15));
    vp.pump_waist = vp.probe_waist * (1 + 1e-9);
    CHECK(transit_time(vp) < 1e-6);
    VaporParams heavy = at(393);
    heavy.atomic_mass *= 4;  // halves the mean speed
    CHECK(transit_time(heavy) == doctest::Approx(2 * transit_time(at(393))));
    VaporParams bad = at(393);
    bad.pump_waist = bad.probe_waist;
    CHECK_THROWS_AS(transit_time(bad), domain_error);
}

TEST_CASE("cold limit of the velocity average")
{
    const MediumParams mp = hot_medium();
    const VaporParams cold = at(1e-12);
    for (double w : {0.0, tp * 1.0}) {
        const Eigen::Matrix2cd a = doppler_generator(mp, cold, w);
        const Eigen::Matrix2cd b = generator(mp, w);
        CHECK(oracle::max_abs(a - b) < 1e-10 * std::max(1.0, oracle::max_abs(b)));
    }
    CHECK_THROWS_AS(doppler_generator(mp, cold, 0, 8), config_error);
}

TEST_CASE("velocity average is symmetric under v -> -v")
{
    // average over +v and over -v nodes separately must agree since the
    // node set is symmetric; check by mirroring the detuning shift sign
    const MediumParams mp = hot_medium();
    const VaporParams vp = at(393);
    const double kk = wavenumber(vp) * 1e-6;
    auto shifted = [&](double sign) {
        return quad_gauss_hermite([&](double v) {
            MediumParams m = mp;
            m.atom.delta1 += sign * kk * v;
            return generator(m, 0.0);
        }, kVelocityOrder, velocity_sigma(vp));
    };
    CHECK(oracle::max_abs(shifted(1) - shifted(-1)) < 1e-10 * oracle::max_abs(shifted(1)));
    CHECK(oracle::max_abs(shifted(1) - doppler_generator(mp, vp, 0.0)) == 0);
}

TEST_CASE("velocity average converges in quadrature order")
{
    const MediumParams mp = hot_medium(400);
    const VaporParams vp = at(393);
    const Eigen::Matrix2cd a = expm(doppler_generator(mp, vp, 0.0, kVelocityOrder));
    const Eigen::Matrix2cd b = expm(doppler_generator(mp, vp, 0.0, 2 * kVelocityOrder));
    CHECK(oracle::max_abs(a - b) < 1e-6);
}

TEST_CASE("hot-minus-cold gain difference changes sign across one-photon detuning")
{
    const VaporParams vp = at(393);
    int changes = 0;
    double last = 0;
    for (int i = 0; i <= 30; ++i) {
        MediumParams mp = hot_medium(300);
        mp.atom.delta1 = tp * (500 + 20 * i);
        const double cold = std::norm(expm(generator(mp, 0.0))(0, 0));
        const double hot = std::norm(expm(doppler_generator(mp, vp, 0.0))(0, 0));
        const double diff = hot - cold;
        if (i > 0 && diff * last < 0) ++changes;
        last = diff;
    }
    CHECK(changes >= 1);
}

TEST_CASE("slices commute without pump")
{
    MediumParams mp = hot_medium();
    mp.atom.rabi = 0;
    const SliceResult r = slice_consistency(mp, at(393), 0.0, 200, 1);
    CHECK(r.deviation < 1e-14);
    CHECK(r.reshuffle_deviation < 1e-14);
    CHECK_THROWS_AS(slice_consistency(mp, at(393), 0.0, 50, 1), domain_error);
}

TEST_CASE("slice check is reproducible for a fixed seed")
{
    const MediumParams mp = hot_medium();
    const SliceResult a = slice_consistency(mp, at(393), 0.0, 300, 99);
    const SliceResult b = slice_consistency(mp, at(393), 0.0, 300, 99);
    CHECK(a.deviation == b.deviation);
    CHECK(a.reshuffle_deviation == b.reshuffle_deviation);
}

TEST_CASE("residual transmission")
{
    MediumParams mp = hot_medium();
    VaporParams vp = at(393);
    const ResidualTransmission r = residual_transmission(mp, vp);
    CHECK(r.prepared_fraction > 0);
    CHECK(r.prepared_fraction < 1);
    CHECK(r.front_loss_factor > 0);
    CHECK(r.front_loss_factor <= 1);
    const ResidualTransmission none = residual_transmission(mp, vp, 0.0);
    CHECK(none.front_loss_factor == 1.0);

    MeanFieldOut g{2.0, 1.5, 0.1, 0.2};
    const MeanFieldOut h = apply_front_loss(g, 0.8);
    CHECK(h.gain_a / g.gain_a == doctest::Approx(h.gain_b / g.gain_b));
    CHECK(h.gain_a == doctest::Approx(1.6));
    CHECK(h.phase_a == g.phase_a);
}

TEST_CASE("vapor pressure and density")
{
    const double torr = vapor_pressure_atm(298.15) * kAtmToTorr;
    CHECK(std::abs(torr - 3.92e-7) / 3.92e-7 < 0.25);
    CHECK(density_correction(273.15 + 120) == doctest::Approx(0.075).epsilon(1e-12));
    CHECK(vapor_density(at(300)).in_range);
    CHECK_FALSE(vapor_density(at(450)).in_range);
    CHECK(vapor_density(at(450)).density > 0);
    double last = 0;
    for (int i = 0; i <= 14; ++i) {
        const double od = optical_depth(at(290 + 10 * i));
        CHECK(od > last);
        last = od;
    }
}

TEST_CASE("Doppler absorption profile")
{
    const VaporParams vp = at(393);
    CHECK(doppler_absorption(vp, 0, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(doppler_absorption(vp, 1e9, 2.0) == 1.0);
    CHECK_THROWS_AS(doppler_absorption(vp, 0, -1), domain_error);

    // half maximum of the absorption coefficient -ln T
    const double s = doppler_sigma(vp), od = 1.5;
    auto alpha = [&](double nu) { return -std::log(doppler_absorption(vp, nu, od)); };
    double lo = 0, hi = 10 * s;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (alpha(mid) > od / 2 ? lo : hi) = mid;
    }
    CHECK(std::abs(2 * lo - std::sqrt(8 * std::log(2.0)) * s) < 1e-6 * s);
}
