#include "fwm/atom.hpp"

#include <algorithm>
#include <limits>

namespace fwm {

void AtomParams::validate() const
{
    const double v[] = {gamma_e, gamma_g, omega0, delta1, delta2, rabi};
    for (double x : v)
        if (!std::isfinite(x))
            throw domain_error("AtomParams: non-finite entry");
    if (!(gamma_e > 0))
        throw domain_error("AtomParams: gamma_e must be > 0");
    if (gamma_g < 0)
        throw domain_error("AtomParams: gamma_g must be >= 0");
    if (rabi < 0)
        throw domain_error("AtomParams: rabi must be >= 0");
}

Vector7cd SteadyState::as_vector() const
{
    Vector7cd v;
    v << pops[0], pops[1], pops[2], s31, s13, s42, s24;
    return v;
}

Matrix7cd build_drift_m0(const AtomParams& p)
{
    const cd I(0, 1);
    const double G = p.gamma_e, O = p.rabi, D = p.delta1, w0 = p.omega0;
    const double h = O / 2;
    Matrix7cd m;
    m << I*G/2.0, I*G/2.0, 0,     -h,          h,           0,                 0,
         I*G/2.0, I*G/2.0, 0,      0,          0,          -h,                 h,
         0,     0,     I*G,    h,         -h,           0,                 0,
        -h,     0,     h,     -D + I*G/2.0,  0,           0,                 0,
         h,     0,    -h,      0,          D + I*G/2.0,   0,                 0,
        -h,    -O,    -h,      0,          0,          -D - w0 + I*G/2.0,    0,
         h,     O,     h,      0,          0,           0,                 D + w0 + I*G/2.0;
    return m;
}

Vector7cd drift_source(const AtomParams& p)
{
    const cd I(0, 1);
    Vector7cd s;
    s << I*p.gamma_e, I*p.gamma_e, 0, 0, 0, -p.rabi, p.rabi;
    return 0.5 * s;
}

SteadyState steady_state(const AtomParams& p)
{
    p.validate();
    const double G = p.gamma_e, O = p.rabi, D = p.delta1, w0 = p.omega0;
    const double Dw = D + w0;
    const double den = G*G + 2*(O*O + D*D + Dw*Dw);
    const cd I(0, 1);

    SteadyState ss;
    ss.pops[0] = (G*G + O*O + 4*D*D) / (2*den);
    ss.pops[1] = (G*G + O*O + 4*Dw*Dw) / (2*den);
    ss.pops[2] = O*O / (2*den);
    ss.pops[3] = 1.0 - (ss.pops[0] + ss.pops[1] + ss.pops[2]);
    ss.s31 = -O * (2*D + I*G) / (2*den);
    ss.s13 = std::conj(ss.s31);
    ss.s42 = -O * (2*Dw + I*G) / (2*den);
    ss.s24 = std::conj(ss.s42);

    // cross-check against the linear system M0 x = S0 through its residual,
    // which stays meaningful when M0 is badly conditioned or singular
    const Matrix7cd m0 = build_drift_m0(p);
    const Vector7cd res = m0 * ss.as_vector() - drift_source(p);
    const double scale = std::max(1.0, m0.cwiseAbs().rowwise().sum().maxCoeff());
    const double dev = res.cwiseAbs().maxCoeff() / scale;
    if (!std::isfinite(dev) || dev > kSteadyStateCheckTol)
        throw numeric_error("steady_state: closed form fails the linear system, residual "
                            + std::to_string(dev));
    return ss;
}

Eigen::Matrix4cd build_m1(const AtomParams& p)
{
    const cd I(0, 1);
    const double G = p.gamma_e, g = p.gamma_g, D = p.delta1, d = p.delta2, w0 = p.omega0;
    const double h = p.rabi / 2;
    Eigen::Matrix4cd m;
    m << I*G/2.0 + (D - d), 0,                     -h,           h,
         0,               I*G/2.0 - (D + d + w0),   h,          -h,
        -h,               h,                      I*G - (d + w0), 0,
         h,              -h,                      0,           I*g - d;
    return m;
}

CoherenceSystem build_coherence_system(const AtomParams& p, const SteadyState& ss,
                                       double omega)
{
    CoherenceSystem cs;
    cs.m1prime = build_m1(p) + omega * Eigen::Matrix4cd::Identity();
    cs.s1 << ss.pops[2] - ss.pops[1], 0,
             0,                       ss.pops[0] - ss.pops[3],
             -ss.s42,                 ss.s13,
             ss.s31,                  -ss.s24;
    cs.t << 1, 0, 0, 0,
            0, -1, 0, 0;
    return cs;
}

DiffusionSet diffusion_set(const AtomParams& p)
{
    p.validate();
    const cd I(0, 1);
    const double G = p.gamma_e, g = p.gamma_g, O = p.rabi, D = p.delta1, w0 = p.omega0;
    const double Dw = D + w0;
    const double tau = 2*G*G + 4*O*O + 4*w0*w0 + 8*D*D + 8*D*w0;
    if (!(tau > 0))
        throw degenerate_model_error("diffusion_set: tau <= 0");

    DiffusionSet ds;
    ds.d1.setZero();
    ds.d1(0, 0) = G * (G*G + 4*D*D + 2*O*O + 8*D*w0 + 4*w0*w0);
    ds.d1(0, 2) = I*G*O * (G + 2.0*I*Dw);
    ds.d1(2, 0) = -I*G*O * (G - 2.0*I*Dw);
    ds.d1(1, 3) = -I*g*O * (G - 2.0*I*Dw);
    ds.d1(3, 1) = I*g*O * (G + 2.0*I*Dw);
    ds.d1(2, 2) = G*O*O;
    ds.d1(3, 3) = G*O*O + 2*g * (G*G + 4*D*D + O*O + 8*D*w0 + 4*w0*w0);

    ds.d2.setZero();
    ds.d2(0, 3) = -I*g * (G - 2.0*I*D) * O;
    ds.d2(3, 0) = I*g * (G + 2.0*I*D) * O;
    ds.d2(1, 1) = G * (G*G + 4*D*D + 2*O*O);
    ds.d2(1, 2) = I*G * (G + 2.0*I*D) * O;
    ds.d2(2, 1) = -I*G * (G - 2.0*I*D) * O;
    ds.d2(2, 2) = G*O*O;
    ds.d2(3, 3) = G*O*O + 2*g * (G*G + 4*D*D + O*O);

    ds.d1 /= 2*tau;
    ds.d2 /= 2*tau;
    ds.dsym = (ds.d1 + ds.d2) / 2.0;
    return ds;
}

Eigen::VectorXd relaxation_rates(const AtomParams& p)
{
    p.validate();
    const Eigen::VectorXcd ev = eigvals(Matrix7cd(cd(0, 1) * build_drift_m0(p)));
    return -ev.real();
}

double slowest_relaxation(const AtomParams& p)
{
    const Eigen::VectorXd r = relaxation_rates(p);
    const double rmax = r.cwiseAbs().maxCoeff();
    if (r.minCoeff() < -1e-10 * std::max(rmax, 1.0))
        throw degenerate_model_error("slowest_relaxation: unstable dynamics");
    double slow = std::numeric_limits<double>::infinity();
    for (double x : r)
        if (std::abs(x) > kZeroRateFraction * rmax)
            slow = std::min(slow, std::abs(x));
    if (!std::isfinite(slow))
        throw degenerate_model_error("slowest_relaxation: no decaying mode");
    return 1.0 / slow;
}

double preparation_probability(const AtomParams& p, double t)
{
    if (t < 0)
        throw domain_error("preparation_probability: t < 0");
    return -std::expm1(-t / slowest_relaxation(p));
}

} // namespace fwm
