#ifndef FWM_ATOM_HPP
#define FWM_ATOM_HPP

#include <array>

#include "fwm/numkernel.hpp"

namespace fwm {

using Matrix7cd = Eigen::Matrix<cd, 7, 7>;
using Vector7cd = Eigen::Matrix<cd, 7, 1>;
using Matrix42cd = Eigen::Matrix<cd, 4, 2>;
using Matrix24cd = Eigen::Matrix<cd, 2, 4>;

// Double-Lambda parameters. Every entry is an angular rate in rad/us.
struct AtomParams {
    double gamma_e = 0;  // excited-state linewidth
    double gamma_g = 0;  // ground coherence decay
    double omega0 = 0;   // hyperfine splitting
    double delta1 = 0;   // one-photon detuning
    double delta2 = 0;   // two-photon detuning
    double rabi = 0;     // pump Rabi frequency

    void validate() const;
};

// Canonical layout of the 7-vector: s11, s22, s33, s31, s13, s42, s24.
struct SteadyState {
    std::array<double, 4> pops{};  // s11, s22, s33, s44
    cd s31, s13, s42, s24;

    Vector7cd as_vector() const;
};

struct CoherenceSystem {
    Eigen::Matrix4cd m1prime;  // omega*I + M1
    Matrix42cd s1;
    Matrix24cd t;
};

struct DiffusionSet {
    Eigen::Matrix4cd d1, d2, dsym;
};

Matrix7cd build_drift_m0(const AtomParams& p);
Vector7cd drift_source(const AtomParams& p);

SteadyState steady_state(const AtomParams& p);

Eigen::Matrix4cd build_m1(const AtomParams& p);
CoherenceSystem build_coherence_system(const AtomParams& p, const SteadyState& ss,
                                       double omega);

DiffusionSet diffusion_set(const AtomParams& p);

// Decay rates of the population/coherence dynamics, i.e. -Re eig(i*M0).
Eigen::VectorXd relaxation_rates(const AtomParams& p);
double slowest_relaxation(const AtomParams& p);
double preparation_probability(const AtomParams& p, double t);

} // namespace fwm

#endif
