#ifndef FWM_NUMKERNEL_HPP
#define FWM_NUMKERNEL_HPP

#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "fwm/errors.hpp"

namespace fwm {

using cd = std::complex<double>;

// Default node counts for the two quadratures.
inline constexpr int kZNodes = 64;
inline constexpr int kVelocityOrder = 40;

// Tolerances used by the self checks of the library.
inline constexpr double kSteadyStateCheckTol = 1e-10;
inline constexpr double kRealCastTol = 1e-8;
inline constexpr double kPoleCondition = 1e12;
inline constexpr double kZeroRateFraction = 1e-12;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m)
{
    return m.derived().array().isFinite().all();
}

template <typename Derived>
using plain_t = typename Derived::PlainObject;

/*
 * Matrix exponential.
 *
 * Backed by Eigen's MatrixFunctions module: scaling and squaring around a
 * Pade approximant of degree 3, 5, 7, 9 or 13 picked from the 1-norm
 * (Higham 2005 thresholds, fixed inside Eigen).
 */
template <typename Derived>
plain_t<Derived> expm(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        throw dimension_error("expm: matrix is not square");
    if (!all_finite(m))
        throw numeric_error("expm: non-finite input");
    plain_t<Derived> out = m.derived().exp();
    if (!all_finite(out))
        throw numeric_error("expm: overflow while squaring");
    return out;
}

// All eigenvalues, in the order returned by the complex Schur solver.
template <typename Derived>
Eigen::Matrix<std::complex<typename Eigen::NumTraits<typename Derived::Scalar>::Real>,
              Eigen::Dynamic, 1>
eigvals(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        throw dimension_error("eigvals: matrix is not square");
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::ComplexEigenSolver<CMat> es(m.derived().template cast<std::complex<Real>>(), false);
    if (es.info() != Eigen::Success)
        throw numeric_error("eigvals: no convergence");
    return es.eigenvalues();
}

struct QuadRule {
    Eigen::VectorXd x;
    Eigen::VectorXd w;
};

// Golub-Welsch on a symmetric tridiagonal Jacobi matrix.
inline QuadRule golub_welsch(const Eigen::VectorXd& offdiag, double mu0)
{
    const Eigen::Index n = offdiag.size() + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        J(k, k + 1) = J(k + 1, k) = offdiag(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadRule r;
    r.x = es.eigenvalues();
    r.w = mu0 * es.eigenvectors().row(0).transpose().array().square();
    return r;
}

// n-point Gauss-Legendre rule mapped to [0, 1]. Exact for degree 2n-1.
inline QuadRule gauss_legendre_unit(int n)
{
    if (n < 1)
        throw domain_error("gauss_legendre_unit: need at least one node");
    if (n == 1)
        return {Eigen::VectorXd::Constant(1, 0.5), Eigen::VectorXd::Constant(1, 1.0)};
    Eigen::VectorXd b(n - 1);
    for (int k = 1; k < n; ++k)
        b(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    QuadRule r = golub_welsch(b, 2.0);
    r.x = (r.x.array() + 1.0) * 0.5;
    r.w *= 0.5;
    return r;
}

// Probabilists' Gauss-Hermite rule for a unit normal; weights sum to 1.
inline QuadRule gauss_hermite_normal(int n)
{
    if (n < 2)
        throw domain_error("gauss_hermite_normal: need at least two nodes");
    Eigen::VectorXd b(n - 1);
    for (int k = 1; k < n; ++k)
        b(k - 1) = std::sqrt(double(k));
    QuadRule r = golub_welsch(b, 1.0);
    r.w /= r.w.sum();
    // symmetrize against eigen-solver noise so odd moments vanish exactly
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        const double x = 0.5 * (r.x(j) - r.x(i));
        const double w = 0.5 * (r.w(i) + r.w(j));
        r.x(i) = -x; r.x(j) = x;
        r.w(i) = r.w(j) = w;
    }
    if (n % 2) r.x(n / 2) = 0.0;
    return r;
}

template <typename F>
using quad_result_t = typename std::decay_t<std::invoke_result_t<F, double>>::PlainObject;

// Integral of f over [0, 1] with an n-point Gauss-Legendre rule.
template <typename F>
quad_result_t<F> quad_unit(F&& f, int nodes = kZNodes)
{
    if (nodes < 2)
        throw domain_error("quad_unit: nodes must be >= 2");
    const QuadRule r = gauss_legendre_unit(nodes);
    quad_result_t<F> acc = r.w(0) * f(r.x(0));
    for (int i = 1; i < nodes; ++i)
        acc += r.w(i) * f(r.x(i));
    return acc;
}

// Expectation of f(v) for v ~ N(0, sigma^2).
template <typename F>
quad_result_t<F> quad_gauss_hermite(F&& f, int order, double sigma)
{
    if (order < 4)
        throw config_error("quad_gauss_hermite: order must be >= 4");
    if (!(sigma > 0))
        throw domain_error("quad_gauss_hermite: sigma must be > 0");
    const QuadRule r = gauss_hermite_normal(order);
    quad_result_t<F> acc = r.w(0) * f(sigma * r.x(0));
    for (int i = 1; i < order; ++i)
        acc += r.w(i) * f(sigma * r.x(i));
    return acc;
}

} // namespace fwm

#endif
