#include <doctest.h>

#include "fwm/numkernel.hpp"
#include "oracles.hpp"

using namespace fwm;
using Eigen::MatrixXcd;

TEST_CASE("expm of zero and diagonal matrices")
{
    CHECK(oracle::max_abs(expm(Eigen::Matrix2cd::Zero()) - Eigen::Matrix2cd::Identity()) == 0.0);

    Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
    d(0, 0) = cd(0, M_PI / 2);
    d(1, 1) = cd(0, -M_PI / 2);
    const Eigen::Matrix2cd e = expm(d);
    CHECK(std::abs(e(0, 0) - cd(0, 1)) < 1e-14);
    CHECK(std::abs(e(1, 1) - cd(0, -1)) < 1e-14);
    CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("expm agrees with adaptive ODE integration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const MatrixXcd m = oracle::random_matrix(4, rng);
        CHECK(oracle::max_abs(expm(m) - oracle::ode_expm(m)) < 1e-8);
    }
}

TEST_CASE("expm determinant equals exp of trace")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixXcd m = 3.0 * oracle::random_matrix(5, rng);
        const cd lhs = expm(m).determinant(), rhs = std::exp(m.trace());
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
    }
}

TEST_CASE("expm inverse and similarity properties")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixXcd m = oracle::random_matrix(4, rng);
        m *= 10.0 / m.cwiseAbs().rowwise().sum().maxCoeff();  // norm 10
        const MatrixXcd id = MatrixXcd::Identity(4, 4);
        CHECK(oracle::max_abs(expm(m) * expm(MatrixXcd(-m)) - id) < 1e-9);

        const MatrixXcd s = oracle::random_matrix(4, rng) + 2.0 * id;
        const MatrixXcd si = s.inverse();
        const MatrixXcd a = oracle::random_matrix(4, rng);
        const MatrixXcd lhs = expm(MatrixXcd(s * a * si));
        const MatrixXcd rhs = s * expm(a) * si;
        CHECK(oracle::max_abs(lhs - rhs) < 1e-8 * std::max(1.0, oracle::max_abs(rhs)));
    }
}

TEST_CASE("expm errors")
{
    CHECK_THROWS_AS(expm(MatrixXcd(2, 3)), dimension_error);
    MatrixXcd bad = MatrixXcd::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(expm(bad), numeric_error);
    MatrixXcd huge = MatrixXcd::Zero(2, 2);
    huge(0, 0) = 1e6;
    CHECK_THROWS_AS(expm(huge), numeric_error);
}

TEST_CASE("eigvals on simple matrices")
{
    Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
    d(0, 0) = 1;
    d(1, 1) = cd(0, 2);
    auto ev = eigvals(d);
    std::vector<cd> v(ev.data(), ev.data() + 2);
    std::sort(v.begin(), v.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); });
    CHECK(std::abs(v[0] - cd(1)) < 1e-14);
    CHECK(std::abs(v[1] - cd(0, 2)) < 1e-14);

    Eigen::Matrix2d r;
    r << 0, 1, -1, 0;
    ev = eigvals(r);
    CHECK(std::abs(ev(0) * ev(1) - cd(1)) < 1e-14);
    CHECK(std::abs(ev(0) + ev(1)) < 1e-14);
    CHECK(std::abs(std::abs(ev(0).imag()) - 1) < 1e-14);

    CHECK_THROWS_AS(eigvals(MatrixXcd(3, 2)), dimension_error);
}

TEST_CASE("eigenvalue product equals determinant")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixXcd m = oracle::random_matrix(6, rng);
        const Eigen::VectorXcd ev = eigvals(m);
        const cd det = m.determinant();
        CHECK(std::abs(ev.prod() - det) < 1e-8 * std::abs(det));
    }
}

TEST_CASE("quad_unit basics")
{
    const Eigen::Matrix2cd c = (Eigen::Matrix2cd() << 1, cd(2, 1), 3, -4).finished();
    CHECK(oracle::max_abs(quad_unit([&](double) { return c; }, 8) - c) < 1e-14);
    const Eigen::Matrix3d half =
        quad_unit([](double z) { return Eigen::Matrix3d(z * Eigen::Matrix3d::Identity()); }, 4);
    CHECK((half - 0.5 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(quad_unit([&](double) { return c; }, 1), domain_error);
}

TEST_CASE("quad_unit is exact for polynomials up to degree 2n-1")
{
    for (int n : {2, 5, 16, 64}) {
        for (int deg = 0; deg <= 2 * n - 1; deg += std::max(1, n / 4)) {
            const Eigen::Matrix<double, 1, 1> v = quad_unit(
                [&](double z) { return Eigen::Matrix<double, 1, 1>(std::pow(z, deg)); }, n);
            CHECK(std::abs(v(0) - 1.0 / (deg + 1)) < 1e-12);
        }
    }
}

TEST_CASE("quad_unit on commuting exponentials matches closed form")
{
    std::mt19937_64 rng(9);
    // commuting pair: both polynomials in the same matrix
    const MatrixXcd m = oracle::random_matrix(3, rng);
    const MatrixXcd A = 0.7 * m, B = m * m * 0.2 + MatrixXcd::Identity(3, 3) * cd(0, 0.5);
    const MatrixXcd S = A + B;
    const MatrixXcd num = quad_unit([&](double z) {
        return MatrixXcd(expm(MatrixXcd(z * A)) * expm(MatrixXcd(z * B)));
    }, 32);
    // Int_0^1 exp(zS) dz = S^-1 (exp(S) - I)
    const MatrixXcd exact = S.inverse() * (expm(S) - MatrixXcd::Identity(3, 3));
    CHECK(oracle::max_abs(num - exact) < 1e-10);

    const MatrixXcd coarse = quad_unit([&](double z) { return MatrixXcd(expm(MatrixXcd(z * S))); }, 16);
    const MatrixXcd fine = quad_unit([&](double z) { return MatrixXcd(expm(MatrixXcd(z * S))); }, 32);
    CHECK(oracle::max_abs(coarse - fine) < 1e-8);
}

TEST_CASE("Gauss-Hermite moments")
{
    using M1 = Eigen::Matrix<double, 1, 1>;
    const double sigma = 2.5;
    CHECK(std::abs(quad_gauss_hermite([](double) { return M1(1.0); }, 10, sigma)(0) - 1) < 1e-14);
    CHECK(std::abs(quad_gauss_hermite([](double v) { return M1(v); }, 10, sigma)(0)) < 1e-14);
    CHECK(std::abs(quad_gauss_hermite([](double v) { return M1(v * v); }, 10, sigma)(0)
                   - sigma * sigma) < 1e-12);
    const double k = 1 / sigma;
    CHECK(std::abs(quad_gauss_hermite([&](double v) { return M1(std::cos(k * v)); }, 40, sigma)(0)
                   - std::exp(-0.5)) < 1e-6);
    CHECK_THROWS_AS(quad_gauss_hermite([](double) { return M1(1.0); }, 3, sigma), config_error);
    CHECK_THROWS_AS(quad_gauss_hermite([](double) { return M1(1.0); }, 8, 0.0), domain_error);
}

TEST_CASE("Gauss-Hermite nodes are symmetric at high order")
{
    const QuadRule r = gauss_hermite_normal(160);
    CHECK(std::abs(r.w.sum() - 1) < 1e-14);
    for (int i = 0; i < 80; ++i)
        CHECK(r.x(i) == -r.x(159 - i));
}
