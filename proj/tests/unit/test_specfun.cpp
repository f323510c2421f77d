#include "kelvin/errors.hpp"
#include "kelvin/quadrature.hpp"
#include "kelvin/specfun.hpp"

#include "fixtures.hpp"
#include "references.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace kelvin;
using kelvin::testing::kPi;
using kelvin::testing::rel_err;

TEST_CASE("bessel_j at the origin and small argument") {
    CHECK(specfun::bessel_j(0, 0.0).value == 1.0);
    CHECK(specfun::bessel_j(2, 0.0).value == 0.0);
    CHECK(rel_err(specfun::bessel_j(4, 0.4).value, ref::kJ4_0p4) <= 1e-13);
}

TEST_CASE("bessel_j rejects bad input") {
    CHECK_THROWS_AS(specfun::bessel_j(201, 1.0), OrderOverflow);
    CHECK_THROWS_AS(specfun::bessel_j(0, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("bessel_y") {
    CHECK(specfun::bessel_y(0, 1e-3).value < -1.0);
    CHECK(rel_err(specfun::bessel_y(1, 1.0).value, ref::kY1_1) <= 1e-12);
    CHECK_THROWS_AS(specfun::bessel_y(0, 0.0), DomainError);
    CHECK_THROWS_AS(specfun::bessel_y(0, -1.0), DomainError);
}

TEST_CASE("bessel_i and bessel_k") {
    CHECK(specfun::bessel_i(0, 0.0).value == 1.0);
    CHECK(specfun::bessel_i(3, 0.0).value == 0.0);
    CHECK(rel_err(specfun::bessel_k(2, 0.01).value, ref::kK2_0p01) <= 1e-11);
    CHECK_THROWS_AS(specfun::bessel_k(1, 0.0), DomainError);
}

TEST_CASE("Wronskians") {
    for (double x : {0.1, 0.5, 1.0, 2.0}) {
        for (int n = 0; n <= 20; ++n) {
            CAPTURE(x);
            CAPTURE(n);
            const double jy = specfun::bessel_j(n + 1, x).value * specfun::bessel_y(n, x).value
                              - specfun::bessel_j(n, x).value * specfun::bessel_y(n + 1, x).value;
            CHECK(rel_err(jy, 2.0 / (kPi * x)) <= 1e-11);
            const double ik = specfun::bessel_i(n, x).value * specfun::bessel_k(n + 1, x).value
                              + specfun::bessel_i(n + 1, x).value * specfun::bessel_k(n, x).value;
            CHECK(rel_err(ik, 1.0 / x) <= 1e-11);
        }
    }
}

TEST_CASE("large-order Bessel asymptotes") {
    const int m = 60;
    // J_{2m}(x) ~ (e x / (4m))^{2m} / (2 sqrt(pi m))
    const double j_lead = std::pow(std::exp(1.0) * 1.0 / (4.0 * m), 2 * m) / (2.0 * std::sqrt(kPi * m));
    CHECK(std::fabs(specfun::bessel_j(2 * m, 1.0).value / j_lead - 1.0) <= 0.1);
    const double rho = 0.02;
    const double k_lead = std::sqrt(kPi / (2.0 * m)) * std::pow(std::exp(1.0) * rho / (4.0 * m), -m);
    CHECK(std::fabs(specfun::bessel_k(m, 0.5 * rho).value / k_lead - 1.0) <= 0.1);
}

TEST_CASE("scaled Struve H") {
    for (int r : {0, 3, 40}) CHECK(specfun::struve_h_scaled(r, 0.0).value == 0.0);
    CHECK(rel_err(specfun::struve_h_scaled(0, 1.0).value, ref::kStruveH0_1) <= 1e-13);
    CHECK(rel_err(specfun::struve_h_scaled(40, 1.0).value, ref::kScaledH40_1) <= 1e-13);
    const int r = 40;
    const double lead = std::exp(r - (r + 1) * std::log(double(r))) / (kPi * std::sqrt(2.0));
    CHECK(std::fabs(specfun::struve_h_scaled(r, 1.0).value / lead - 1.0) <= 0.05);
}

TEST_CASE("scaled Struve K") {
    CHECK(rel_err(specfun::struve_k_scaled(0, 0.4).value, ref::kScaledK0_0p4) <= 1e-12);
    CHECK(rel_err(specfun::struve_k_scaled(0, 1.0).value, ref::kScaledK0_1_integral) <= 1e-12);
    CHECK_THROWS_AS(specfun::struve_k_scaled(0, 0.0), DomainError);
}

TEST_CASE("Kummer 1F1") {
    CHECK(specfun::kummer_1f1(0.7, 2.5, 0.0).value == 1.0);
    CHECK(rel_err(specfun::kummer_1f1(1.0, 2.0, 1.0).value, std::exp(1.0) - 1.0) <= 1e-14);
    CHECK(rel_err(specfun::kummer_1f1(0.5, 1.5, -0.25).value, ref::kKummer_half_3half_m025) <= 1e-13);
    CHECK_THROWS_AS(specfun::kummer_1f1(1.0, -2.0, 0.5), DomainError);
    CHECK_THROWS_AS(specfun::kummer_1f1(1.0, 0.0, 0.5), DomainError);
}

TEST_CASE("Kummer transformation grid") {
    for (double a : {0.5, 1.0, 1.5}) {
        for (double b : {1.5, 2.5, 3.5}) {
            for (int i = 0; i <= 16; ++i) {
                const double z = -2.0 + 0.25 * i;
                const double lhs = specfun::kummer_1f1(a, b, z).value;
                const double rhs = std::exp(z) * specfun::kummer_1f1(b - a, b, -z).value;
                CHECK(rel_err(lhs, rhs) <= 1e-12);
            }
        }
    }
}

TEST_CASE("upper incomplete gamma") {
    for (double chi : {0.3, 2.0, 17.0}) {
        CHECK(rel_err(specfun::upper_inc_gamma(1.0, chi).value, std::exp(-chi)) <= 4e-16);
    }
    CHECK(rel_err(specfun::upper_inc_gamma(3.0, 0.5).value, std::exp(-0.5) * 3.25) <= 1e-15);
    CHECK(rel_err(specfun::upper_inc_gamma(2.5, 4.0).value, ref::kUpperGamma_2p5_4) <= 1e-11);
    CHECK(rel_err(specfun::upper_inc_gamma(0.0, 2.0).value, ref::kE1_2) <= 1e-12);
    CHECK_THROWS_AS(specfun::upper_inc_gamma(-1.0, 2.0), DomainError);
    CHECK_THROWS_AS(specfun::upper_inc_gamma(1.0, -2.0), DomainError);
}

TEST_CASE("upper incomplete gamma against quadrature") {
    QuadOptions o;
    o.abs_tol = 0.0;
    o.rel_tol = 1e-13;
    const double a = 2.5;
    const double chi = 4.0;
    const auto q = integrate_to_infinity(
        [=](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, chi,
        [=](double X) { return 2.0 * std::pow(X, a) * std::exp(-X); }, 5.0, o);
    CHECK(rel_err(specfun::upper_inc_gamma(a, chi).value, q.value) <= 1e-11);
}
