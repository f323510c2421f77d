#include "kelvin/errors.hpp"
#include "kelvin/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

using namespace kelvin;

TEST_CASE("polynomial and smooth integrands") {
    const auto q = integrate_adaptive([](double t) { return t * t; }, 0.0, 1.0);
    CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const auto e = integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 5.0);
    CHECK(std::fabs(e.value - (1.0 - std::exp(-5.0))) <= 1e-14);
    CHECK(e.abs_error_estimate <= 1e-12);
}

TEST_CASE("endpoint weights") {
    QuadOptions o;
    o.weight = EndpointWeight::left;
    // int_0^1 t^{-1/2} dt
    CHECK(std::fabs(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, o).value - 2.0) <= 1e-14);
    o.weight = EndpointWeight::right;
    // int_0^1 cos(t) / sqrt(1 - t) dt, cofactor cos
    const double want = 1.4995966097139717;
    CHECK(std::fabs(integrate_adaptive([](double t) { return std::cos(t); }, 0.0, 1.0, o).value - want)
          <= 1e-13);
    o.weight = EndpointWeight::both;
    // int_{-1}^{1} (1 - t^2)^{-1/2} dt = pi
    CHECK(std::fabs(integrate_adaptive([](double) { return 1.0; }, -1.0, 1.0, o).value - M_PI)
          <= 1e-14);
}

TEST_CASE("breakpoints and infinite range") {
    std::vector<double> pts{0.0, 1.0, 2.0, 3.0};
    const auto q = integrate_adaptive([](double t) { return std::sin(t); }, pts);
    CHECK(std::fabs(q.value - (1.0 - std::cos(3.0))) <= 1e-14);
    QuadOptions o;
    o.abs_tol = 1e-14;
    const auto inf = integrate_to_infinity([](double t) { return std::exp(-t); }, 1.0,
                                           [](double X) { return std::exp(-X); }, 2.0, o);
    CHECK(std::fabs(inf.value - std::exp(-1.0)) <= 1e-13);
    CHECK(inf.truncation_point > 1.0);
}

TEST_CASE("failure modes") {
    QuadOptions o;
    o.max_evaluations = 100;
    o.abs_tol = 1e-15;
    o.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_adaptive([](double t) { return std::sin(1.0 / (t + 1e-4)); }, 0.0, 1.0, o),
                    AccuracyNotReached);
    CHECK_THROWS_AS(integrate_adaptive([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                                       0.0, 1.0),
                    DomainError);
}
