#include "kelvin/errors.hpp"
#include "kelvin/expansions.hpp"
#include "kelvin/oracle.hpp"
#include "kelvin/specfun.hpp"

#include "fixtures.hpp"
#include "references.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace kelvin;
using namespace kelvin::testing;

namespace {

TruncationPolicy with_n(int n) {
    TruncationPolicy p;
    p.n = n;
    return p;
}

double ks(int m, double x) { return specfun::struve_k_scaled(m, x).value; }

}  // namespace

TEST_CASE("bessho_F against the oracle") {
    CHECK(std::fabs(bessho_F(make_point(0.4, 0.005, 0.0)).value - ref::kF[0]) <= 1e-9);
    CHECK(std::fabs(bessho_F(make_point(1.0, 0.02, 0.25 * kPi)).value - ref::kF[9]) <= 1e-8);
    for (std::size_t i = 0; i < kTablePoints.size(); ++i) {
        CAPTURE(i);
        const auto pt = point_of(kTablePoints[i]);
        CHECK(std::fabs(bessho_F(pt).value - oracle_F(pt).value) <= 1e-8);
    }
}

TEST_CASE("bessho_F reports slow convergence") {
    TruncationPolicy p;
    p.max_terms = 5;
    CHECK_THROWS_AS(bessho_F(make_point(1.0, 0.02, 0.0), p), AccuracyNotReached);
}

TEST_CASE("ursell_F") {
    const auto r0 = ursell_F(make_point(0.4, 0.005, 0.0));
    CHECK(r0.saddle_term == 0.0);
    CHECK(r0.terms_used == 9);
    const auto pt = make_point(0.4, 0.005, 0.1 * kPi);
    CHECK(std::fabs(ursell_F(pt).value - ref::kF[1]) <= 50.0 * std::exp(-8.0));
    CHECK_THROWS_AS(ursell_F(make_point(0.1, 0.01, 0.0)), DomainError);
}

TEST_CASE("Struve sums against the I1 oracle") {
    for (const auto& [x, rho, idx] : {std::tuple{0.4, 0.005, 0}, std::tuple{1.0, 0.02, 6}}) {
        const auto pt = make_point(x, rho, 0.0);
        const double scaled = 0.5 * kPi * std::exp(-rho) * struve_sum_alpha0(pt);
        CHECK(std::fabs(scaled - ref::kI1[idx]) <= 1e-12);
        CHECK(struve_double_sum(pt) == struve_sum_alpha0(pt));
    }
    for (int idx : {2, 11}) {
        const auto pt = point_of(kTablePoints[idx]);
        const double scaled = 0.5 * kPi * std::exp(-pt.rho) * struve_double_sum(pt);
        CHECK(std::fabs(scaled - oracle_I1_alpha(pt).value) <= 1e-11);
    }
    CHECK_THROWS_AS(struve_sum_alpha0(make_point(1.0, 0.02, 0.3)), DomainError);
}

TEST_CASE("coefficient recurrence") {
    for (double x : {0.4, 1.0, 2.0}) {
        const auto t = ck_recurrence(7, x);
        CHECK(rel_err(t.values[1], ks(1, x) - x * x * ks(0, x)) <= 1e-13);
        const double x2 = x * x;
        const double c4 = 105 * ks(4, x) - 60 * x2 * ks(3, x) + 18 * x2 * x2 * ks(2, x)
                          - 4 * x2 * x2 * x2 * ks(1, x) + x2 * x2 * x2 * x2 * ks(0, x);
        CHECK(rel_err(t.values[4], c4) <= 1e-12);
        for (int k = 0; k <= 6; ++k) {
            CHECK(rel_err(t.values[k], oracle_Ck(k, x, 0.0).value) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(ck_recurrence(31, 1.0), DomainError);
    CHECK_THROWS_AS(ck_recurrence(0, 1.0), DomainError);
}

TEST_CASE("symbolic unrolling gives the printed integers") {
    CHECK(ck_symbolic_coefficients(0) == std::vector<std::int64_t>{1});
    CHECK(ck_symbolic_coefficients(1) == std::vector<std::int64_t>{1, -1});
    CHECK(ck_symbolic_coefficients(2) == std::vector<std::int64_t>{3, -2, 1});
    CHECK(ck_symbolic_coefficients(3) == std::vector<std::int64_t>{15, -9, 3, -1});
    CHECK(ck_symbolic_coefficients(4) == std::vector<std::int64_t>{105, -60, 18, -4, 1});
}

TEST_CASE("coefficient tables") {
    const auto a0 = ck_table(7, 1.0, 0.0);
    const auto rec = ck_recurrence(7, 1.0);
    for (int k = 0; k < 7; ++k) {
        if (!a0.cancellation_flags[k]) CHECK(a0.values[k] == rec.values[k]);
        CHECK(a0.provenance[k] == Provenance::recurrence);
    }
    const auto fig = ck_table(4, 1.0, kPi / 6);
    CHECK(fig.values.size() == 4);
    CHECK(fig.provenance[0] == Provenance::quadrature);
    CHECK(rel_err(fig.values[0], ref::kC0_x1_pi6) <= 1e-12);
    CHECK_THROWS_AS(ck_table(4, 1.0, 2.0), DomainError);
}

TEST_CASE("C0 grows logarithmically as x shrinks") {
    const double a = ck_table(1, 1e-2, 0.0).values[0];
    const double b = ck_table(1, 1e-3, 0.0).values[0];
    CHECK(std::fabs((b - a) / std::log(10.0) / (2.0 / kPi) - 1.0) <= 0.1);
}

TEST_CASE("asymptotic terms decay inside the truncation window") {
    const auto pt = make_point(0.4, 0.005, 0.0);
    const auto ck = ck_table(8, pt.x, 0.0);
    double scale = 1.0;
    double prev = INFINITY;
    for (int k = 0; k < 8; ++k) {
        const double term = std::fabs(scale * ck.values[k]);
        CHECK(term < prev);
        prev = term;
        scale /= 4.0 * pt.M * (k + 1);
    }
    CHECK_THROWS_AS(asymptotic_sum(make_point(1.0, 0.02, 0.0), ck), DomainError);
}

TEST_CASE("saddle contributions") {
    // M = 8 with p = 0.05
    const auto pt = make_point(0.8, 0.02, 0.0);
    CHECK(pt.M == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(rel_err(saddle_integral_alpha0(pt), ref::kSaddleAlpha0_M8) <= 1e-14);
    CHECK(rel_err(saddle_term(pt), std::exp(0.5 * pt.rho) * ref::kSaddleAlpha0_M8) <= 1e-14);
    const auto beam = make_point(0.4, 0.005, 0.5 * kPi);
    CHECK(std::fabs(saddle_term(beam)) <= std::sqrt(kPi / beam.M));
}

TEST_CASE("paris_F truncation policy") {
    CHECK(resolve_n(make_point(0.4, 0.005, 0.0), {}) == 7);
    CHECK(resolve_n(make_point(0.4, 0.005, 0.0), with_n(9)) == 9);
    CHECK_THROWS_AS(resolve_n(make_point(0.4, 0.005, 0.0), with_n(31)), DomainError);
    CHECK_THROWS_AS(paris_F(make_point(0.1, 0.005, 0.0)), RegimeError);
}

TEST_CASE("paris_F stays within ten residuals of the oracle") {
    for (std::size_t i = 0; i < kTablePoints.size(); ++i) {
        CAPTURE(i);
        const auto pt = point_of(kTablePoints[i]);
        const auto r = paris_F(pt, with_n(kTablePoints[i].n + 1));
        CHECK(std::fabs(r.value - ref::kF[i]) <= 10.0 * std::fabs(ref::kCurlyF[i]));
    }
}

TEST_CASE("curly F residual against frozen values") {
    for (std::size_t i = 0; i < kTablePoints.size(); ++i) {
        CAPTURE(i);
        const auto pt = point_of(kTablePoints[i]);
        const double got = curly_F_residual(pt, kTablePoints[i].n + 1);
        CHECK(std::fabs(got - ref::kCurlyF[i]) <= 1e-9 * std::fabs(ref::kCurlyF[i]) + 1e-12);
    }
}

TEST_CASE("curly F residual reproduces printed rows") {
    auto printed = [](int idx) {
        const auto& t = kTablePoints[idx];
        return std::fabs(curly_F_residual(point_of(t), t.n + 1)) / t.printed;
    };
    CHECK(printed(0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(printed(11) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(printed(7) == doctest::Approx(1.0).epsilon(1e-2));
}

// The printed entry for this row carries an exponent one too large; the
// computed residual is 4.687e-4. Kept visible rather than deleted.
TEST_CASE("curly F residual at alpha = pi/4, M = 8" * doctest::may_fail()) {
    const auto& t = kTablePoints[3];
    CHECK(std::fabs(curly_F_residual(point_of(t), t.n + 1)) == doctest::Approx(t.printed).epsilon(1e-3));
}
