#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/quadrature.hpp"
#include "support/generators.hpp"

using doctest::Approx;

// Reference values below come from 50-digit arbitrary-precision evaluation.

TEST_CASE("normal pdf") {
    CHECK(gpc::std_normal_pdf(0.0) == Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(gpc::std_normal_pdf(1.0) == Approx(0.24197072451914335).epsilon(1e-15));
    CHECK(gpc::std_normal_pdf(-1.0) == gpc::std_normal_pdf(1.0));
}

TEST_CASE("normal cdf") {
    CHECK(gpc::std_normal_cdf(0.0) == 0.5);
    CHECK(gpc::std_normal_cdf(0.70710678) == Approx(0.76024993853786703).epsilon(1e-14));
    CHECK(gpc::std_normal_cdf(-40.0) == 0.0);
    CHECK(gpc::std_normal_cdf(-1e300) == 0.0);
    CHECK(gpc::std_normal_cdf(40.0) == 1.0);
    CHECK(gpc::std_normal_cdf(-10.0) == Approx(7.619853024160526e-24).epsilon(1e-12));

    gpc::testing::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double x = gpc::testing::uniform(rng, -8.0, 8.0);
        CHECK(std::abs(gpc::std_normal_cdf(x) + gpc::std_normal_cdf(-x) - 1.0) <= 1e-14);
    }
    double prev = 0.0;
    for (double x = -39.0; x <= 9.0; x += 0.01) {
        const double v = gpc::std_normal_cdf(x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("cdf product integral") {
    CHECK(gpc::cdf_product_integral(1.0) == Approx(0.5641895835477563).epsilon(1e-15));
    CHECK(gpc::cdf_product_integral(2.0) == Approx(1.1283791670955126).epsilon(1e-15));
    CHECK(gpc::cdf_product_integral(0.5) == Approx(0.28209479177387814).epsilon(1e-15));
    CHECK_THROWS_AS(gpc::cdf_product_integral(0.0), gpc::InvalidArgument);

    // Holds for every real b, including b <= 0.
    for (double sigma : {0.1, 1.0, 3.0}) {
        for (double b : {-7.0, 0.0, 2.5}) {
            const auto f = [&](double t) {
                return gpc::std_normal_cdf((b - t) / sigma) * gpc::std_normal_cdf((t - b) / sigma);
            };
            const auto r = gpc::integrate(f, {b - 12 * sigma, b + 12 * sigma}, {});
            CHECK(r.value == Approx(gpc::cdf_product_integral(sigma)).epsilon(1e-9));
        }
    }
}

TEST_CASE("cdf shift l1") {
    CHECK(gpc::cdf_shift_l1(0, 1, 2) == 1.0);
    CHECK(gpc::cdf_shift_l1(4, 4, 1) == 0.0);
    CHECK(gpc::cdf_shift_l1(-3, 2, 0.1) == 5.0);
}

TEST_CASE("cdf diff product integral") {
    CHECK(gpc::cdf_diff_product_integral(2.0, 0.3, 1.0, 1.0) == 0.0);
    CHECK(gpc::cdf_diff_product_integral(1.0, 0.0, 0.0, 1.0) == Approx(-0.36454835517351062).epsilon(1e-13));
    // Negative slope: the closed form carries 1/|a|.
    CHECK(gpc::cdf_diff_product_integral(-1.5, 0.3, -0.2, 0.7) ==
          Approx(-0.30832050055705939).epsilon(1e-13));
    CHECK_THROWS_AS(gpc::cdf_diff_product_integral(0.0, 0, 0, 1), gpc::InvalidArgument);

    gpc::testing::Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        double a = gpc::testing::uniform(rng, 0.2, 3.0);
        if (i % 2) a = -a;
        const double b1 = gpc::testing::uniform(rng, -3, 3);
        const double b2 = gpc::testing::uniform(rng, -3, 3);
        const double b3 = gpc::testing::uniform(rng, -3, 3);
        const auto f = [&](double t) {
            return gpc::std_normal_cdf(a * t + b1) *
                   (gpc::std_normal_cdf(a * t + b2) - gpc::std_normal_cdf(a * t + b3));
        };
        const double reach = 14.0 / std::abs(a);
        const double centre = -(b1 + b2 + b3) / (3 * a);
        const auto r = gpc::integrate(f, {centre - reach, centre + reach}, {});
        const double closed = gpc::cdf_diff_product_integral(a, b1, b2, b3);
        CHECK(std::abs(r.value - closed) <= 1e-8 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("normal raw moments") {
    CHECK(gpc::normal_raw_moment(0, 5, 2) == 1.0);
    CHECK(gpc::normal_raw_moment(1, 3, 2) == 3.0);
    CHECK(gpc::normal_raw_moment(2, 0, 1) == 1.0);
    CHECK(gpc::normal_raw_moment(4, 0, 1) == 3.0);
    CHECK(gpc::normal_raw_moment(2, 1, 1) == 2.0);
    CHECK_THROWS_AS(gpc::normal_raw_moment(65, 0, 1), gpc::OrderTooLarge);
    CHECK_THROWS_AS(gpc::normal_raw_moment(-1, 0, 1), gpc::InvalidArgument);

    gpc::testing::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const double a = gpc::testing::uniform(rng, -2, 2);
        const double s = gpc::testing::uniform(rng, 0.1, 2);
        for (int n = 2; n <= 20; ++n) {
            const double expected =
                a * gpc::normal_raw_moment(n - 1, a, s) + (n - 1) * s * s * gpc::normal_raw_moment(n - 2, a, s);
            CHECK(gpc::normal_raw_moment(n, a, s) == Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("adaptive quadrature") {
    const gpc::QuadratureSpec spec;
    CHECK(gpc::integrate_l1(gpc::std_normal_pdf, {-12, 12}, spec) == Approx(1.0).epsilon(1e-9));
    const auto base = [](double t) { return gpc::std_normal_cdf(-t) * gpc::std_normal_cdf(t); };
    CHECK(gpc::integrate_l1(base, {-12, 12}, spec) == Approx(0.5641895835).epsilon(1e-8));
    CHECK(gpc::integrate_l1([](double) { return 0.0; }, {-12, 12}, spec) == 0.0);

    // Kinks at breakpoints and sign changes are handled.
    const std::vector<double> bp{0.3};
    CHECK(gpc::integrate_l1([](double t) { return t - 0.3; }, {-1, 1}, spec, bp) ==
          Approx(0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7).epsilon(1e-12));

    gpc::QuadratureSpec tight;
    tight.max_panels = 4;
    tight.relative_tolerance = 1e-15;
    tight.absolute_floor = 0.0;
    CHECK_THROWS_AS(gpc::integrate([](double t) { return std::sqrt(std::abs(t)); }, {-1, 1}, tight),
                    gpc::NonConvergence);

    gpc::QuadratureSpec bad;
    bad.relative_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), gpc::InvalidArgument);
    bad = {};
    bad.support_padding = 3.0;
    CHECK_THROWS_AS(bad.validate(), gpc::InvalidArgument);

    gpc::CompensatedSum sum;
    sum.add(1.0);
    for (int i = 0; i < 1000; ++i) sum.add(1e-16);
    sum.add(-1.0);
    CHECK(sum.value() == Approx(1e-13).epsilon(1e-9));
}
