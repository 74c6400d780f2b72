#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fss/errors.hpp"
#include "fss/stats.hpp"

using namespace fss::stats;

TEST_CASE("incomplete beta closed forms") {
    // I_x(1,1) = x
    for (double x : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0})
        CHECK(incomplete_beta(1, 1, x) == doctest::Approx(x).epsilon(1e-12));
    // symmetric beta at the midpoint
    for (double a : {0.5, 1.0, 2.0, 7.5})
        CHECK(incomplete_beta(a, a, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    // Beta(2,3) CDF: 6x^2 - 8x^3 + 3x^4
    auto beta23 = [](double x) {
        return 6 * x * x - 8 * x * x * x + 3 * x * x * x * x;
    };
    for (double x : {0.1, 0.25, 0.5, 0.8})
        CHECK(std::fabs(incomplete_beta(2, 3, x) - beta23(x)) < 1e-10);
    CHECK(std::fabs(incomplete_beta(2, 3, 0.5) - 0.6875) < 1e-10);
}

TEST_CASE("incomplete beta reference values") {
    // scipy.special.betainc
    CHECK(std::fabs(incomplete_beta(2.5, 1.5, 0.3) - 0.08894372317066562) < 1e-10);
}

TEST_CASE("incomplete beta properties") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> par(0.2, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = par(rng), b = par(rng);
        const double x = unit(rng), y = unit(rng);
        const double lo = std::min(x, y), hi = std::max(x, y);
        // monotone non-decreasing in x
        CHECK(incomplete_beta(a, b, lo) <= incomplete_beta(a, b, hi) + 1e-12);
        // I_x(a,b) = 1 - I_{1-x}(b,a)
        CHECK(incomplete_beta(a, b, x) ==
              doctest::Approx(1 - incomplete_beta(b, a, 1 - x)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(incomplete_beta(0, 1, 0.5), fss::NumericError);
    CHECK_THROWS_AS(incomplete_beta(1, 1, 1.5), fss::NumericError);
}

TEST_CASE("F and t tail probabilities") {
    // scipy.stats.f.sf(2.0, 9, 9)
    CHECK(f_sf(2.0, 9, 9) == doctest::Approx(0.15823870261599618).epsilon(1e-9));
    // scipy: 2 * t.sf(2.0, 10)
    CHECK(t_two_tailed_p(2.0, 10) ==
          doctest::Approx(0.07338803477074039).epsilon(1e-9));
    CHECK(t_two_tailed_p(0.0, 10) == doctest::Approx(1.0));
    // scipy.stats.t.ppf(0.975, 57)
    CHECK(t_quantile(0.975, 57) == doctest::Approx(2.002465459291007).epsilon(1e-6));
}

TEST_CASE("dispersion summary") {
    SUBCASE("basic statistics") {
        const std::vector<double> v = {1, 2, 3, 4, 10};
        const auto d = dispersion(v);
        CHECK(d.n == 5);
        CHECK(d.mean == doctest::Approx(4.0));
        CHECK(d.median == doctest::Approx(3.0));
        CHECK(d.min == 1);
        CHECK(d.max == 10);
        CHECK(d.range == 9);
        CHECK(d.q1 == doctest::Approx(2.0));
        CHECK(d.q3 == doctest::Approx(4.0));
        CHECK(d.iqr == doctest::Approx(2.0));
        // scipy.stats.skew(v, bias=False)
        CHECK(d.skewness == doctest::Approx(1.6970562748477143).epsilon(1e-9));
    }
    SUBCASE("constant vector") {
        const std::vector<double> v = {2, 2, 2, 2};
        const auto d = dispersion(v);
        CHECK(d.std_dev == 0);
        CHECK(d.iqr == 0);
        CHECK(d.skewness == 0);
        CHECK_FALSE(d.skewness_defined);
    }
    SUBCASE("needs two values") {
        CHECK_THROWS_AS(dispersion(std::vector<double>{1.0}), fss::NumericError);
    }
}

TEST_CASE("fisher variance test") {
    SUBCASE("known variances") {
        // variances 2.0 and 1.0 on n=10 each; p from the F(9,9) upper tail
        std::vector<double> a, b;
        for (int i = 0; i < 10; ++i) {
            // crafted samples with exact sample variances 2.0 and 1.0
            a.push_back((i % 2 == 0 ? 1.0 : -1.0) * std::sqrt(2.0 * 9 / 10));
            b.push_back((i % 2 == 0 ? 1.0 : -1.0) * std::sqrt(1.0 * 9 / 10));
        }
        const auto r = fisher_variance_test(a, b);
        CHECK(r.f_statistic == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(r.df1 == 9);
        CHECK(r.df2 == 9);
        CHECK(r.p_value == doctest::Approx(0.15823870261599618).epsilon(1e-8));
    }
    SUBCASE("identical samples give F = 1, p = 0.5") {
        const std::vector<double> a = {1, 2, 3, 4, 5};
        const auto r = fisher_variance_test(a, a);
        CHECK(r.f_statistic == doctest::Approx(1.0));
        CHECK(r.p_value == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("symmetry under argument swap") {
        const std::vector<double> a = {1, 5, 2, 8, 3};
        const std::vector<double> b = {0.5, 0.7, 0.9, 0.6, 0.8};
        const auto r1 = fisher_variance_test(a, b);
        const auto r2 = fisher_variance_test(b, a);
        CHECK(r1.f_statistic == r2.f_statistic);
        CHECK(r1.p_value == r2.p_value);
        CHECK(r1.df1 == r2.df1);
    }
    SUBCASE("zero denominator variance") {
        const std::vector<double> a = {1, 2, 3};
        const std::vector<double> b = {4, 4, 4};
        CHECK_THROWS_AS(fisher_variance_test(a, b), fss::NumericError);
    }
}

namespace {

std::vector<std::vector<double>> design(std::initializer_list<std::vector<double>> cols) {
    return {cols};
}

}  // namespace

TEST_CASE("ols") {
    SUBCASE("hand-solved normal equations") {
        // y = {1,2,4} on const + x={0,1,2}: slope 1.5, intercept 5/6
        const std::vector<double> y = {1, 2, 4};
        const auto fit = ols(y, design({{1, 1, 1}, {0, 1, 2}}), {"const", "x"});
        CHECK(fit.coefficients[0].estimate == doctest::Approx(5.0 / 6).epsilon(1e-12));
        CHECK(fit.coefficients[1].estimate == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("exact fit") {
        std::vector<double> x(20), y(20), ones(20, 1.0);
        for (int i = 0; i < 20; ++i) {
            x[i] = i;
            y[i] = 3.0 - 0.25 * i;
        }
        const auto fit = ols(y, {ones, x}, {"const", "x"});
        CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fit.root_mse == doctest::Approx(0.0).epsilon(1e-9));
        for (double e : fit.residuals) CHECK(std::fabs(e) < 1e-10);
    }
    SUBCASE("residuals orthogonal to regressors") {
        std::mt19937 rng(3);
        std::normal_distribution<double> noise(0, 1);
        const std::size_t n = 80;
        std::vector<double> ones(n, 1.0), x1(n), x2(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x1[i] = noise(rng);
            x2[i] = noise(rng);
            y[i] = 1 + 2 * x1[i] - x2[i] + noise(rng);
        }
        const auto fit = ols(y, {ones, x1, x2}, {"const", "x1", "x2"});
        for (const auto& col : {ones, x1, x2}) {
            double dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += col[i] * fit.residuals[i];
            CHECK(std::fabs(dot) < 1e-8);
        }
        CHECK(fit.r_squared > 0);
        CHECK(fit.r_squared < 1);
    }
    SUBCASE("rank deficiency names the collinear column") {
        const std::vector<double> y = {1, 2, 3, 4};
        try {
            ols(y, design({{1, 1, 1, 1}, {1, 2, 3, 4}, {2, 4, 6, 8}}),
                {"const", "x", "twice_x"});
            FAIL("expected NumericError");
        } catch (const fss::NumericError& e) {
            CHECK(std::string(e.what()).find("twice_x") != std::string::npos);
        }
    }
    SUBCASE("needs n > k") {
        const std::vector<double> y = {1, 2};
        CHECK_THROWS_AS(ols(y, design({{1, 1}, {0, 1}}), {"const", "x"}),
                        fss::NumericError);
    }
}
