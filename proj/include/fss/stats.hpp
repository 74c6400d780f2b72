#pragma once

#include <span>
#include <string>
#include <vector>

namespace fss::stats {

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation, absolute error <= 1e-10.
double incomplete_beta(double a, double b, double x);

/// Upper tail of the F(df1, df2) distribution.
double f_sf(double f, int df1, int df2);

/// Two-tailed p of the t(df) distribution at |t|.
double t_two_tailed_p(double t, int df);

/// Quantile of the t(df) distribution (e.g. p = 0.975 for 95% CIs).
double t_quantile(double p, int df);

struct DispersionSummary {
    std::size_t n = 0;
    double mean = 0;
    double median = 0;
    double std_dev = 0;  // sample, n-1
    double min = 0;
    double max = 0;
    double range = 0;
    double q1 = 0;
    double q3 = 0;
    double iqr = 0;
    double skewness = 0;  // adjusted Fisher-Pearson
    bool skewness_defined = true;  // false for constant input (reported as 0)
};

DispersionSummary dispersion(std::span<const double> values);  // needs n >= 2

struct VarianceTestResult {
    double f_statistic = 0;  // larger variance over smaller
    int df1 = 0;             // numerator (larger-variance sample)
    int df2 = 0;
    double p_value = 0;      // one-tailed
};

VarianceTestResult fisher_variance_test(std::span<const double> a,
                                        std::span<const double> b);

enum class Covariance {
    Classical,  // s^2 (X'X)^-1
    Hc1,        // heteroskedasticity-robust (HC1) sandwich
};

struct OlsCoefficient {
    std::string name;
    double estimate = 0;
    double std_error = 0;
    double t = 0;
    double p = 0;
    double ci_low = 0;   // 95%
    double ci_high = 0;
};

struct OlsFit {
    std::vector<OlsCoefficient> coefficients;
    double r_squared = 0;
    double root_mse = 0;
    double model_f = 0;  // joint test of all non-intercept coefficients
    int f_df1 = 0;
    int f_df2 = 0;
    double model_f_p = 0;
    Covariance covariance = Covariance::Classical;
    std::vector<double> residuals;
};

/// OLS with full inference. X is given as columns (the first is usually a
/// constant); `names` labels them. With Covariance::Classical the model F
/// is the R-squared form; with Hc1 it is the robust Wald test of the
/// non-intercept coefficients. Throws NumericError naming collinear
/// columns on a rank-deficient design.
OlsFit ols(std::span<const double> y, const std::vector<std::vector<double>>& columns,
           const std::vector<std::string>& names,
           Covariance covariance = Covariance::Classical);

}  // namespace fss::stats
