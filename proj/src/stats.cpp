#include "fss/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fss/errors.hpp"

namespace fss::stats {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1;
    const double qam = a - 1;
    double c = 1;
    double d = 1 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < kEps) return h;
    }
    throw NumericError("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (a <= 0 || b <= 0)
        throw NumericError("incomplete_beta: a and b must be positive");
    if (x < 0 || x > 1) throw NumericError("incomplete_beta: x must lie in [0, 1]");
    if (x == 0) return 0;
    if (x == 1) return 1;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    // The continued fraction converges fast for x < (a+1)/(a+b+2);
    // otherwise use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    if (x < (a + 1) / (a + b + 2)) return front * beta_cf(a, b, x) / a;
    return 1 - front * beta_cf(b, a, 1 - x) / b;
}

double f_sf(double f, int df1, int df2) {
    if (f < 0) throw NumericError("f_sf: F statistic must be non-negative");
    if (df1 < 1 || df2 < 1) throw NumericError("f_sf: degrees of freedom must be >= 1");
    const double x = df2 / (df2 + df1 * f);
    return incomplete_beta(df2 / 2.0, df1 / 2.0, x);
}

double t_two_tailed_p(double t, int df) {
    if (df < 1) throw NumericError("t_two_tailed_p: df must be >= 1");
    const double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

double t_quantile(double p, int df) {
    if (p <= 0.5 || p >= 1)
        throw NumericError("t_quantile: p must lie in (0.5, 1)");
    const double target = 2 * (1 - p);  // two-tailed p at the quantile
    double lo = 0, hi = 1;
    while (t_two_tailed_p(hi, df) > target) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (t_two_tailed_p(mid, df) > target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * (static_cast<double>(sorted.size()) - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double sample_variance(std::span<const double> v, double mean) {
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return ss / (static_cast<double>(v.size()) - 1);
}

}  // namespace

DispersionSummary dispersion(std::span<const double> values) {
    if (values.size() < 2) throw NumericError("dispersion: need at least 2 values");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());

    DispersionSummary s;
    s.n = sorted.size();
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
    s.median = interpolated_quantile(sorted, 0.5);
    s.q1 = interpolated_quantile(sorted, 0.25);
    s.q3 = interpolated_quantile(sorted, 0.75);
    s.iqr = s.q3 - s.q1;
    s.min = sorted.front();
    s.max = sorted.back();
    s.range = s.max - s.min;

    double m2 = 0, m3 = 0;
    for (double x : sorted) {
        const double d = x - s.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    s.std_dev = std::sqrt(m2 * n / (n - 1));
    if (m2 > 0) {
        const double g1 = m3 / std::pow(m2, 1.5);
        s.skewness = g1 * std::sqrt(n * (n - 1)) / (n - 2);
    } else {
        s.skewness = 0;
        s.skewness_defined = false;
    }
    return s;
}

VarianceTestResult fisher_variance_test(std::span<const double> a,
                                        std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw NumericError("fisher_variance_test: each sample needs n >= 2");
    const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / a.size();
    const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / b.size();
    double va = sample_variance(a, mean_a);
    double vb = sample_variance(b, mean_b);
    int na = static_cast<int>(a.size());
    int nb = static_cast<int>(b.size());
    if (va < vb) {
        std::swap(va, vb);
        std::swap(na, nb);
    }
    if (vb == 0)
        throw NumericError("fisher_variance_test: zero variance in denominator sample");
    VarianceTestResult r;
    r.f_statistic = va / vb;
    r.df1 = na - 1;
    r.df2 = nb - 1;
    r.p_value = f_sf(r.f_statistic, r.df1, r.df2);
    return r;
}

namespace {

// Gauss-Jordan inverse with partial pivoting; on a near-zero pivot, names
// the offending column via `names` (or the index when unnamed).
std::vector<double> invert(std::vector<double> m, std::size_t k,
                           const std::vector<std::string>& names) {
    std::vector<double> inv(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(m[r * k + col]) > std::fabs(m[pivot * k + col])) pivot = r;
        if (std::fabs(m[pivot * k + col]) < 1e-12) {
            const std::string name =
                col < names.size() ? names[col] : std::to_string(col);
            throw NumericError("design matrix is rank deficient: column '" + name +
                               "' is collinear with earlier columns");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(m[pivot * k + j], m[col * k + j]);
                std::swap(inv[pivot * k + j], inv[col * k + j]);
            }
        }
        const double d = m[col * k + col];
        for (std::size_t j = 0; j < k; ++j) {
            m[col * k + j] /= d;
            inv[col * k + j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double factor = m[r * k + col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                m[r * k + j] -= factor * m[col * k + j];
                inv[r * k + j] -= factor * inv[col * k + j];
            }
        }
    }
    return inv;
}

}  // namespace

OlsFit ols(std::span<const double> y, const std::vector<std::vector<double>>& columns,
           const std::vector<std::string>& names, Covariance covariance) {
    const std::size_t n = y.size();
    const std::size_t k = columns.size();
    if (k == 0) throw NumericError("ols: no regressors");
    if (n <= k) throw NumericError("ols: need n > k observations");
    for (const auto& col : columns)
        if (col.size() != n) throw NumericError("ols: column length mismatch");

    // Normal equations on the k x k Gram matrix.
    std::vector<double> xtx(k * k, 0.0), xty(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double s = 0;
            for (std::size_t r = 0; r < n; ++r) s += columns[i][r] * columns[j][r];
            xtx[i * k + j] = xtx[j * k + i] = s;
        }
        double s = 0;
        for (std::size_t r = 0; r < n; ++r) s += columns[i][r] * y[r];
        xty[i] = s;
    }
    const std::vector<double> xtx_inv = invert(xtx, k, names);

    std::vector<double> beta(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) beta[i] += xtx_inv[i * k + j] * xty[j];

    OlsFit fit;
    fit.covariance = covariance;
    fit.residuals.resize(n);
    double ssr = 0;
    for (std::size_t r = 0; r < n; ++r) {
        double fitted = 0;
        for (std::size_t i = 0; i < k; ++i) fitted += beta[i] * columns[i][r];
        fit.residuals[r] = y[r] - fitted;
        ssr += fit.residuals[r] * fit.residuals[r];
    }

    const bool has_intercept = std::all_of(columns[0].begin(), columns[0].end(),
                                           [](double v) { return v == 1.0; });
    const double y_mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double tss = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const double d = has_intercept ? y[r] - y_mean : y[r];
        tss += d * d;
    }
    fit.r_squared = tss > 0 ? 1 - ssr / tss : 1;
    const auto df_resid = static_cast<double>(n - k);
    const double s2 = ssr / df_resid;
    fit.root_mse = std::sqrt(s2);

    // Covariance of the coefficients.
    std::vector<double> cov(k * k, 0.0);
    if (covariance == Covariance::Classical) {
        for (std::size_t i = 0; i < k * k; ++i) cov[i] = s2 * xtx_inv[i];
    } else {
        // HC1 sandwich: (X'X)^-1 (sum e_i^2 x_i x_i') (X'X)^-1 * n/(n-k)
        std::vector<double> meat(k * k, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            const double w = fit.residuals[r] * fit.residuals[r];
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    meat[i * k + j] += w * columns[i][r] * columns[j][r];
        }
        std::vector<double> tmp(k * k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                double s = 0;
                for (std::size_t l = 0; l < k; ++l)
                    s += xtx_inv[i * k + l] * meat[l * k + j];
                tmp[i * k + j] = s;
            }
        const double scale = static_cast<double>(n) / df_resid;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                double s = 0;
                for (std::size_t l = 0; l < k; ++l)
                    s += tmp[i * k + l] * xtx_inv[l * k + j];
                cov[i * k + j] = scale * s;
            }
    }

    const double t_crit = t_quantile(0.975, static_cast<int>(n - k));
    fit.coefficients.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        OlsCoefficient& c = fit.coefficients[i];
        c.name = i < names.size() ? names[i] : "x" + std::to_string(i);
        c.estimate = beta[i];
        c.std_error = std::sqrt(cov[i * k + i]);
        c.t = c.std_error > 0 ? c.estimate / c.std_error : 0;
        c.p = t_two_tailed_p(c.t, static_cast<int>(n - k));
        c.ci_low = c.estimate - t_crit * c.std_error;
        c.ci_high = c.estimate + t_crit * c.std_error;
    }

    // Joint test of the non-intercept coefficients.
    const std::size_t first = has_intercept ? 1 : 0;
    const std::size_t q = k - first;
    fit.f_df1 = static_cast<int>(q);
    fit.f_df2 = static_cast<int>(n - k);
    if (q == 0) {
        fit.model_f = 0;
        fit.model_f_p = 1;
        return fit;
    }
    if (covariance == Covariance::Classical && has_intercept) {
        fit.model_f = (fit.r_squared / static_cast<double>(q)) /
                      ((1 - fit.r_squared) / df_resid);
    } else {
        // Wald test under the chosen covariance.
        std::vector<double> sub(q * q, 0.0);
        std::vector<std::string> sub_names(names.begin() + static_cast<long>(first),
                                           names.end());
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                sub[i * q + j] = cov[(i + first) * k + (j + first)];
        const std::vector<double> sub_inv = invert(sub, q, sub_names);
        double w = 0;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                w += beta[i + first] * sub_inv[i * q + j] * beta[j + first];
        fit.model_f = w / static_cast<double>(q);
    }
    fit.model_f_p = f_sf(fit.model_f, fit.f_df1, fit.f_df2);
    return fit;
}

}  // namespace fss::stats
