// One line per acceptance criterion; exit 0 only when all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fss/comparison.hpp"
#include "fss/fixture.hpp"
#include "fss/replication.hpp"
#include "fss/scoring.hpp"
#include "fss/stats.hpp"
#include "fss/synthetic.hpp"

using namespace fss;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail) {
    std::printf("[%d] %-38s %s  %s\n", criterion, title, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++g_failures;
}

bool near(double actual, double expected, double tol) {
    return std::fabs(actual - expected) <= tol;
}

std::string fmt(const char* pattern, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// Criterion 1: the published regression, robust inference, under 1 second.
void check_regression(const replication::Result& r, double seconds) {
    const fixture::RegressionReference ref;
    const auto& c = r.ols.coefficients;
    bool ok = c.size() == 3;
    ok = ok && near(c[0].estimate, ref.coef_const, 0.01) &&
         near(c[1].estimate, ref.coef_fss, 0.01) &&
         near(c[2].estimate, ref.coef_south, 0.01);
    ok = ok && near(c[0].ci_low, ref.ci_const_low, 0.003) &&
         near(c[0].ci_high, ref.ci_const_high, 0.003) &&
         near(c[1].ci_low, ref.ci_fss_low, 0.003) &&
         near(c[1].ci_high, ref.ci_fss_high, 0.003) &&
         near(c[2].ci_low, ref.ci_south_low, 0.003) &&
         near(c[2].ci_high, ref.ci_south_high, 0.003);
    ok = ok && near(r.ols.r_squared, ref.r_squared, 0.01) &&
         near(r.ols.root_mse, ref.root_mse, 0.005) &&
         near(r.ols.model_f, ref.model_f, 1.5);
    ok = ok && r.ols.f_df1 == 2 && r.ols.f_df2 == 57;
    ok = ok && seconds < 1.0;
    report(1, "regression replication", ok,
           fmt("coef %.3f/", c[1].estimate) + fmt("R2 %.3f, ", r.ols.r_squared) +
               fmt("F %.2f, ", r.ols.model_f) + fmt("%.3f s", seconds));
}

void check_fisher(const replication::Result& r) {
    const bool ok =
        near(r.fisher.f_statistic, 2.14, 0.02) && r.fisher.p_value < 0.005;
    report(2, "variance convergence test", ok,
           fmt("F = %.4f, p = %.5f", r.fisher.f_statistic, r.fisher.p_value));
}

void check_dispersion(const replication::Result& r) {
    const auto& b = r.dispersion_before;
    const auto& a = r.dispersion_after;
    const bool ok = near(b.std_dev, 0.425, 0.005) && near(a.std_dev, 0.290, 0.005) &&
                    near(b.iqr, 0.372, 0.02) && near(a.iqr, 0.228, 0.02) &&
                    near(b.range, 2.79, 0.01) && near(a.range, 1.78, 0.01) &&
                    near(b.skewness, 3.261, 0.1) && near(a.skewness, 2.874, 0.1);
    report(3, "dispersion replication", ok,
           fmt("sd %.3f -> %.3f", b.std_dev, a.std_dev) +
               fmt(", IQR %.3f -> %.3f", b.iqr, a.iqr));
}

void check_rank_shifts(const replication::Result& r) {
    std::map<std::string, const RankShift*> by_key;
    for (const auto& s : r.shifts) by_key[s.unit_key] = &s;
    int matched = 0;
    for (const auto& rec : fixture::table3()) {
        const RankShift* s = by_key.at(std::string(rec.name));
        if (!rec.printed_relative_pct) {
            if (!s->relative_delta_rank) ++matched;
        } else if (s->relative_delta_rank &&
                   std::fabs(*s->relative_delta_rank * 100 -
                             *rec.printed_relative_pct) <= 1.0) {
            ++matched;
        }
    }
    auto pct = [&](const char* name) {
        const auto* s = by_key.at(name);
        return s->relative_delta_rank ? std::lround(*s->relative_delta_rank * 100)
                                      : 9999;
    };
    const bool named = pct("Salerno") == 74 && pct("Napoli 'Federico II'") == 63 &&
                       pct("della Basilicata") == -100 &&
                       pct("Scuola Superiore S.Anna") == -2 &&
                       pct("Vita - Salute San Raffaele") == 9999;
    report(4, "relative rank shifts, 60 rows", matched == 60 && named,
           fmt("%.0f of 60 within 1 point", matched));
}

void check_regions(const replication::Result& r) {
    bool ok = r.regions.size() == 3;
    std::string detail;
    for (const auto& ref : fixture::table4()) {
        const RegionSummary* s = nullptr;
        for (const auto& candidate : r.regions)
            if (candidate.region == ref.region) s = &candidate;
        if (!s) {
            ok = false;
            continue;
        }
        ok = ok && s->n_universities == ref.n_universities &&
             s->n_improve == ref.n_improve && s->n_worsen == ref.n_worsen;
        ok = ok && s->avg_relative_delta_rank &&
             near(*s->avg_relative_delta_rank * 100, ref.avg_relative_pct, 1.0);
        ok = ok && s->max_improvement &&
             std::lround(*s->max_improvement * 100) == ref.max_improvement_pct;
        detail += fmt("%.0f/%.0f ", s->n_improve, s->n_worsen);
    }
    report(5, "macro-region summary", ok, detail);
}

// Criterion 6: the individual-level equations, checked by properties.
void check_properties() {
    bool ok = true;
    std::string detail = "byline sums";

    for (int n = 1; n <= 50 && ok; ++n)
        for (auto scheme : {CountingScheme::Alphabetical, CountingScheme::Positional})
            for (bool intramural : {false, true}) {
                double sum = 0;
                for (int pos = 1; pos <= n; ++pos)
                    sum += fractional_contribution(pos, n, scheme, intramural);
                if (std::fabs(sum - 1.0) >= 1e-9) ok = false;
            }

    for (unsigned seed : {3u, 11u, 27u}) {
        synthetic::Config cfg;
        cfg.seed = seed;
        cfg.n_professors = 20;
        cfg.n_publications = 55;
        cfg.n_universities = 4;
        const auto ds = synthetic::make_dataset(cfg);
        ScoringOptions options;
        options.theta = 0.5;
        const auto scores =
            score_period_serial(ds.corpus, ds.period, ds.costs, ds.registry, options);

        // Productive-mean closure of the scaled values.
        std::map<std::string, std::pair<double, int>> closure;
        for (const auto& s : scores.professors)
            if (s.fss > 0) {
                closure[s.sds_code].first += s.scaled_fss;
                closure[s.sds_code].second += 1;
            }
        for (const auto& [sds, acc] : closure)
            if (std::fabs(acc.first / acc.second - 1.0) >= 1e-9) ok = false;

        // Brute-force aggregate: mean of fss over the SDS productive mean.
        std::map<std::string, std::pair<double, int>> sds_mean;
        for (const auto& s : scores.professors)
            if (s.fss > 0) {
                sds_mean[s.sds_code].first += s.fss;
                sds_mean[s.sds_code].second += 1;
            }
        std::map<std::string, std::pair<double, int>> unit_acc;
        for (const auto& s : scores.professors) {
            const auto it = sds_mean.find(s.sds_code);
            if (it == sds_mean.end()) continue;
            const double mean = it->second.first / it->second.second;
            unit_acc[s.university_id].first += s.fss / mean;
            unit_acc[s.university_id].second += 1;
        }
        const auto units = aggregate_fss(scores, UnitLevel::Overall);
        if (units.size() != unit_acc.size()) ok = false;
        for (const auto& u : units) {
            const auto& acc = unit_acc.at(u.unit_key);
            if (u.staff != acc.second ||
                std::fabs(u.fss - acc.first / acc.second) >= 1e-12)
                ok = false;
        }
    }

    // Rank invariance and zero-sum rank shifts on the embedded dataset.
    {
        std::vector<UnitEntry> units;
        for (const auto& rec : fixture::table3())
            units.push_back(UnitEntry{std::string(rec.name), rec.fss_before,
                                      rec.staff_before});
        auto transformed = units;
        for (auto& u : transformed) u.fss = std::log1p(u.fss) * 4 + 1;
        const auto a = rank_units(units);
        const auto b = rank_units(transformed);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].unit_key != b[i].unit_key || a[i].rank != b[i].rank) ok = false;

        int sum = 0;
        for (const auto& s : replication::fixture_rank_shifts()) sum += s.delta_rank;
        if (sum != 0) ok = false;
        detail += fmt(", sum dRank = %.0f", sum);
    }

    report(6, "scoring property suite", ok, detail);
}

// Criterion 7: numeric kernels and worker-count independence.
void check_numerics() {
    bool ok = true;

    for (double x : {0.1, 0.37, 0.5, 0.93})
        if (std::fabs(stats::incomplete_beta(1, 1, x) - x) >= 1e-10) ok = false;
    auto beta23 = [](double x) {
        return 6 * x * x - 8 * x * x * x + 3 * x * x * x * x;
    };
    for (double x : {0.2, 0.5, 0.75})
        if (std::fabs(stats::incomplete_beta(2, 3, x) - beta23(x)) >= 1e-10) ok = false;
    for (double a : {0.5, 2.0, 6.5})
        if (std::fabs(stats::incomplete_beta(a, a, 0.5) - 0.5) >= 1e-10) ok = false;

    // Residual orthogonality on the fixture regression.
    std::vector<double> y, fss_before, south, ones;
    for (const auto& rec : fixture::table3()) {
        y.push_back(rec.fss_after - rec.fss_before);
        fss_before.push_back(rec.fss_before);
        south.push_back(rec.region == MacroRegion::South ? 1.0 : 0.0);
        ones.push_back(1.0);
    }
    const auto fit = stats::ols(y, {ones, fss_before, south},
                                {"const", "fss_before", "south"});
    double max_dot = 0;
    for (const auto& col : {ones, fss_before, south}) {
        double dot = 0;
        for (std::size_t i = 0; i < col.size(); ++i) dot += col[i] * fit.residuals[i];
        max_dot = std::max(max_dot, std::fabs(dot));
    }
    if (max_dot >= 1e-8) ok = false;

    // Same scores regardless of worker count.
    synthetic::Config cfg;
    cfg.seed = 5;
    cfg.n_professors = 300;
    cfg.n_publications = 900;
    const auto ds = synthetic::make_dataset(cfg);
    ScoringOptions base;
    base.theta = 0.5;
    base.jobs = 1;
    const auto reference =
        score_period(ds.corpus, ds.period, ds.costs, ds.registry, base);
    for (int jobs : {0, 2, 5}) {
        ScoringOptions options = base;
        options.jobs = jobs;
        const auto run =
            score_period(ds.corpus, ds.period, ds.costs, ds.registry, options);
        if (run.professors.size() != reference.professors.size()) ok = false;
        for (std::size_t i = 0; i < run.professors.size() && ok; ++i)
            if (run.professors[i].fss != reference.professors[i].fss ||
                run.professors[i].scaled_fss != reference.professors[i].scaled_fss)
                ok = false;
    }

    report(7, "numeric kernels", ok, fmt("max |X'e| = %.2e", max_dot));
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = replication::replicate_published_tables();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    check_regression(result, seconds);
    check_fisher(result);
    check_dispersion(result);
    check_rank_shifts(result);
    check_regions(result);
    check_properties();
    check_numerics();

    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
