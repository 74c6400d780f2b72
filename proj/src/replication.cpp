#include "fss/replication.hpp"

#include <cmath>

#include "fss/fixture.hpp"

namespace fss::replication {

namespace {

int round_pct(double fraction) {
    return static_cast<int>(std::lround(fraction * 100.0));
}

void add(std::vector<Check>& checks, std::string name, double expected, double actual,
         double tolerance, std::string note = {}) {
    checks.push_back(Check{std::move(name), expected, actual, tolerance,
                           std::fabs(actual - expected) <= tolerance,
                           std::move(note)});
}

}  // namespace

bool Result::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<RankShift> fixture_rank_shifts() {
    const auto& records = fixture::table3();
    std::vector<UnitEntry> before, after;
    std::map<std::string, int> tie_before, tie_after;
    for (const auto& r : records) {
        before.push_back(UnitEntry{std::string(r.name), r.fss_before, r.staff_before});
        after.push_back(UnitEntry{std::string(r.name), r.fss_after, r.staff_after});
        tie_before[std::string(r.name)] = r.order_before;
        tie_after[std::string(r.name)] = r.order_after;
    }
    return compare_periods(before, after, 30, &tie_before, &tie_after);
}

Result replicate_published_tables() {
    const auto& records = fixture::table3();
    Result result;

    result.shifts = fixture_rank_shifts();
    add(result.checks, "joint ranking size", 60,
        static_cast<double>(result.shifts.size()), 0);

    // Per-university relative rank shift vs the published column (+-1 point).
    std::map<std::string, const RankShift*> by_key;
    for (const auto& s : result.shifts) by_key[s.unit_key] = &s;
    int matched = 0;
    std::string first_mismatch;
    for (const auto& r : records) {
        const RankShift* s = by_key.at(std::string(r.name));
        bool ok;
        if (!r.printed_relative_pct.has_value()) {
            ok = !s->relative_delta_rank.has_value();
        } else {
            ok = s->relative_delta_rank.has_value() &&
                 std::fabs(*s->relative_delta_rank * 100.0 -
                           *r.printed_relative_pct) <= 1.0;
        }
        if (ok)
            ++matched;
        else if (first_mismatch.empty())
            first_mismatch = std::string(r.name);
    }
    add(result.checks, "relative rank shifts within 1 point (rows of 60)", 60, matched,
        0, first_mismatch.empty() ? "" : "first mismatch: " + first_mismatch);

    for (const char* name :
         {"Salerno", "Napoli 'Federico II'", "della Basilicata",
          "Scuola Superiore S.Anna"}) {
        const RankShift* s = by_key.at(name);
        const fixture::UniversityRecord* rec = nullptr;
        for (const auto& r : records)
            if (r.name == name) rec = &r;
        add(result.checks, std::string("relative shift, ") + name,
            *rec->printed_relative_pct,
            s->relative_delta_rank ? *s->relative_delta_rank * 100.0 : 0.0, 1.0);
    }
    add(result.checks, "Vita - Salute San Raffaele undefined shift (n.a.)", 1,
        by_key.at("Vita - Salute San Raffaele")->relative_delta_rank ? 0 : 1, 0);

    // Macro-region summary.
    std::map<std::string, MacroRegion> regions;
    for (const auto& r : records) regions[std::string(r.name)] = r.region;
    result.regions = region_summary(result.shifts, regions);
    for (const auto& ref : fixture::table4()) {
        const RegionSummary* s = nullptr;
        for (const auto& candidate : result.regions)
            if (candidate.region == ref.region) s = &candidate;
        const std::string prefix = std::string(region_name(ref.region));
        add(result.checks, prefix + ": universities", ref.n_universities,
            s->n_universities, 0);
        add(result.checks, prefix + ": improving", ref.n_improve, s->n_improve, 0);
        add(result.checks, prefix + ": worsening", ref.n_worsen, s->n_worsen, 0);
        add(result.checks, prefix + ": avg relative shift (%)", ref.avg_relative_pct,
            s->avg_relative_delta_rank ? *s->avg_relative_delta_rank * 100.0 : 0.0,
            1.0);
        add(result.checks, prefix + ": max improvement (%)", ref.max_improvement_pct,
            s->max_improvement ? round_pct(*s->max_improvement) : 0, 0);
        add(result.checks, prefix + ": max decline (%)", ref.max_decline_pct,
            s->max_decline ? round_pct(*s->max_decline) : 0, 0);
    }

    // Dispersion and convergence.
    std::vector<double> fss_before, fss_after;
    for (const auto& r : records) {
        fss_before.push_back(r.fss_before);
        fss_after.push_back(r.fss_after);
    }
    const fixture::DispersionReference dref;
    result.dispersion_before = stats::dispersion(fss_before);
    result.dispersion_after = stats::dispersion(fss_after);
    add(result.checks, "std dev 2007-2011", dref.std_dev_before,
        result.dispersion_before.std_dev, 0.005);
    add(result.checks, "std dev 2013-2017", dref.std_dev_after,
        result.dispersion_after.std_dev, 0.005);
    add(result.checks, "IQR 2007-2011", dref.iqr_before, result.dispersion_before.iqr,
        0.02);
    add(result.checks, "IQR 2013-2017", dref.iqr_after, result.dispersion_after.iqr,
        0.02);
    add(result.checks, "range 2007-2011", dref.range_before,
        result.dispersion_before.range, 0.01);
    add(result.checks, "range 2013-2017", dref.range_after,
        result.dispersion_after.range, 0.01);
    add(result.checks, "skewness 2007-2011", dref.skewness_before,
        result.dispersion_before.skewness, 0.1);
    add(result.checks, "skewness 2013-2017", dref.skewness_after,
        result.dispersion_after.skewness, 0.1);

    result.fisher = stats::fisher_variance_test(fss_before, fss_after);
    add(result.checks, "variance-ratio F", dref.fisher_f, result.fisher.f_statistic,
        0.02);
    add(result.checks, "variance-ratio p < 0.005", 1,
        result.fisher.p_value < 0.005 ? 1 : 0, 0,
        "p = " + std::to_string(result.fisher.p_value));

    // Regression of the productivity change on first-period productivity
    // and the South dummy, heteroskedasticity-robust inference.
    std::vector<double> y, south;
    for (const auto& r : records) {
        y.push_back(r.fss_after - r.fss_before);
        south.push_back(r.region == MacroRegion::South ? 1.0 : 0.0);
    }
    std::vector<double> ones(records.size(), 1.0);
    result.ols = stats::ols(y, {ones, fss_before, south},
                            {"const", "fss_before", "south"}, stats::Covariance::Hc1);
    const fixture::RegressionReference rref;
    const auto& c = result.ols.coefficients;
    add(result.checks, "OLS const", rref.coef_const, c[0].estimate, 0.01);
    add(result.checks, "OLS fss_before", rref.coef_fss, c[1].estimate, 0.01);
    add(result.checks, "OLS south", rref.coef_south, c[2].estimate, 0.01);
    add(result.checks, "OLS const CI low", rref.ci_const_low, c[0].ci_low, 0.003);
    add(result.checks, "OLS const CI high", rref.ci_const_high, c[0].ci_high, 0.003);
    add(result.checks, "OLS fss_before CI low", rref.ci_fss_low, c[1].ci_low, 0.003);
    add(result.checks, "OLS fss_before CI high", rref.ci_fss_high, c[1].ci_high, 0.003);
    add(result.checks, "OLS south CI low", rref.ci_south_low, c[2].ci_low, 0.003);
    add(result.checks, "OLS south CI high", rref.ci_south_high, c[2].ci_high, 0.003);
    add(result.checks, "OLS R-squared", rref.r_squared, result.ols.r_squared, 0.01);
    add(result.checks, "OLS root MSE", rref.root_mse, result.ols.root_mse, 0.005);
    add(result.checks, "OLS model F(2,57)", rref.model_f, result.ols.model_f, 1.5);

    return result;
}

}  // namespace fss::replication
