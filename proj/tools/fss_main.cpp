#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fss/corpus.hpp"
#include "fss/csv.hpp"
#include "fss/errors.hpp"
#include "fss/replication.hpp"
#include "fss/report.hpp"
#include "fss/scoring.hpp"
#include "fss/stats.hpp"
#include "fss/taxonomy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitInputError = 2;

fss::ObservationPeriod parse_period(const std::string& s, const std::string& census) {
    const auto dash = s.find('-');
    if (dash == std::string::npos)
        throw fss::IngestError("bad period '" + s + "' (want YYYY-YYYY)");
    fss::ObservationPeriod p;
    p.start_year = std::stoi(s.substr(0, dash));
    p.end_year = std::stoi(s.substr(dash + 1));
    if (p.end_year < p.start_year)
        throw fss::IngestError("bad period '" + s + "': end before start");
    p.census_date = census.empty()
                        ? std::to_string(p.end_year) + "-12-31"
                        : census;
    return p;
}

// Period data may live in a per-period subdirectory of the corpus root.
fs::path period_directory(const fs::path& corpus, const fss::ObservationPeriod& p) {
    const fs::path sub = corpus / p.label();
    return fs::exists(sub) ? sub : corpus;
}

struct ScoreArgs {
    std::string corpus;
    std::string period_before, period_after;
    std::string census_before, census_after;
    double theta = 0.5;
    int min_staff = 30;
    int jobs = 0;
    std::string out = ".";
    bool strict = false;
    bool allow_external_baselines = false;
};

void score_one_period(const fs::path& corpus_root, const fss::ObservationPeriod& period,
                      const fss::CostTable& costs, const fss::SdsRegistry& registry,
                      const ScoreArgs& args, const fs::path& out_dir) {
    const fs::path dir = period_directory(corpus_root, period);
    const fss::Corpus corpus = fss::ingest_corpus(dir, args.strict);
    for (const auto& note : corpus.validation_report)
        std::cerr << "warning: " << note << '\n';

    fss::ScoringOptions options;
    options.theta = args.theta;
    options.jobs = args.jobs;
    fss::Baselines external;
    if (args.allow_external_baselines && fs::exists(dir / "baselines.csv")) {
        external = fss::load_baselines(dir / "baselines.csv");
        options.external_baselines = &external;
    }

    const fss::PeriodScores scores =
        fss::score_period(corpus, period, costs, registry, options);
    for (const auto& w : scores.warnings) std::cerr << "warning: " << w << '\n';

    fss::report::write_scores_csv(out_dir / ("scores_" + period.label() + ".csv"),
                                  scores);
    std::vector<fss::UnitScore> units;
    for (auto level : {fss::UnitLevel::Overall, fss::UnitLevel::Uda, fss::UnitLevel::Sds}) {
        auto scored = fss::aggregate_fss_parallel(scores, level, args.jobs);
        units.insert(units.end(), scored.begin(), scored.end());
    }
    fss::report::write_unit_scores_csv(
        out_dir / ("unit_scores_" + period.label() + ".csv"), units, period.label());

    std::cout << period.label() << ": " << scores.professors.size()
              << " professors scored, unproductive share "
              << fss::unproductive_share(scores.professors) << '\n';
}

int cmd_score(const ScoreArgs& args) {
    const fs::path corpus_root = args.corpus;
    const fs::path out_dir = args.out;
    fs::create_directories(out_dir);

    const auto before = parse_period(args.period_before, args.census_before);
    const auto after = parse_period(args.period_after, args.census_after);
    if (before.end_year >= after.start_year)
        throw fss::IngestError("periods overlap: " + before.label() + " vs " +
                               after.label());

    const auto costs = fss::load_cost_table(corpus_root / "cost_table.csv");
    const auto registry = fss::load_sds_table(corpus_root / "sds_table.csv");

    score_one_period(corpus_root, before, costs, registry, args, out_dir);
    score_one_period(corpus_root, after, costs, registry, args, out_dir);

    json meta;
    meta["version"] = kVersion;
    meta["theta"] = args.theta;
    meta["period_before"] = before.label();
    meta["period_after"] = after.label();
    meta["census_before"] = before.census_date;
    meta["census_after"] = after.census_date;
    meta["min_staff"] = args.min_staff;
    meta["jobs"] = args.jobs;
    meta["strict"] = args.strict;
    std::ofstream(out_dir / "run_metadata.json") << meta.dump(2) << '\n';
    return kExitOk;
}

struct CompareArgs {
    std::string before_file, after_file;
    int min_staff = 30;
    std::string universities;
    std::string out = ".";
};

int cmd_compare(const CompareArgs& args) {
    const fs::path out_dir = args.out;
    fs::create_directories(out_dir);

    const auto before_rows = fss::report::read_unit_scores_csv(args.before_file);
    const auto after_rows = fss::report::read_unit_scores_csv(args.after_file);

    const auto filter = [](const std::vector<fss::report::UnitScoreRow>& rows,
                           const std::string& level) {
        std::vector<fss::UnitEntry> out;
        for (const auto& r : rows)
            if (r.level == level) out.push_back({r.unit_key, r.fss, r.staff});
        return out;
    };

    const auto shifts = fss::compare_periods(filter(before_rows, "overall"),
                                             filter(after_rows, "overall"),
                                             args.min_staff);
    if (shifts.empty())
        throw fss::IngestError("no overall-level units shared by both files at "
                               "min_staff " + std::to_string(args.min_staff));

    std::map<std::string, fss::MacroRegion> regions;
    const std::map<std::string, fss::MacroRegion>* regions_ptr = nullptr;
    if (!args.universities.empty()) {
        const auto t = fss::csv::read_file(args.universities);
        const auto c_id = t.column("university_id");
        const auto c_reg = t.column("macro_region");
        for (const auto& row : t.rows)
            regions[row.fields[c_id]] = fss::parse_region(row.fields[c_reg]);
        regions_ptr = &regions;
    }

    fss::report::write_shifts_csv(out_dir / "shifts.csv", shifts, regions_ptr);

    std::string markdown = "# Rank-shift comparison\n\n" +
                           fss::report::render_shifts_markdown(shifts, regions_ptr);

    if (regions_ptr) {
        const auto summary = fss::region_summary(shifts, regions);
        fss::report::write_region_summary_csv(out_dir / "region_summary.csv", summary);
        markdown += "\n# Macro-region summary\n\n" +
                    fss::report::render_region_markdown(summary);
    } else {
        std::cerr << "note: no --universities file given, region summary skipped\n";
    }

    // Drill-down matrices from the UDA- and SDS-level unit scores.
    const auto to_units = [](const std::vector<fss::report::UnitScoreRow>& rows,
                             const std::string& level) {
        std::vector<fss::UnitScore> out;
        for (const auto& r : rows) {
            if (r.level != level) continue;
            fss::UnitScore u;
            u.unit_key = r.unit_key;
            const auto bar = r.unit_key.find('|');
            u.university_id = r.unit_key.substr(0, bar);
            const auto colon = r.unit_key.find(':', bar);
            u.group = colon == std::string::npos ? "" : r.unit_key.substr(colon + 1);
            u.level = level == "uda" ? fss::UnitLevel::Uda : fss::UnitLevel::Sds;
            u.staff = r.staff;
            u.fss = r.fss;
            out.push_back(std::move(u));
        }
        return out;
    };
    for (const auto& [level, file] :
         std::vector<std::pair<std::string, std::string>>{
             {"uda", "drilldown.csv"}, {"sds", "drilldown_sds.csv"}}) {
        const auto b = to_units(before_rows, level);
        const auto a = to_units(after_rows, level);
        if (b.empty() || a.empty()) continue;
        const auto matrix = fss::drill_down(b, a);
        fss::report::write_drilldown_csv(out_dir / file, matrix);
        markdown += "\n# Rank variation per " + level + "\n\n" +
                    fss::report::render_drilldown_markdown(matrix);
    }

    std::ofstream(out_dir / "report.md") << markdown;
    std::cout << "compared " << shifts.size() << " units\n";
    return kExitOk;
}

int cmd_replicate(const std::string& out) {
    const auto result = fss::replication::replicate_published_tables();
    const std::string text = fss::report::render_replication_report(result);
    std::cout << text;
    if (!out.empty()) {
        fs::create_directories(out);
        std::ofstream(fs::path(out) / "replication_report.txt") << text;
        fss::report::write_shifts_csv(fs::path(out) / "shifts.csv", result.shifts);
        fss::report::write_region_summary_csv(fs::path(out) / "region_summary.csv",
                                              result.regions);
    }
    return result.all_pass() ? kExitOk : kExitToleranceFailure;
}

struct StatsArgs {
    std::string input;
    std::vector<std::string> dispersion_cols;
    std::string fisher;  // "colA,colB"
    std::string ols;     // "y=x1+x2"
    bool robust = false;
};

std::vector<double> numeric_column(const fss::csv::Table& t, const std::string& name) {
    const auto idx = t.column(name);
    std::vector<double> out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) out.push_back(std::stod(row.fields[idx]));
    return out;
}

int cmd_stats(const StatsArgs& args) {
    const auto t = fss::csv::read_file(args.input);
    json out;

    for (const auto& col : args.dispersion_cols) {
        const auto d = fss::stats::dispersion(numeric_column(t, col));
        out["dispersion"][col] = {
            {"n", d.n},       {"mean", d.mean},   {"median", d.median},
            {"std_dev", d.std_dev}, {"min", d.min}, {"max", d.max},
            {"range", d.range},     {"q1", d.q1},   {"q3", d.q3},
            {"iqr", d.iqr},
            {"skewness", d.skewness},
            {"skewness_defined", d.skewness_defined}};
    }

    if (!args.fisher.empty()) {
        const auto comma = args.fisher.find(',');
        if (comma == std::string::npos)
            throw fss::IngestError("--fisher wants two column names: a,b");
        const auto r = fss::stats::fisher_variance_test(
            numeric_column(t, args.fisher.substr(0, comma)),
            numeric_column(t, args.fisher.substr(comma + 1)));
        out["fisher"] = {{"test", "variance ratio"},
                         {"statistic", r.f_statistic},
                         {"df", {r.df1, r.df2}},
                         {"p_value", r.p_value},
                         {"convention", "one-tailed, larger variance over smaller"}};
    }

    if (!args.ols.empty()) {
        const auto eq = args.ols.find('=');
        if (eq == std::string::npos)
            throw fss::IngestError("--ols wants y=x1+x2+...");
        const std::string ycol = args.ols.substr(0, eq);
        std::vector<std::string> names = {"const"};
        std::vector<std::vector<double>> columns;
        std::string rest = args.ols.substr(eq + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const auto plus = rest.find('+', pos);
            const std::string col =
                rest.substr(pos, plus == std::string::npos ? plus : plus - pos);
            if (!col.empty()) names.push_back(col);
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
        const auto y = numeric_column(t, ycol);
        columns.push_back(std::vector<double>(y.size(), 1.0));
        for (std::size_t i = 1; i < names.size(); ++i)
            columns.push_back(numeric_column(t, names[i]));
        const auto fit = fss::stats::ols(
            y, columns, names,
            args.robust ? fss::stats::Covariance::Hc1
                        : fss::stats::Covariance::Classical);
        json coeffs = json::array();
        for (const auto& c : fit.coefficients)
            coeffs.push_back({{"name", c.name},
                              {"estimate", c.estimate},
                              {"std_error", c.std_error},
                              {"t", c.t},
                              {"p", c.p},
                              {"ci95", {c.ci_low, c.ci_high}}});
        out["ols"] = {{"dependent", ycol},
                      {"coefficients", coeffs},
                      {"r_squared", fit.r_squared},
                      {"root_mse", fit.root_mse},
                      {"model_f",
                       {{"statistic", fit.model_f},
                        {"df", {fit.f_df1, fit.f_df2}},
                        {"p_value", fit.model_f_p}}},
                      {"covariance", args.robust ? "hc1" : "classical"}};
    }

    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Research-productivity (FSS) scoring and before/after rank analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ScoreArgs score_args;
    auto* score = app.add_subcommand(
        "score", "Score a corpus: per-professor FSS and unit aggregates per period");
    score->add_option("--corpus", score_args.corpus, "Corpus directory")->required();
    score->add_option("--period-before", score_args.period_before, "YYYY-YYYY")
        ->required();
    score->add_option("--period-after", score_args.period_after, "YYYY-YYYY")
        ->required();
    score->add_option("--census-before", score_args.census_before,
                      "Citation census date (ISO), default Dec 31 of the period end");
    score->add_option("--census-after", score_args.census_after, "ISO date");
    score->add_option("--theta", score_args.theta,
                      "Weight of normalized citations vs normalized IF in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    score->add_option("--min-staff", score_args.min_staff, "Overall ranking threshold");
    score->add_option("--jobs", score_args.jobs, "Worker cap (0 = all cores)");
    score->add_option("--out", score_args.out, "Output directory");
    score->add_flag("--strict", score_args.strict,
                    "Fail on dangling references instead of reporting them");
    score->add_flag("--allow-external-baselines", score_args.allow_external_baselines,
                    "Fall back to baselines.csv for empty baseline cells");

    CompareArgs compare_args;
    auto* compare = app.add_subcommand(
        "compare", "Before/after rank shifts from two unit-score files");
    compare->add_option("--before", compare_args.before_file, "unit_scores.csv (before)")
        ->required();
    compare->add_option("--after", compare_args.after_file, "unit_scores.csv (after)")
        ->required();
    compare->add_option("--min-staff", compare_args.min_staff,
                        "Minimum staff in both periods (overall level)");
    compare->add_option("--universities", compare_args.universities,
                        "universities.csv for the macro-region summary");
    compare->add_option("--out", compare_args.out, "Output directory");

    std::string replicate_out;
    auto* replicate = app.add_subcommand(
        "replicate", "Recompute the published 60-university tables and check "
                     "each value against its printed counterpart");
    replicate->add_option("--out", replicate_out, "Optional output directory");

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Dispersion / variance-ratio / OLS on "
                                              "columns of a CSV file");
    stats->add_option("--input", stats_args.input, "CSV file")->required();
    stats->add_option("--dispersion", stats_args.dispersion_cols,
                      "Column to summarize (repeatable)");
    stats->add_option("--fisher", stats_args.fisher, "Two columns: a,b");
    stats->add_option("--ols", stats_args.ols, "y=x1+x2+... (intercept added)");
    stats->add_flag("--robust", stats_args.robust, "HC1 covariance for --ols");

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed()) return cmd_score(score_args);
        if (compare->parsed()) return cmd_compare(compare_args);
        if (replicate->parsed()) return cmd_replicate(replicate_out);
        if (stats->parsed()) return cmd_stats(stats_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
