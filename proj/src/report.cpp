#include "fss/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fss/csv.hpp"
#include "fss/errors.hpp"

namespace fss::report {

namespace {

std::string num(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string pct(const std::optional<double>& v) {
    if (!v) return "n.a.";
    return std::to_string(static_cast<int>(std::lround(*v * 100.0))) + "%";
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write " + path.string());
    return out;
}

}  // namespace

void write_scores_csv(const std::filesystem::path& path, const PeriodScores& scores) {
    auto out = open_out(path);
    out << "prof_id,university_id,sds_code,uda_id,fss_p,scaled_fss\n";
    for (const auto& s : scores.professors) {
        out << csv::escape_field(s.prof_id) << ',' << csv::escape_field(s.university_id)
            << ',' << csv::escape_field(s.sds_code) << ',' << s.uda_id << ','
            << num(s.fss) << ',' << (s.scaled_defined ? num(s.scaled_fss) : "") << '\n';
    }
}

void write_unit_scores_csv(const std::filesystem::path& path,
                           const std::vector<UnitScore>& units,
                           const std::string& period_label) {
    auto out = open_out(path);
    out << "unit_key,level,period,staff,fss\n";
    for (const auto& u : units)
        out << csv::escape_field(u.unit_key) << ',' << level_name(u.level) << ','
            << period_label << ',' << u.staff << ',' << num(u.fss) << '\n';
}

std::vector<UnitScoreRow> read_unit_scores_csv(const std::filesystem::path& path) {
    const csv::Table t = csv::read_file(path);
    const auto c_key = t.column("unit_key");
    const auto c_level = t.column("level");
    const auto c_period = t.column("period");
    const auto c_staff = t.column("staff");
    const auto c_fss = t.column("fss");
    std::vector<UnitScoreRow> rows;
    for (const auto& row : t.rows) {
        UnitScoreRow r;
        r.unit_key = row.fields[c_key];
        r.level = row.fields[c_level];
        r.period = row.fields[c_period];
        const std::string& ss = row.fields[c_staff];
        auto [p1, e1] = std::from_chars(ss.data(), ss.data() + ss.size(), r.staff);
        const std::string& fs = row.fields[c_fss];
        auto [p2, e2] = std::from_chars(fs.data(), fs.data() + fs.size(), r.fss);
        if (e1 != std::errc{} || e2 != std::errc{})
            throw IngestError(path.string() + ":" + std::to_string(row.line_no) +
                              ": bad staff or fss value");
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_shifts_csv(const std::filesystem::path& path,
                      const std::vector<RankShift>& shifts,
                      const std::map<std::string, MacroRegion>* regions) {
    auto out = open_out(path);
    out << "unit_key,region,staff_before,fss_before,rank_before,staff_after,"
           "fss_after,rank_after,delta_fss,delta_rank,relative_delta_rank\n";
    for (const auto& s : shifts) {
        std::string region;
        if (regions) {
            auto it = regions->find(s.unit_key);
            if (it != regions->end()) region = region_code(it->second);
        }
        out << csv::escape_field(s.unit_key) << ',' << region << ',' << s.staff_before
            << ',' << num(s.fss_before) << ',' << s.rank_before << ',' << s.staff_after
            << ',' << num(s.fss_after) << ',' << s.rank_after << ',' << num(s.delta_fss)
            << ',' << s.delta_rank << ','
            << (s.relative_delta_rank ? num(*s.relative_delta_rank) : "") << '\n';
    }
}

void write_region_summary_csv(const std::filesystem::path& path,
                              const std::vector<RegionSummary>& regions) {
    auto out = open_out(path);
    out << "region,n_universities,n_improve,n_worsen,avg_relative_delta_rank,"
           "max_improvement,max_decline\n";
    for (const auto& r : regions) {
        out << region_name(r.region) << ',' << r.n_universities << ',' << r.n_improve
            << ',' << r.n_worsen << ','
            << (r.avg_relative_delta_rank ? num(*r.avg_relative_delta_rank) : "") << ','
            << (r.max_improvement ? num(*r.max_improvement) : "") << ','
            << (r.max_decline ? num(*r.max_decline) : "") << '\n';
    }
}

namespace {

std::vector<std::string> drilldown_groups(const std::vector<DrillDownRow>& rows) {
    std::set<std::string> groups;
    for (const auto& row : rows)
        for (const auto& [group, mark] : row.marks) groups.insert(group);
    std::vector<std::string> out(groups.begin(), groups.end());
    // Numeric groups (UDA ids) sort numerically, codes lexically.
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        int ia = 0, ib = 0;
        const auto ra = std::from_chars(a.data(), a.data() + a.size(), ia);
        const auto rb = std::from_chars(b.data(), b.data() + b.size(), ib);
        const bool na = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
        const bool nb = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
        if (na && nb) return ia < ib;
        if (na != nb) return na;
        return a < b;
    });
    return out;
}

}  // namespace

void write_drilldown_csv(const std::filesystem::path& path,
                         const std::vector<DrillDownRow>& rows) {
    auto out = open_out(path);
    const auto groups = drilldown_groups(rows);
    out << "unit_key,assessed,improving,share_improving";
    for (const auto& g : groups) out << ',' << csv::escape_field(g);
    out << '\n';
    for (const auto& row : rows) {
        out << csv::escape_field(row.unit_key) << ',' << row.assessed << ','
            << row.improving << ',' << num(row.share_improving);
        for (const auto& g : groups) {
            auto it = row.marks.find(g);
            out << ',' << (it == row.marks.end() ? ' ' : it->second);
        }
        out << '\n';
    }
}

std::string render_shifts_markdown(const std::vector<RankShift>& shifts,
                                   const std::map<std::string, MacroRegion>* regions) {
    std::ostringstream out;
    out << "| University | Region | Staff | FSS | Rank | Staff | FSS | Rank "
           "| dFSS | dRank | Relative dRank |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    std::vector<const RankShift*> ordered;
    for (const auto& s : shifts) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(), [](const RankShift* a, const RankShift* b) {
        const double ra = a->relative_delta_rank.value_or(2.0);
        const double rb = b->relative_delta_rank.value_or(2.0);
        if (ra != rb) return ra > rb;
        return a->unit_key < b->unit_key;
    });
    for (const RankShift* s : ordered) {
        std::string region;
        if (regions) {
            auto it = regions->find(s->unit_key);
            if (it != regions->end()) region = region_code(it->second);
        }
        out << "| " << s->unit_key << " | " << region << " | " << s->staff_before
            << " | " << fixed2(s->fss_before) << " | " << s->rank_before << " | "
            << s->staff_after << " | " << fixed2(s->fss_after) << " | " << s->rank_after
            << " | " << fixed2(s->delta_fss) << " | " << s->delta_rank << " | "
            << pct(s->relative_delta_rank) << " |\n";
    }
    return out.str();
}

std::string render_region_markdown(const std::vector<RegionSummary>& regions) {
    std::ostringstream out;
    out << "| Macro region | Universities | Improve | Worsen | Avg. rel. dRank | "
           "Max improvement | Max decline |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : regions) {
        out << "| " << region_name(r.region) << " | " << r.n_universities << " | "
            << r.n_improve << " | " << r.n_worsen << " | "
            << pct(r.avg_relative_delta_rank) << " | " << pct(r.max_improvement)
            << " | " << pct(r.max_decline) << " |\n";
    }
    return out.str();
}

std::string render_drilldown_markdown(const std::vector<DrillDownRow>& rows) {
    std::ostringstream out;
    const auto groups = drilldown_groups(rows);
    out << "| University | Assessed | Of which increasing |";
    for (const auto& g : groups) out << ' ' << g << " |";
    out << "\n|---|---|---|";
    for (std::size_t i = 0; i < groups.size(); ++i) out << "---|";
    out << '\n';
    std::vector<const DrillDownRow*> ordered;
    for (const auto& r : rows) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const DrillDownRow* a, const DrillDownRow* b) {
                  if (a->assessed != b->assessed) return a->assessed > b->assessed;
                  if (a->share_improving != b->share_improving)
                      return a->share_improving > b->share_improving;
                  return a->unit_key < b->unit_key;
              });
    for (const DrillDownRow* row : ordered) {
        out << "| " << row->unit_key << " | " << row->assessed << " | "
            << std::lround(row->share_improving * 100.0) << "% |";
        for (const auto& g : groups) {
            auto it = row->marks.find(g);
            out << ' ' << (it == row->marks.end() ? ' ' : it->second) << " |";
        }
        out << '\n';
    }
    return out.str();
}

std::string render_replication_report(const replication::Result& result) {
    std::ostringstream out;
    out << "Replication of the published 60-university comparison\n";
    out << "======================================================\n\n";
    std::size_t width = 0;
    for (const auto& c : result.checks) width = std::max(width, c.name.size());
    int failures = 0;
    for (const auto& c : result.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name
            << std::string(width - c.name.size() + 2, ' ') << "published "
            << num(c.expected) << "  computed " << num(c.actual) << "  tol "
            << num(c.tolerance);
        if (!c.note.empty()) out << "  (" << c.note << ')';
        out << '\n';
        if (!c.pass) ++failures;
    }
    out << '\n'
        << (failures == 0 ? "All checks passed."
                          : std::to_string(failures) + " check(s) failed.")
        << '\n';
    return out.str();
}

}  // namespace fss::report
