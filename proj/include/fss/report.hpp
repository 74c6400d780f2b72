#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fss/comparison.hpp"
#include "fss/replication.hpp"
#include "fss/scoring.hpp"

namespace fss::report {

// Machine outputs carry full precision; the markdown mirrors the published
// rounding (FSS to 2 decimals, percentages whole).

void write_scores_csv(const std::filesystem::path& path, const PeriodScores& scores);

void write_unit_scores_csv(const std::filesystem::path& path,
                           const std::vector<UnitScore>& units,
                           const std::string& period_label);

struct UnitScoreRow {
    std::string unit_key;
    std::string level;
    std::string period;
    int staff = 0;
    double fss = 0;
};

std::vector<UnitScoreRow> read_unit_scores_csv(const std::filesystem::path& path);

void write_shifts_csv(const std::filesystem::path& path,
                      const std::vector<RankShift>& shifts,
                      const std::map<std::string, MacroRegion>* regions = nullptr);

void write_region_summary_csv(const std::filesystem::path& path,
                              const std::vector<RegionSummary>& regions);

void write_drilldown_csv(const std::filesystem::path& path,
                         const std::vector<DrillDownRow>& rows);

std::string render_shifts_markdown(const std::vector<RankShift>& shifts,
                                   const std::map<std::string, MacroRegion>* regions);

std::string render_region_markdown(const std::vector<RegionSummary>& regions);

std::string render_drilldown_markdown(const std::vector<DrillDownRow>& rows);

std::string render_replication_report(const replication::Result& result);

}  // namespace fss::report
