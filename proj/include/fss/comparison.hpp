#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fss/scoring.hpp"
#include "fss/taxonomy.hpp"

namespace fss {

struct RankedUnit {
    std::string unit_key;
    double fss = 0;
    int staff = 0;
    int rank = 0;  // 1-based, 1 = best
};

struct RankShift {
    std::string unit_key;
    int staff_before = 0;
    int staff_after = 0;
    double fss_before = 0;
    double fss_after = 0;
    int rank_before = 0;
    int rank_after = 0;
    int delta_rank = 0;  // rank_before - rank_after; > 0 is an improvement
    std::optional<double> relative_delta_rank;  // in [-1, 1]; nullopt = "n.a."
    double delta_fss = 0;
};

struct RegionSummary {
    MacroRegion region;
    int n_universities = 0;
    int n_improve = 0;
    int n_worsen = 0;
    std::optional<double> avg_relative_delta_rank;  // undefined entries excluded
    std::optional<double> max_improvement;
    std::optional<double> max_decline;
};

struct DrillDownRow {
    std::string unit_key;
    int assessed = 0;
    int improving = 0;
    double share_improving = 0;            // improving / assessed
    std::map<std::string, char> marks;     // group -> '+', '-', '='
};

struct UnitEntry {
    std::string unit_key;
    double fss = 0;
    int staff = 0;
};

/// Ranks units descending by fss. Ties break ascending by `tie_key`
/// (the unit key itself when no explicit keys are given). Units with
/// staff < min_staff are excluded. Duplicate unit keys are an error.
std::vector<RankedUnit> rank_units(
    std::vector<UnitEntry> units, int min_staff = 0,
    const std::map<std::string, int>* tie_keys = nullptr);

/// Pairs two rankings over the same unit set. delta_rank = before - after;
/// relative shift is delta over the maximum shift attainable from the
/// starting rank, undefined when that maximum is zero.
std::vector<RankShift> rank_shift(const std::vector<RankedUnit>& before,
                                  const std::vector<RankedUnit>& after);

/// Joint before/after ranking: keeps units meeting min_staff in *both*
/// periods, ranks each period over that joint set, and pairs them.
std::vector<RankShift> compare_periods(
    const std::vector<UnitEntry>& before, const std::vector<UnitEntry>& after,
    int min_staff,
    const std::map<std::string, int>* tie_keys_before = nullptr,
    const std::map<std::string, int>* tie_keys_after = nullptr);

std::vector<RegionSummary> region_summary(
    const std::vector<RankShift>& shifts,
    const std::map<std::string, MacroRegion>& regions);

/// UDA/SDS drill-down: per university, the rank-shift mark in every group
/// (UDA id or SDS code) assessed in both periods. `before` and `after`
/// are unit scores at Uda or Sds level. Universities with no assessed
/// group are omitted.
std::vector<DrillDownRow> drill_down(const std::vector<UnitScore>& before,
                                     const std::vector<UnitScore>& after);

}  // namespace fss
