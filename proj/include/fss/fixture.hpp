#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "fss/taxonomy.hpp"

namespace fss::fixture {

/// One of the 60 universities of the published before/after comparison.
/// FSS values carry the printed 2-decimal precision; the printed per-period
/// orderings are kept as tie keys because 2-decimal rounding collapses
/// FSS values that the full-precision data distinguishes.
struct UniversityRecord {
    std::string_view name;
    MacroRegion region;
    int staff_before;
    double fss_before;
    int order_before;  // printed 2007-2011 rank, used as tie key
    int staff_after;
    double fss_after;
    int order_after;   // printed 2013-2017 rank, used as tie key
    // Published columns, kept for replication checks:
    double printed_delta_fss;
    int printed_delta_rank;
    std::optional<int> printed_relative_pct;  // whole percent; nullopt = "n.a."
};

const std::array<UniversityRecord, 60>& table3();

/// Published regression results the replication is checked against.
struct RegressionReference {
    double coef_const = 0.333, se_const = 0.044, ci_const_low = 0.245,
           ci_const_high = 0.420;
    double coef_fss = -0.344, se_fss = 0.040, ci_fss_low = -0.423,
           ci_fss_high = -0.265;
    double coef_south = 0.069, se_south = 0.031, ci_south_low = 0.006,
           ci_south_high = 0.131;
    double r_squared = 0.675, root_mse = 0.114, model_f = 51.50;
};

/// Published dispersion and convergence statistics.
struct DispersionReference {
    double std_dev_before = 0.425, std_dev_after = 0.290;
    double iqr_before = 0.372, iqr_after = 0.228;
    double range_before = 2.791, range_after = 1.777;
    double skewness_before = 3.261, skewness_after = 2.874;
    double fisher_f = 2.140;
};

/// Published macro-region summary (Table 4).
struct RegionReference {
    MacroRegion region;
    int n_universities;
    int n_improve;
    int n_worsen;
    int avg_relative_pct;   // whole percent
    int max_improvement_pct;
    int max_decline_pct;
};

const std::array<RegionReference, 3>& table4();

}  // namespace fss::fixture
