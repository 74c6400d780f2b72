#pragma once

#include <string>
#include <vector>

#include "fss/comparison.hpp"
#include "fss/stats.hpp"

namespace fss::replication {

struct Check {
    std::string name;
    double expected = 0;
    double actual = 0;
    double tolerance = 0;
    bool pass = false;
    std::string note;
};

struct Result {
    std::vector<Check> checks;
    std::vector<RankShift> shifts;          // fixture joint ranking
    std::vector<RegionSummary> regions;
    stats::DispersionSummary dispersion_before;
    stats::DispersionSummary dispersion_after;
    stats::VarianceTestResult fisher;
    stats::OlsFit ols;

    bool all_pass() const;
};

/// Recomputes ranks, rank shifts, the macro-region summary, dispersion,
/// the variance-ratio test, and the regression from the embedded
/// 60-university dataset, and compares each value against the published
/// one at a fixed tolerance.
Result replicate_published_tables();

/// Rank shifts for the embedded dataset (ranks recomputed from its FSS
/// values, ties resolved by the recorded per-period orderings).
std::vector<RankShift> fixture_rank_shifts();

}  // namespace fss::replication
