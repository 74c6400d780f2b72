#pragma once

#include <map>
#include <string>
#include <vector>

#include "fss/corpus.hpp"
#include "fss/taxonomy.hpp"

namespace fss {

struct ArticleScore {
    std::string pub_id;
    double normalized_citations = 0;
    double normalized_if = 0;
    double quality = 0;  // c_i = theta * norm_cit + (1 - theta) * norm_if
};

struct ProfessorScore {
    std::string prof_id;
    std::string university_id;
    std::string sds_code;
    int uda_id = 0;
    double fss = 0;         // Eq. 1 value, cost-normalized, per year
    double scaled_fss = 0;  // fss / SDS productive mean
    bool scaled_defined = false;  // false when the SDS has no productive member
};

enum class UnitLevel { Overall, Uda, Sds };
std::string_view level_name(UnitLevel level);

struct UnitScore {
    std::string unit_key;  // university id, "uni|uda:N", or "uni|sds:CODE"
    std::string university_id;
    UnitLevel level = UnitLevel::Overall;
    std::string group;  // UDA id or SDS code, empty at Overall level
    int staff = 0;      // RS
    double fss = 0;     // Eq. 2 value
};

/// Byline credit share of the author at `position` (1-based).
/// Alphabetical: 1/n. Positional: role weights 40/20/40 (intramural) or
/// 30/15/10/15/30 (extramural); coinciding roles sum and the byline is
/// renormalized to 1.
double fractional_contribution(int position, int n_authors, CountingScheme scheme,
                               bool intramural);

ArticleScore article_quality(const Publication& pub, const Journal& journal,
                             const Baselines& baselines, double theta);

struct ScoringOptions {
    double theta = 0.5;
    int jobs = 0;  // 0 = library default; 1 forces the serial path
    const Baselines* external_baselines = nullptr;  // fallback for empty cells
};

struct PeriodScores {
    ObservationPeriod period;
    std::vector<ProfessorScore> professors;        // sorted by prof_id
    std::map<std::string, double> sds_factors;     // productive mean per SDS
    std::vector<std::string> warnings;             // e.g. SDS with no productive member
};

/// Full per-period pipeline: Eq. 1 per professor, SDS scaling, warnings.
/// Serial reference implementation.
PeriodScores score_period_serial(const Corpus& corpus, const ObservationPeriod& period,
                                 const CostTable& costs, const SdsRegistry& registry,
                                 const ScoringOptions& options);

/// OpenMP-parallel equivalent; output is identical to the serial path
/// for any worker count.
PeriodScores score_period(const Corpus& corpus, const ObservationPeriod& period,
                          const CostTable& costs, const SdsRegistry& registry,
                          const ScoringOptions& options);

/// Eq. 1 for one professor given the summed quality*fraction of their
/// period publications.
double individual_fss(double sum_quality_times_fraction, int years_active,
                      double cost_factor);

/// Per-SDS mean of fss over productive professors (fss > 0).
/// SDSs with no productive member are absent from the result.
std::map<std::string, double> sds_scaling_factors(
    const std::vector<ProfessorScore>& scores);

/// Eq. 2 aggregation at the requested level. Members whose scaled value is
/// undefined (SDS without productive professors) are excluded with the
/// warning already emitted by scoring.
std::vector<UnitScore> aggregate_fss(const PeriodScores& scores, UnitLevel level);

/// Parallel per-unit aggregation; identical output to aggregate_fss.
std::vector<UnitScore> aggregate_fss_parallel(const PeriodScores& scores,
                                              UnitLevel level, int jobs = 0);

double unproductive_share(const std::vector<ProfessorScore>& scores);

}  // namespace fss
