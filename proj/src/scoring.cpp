#include "fss/scoring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fss/errors.hpp"

namespace fss {

std::string_view level_name(UnitLevel level) {
    switch (level) {
        case UnitLevel::Overall: return "overall";
        case UnitLevel::Uda: return "uda";
        case UnitLevel::Sds: return "sds";
    }
    return "?";
}

double fractional_contribution(int position, int n_authors, CountingScheme scheme,
                               bool intramural) {
    if (n_authors < 1)
        throw NumericError("fractional_contribution: n_authors must be >= 1");
    if (position < 1 || position > n_authors)
        throw NumericError("fractional_contribution: position " +
                           std::to_string(position) + " out of range [1, " +
                           std::to_string(n_authors) + "]");
    if (scheme == CountingScheme::Alphabetical) return 1.0 / n_authors;

    const int n = n_authors;
    auto raw = [&](int pos) {
        double w = 0;
        int roles = 0;  // positions holding a named role
        if (intramural) {
            if (pos == 1) w += 0.40;
            if (pos == n) w += 0.40;
            roles = (n == 1) ? 1 : 2;
            if (w == 0) w = 0.20 / (n - roles);
        } else {
            if (pos == 1) w += 0.30;
            if (pos == n) w += 0.30;
            if (n >= 2 && pos == 2) w += 0.15;
            if (n >= 2 && pos == n - 1) w += 0.15;
            roles = std::min(n, 4);
            if (w == 0) w = 0.10 / (n - roles);
        }
        return w;
    };

    double total = 0;
    for (int pos = 1; pos <= n; ++pos) total += raw(pos);
    return raw(position) / total;
}

ArticleScore article_quality(const Publication& pub, const Journal& journal,
                             const Baselines& baselines, double theta) {
    if (theta < 0 || theta > 1)
        throw NumericError("theta must lie in [0, 1]");
    // Multi-SC journals: per-publication baseline is the mean of the
    // per-SC baselines.
    double cit_base = 0;
    double if_base = 0;
    for (const auto& sc : journal.sc_codes) {
        const Baselines::Cell& cell = baselines.cell(pub.year, sc);
        cit_base += cell.mean_citations_of_cited;
        if_base += cell.mean_if;
    }
    cit_base /= static_cast<double>(journal.sc_codes.size());
    if_base /= static_cast<double>(journal.sc_codes.size());

    auto if_it = journal.impact_factor.find(pub.year);
    if (if_it == journal.impact_factor.end())
        throw LookupError("journal '" + journal.id + "' has no impact factor for year " +
                          std::to_string(pub.year));

    ArticleScore score;
    score.pub_id = pub.id;
    score.normalized_citations = pub.citations_at_census / cit_base;
    score.normalized_if = if_it->second / if_base;
    score.quality =
        theta * score.normalized_citations + (1 - theta) * score.normalized_if;
    return score;
}

double individual_fss(double sum_quality_times_fraction, int years_active,
                      double cost_factor) {
    assert(years_active > 0 && "period filtering guarantees t >= 3");
    return sum_quality_times_fraction / (cost_factor * years_active);
}

std::map<std::string, double> sds_scaling_factors(
    const std::vector<ProfessorScore>& scores) {
    std::map<std::string, std::pair<double, int>> acc;  // sum, count of productive
    for (const auto& s : scores) {
        if (s.fss > 0) {
            auto& [sum, count] = acc[s.sds_code];
            sum += s.fss;
            count += 1;
        }
    }
    std::map<std::string, double> factors;
    for (const auto& [sds, sc] : acc) factors[sds] = sc.first / sc.second;
    return factors;
}

namespace {

struct ProfessorWork {
    const Professor* prof;
    // (publication, byline position), ordered by (pub_id, position) so the
    // Eq. 1 sum is bit-identical across runs and worker counts.
    std::vector<std::pair<const Publication*, int>> pubs;
};

PeriodScores score_period_impl(const Corpus& corpus, const ObservationPeriod& period,
                               const CostTable& costs, const SdsRegistry& registry,
                               const ScoringOptions& options, bool parallel) {
    const PeriodDataset ds = period_dataset(corpus, period);
    const Baselines baselines =
        compute_baselines(corpus, period, options.external_baselines);

    std::map<std::string, ProfessorWork> work;
    for (const Professor* prof : ds.professors)
        work[prof->id] = ProfessorWork{prof, {}};
    for (const Authorship& a : corpus.authorships) {
        auto it = work.find(a.prof_id);
        if (it == work.end()) continue;  // below the 3-year threshold
        const Publication& pub = corpus.publications.at(a.pub_id);
        if (!period.contains(pub.year)) continue;
        it->second.pubs.emplace_back(&pub, a.position);
    }

    std::vector<const ProfessorWork*> items;
    items.reserve(work.size());
    for (const auto& [id, w] : work) items.push_back(&w);

    PeriodScores out;
    out.period = period;
    out.professors.resize(items.size());

    const auto score_one = [&](std::size_t i) {
        const ProfessorWork& w = *items[i];
        const Professor& prof = *w.prof;
        const auto& sds = registry.sds(prof.sds_code);
        const double factor = costs.normalization_factor(sds.uda_id, prof.rank);
        double sum = 0;
        for (const auto& [pub, position] : w.pubs) {
            const Journal& journal = corpus.journals.at(pub->journal_id);
            const ArticleScore a =
                article_quality(*pub, journal, baselines, options.theta);
            const double f = fractional_contribution(position, pub->n_authors,
                                                     sds.scheme, pub->intramural);
            sum += a.quality * f;
        }
        ProfessorScore& s = out.professors[i];
        s.prof_id = prof.id;
        s.university_id = prof.university_id;
        s.sds_code = prof.sds_code;
        s.uda_id = sds.uda_id;
        s.fss = individual_fss(sum, prof.years_active, factor);
    };

    if (parallel) {
#ifdef _OPENMP
        const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (std::size_t i = 0; i < items.size(); ++i) {
            try {
                score_one(i);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
#else
        for (std::size_t i = 0; i < items.size(); ++i) score_one(i);
#endif
    } else {
        for (std::size_t i = 0; i < items.size(); ++i) score_one(i);
    }

    // Barrier: SDS scaling needs every fss.
    out.sds_factors = sds_scaling_factors(out.professors);
    for (auto& s : out.professors) {
        auto it = out.sds_factors.find(s.sds_code);
        if (it != out.sds_factors.end()) {
            s.scaled_fss = s.fss / it->second;
            s.scaled_defined = true;
        }
    }
    std::map<std::string, int> orphaned;  // SDS without productive members
    for (const auto& s : out.professors)
        if (!s.scaled_defined) orphaned[s.sds_code] += 1;
    for (const auto& [sds, count] : orphaned)
        out.warnings.push_back("SDS '" + sds + "' has no productive professor; " +
                               std::to_string(count) +
                               " member(s) excluded from aggregates");
    return out;
}

}  // namespace

PeriodScores score_period_serial(const Corpus& corpus, const ObservationPeriod& period,
                                 const CostTable& costs, const SdsRegistry& registry,
                                 const ScoringOptions& options) {
    return score_period_impl(corpus, period, costs, registry, options, false);
}

PeriodScores score_period(const Corpus& corpus, const ObservationPeriod& period,
                          const CostTable& costs, const SdsRegistry& registry,
                          const ScoringOptions& options) {
    return score_period_impl(corpus, period, costs, registry, options, true);
}

namespace {

std::vector<UnitScore> aggregate_impl(const PeriodScores& scores, UnitLevel level,
                                      bool parallel, int jobs) {
    struct Acc {
        std::string university_id;
        std::string group;
        double sum = 0;
        int staff = 0;
    };
    std::map<std::string, Acc> units;
    for (const auto& s : scores.professors) {
        if (!s.scaled_defined) continue;
        std::string key = s.university_id;
        std::string group;
        if (level == UnitLevel::Uda) {
            group = std::to_string(s.uda_id);
            key += "|uda:" + group;
        } else if (level == UnitLevel::Sds) {
            group = s.sds_code;
            key += "|sds:" + group;
        }
        Acc& a = units[key];
        a.university_id = s.university_id;
        a.group = group;
        a.sum += s.scaled_fss;  // zeros included
        a.staff += 1;
    }

    std::vector<UnitScore> out(units.size());
    std::vector<const std::pair<const std::string, Acc>*> items;
    items.reserve(units.size());
    for (const auto& kv : units) items.push_back(&kv);

    const auto finish = [&](std::size_t i) {
        const auto& [key, a] = *items[i];
        out[i] = UnitScore{key,    a.university_id, level,
                           a.group, a.staff,        a.sum / a.staff};
    };
    if (parallel) {
#ifdef _OPENMP
        const int n = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for num_threads(n)
        for (std::size_t i = 0; i < items.size(); ++i) finish(i);
#else
        for (std::size_t i = 0; i < items.size(); ++i) finish(i);
#endif
    } else {
        for (std::size_t i = 0; i < items.size(); ++i) finish(i);
    }
    return out;
}

}  // namespace

std::vector<UnitScore> aggregate_fss(const PeriodScores& scores, UnitLevel level) {
    return aggregate_impl(scores, level, false, 0);
}

std::vector<UnitScore> aggregate_fss_parallel(const PeriodScores& scores,
                                              UnitLevel level, int jobs) {
    return aggregate_impl(scores, level, true, jobs);
}

double unproductive_share(const std::vector<ProfessorScore>& scores) {
    if (scores.empty()) return 0;
    const auto zeros = std::count_if(scores.begin(), scores.end(),
                                     [](const ProfessorScore& s) { return s.fss == 0; });
    return static_cast<double>(zeros) / static_cast<double>(scores.size());
}

}  // namespace fss
