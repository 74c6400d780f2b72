#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "fss/corpus.hpp"
#include "fss/taxonomy.hpp"

namespace fss::synthetic {

/// Deterministic synthetic corpus for tests and benchmarks.
struct Config {
    unsigned seed = 1;
    int n_universities = 4;
    int n_professors = 100;
    int n_journals = 20;
    int n_publications = 300;
    int start_year = 2007;
    int end_year = 2011;
    double unproductive_fraction = 0.1;  // professors left without authorships
};

struct Dataset {
    Corpus corpus;
    CostTable costs;
    SdsRegistry registry;
    ObservationPeriod period;
};

inline Dataset make_dataset(const Config& cfg) {
    std::mt19937 rng(cfg.seed);
    Dataset ds;
    ds.period = {cfg.start_year, cfg.end_year,
                 std::to_string(cfg.end_year + 2) + "-12-31"};

    // Flat cost table covering all 10 UDAs; rank-monotone totals.
    std::map<std::pair<int, AcademicRank>, std::pair<double, double>> cost_rows;
    for (const auto& uda : bibliometric_udas()) {
        const double k = 30000 + 1000.0 * uda.id;
        cost_rows[{uda.id, AcademicRank::Assistant}] = {k, k + 25000};
        cost_rows[{uda.id, AcademicRank::Associate}] = {k, k + 32000};
        cost_rows[{uda.id, AcademicRank::Full}] = {k, k + 48000};
    }
    ds.costs = CostTable::from_rows(cost_rows);

    // Two SDSs per UDA, default schemes.
    for (const auto& uda : bibliometric_udas()) {
        ds.registry.add("S" + std::to_string(uda.id) + "/01", uda.id);
        ds.registry.add("S" + std::to_string(uda.id) + "/02", uda.id);
    }

    for (int u = 0; u < cfg.n_universities; ++u) {
        const std::string id = "U" + std::to_string(u);
        ds.corpus.universities[id] =
            University{id, "University " + std::to_string(u),
                       static_cast<MacroRegion>(u % 3)};
    }

    std::uniform_int_distribution<int> uda_dist(1, kNumUdas);
    std::uniform_int_distribution<int> sds_dist(1, 2);
    std::uniform_int_distribution<int> uni_dist(0, cfg.n_universities - 1);
    std::uniform_int_distribution<int> rank_dist(0, 2);
    std::uniform_int_distribution<int> years_dist(3, cfg.end_year - cfg.start_year + 1);
    for (int p = 0; p < cfg.n_professors; ++p) {
        const std::string id = "P" + std::to_string(p);
        ds.corpus.professors[id] = Professor{
            id, "U" + std::to_string(uni_dist(rng)),
            "S" + std::to_string(uda_dist(rng)) + "/0" + std::to_string(sds_dist(rng)),
            static_cast<AcademicRank>(rank_dist(rng)), years_dist(rng)};
    }

    std::uniform_int_distribution<int> year_dist(cfg.start_year, cfg.end_year);
    std::uniform_real_distribution<double> if_dist(0.5, 8.0);
    std::uniform_int_distribution<int> sc_dist(1, 6);
    for (int j = 0; j < cfg.n_journals; ++j) {
        const std::string id = "J" + std::to_string(j);
        Journal journal;
        journal.id = id;
        journal.sc_codes = {"SC" + std::to_string(sc_dist(rng))};
        if (j % 3 == 0) journal.sc_codes.push_back("SC" + std::to_string(sc_dist(rng)));
        std::sort(journal.sc_codes.begin(), journal.sc_codes.end());
        journal.sc_codes.erase(
            std::unique(journal.sc_codes.begin(), journal.sc_codes.end()),
            journal.sc_codes.end());
        for (int y = cfg.start_year; y <= cfg.end_year; ++y)
            journal.impact_factor[y] = if_dist(rng);
        ds.corpus.journals[id] = journal;
    }

    std::uniform_int_distribution<int> jnl_dist(0, cfg.n_journals - 1);
    std::uniform_int_distribution<int> nauth_dist(1, 12);
    std::poisson_distribution<int> cit_dist(4.0);
    std::bernoulli_distribution intra_dist(0.3);
    const int n_productive =
        std::max(1, static_cast<int>(cfg.n_professors * (1 - cfg.unproductive_fraction)));
    std::uniform_int_distribution<int> prof_dist(0, n_productive - 1);
    for (int i = 0; i < cfg.n_publications; ++i) {
        const std::string id = "W" + std::to_string(i);
        Publication pub;
        pub.id = id;
        pub.year = year_dist(rng);
        pub.journal_id = "J" + std::to_string(jnl_dist(rng));
        pub.n_authors = nauth_dist(rng);
        pub.intramural = intra_dist(rng);
        pub.citations_at_census = cit_dist(rng);
        ds.corpus.publications[id] = pub;

        // One or two resolved byline slots per publication.
        std::uniform_int_distribution<int> pos_dist(1, pub.n_authors);
        const int pos1 = pos_dist(rng);
        ds.corpus.authorships.push_back(
            {id, "P" + std::to_string(prof_dist(rng)), pos1});
        if (pub.n_authors > 1 && i % 2 == 0) {
            int pos2 = pos_dist(rng);
            if (pos2 == pos1) pos2 = pos1 == 1 ? 2 : pos1 - 1;
            ds.corpus.authorships.push_back(
                {id, "P" + std::to_string(prof_dist(rng)), pos2});
        }
    }
    std::sort(ds.corpus.authorships.begin(), ds.corpus.authorships.end(),
              [](const Authorship& a, const Authorship& b) {
                  return std::tie(a.pub_id, a.position) < std::tie(b.pub_id, b.position);
              });
    // Random draws can collide on (pub, position); keep the first.
    ds.corpus.authorships.erase(
        std::unique(ds.corpus.authorships.begin(), ds.corpus.authorships.end(),
                    [](const Authorship& a, const Authorship& b) {
                        return a.pub_id == b.pub_id && a.position == b.position;
                    }),
        ds.corpus.authorships.end());
    return ds;
}

}  // namespace fss::synthetic
