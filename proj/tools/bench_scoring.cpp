// Benchmark: serial reference scoring vs the OpenMP-parallel path on a
// synthetic corpus, with an output-equality check.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "fss/scoring.hpp"
#include "fss/synthetic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool identical(const fss::PeriodScores& a, const fss::PeriodScores& b) {
    if (a.professors.size() != b.professors.size()) return false;
    for (std::size_t i = 0; i < a.professors.size(); ++i) {
        if (a.professors[i].prof_id != b.professors[i].prof_id) return false;
        if (a.professors[i].fss != b.professors[i].fss) return false;
        if (a.professors[i].scaled_fss != b.professors[i].scaled_fss) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    fss::synthetic::Config cfg;
    cfg.n_professors = argc > 1 ? std::atoi(argv[1]) : 20000;
    cfg.n_publications = cfg.n_professors * 6;
    cfg.n_journals = 200;
    cfg.n_universities = 60;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    std::cout << "generating corpus: " << cfg.n_professors << " professors, "
              << cfg.n_publications << " publications\n";
    const auto ds = fss::synthetic::make_dataset(cfg);

    fss::ScoringOptions options;
    options.theta = 0.5;

    double best_serial = 1e30, best_parallel = 1e30;
    fss::PeriodScores serial, parallel;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        serial = fss::score_period_serial(ds.corpus, ds.period, ds.costs, ds.registry,
                                          options);
        best_serial = std::min(best_serial, seconds_since(t0));

        t0 = Clock::now();
        parallel =
            fss::score_period(ds.corpus, ds.period, ds.costs, ds.registry, options);
        best_parallel = std::min(best_parallel, seconds_since(t0));
    }

    std::cout << "serial:   " << best_serial << " s\n";
    std::cout << "parallel: " << best_parallel << " s\n";
    std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
    if (!identical(serial, parallel)) {
        std::cout << "MISMATCH: parallel output differs from serial reference\n";
        return 1;
    }
    std::cout << "outputs identical\n";
    return 0;
}
