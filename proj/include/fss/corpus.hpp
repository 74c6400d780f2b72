#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fss/taxonomy.hpp"

namespace fss {

struct University {
    std::string id;
    std::string name;
    MacroRegion macro_region;
};

struct Professor {
    std::string id;
    std::string university_id;
    std::string sds_code;
    AcademicRank rank;
    int years_active = 0;  // t, within the period the file describes
};

/// Journal with per-year impact factors and its subject categories.
struct Journal {
    std::string id;
    std::map<int, double> impact_factor;  // year -> IF
    std::vector<std::string> sc_codes;    // non-empty
};

struct Publication {
    std::string id;
    int year = 0;
    std::string journal_id;
    int n_authors = 0;  // byline length, external co-authors included
    bool intramural = false;
    int citations_at_census = 0;
};

/// One resolved byline slot: professor at 1-based position of a publication.
struct Authorship {
    std::string pub_id;
    std::string prof_id;
    int position = 0;
};

struct ObservationPeriod {
    int start_year = 0;
    int end_year = 0;
    std::string census_date;  // ISO date, >= Dec 31 of end_year

    int length() const { return end_year - start_year + 1; }
    bool contains(int year) const { return year >= start_year && year <= end_year; }
    std::string label() const {
        return std::to_string(start_year) + "-" + std::to_string(end_year);
    }
};

/// Per-(year, SC) field baselines. Citation means are over cited
/// publications only (>= 1 citation); IF means over all journals in the SC.
class Baselines {
public:
    struct Cell {
        double mean_citations_of_cited = 0;  // > 0
        double mean_if = 0;                  // > 0
    };

    void set(int year, const std::string& sc, Cell cell);
    const Cell& cell(int year, const std::string& sc) const;  // throws LookupError
    bool has(int year, const std::string& sc) const;
    std::size_t size() const { return cells_.size(); }

private:
    std::map<std::pair<int, std::string>, Cell> cells_;
};

struct Corpus {
    std::map<std::string, University> universities;
    std::map<std::string, Professor> professors;
    std::map<std::string, Journal> journals;
    std::map<std::string, Publication> publications;
    std::vector<Authorship> authorships;  // sorted by (pub_id, position)
    std::vector<std::string> validation_report;  // dangling refs in lenient mode
};

/// Loads the six corpus CSV files from a directory. In strict mode any
/// dangling reference is an error; otherwise it is recorded in the
/// validation report and the offending row dropped.
Corpus ingest_corpus(const std::filesystem::path& directory, bool strict = true);

struct PeriodDataset {
    ObservationPeriod period;
    std::vector<const Professor*> professors;      // years_active >= 3
    std::vector<const Publication*> publications;  // year within the window
};

int min_years_on_staff();  // the 3-year inclusion threshold

PeriodDataset period_dataset(const Corpus& corpus, const ObservationPeriod& period);

/// Computes per-(year, SC) baselines from the corpus itself for the given
/// period. Throws IngestError naming the first empty cell needed by a
/// scored publication, unless `external` supplies it.
Baselines compute_baselines(const Corpus& corpus, const ObservationPeriod& period,
                            const Baselines* external = nullptr);

// baselines.csv: year,sc_code,mean_citations_cited,mean_if
Baselines load_baselines(const std::filesystem::path& file);

}  // namespace fss
