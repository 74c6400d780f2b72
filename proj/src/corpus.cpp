#include "fss/corpus.hpp"

#include <algorithm>
#include <charconv>

#include "fss/csv.hpp"
#include "fss/errors.hpp"

namespace fss {

namespace {

std::string at(const csv::Table& t, std::size_t line_no) {
    return t.path.string() + ":" + std::to_string(line_no);
}

int parse_int(const std::string& s, const csv::Table& t, std::size_t line_no,
              const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw IngestError(at(t, line_no) + ": bad " + what + " '" + s + "'");
    return v;
}

double parse_double(const std::string& s, const csv::Table& t, std::size_t line_no,
                    const char* what) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw IngestError(at(t, line_no) + ": bad " + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split_codes(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

csv::Table open_required(const std::filesystem::path& dir, const char* name) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path))
        throw IngestError("missing corpus file: " + path.string());
    return csv::read_file(path);
}

}  // namespace

void Baselines::set(int year, const std::string& sc, Cell cell) {
    cells_[{year, sc}] = cell;
}

const Baselines::Cell& Baselines::cell(int year, const std::string& sc) const {
    auto it = cells_.find({year, sc});
    if (it == cells_.end())
        throw LookupError("no baseline for (year " + std::to_string(year) +
                          ", SC '" + sc + "')");
    return it->second;
}

bool Baselines::has(int year, const std::string& sc) const {
    return cells_.contains({year, sc});
}

int min_years_on_staff() { return 3; }

Corpus ingest_corpus(const std::filesystem::path& directory, bool strict) {
    Corpus corpus;

    {
        const csv::Table t = open_required(directory, "universities.csv");
        const auto c_id = t.column("university_id");
        const auto c_name = t.column("name");
        const auto c_reg = t.column("macro_region");
        for (const auto& row : t.rows) {
            University u{row.fields[c_id], row.fields[c_name],
                         parse_region(row.fields[c_reg])};
            if (!corpus.universities.emplace(u.id, u).second)
                throw IngestError(at(t, row.line_no) + ": duplicate university_id '" +
                                  u.id + "'");
        }
    }
    {
        const csv::Table t = open_required(directory, "professors.csv");
        const auto c_id = t.column("prof_id");
        const auto c_uni = t.column("university_id");
        const auto c_sds = t.column("sds_code");
        const auto c_rank = t.column("rank");
        const auto c_years = t.column("years_active");
        for (const auto& row : t.rows) {
            Professor p{row.fields[c_id], row.fields[c_uni], row.fields[c_sds],
                        parse_rank(row.fields[c_rank]),
                        parse_int(row.fields[c_years], t, row.line_no, "years_active")};
            if (p.years_active < 0)
                throw IngestError(at(t, row.line_no) + ": negative years_active");
            if (!corpus.universities.contains(p.university_id)) {
                const std::string msg = at(t, row.line_no) + ": professor '" + p.id +
                                        "' references unknown university '" +
                                        p.university_id + "'";
                if (strict) throw IngestError(msg);
                corpus.validation_report.push_back(msg);
                continue;
            }
            if (!corpus.professors.emplace(p.id, p).second)
                throw IngestError(at(t, row.line_no) + ": duplicate prof_id '" + p.id +
                                  "'");
        }
    }
    {
        const csv::Table t = open_required(directory, "journals.csv");
        const auto c_id = t.column("journal_id");
        const auto c_year = t.column("year");
        const auto c_if = t.column("impact_factor");
        const auto c_scs = t.column("sc_codes");
        for (const auto& row : t.rows) {
            const std::string& id = row.fields[c_id];
            const int year = parse_int(row.fields[c_year], t, row.line_no, "year");
            const double impact =
                parse_double(row.fields[c_if], t, row.line_no, "impact_factor");
            if (impact < 0)
                throw IngestError(at(t, row.line_no) + ": negative impact_factor");
            auto scs = split_codes(row.fields[c_scs]);
            if (scs.empty())
                throw IngestError(at(t, row.line_no) + ": journal '" + id +
                                  "' has no subject categories");
            std::sort(scs.begin(), scs.end());
            auto [it, inserted] = corpus.journals.try_emplace(id);
            Journal& j = it->second;
            if (inserted) {
                j.id = id;
                j.sc_codes = std::move(scs);
            } else if (j.sc_codes != scs) {
                throw IngestError(at(t, row.line_no) + ": journal '" + id +
                                  "' lists conflicting subject categories");
            }
            if (!j.impact_factor.emplace(year, impact).second)
                throw IngestError(at(t, row.line_no) + ": duplicate (journal_id, year) (" +
                                  id + ", " + std::to_string(year) + ")");
        }
    }
    {
        const csv::Table t = open_required(directory, "publications.csv");
        const auto c_id = t.column("pub_id");
        const auto c_year = t.column("year");
        const auto c_jnl = t.column("journal_id");
        const auto c_n = t.column("n_authors");
        const auto c_intra = t.column("intramural");
        const auto c_cit = t.column("citations_at_census");
        for (const auto& row : t.rows) {
            Publication p;
            p.id = row.fields[c_id];
            p.year = parse_int(row.fields[c_year], t, row.line_no, "year");
            p.journal_id = row.fields[c_jnl];
            p.n_authors = parse_int(row.fields[c_n], t, row.line_no, "n_authors");
            const int intra = parse_int(row.fields[c_intra], t, row.line_no, "intramural");
            if (intra != 0 && intra != 1)
                throw IngestError(at(t, row.line_no) + ": intramural must be 0 or 1");
            p.intramural = intra == 1;
            p.citations_at_census =
                parse_int(row.fields[c_cit], t, row.line_no, "citations_at_census");
            if (p.n_authors < 1)
                throw IngestError(at(t, row.line_no) + ": publication '" + p.id +
                                  "' has empty byline");
            if (p.citations_at_census < 0)
                throw IngestError(at(t, row.line_no) + ": negative citations");
            if (!corpus.journals.contains(p.journal_id)) {
                const std::string msg = at(t, row.line_no) + ": publication '" + p.id +
                                        "' references unknown journal '" + p.journal_id +
                                        "'";
                if (strict) throw IngestError(msg);
                corpus.validation_report.push_back(msg);
                continue;
            }
            if (!corpus.publications.emplace(p.id, p).second)
                throw IngestError(at(t, row.line_no) + ": duplicate pub_id '" + p.id +
                                  "'");
        }
    }
    {
        const csv::Table t = open_required(directory, "authorships.csv");
        const auto c_pub = t.column("pub_id");
        const auto c_prof = t.column("prof_id");
        const auto c_pos = t.column("position");
        std::map<std::pair<std::string, int>, std::string> seen;
        for (const auto& row : t.rows) {
            Authorship a{row.fields[c_pub], row.fields[c_prof],
                         parse_int(row.fields[c_pos], t, row.line_no, "position")};
            auto pub = corpus.publications.find(a.pub_id);
            if (pub == corpus.publications.end()) {
                const std::string msg = at(t, row.line_no) + ": authorship (" + a.pub_id +
                                        ", " + a.prof_id +
                                        ") references unknown publication";
                if (strict) throw IngestError(msg);
                corpus.validation_report.push_back(msg);
                continue;
            }
            if (!corpus.professors.contains(a.prof_id)) {
                const std::string msg = at(t, row.line_no) + ": authorship (" + a.pub_id +
                                        ", " + a.prof_id +
                                        ") references unknown professor";
                if (strict) throw IngestError(msg);
                corpus.validation_report.push_back(msg);
                continue;
            }
            if (a.position < 1 || a.position > pub->second.n_authors)
                throw IngestError(at(t, row.line_no) + ": position " +
                                  std::to_string(a.position) + " outside byline of '" +
                                  a.pub_id + "' (n_authors=" +
                                  std::to_string(pub->second.n_authors) + ")");
            auto [it, inserted] = seen.emplace(std::pair{a.pub_id, a.position}, a.prof_id);
            if (!inserted)
                throw IngestError(at(t, row.line_no) + ": byline slot (" + a.pub_id +
                                  ", position " + std::to_string(a.position) +
                                  ") already held by '" + it->second + "'");
            corpus.authorships.push_back(std::move(a));
        }
    }

    // Fixed order regardless of file row order.
    std::sort(corpus.authorships.begin(), corpus.authorships.end(),
              [](const Authorship& a, const Authorship& b) {
                  return std::tie(a.pub_id, a.position) < std::tie(b.pub_id, b.position);
              });

    // IF must exist for the year of every publication.
    for (const auto& [id, pub] : corpus.publications) {
        const Journal& j = corpus.journals.at(pub.journal_id);
        if (!j.impact_factor.contains(pub.year)) {
            const std::string msg = "publication '" + id + "': journal '" + j.id +
                                    "' has no impact factor for year " +
                                    std::to_string(pub.year);
            if (strict) throw IngestError(msg);
            corpus.validation_report.push_back(msg);
        }
    }
    return corpus;
}

PeriodDataset period_dataset(const Corpus& corpus, const ObservationPeriod& period) {
    if (period.end_year < period.start_year)
        throw IngestError("malformed period " + period.label());
    PeriodDataset ds;
    ds.period = period;
    for (const auto& [id, prof] : corpus.professors)
        if (prof.years_active >= min_years_on_staff()) ds.professors.push_back(&prof);
    for (const auto& [id, pub] : corpus.publications)
        if (period.contains(pub.year)) ds.publications.push_back(&pub);
    return ds;
}

Baselines compute_baselines(const Corpus& corpus, const ObservationPeriod& period,
                            const Baselines* external) {
    struct Acc {
        long long cited_citations = 0;
        int cited_pubs = 0;
        double if_sum = 0;
        int if_count = 0;
    };
    std::map<std::pair<int, std::string>, Acc> acc;

    for (const auto& [id, pub] : corpus.publications) {
        if (!period.contains(pub.year)) continue;
        const Journal& j = corpus.journals.at(pub.journal_id);
        for (const auto& sc : j.sc_codes) {
            if (pub.citations_at_census >= 1) {
                Acc& a = acc[{pub.year, sc}];
                a.cited_citations += pub.citations_at_census;
                a.cited_pubs += 1;
            }
        }
    }
    // IF mean over all journals in the SC for the year.
    for (const auto& [id, j] : corpus.journals) {
        for (const auto& [year, impact] : j.impact_factor) {
            if (!period.contains(year)) continue;
            for (const auto& sc : j.sc_codes) {
                Acc& a = acc[{year, sc}];
                a.if_sum += impact;
                a.if_count += 1;
            }
        }
    }

    Baselines out;
    for (const auto& [key, a] : acc) {
        if (a.cited_pubs == 0 || a.if_count == 0) continue;
        out.set(key.first, key.second,
                {static_cast<double>(a.cited_citations) / a.cited_pubs,
                 a.if_sum / a.if_count});
    }

    // Every scored publication needs its cells; fall back to external if given.
    for (const auto& [id, pub] : corpus.publications) {
        if (!period.contains(pub.year)) continue;
        const Journal& j = corpus.journals.at(pub.journal_id);
        for (const auto& sc : j.sc_codes) {
            if (out.has(pub.year, sc)) continue;
            if (external && external->has(pub.year, sc)) {
                out.set(pub.year, sc, external->cell(pub.year, sc));
                continue;
            }
            throw IngestError("empty baseline cell (year " + std::to_string(pub.year) +
                              ", SC '" + sc + "') required by publication '" + id + "'");
        }
    }
    return out;
}

Baselines load_baselines(const std::filesystem::path& file) {
    const csv::Table t = csv::read_file(file);
    const auto c_year = t.column("year");
    const auto c_sc = t.column("sc_code");
    const auto c_cit = t.column("mean_citations_cited");
    const auto c_if = t.column("mean_if");
    Baselines out;
    for (const auto& row : t.rows) {
        const int year = parse_int(row.fields[c_year], t, row.line_no, "year");
        const double mc = parse_double(row.fields[c_cit], t, row.line_no,
                                       "mean_citations_cited");
        const double mi = parse_double(row.fields[c_if], t, row.line_no, "mean_if");
        if (mc <= 0 || mi <= 0)
            throw IngestError(at(t, row.line_no) + ": baseline means must be positive");
        out.set(year, row.fields[c_sc], {mc, mi});
    }
    return out;
}

}  // namespace fss
