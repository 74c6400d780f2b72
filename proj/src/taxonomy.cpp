#include "fss/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "fss/csv.hpp"
#include "fss/errors.hpp"

namespace fss {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

double parse_positive(const std::string& s, const csv::Table& t, std::size_t line_no,
                      const std::string& what) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw IngestError(t.path.string() + ":" + std::to_string(line_no) +
                          ": bad " + what + " '" + s + "'");
    if (v <= 0)
        throw IngestError(t.path.string() + ":" + std::to_string(line_no) +
                          ": non-positive " + what + " '" + s + "'");
    return v;
}

}  // namespace

AcademicRank parse_rank(std::string_view s) {
    const std::string l = lower(s);
    if (l == "assistant") return AcademicRank::Assistant;
    if (l == "associate") return AcademicRank::Associate;
    if (l == "full") return AcademicRank::Full;
    throw IngestError("unknown academic rank '" + std::string(s) + "'");
}

std::string_view rank_name(AcademicRank r) {
    switch (r) {
        case AcademicRank::Assistant: return "assistant";
        case AcademicRank::Associate: return "associate";
        case AcademicRank::Full: return "full";
    }
    return "?";
}

MacroRegion parse_region(std::string_view s) {
    if (s == "N" || s == "n") return MacroRegion::North;
    if (s == "C" || s == "c") return MacroRegion::Center;
    if (s == "S" || s == "s") return MacroRegion::South;
    throw IngestError("unknown macro region '" + std::string(s) + "' (want N|C|S)");
}

std::string_view region_name(MacroRegion r) {
    switch (r) {
        case MacroRegion::North: return "North";
        case MacroRegion::Center: return "Center";
        case MacroRegion::South: return "South";
    }
    return "?";
}

std::string_view region_code(MacroRegion r) {
    switch (r) {
        case MacroRegion::North: return "N";
        case MacroRegion::Center: return "C";
        case MacroRegion::South: return "S";
    }
    return "?";
}

const std::array<Uda, kNumUdas>& bibliometric_udas() {
    static const std::array<Uda, kNumUdas> udas = {{
        {1, "Mathematics and computer science"},
        {2, "Physics"},
        {3, "Chemistry"},
        {4, "Earth sciences"},
        {5, "Biology"},
        {6, "Medicine"},
        {7, "Agricultural and veterinary sciences"},
        {8, "Civil engineering"},
        {9, "Industrial and information engineering"},
        {10, "Psychology"},
    }};
    return udas;
}

const Uda& uda_by_id(int id) {
    if (id < 1 || id > kNumUdas)
        throw LookupError("unknown UDA id " + std::to_string(id));
    return bibliometric_udas()[static_cast<std::size_t>(id - 1)];
}

CostTable CostTable::from_rows(
    const std::map<std::pair<int, AcademicRank>, std::pair<double, double>>& rows) {
    CostTable table;
    double min_cost = 0;
    for (const auto& [key, kc] : rows) {
        const auto [k, total] = kc;
        if (!(total > k && k > 0))
            throw IngestError("cost table row (uda " + std::to_string(key.first) +
                              ", " + std::string(rank_name(key.second)) +
                              "): requires total_cost > k > 0");
        if (min_cost == 0 || total < min_cost) min_cost = total;
    }
    if (rows.empty()) throw IngestError("cost table has no rows");
    table.min_total_cost_ = min_cost;
    for (const auto& [key, kc] : rows)
        table.entries_[key] = Entry{kc.first, kc.second, kc.second / min_cost};
    return table;
}

const CostTable::Entry& CostTable::entry(int uda_id, AcademicRank rank) const {
    auto it = entries_.find({uda_id, rank});
    if (it == entries_.end())
        throw LookupError("no cost entry for (uda " + std::to_string(uda_id) +
                          ", " + std::string(rank_name(rank)) + ")");
    return it->second;
}

double CostTable::normalization_factor(int uda_id, AcademicRank rank) const {
    return entry(uda_id, rank).factor;
}

CostTable load_cost_table(const std::filesystem::path& file) {
    const csv::Table t = csv::read_file(file);
    const std::size_t c_uda = t.column("uda_id");
    const std::size_t c_k = t.column("k");
    const std::size_t c_ass = t.column("total_cost_assistant");
    const std::size_t c_aso = t.column("total_cost_associate");
    const std::size_t c_ful = t.column("total_cost_full");

    std::map<std::pair<int, AcademicRank>, std::pair<double, double>> rows;
    std::set<int> seen;
    for (const auto& row : t.rows) {
        int uda = 0;
        const std::string& us = row.fields[c_uda];
        auto [p, ec] = std::from_chars(us.data(), us.data() + us.size(), uda);
        if (ec != std::errc{} || p != us.data() + us.size())
            throw IngestError(file.string() + ":" + std::to_string(row.line_no) +
                              ": bad uda_id '" + us + "'");
        uda_by_id(uda);
        if (!seen.insert(uda).second)
            throw IngestError(file.string() + ":" + std::to_string(row.line_no) +
                              ": duplicate UDA " + std::to_string(uda));
        const double k = parse_positive(row.fields[c_k], t, row.line_no, "k");
        rows[{uda, AcademicRank::Assistant}] = {
            k, parse_positive(row.fields[c_ass], t, row.line_no, "total_cost_assistant")};
        rows[{uda, AcademicRank::Associate}] = {
            k, parse_positive(row.fields[c_aso], t, row.line_no, "total_cost_associate")};
        rows[{uda, AcademicRank::Full}] = {
            k, parse_positive(row.fields[c_ful], t, row.line_no, "total_cost_full")};
    }
    for (const auto& uda : bibliometric_udas())
        if (!seen.contains(uda.id))
            throw IngestError(file.string() + ": missing UDA " + std::to_string(uda.id) +
                              " (" + std::string(uda.name) + ")");
    return CostTable::from_rows(rows);
}

CountingScheme SdsRegistry::default_scheme_for_uda(int uda_id) {
    // Life-science practice: byline position signals contribution.
    return (uda_id == 5 || uda_id == 6) ? CountingScheme::Positional
                                        : CountingScheme::Alphabetical;
}

void SdsRegistry::add(std::string code, int uda_id,
                      std::optional<CountingScheme> override_scheme) {
    uda_by_id(uda_id);
    const CountingScheme scheme =
        override_scheme.value_or(default_scheme_for_uda(uda_id));
    auto [it, inserted] =
        by_code_.insert_or_assign(code, Sds{code, uda_id, scheme});
    (void)it;
    if (!inserted)
        throw IngestError("duplicate SDS code '" + code + "'");
}

const SdsRegistry::Sds& SdsRegistry::sds(const std::string& code) const {
    auto it = by_code_.find(code);
    if (it == by_code_.end())
        throw LookupError("unregistered SDS code '" + code + "'");
    return it->second;
}

int SdsRegistry::uda_of(const std::string& code) const { return sds(code).uda_id; }

CountingScheme SdsRegistry::counting_scheme_for(const std::string& code) const {
    return sds(code).scheme;
}

bool SdsRegistry::contains(const std::string& code) const {
    return by_code_.contains(code);
}

SdsRegistry load_sds_table(const std::filesystem::path& file) {
    const csv::Table t = csv::read_file(file);
    const std::size_t c_code = t.column("sds_code");
    const std::size_t c_uda = t.column("uda_id");
    const std::size_t c_scheme = t.column("counting_scheme");

    SdsRegistry registry;
    for (const auto& row : t.rows) {
        const std::string& us = row.fields[c_uda];
        int uda = 0;
        auto [p, ec] = std::from_chars(us.data(), us.data() + us.size(), uda);
        if (ec != std::errc{} || p != us.data() + us.size())
            throw IngestError(file.string() + ":" + std::to_string(row.line_no) +
                              ": bad uda_id '" + us + "'");
        const std::string scheme = row.fields[c_scheme];
        std::optional<CountingScheme> override_scheme;
        if (scheme == "alphabetical")
            override_scheme = CountingScheme::Alphabetical;
        else if (scheme == "positional")
            override_scheme = CountingScheme::Positional;
        else if (scheme != "default" && !scheme.empty())
            throw IngestError(file.string() + ":" + std::to_string(row.line_no) +
                              ": bad counting_scheme '" + scheme + "'");
        try {
            registry.add(row.fields[c_code], uda, override_scheme);
        } catch (const IngestError& e) {
            throw IngestError(file.string() + ":" + std::to_string(row.line_no) +
                              ": " + e.what());
        }
    }
    return registry;
}

}  // namespace fss
