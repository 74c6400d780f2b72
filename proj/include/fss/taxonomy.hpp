#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fss {

enum class AcademicRank { Assistant, Associate, Full };

enum class MacroRegion { North, Center, South };

enum class CountingScheme { Alphabetical, Positional };

AcademicRank parse_rank(std::string_view s);
std::string_view rank_name(AcademicRank r);

MacroRegion parse_region(std::string_view s);
std::string_view region_name(MacroRegion r);
std::string_view region_code(MacroRegion r);  // "N" | "C" | "S"

/// The 10 bibliometric university disciplinary areas.
struct Uda {
    int id;  // 1..10
    std::string_view name;
};

inline constexpr int kNumUdas = 10;
const std::array<Uda, kNumUdas>& bibliometric_udas();
const Uda& uda_by_id(int id);  // throws LookupError for ids outside 1..10

/// Per-(UDA, rank) yearly cost of production factors and the derived
/// normalization factor (total cost over the table's minimum total cost).
class CostTable {
public:
    struct Entry {
        double capital = 0;     // k, euro/year
        double total_cost = 0;  // w_r/2 + k, euro/year
        double factor = 0;      // total_cost / min total_cost
    };

    static CostTable from_rows(
        const std::map<std::pair<int, AcademicRank>, std::pair<double, double>>&
            rows);  // (uda, rank) -> (k, total_cost)

    const Entry& entry(int uda_id, AcademicRank rank) const;
    double normalization_factor(int uda_id, AcademicRank rank) const;
    double min_total_cost() const { return min_total_cost_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<int, AcademicRank>, Entry> entries_;
    double min_total_cost_ = 0;
};

// cost_table.csv: uda_id,k,total_cost_assistant,total_cost_associate,total_cost_full
CostTable load_cost_table(const std::filesystem::path& file);

/// SDS registry: code -> UDA plus the byline counting scheme.
/// Default scheme is Positional for the life-science UDAs (5 and 6),
/// Alphabetical otherwise; sds_table.csv may override per SDS.
class SdsRegistry {
public:
    struct Sds {
        std::string code;
        int uda_id;
        CountingScheme scheme;
    };

    void add(std::string code, int uda_id,
             std::optional<CountingScheme> override_scheme = std::nullopt);

    const Sds& sds(const std::string& code) const;  // throws LookupError
    int uda_of(const std::string& code) const;
    CountingScheme counting_scheme_for(const std::string& code) const;
    bool contains(const std::string& code) const;
    std::size_t size() const { return by_code_.size(); }

    static CountingScheme default_scheme_for_uda(int uda_id);

private:
    std::map<std::string, Sds> by_code_;
};

// sds_table.csv: sds_code,uda_id,counting_scheme(alphabetical|positional|default)
SdsRegistry load_sds_table(const std::filesystem::path& file);

}  // namespace fss
