#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fss/errors.hpp"
#include "fss/taxonomy.hpp"

using namespace fss;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

// The published per-rank cost table.
const char* kCostTableCsv =
    "uda_id,k,total_cost_assistant,total_cost_associate,total_cost_full\n"
    "1,30822,58109,65079,82019\n"
    "2,46194,73481,80451,97391\n"
    "3,39820,67107,74077,91017\n"
    "4,60016,87303,94273,111213\n"
    "5,45748,73035,80005,96945\n"
    "6,41228,68515,75485,92424\n"
    "7,45748,73035,80005,96945\n"
    "8,47810,75097,82067,99007\n"
    "9,47810,75097,82067,99007\n"
    "10,26777,54064,61034,77974\n";

}  // namespace

TEST_CASE("cost table from the published figures") {
    const auto path = write_temp("cost_table.csv", kCostTableCsv);
    const auto table = load_cost_table(path);
    CHECK(table.size() == 30);
    CHECK(table.min_total_cost() == doctest::Approx(54064));

    // Factors as printed, +-0.005 (they are rounded to 2 decimals).
    CHECK(table.entry(10, AcademicRank::Assistant).total_cost == doctest::Approx(54064));
    CHECK(table.normalization_factor(10, AcademicRank::Assistant) ==
          doctest::Approx(1.00).epsilon(0.005));
    CHECK(table.normalization_factor(3, AcademicRank::Associate) ==
          doctest::Approx(1.37).epsilon(0.005));
    CHECK(table.normalization_factor(9, AcademicRank::Full) ==
          doctest::Approx(1.83).epsilon(0.005));
    CHECK(table.normalization_factor(4, AcademicRank::Full) ==
          doctest::Approx(111213.0 / 54064.0).epsilon(1e-12));
    CHECK(table.normalization_factor(6, AcademicRank::Assistant) ==
          doctest::Approx(1.27).epsilon(0.005));

    SUBCASE("exactly one row attains factor 1, all factors >= 1") {
        int at_one = 0;
        for (const auto& uda : bibliometric_udas()) {
            for (auto rank :
                 {AcademicRank::Assistant, AcademicRank::Associate, AcademicRank::Full}) {
                const double f = table.normalization_factor(uda.id, rank);
                CHECK(f >= 1.0);
                if (f == 1.0) ++at_one;
            }
        }
        CHECK(at_one == 1);
    }
    SUBCASE("factors are rank-monotone within every UDA") {
        for (const auto& uda : bibliometric_udas()) {
            CHECK(table.normalization_factor(uda.id, AcademicRank::Full) >
                  table.normalization_factor(uda.id, AcademicRank::Associate));
            CHECK(table.normalization_factor(uda.id, AcademicRank::Associate) >
                  table.normalization_factor(uda.id, AcademicRank::Assistant));
        }
    }
    SUBCASE("reloading yields an identical table") {
        const auto again = load_cost_table(path);
        for (const auto& uda : bibliometric_udas())
            for (auto rank :
                 {AcademicRank::Assistant, AcademicRank::Associate, AcademicRank::Full})
                CHECK(again.normalization_factor(uda.id, rank) ==
                      table.normalization_factor(uda.id, rank));
    }
    SUBCASE("unknown (uda, rank) lookups throw") {
        CHECK_THROWS_AS(table.normalization_factor(11, AcademicRank::Full), LookupError);
    }
}

TEST_CASE("cost table ingestion errors") {
    SUBCASE("missing UDA row") {
        const auto path = write_temp(
            "cost_missing.csv",
            "uda_id,k,total_cost_assistant,total_cost_associate,total_cost_full\n"
            "1,30822,58109,65079,82019\n");
        CHECK_THROWS_WITH_AS(load_cost_table(path),
                             doctest::Contains("missing UDA 2"), IngestError);
    }
    SUBCASE("duplicate UDA") {
        const auto path = write_temp(
            "cost_dup.csv",
            "uda_id,k,total_cost_assistant,total_cost_associate,total_cost_full\n"
            "1,30822,58109,65079,82019\n"
            "1,30822,58109,65079,82019\n");
        CHECK_THROWS_WITH_AS(load_cost_table(path), doctest::Contains("duplicate UDA"),
                             IngestError);
    }
    SUBCASE("non-positive cost") {
        const auto path = write_temp(
            "cost_neg.csv",
            "uda_id,k,total_cost_assistant,total_cost_associate,total_cost_full\n"
            "1,30822,-58109,65079,82019\n");
        CHECK_THROWS_AS(load_cost_table(path), IngestError);
    }
}

TEST_CASE("degenerate single-UDA table with equal costs") {
    std::map<std::pair<int, AcademicRank>, std::pair<double, double>> rows;
    for (auto rank :
         {AcademicRank::Assistant, AcademicRank::Associate, AcademicRank::Full})
        rows[{1, rank}] = {10000, 60000};
    const auto table = CostTable::from_rows(rows);
    for (auto rank :
         {AcademicRank::Assistant, AcademicRank::Associate, AcademicRank::Full})
        CHECK(table.normalization_factor(1, rank) == doctest::Approx(1.0));
}

TEST_CASE("counting scheme defaults and overrides") {
    SdsRegistry registry;
    registry.add("BIO/10", 5);
    registry.add("MAT/05", 1);
    registry.add("MED/09", 6, CountingScheme::Alphabetical);
    registry.add("AGR/01", 7);

    CHECK(registry.counting_scheme_for("BIO/10") == CountingScheme::Positional);
    CHECK(registry.counting_scheme_for("MAT/05") == CountingScheme::Alphabetical);
    CHECK(registry.counting_scheme_for("MED/09") == CountingScheme::Alphabetical);
    CHECK(registry.counting_scheme_for("AGR/01") == CountingScheme::Alphabetical);
    CHECK(registry.uda_of("BIO/10") == 5);
    CHECK_THROWS_AS(registry.counting_scheme_for("FIS/01"), LookupError);
}

TEST_CASE("sds table file") {
    const auto path = write_temp("sds_table.csv",
                                 "sds_code,uda_id,counting_scheme\n"
                                 "FIS/01,2,default\n"
                                 "BIO/10,5,default\n"
                                 "MED/09,6,alphabetical\n"
                                 "GEO/01,4,positional\n");
    const auto registry = load_sds_table(path);
    CHECK(registry.size() == 4);
    CHECK(registry.counting_scheme_for("FIS/01") == CountingScheme::Alphabetical);
    CHECK(registry.counting_scheme_for("BIO/10") == CountingScheme::Positional);
    CHECK(registry.counting_scheme_for("MED/09") == CountingScheme::Alphabetical);
    CHECK(registry.counting_scheme_for("GEO/01") == CountingScheme::Positional);

    const auto bad = write_temp("sds_bad.csv",
                                "sds_code,uda_id,counting_scheme\n"
                                "FIS/01,2,sideways\n");
    CHECK_THROWS_AS(load_sds_table(bad), IngestError);
}

TEST_CASE("enum parsing") {
    CHECK(parse_rank("assistant") == AcademicRank::Assistant);
    CHECK(parse_rank("Full") == AcademicRank::Full);
    CHECK_THROWS_AS(parse_rank("emeritus"), IngestError);
    CHECK(parse_region("N") == MacroRegion::North);
    CHECK(parse_region("S") == MacroRegion::South);
    CHECK_THROWS_AS(parse_region("E"), IngestError);
    CHECK(uda_by_id(10).name == "Psychology");
    CHECK_THROWS_AS(uda_by_id(0), LookupError);
}
