#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fss::csv {

struct Row {
    std::size_t line_no = 0;  // 1-based, header is line 1
    std::vector<std::string> fields;
};

struct Table {
    std::filesystem::path path;
    std::vector<std::string> header;
    std::vector<Row> rows;

    // Index of a header column; throws IngestError naming the file if absent.
    std::size_t column(const std::string& name) const;
};

// Reads a UTF-8, comma-separated file with a mandatory header row.
// Double-quoted fields with embedded commas/quotes are honored.
Table read_file(const std::filesystem::path& path);

// Parses one line into fields (exposed for tests).
std::vector<std::string> split_line(const std::string& line);

std::string escape_field(const std::string& field);

}  // namespace fss::csv
