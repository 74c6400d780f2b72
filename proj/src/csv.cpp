#include "fss/csv.hpp"

#include <fstream>

#include "fss/errors.hpp"

namespace fss::csv {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string escape_field(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw IngestError(path.string() + ": missing column '" + name + "'");
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open " + path.string());

    Table table;
    table.path = path;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            table.header = split_line(line);
            continue;
        }
        if (line.empty()) continue;
        Row row;
        row.line_no = line_no;
        row.fields = split_line(line);
        if (row.fields.size() != table.header.size())
            throw IngestError(path.string() + ":" + std::to_string(line_no) +
                              ": expected " + std::to_string(table.header.size()) +
                              " fields, got " + std::to_string(row.fields.size()));
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty())
        throw IngestError(path.string() + ": empty file (header row mandatory)");
    return table;
}

}  // namespace fss::csv
