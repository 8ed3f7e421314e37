#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "privysense/errors.hpp"
#include "privysense/strutil.hpp"

namespace privysense::csv {

// Comma separated, first row header, double quotes escape embedded commas,
// quotes and newlines. Input bytes are scrubbed to valid UTF-8 first.

using Row = std::vector<std::string>;

inline std::vector<Row> parse_text(std::string_view text) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;
    size_t i = 0;
    const size_t n = text.size();
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_has_data = false;
    };
    while (i < n) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_has_data = true;
                ++i;
                break;
            case ',':
                end_field();
                row_has_data = true;
                ++i;
                break;
            case '\r':
                ++i;
                break;
            case '\n':
                if (row_has_data || !field.empty() || !row.empty()) end_row();
                ++i;
                break;
            default:
                field.push_back(c);
                row_has_data = true;
                ++i;
        }
    }
    if (in_quotes) throw schema_error("csv: unterminated quoted field");
    if (row_has_data || !field.empty() || !row.empty()) end_row();
    return rows;
}

inline std::vector<Row> parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failed: " + path);
    return parse_text(scrub_utf8(ss.str()));
}

inline std::string quote_field(std::string_view f) {
    bool need = f.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!need) return std::string(f);
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string serialize(const std::vector<Row>& rows) {
    std::string out;
    for (const Row& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out.push_back(',');
            out += quote_field(r[i]);
        }
        out.push_back('\n');
    }
    return out;
}

// Maps required column names to indices in the header row; throws a schema
// error naming the first missing column.
inline std::vector<size_t> header_indices(const Row& header,
                                          const std::vector<std::string>& required) {
    std::vector<size_t> idx;
    idx.reserve(required.size());
    for (const std::string& name : required) {
        size_t found = header.size();
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                found = i;
                break;
            }
        }
        if (found == header.size())
            throw schema_error("missing required column: " + name);
        idx.push_back(found);
    }
    return idx;
}

inline size_t optional_column(const Row& header, std::string_view name) {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    return static_cast<size_t>(-1);
}

}  // namespace privysense::csv
