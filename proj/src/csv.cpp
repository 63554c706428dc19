#include "tweetsent/csv.hpp"

#include <iterator>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tweetsent::csv {

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out << ',';
        out << escape(row[i]);
    }
    out << '\n';
}

std::vector<Row> parse(std::string_view s) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t i = 0;

    auto end_record = [&] {
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        field_started = false;
    };

    while (i < s.size()) {
        const char c = s[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < s.size() && s[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
            } else {
                field += c;
            }
            ++i;
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            field_started = true;
        } else if (c == '\r' && i + 1 < s.size() && s[i + 1] == '\n') {
            end_record();
            ++i;
        } else if (c == '\n') {
            end_record();
        } else {
            field += c;
            field_started = true;
        }
        ++i;
    }
    if (quoted) throw std::runtime_error("unterminated quoted CSV field");
    if (field_started || !row.empty() || !field.empty()) end_record();
    return rows;
}

std::vector<Row> parse(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse(std::string_view(text));
}

}  // namespace tweetsent::csv
