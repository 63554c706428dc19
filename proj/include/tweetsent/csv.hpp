#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tweetsent::csv {

using Row = std::vector<std::string>;

/// Quotes a field only when it holds a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Writes one LF-terminated record.
void write_row(std::ostream& out, const Row& row);

/// Parses RFC-4180 records (quoted fields may span lines). Throws std::runtime_error
/// on an unterminated quote.
std::vector<Row> parse(std::istream& in);
std::vector<Row> parse(std::string_view text);

}  // namespace tweetsent::csv
