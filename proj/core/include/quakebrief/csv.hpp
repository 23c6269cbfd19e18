#pragma once

#include <istream>
#include <string>
#include <vector>

namespace qb {

/// One parsed record plus the 1-based physical line it started on.
struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// RFC-4180 reader: quoted fields, doubled quotes, embedded newlines, CRLF.
/// Blank lines are skipped. Throws ParseError on an unterminated quote.
std::vector<CsvRecord> read_csv(std::istream& in);

std::string csv_escape(const std::string& field);

}  // namespace qb
