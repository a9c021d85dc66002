#ifndef MOODCO_CSV_HPP
#define MOODCO_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace moodco::csv {

// Minimal RFC-4180: quoted fields may contain commas, quotes ("" escaped)
// and newlines. Enough for the criterion files and report flattening.

std::string escape(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Reads every record; empty trailing line ignored. Throws DataError with
// the line number on unbalanced quotes.
std::vector<std::vector<std::string>> read_all(std::istream& in,
                                               const std::string& origin = "<stream>");

std::string format_double(double v);  // shortest round-trip formatting

}  // namespace moodco::csv

#endif  // MOODCO_CSV_HPP
