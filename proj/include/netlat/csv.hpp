#pragma once

// Minimal CSV plumbing shared by ingest and the serializers. The toolkit's
// schemas are plain comma-separated numeric/text columns: no quoting, no
// embedded commas, '.' decimal point, first line is the header, empty cell
// means null.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netlat::csv {

std::vector<std::string> split_row(std::string_view line);

std::string join_row(const std::vector<std::string>& cells);

// Empty or whitespace-only cell -> nullopt; malformed number -> throws
// std::invalid_argument with the cell content in the message.
std::optional<double> parse_double_cell(std::string_view cell);

// Fixed 6 decimal places, the toolkit's numeric CSV format.
std::string format6(double v);

// Reads all lines (universal newlines); returns false on stream failure.
bool read_lines(std::istream& in, std::vector<std::string>& out);

}  // namespace netlat::csv
