#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ggrey::csv {

// Shortest representation that round-trips a double exactly (17 significant
// digits are always enough).
std::string format_double(double v);

// Header line plus one row per entry of `rows`; all rows must share the
// column count of `header`.
void write_table(std::ostream& os, std::span<const std::string> header,
                 std::span<const std::vector<double>> rows);

std::vector<std::string> split_line(const std::string& line, char sep = ',');

} // namespace ggrey::csv
