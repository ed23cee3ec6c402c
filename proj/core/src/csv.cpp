#include "ggrey/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace ggrey::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_table(std::ostream& os, std::span<const std::string> header,
                 std::span<const std::vector<double>> rows) {
    for (std::size_t c = 0; c < header.size(); ++c)
        os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_table: row width does not match header");
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_double(row[c]);
        os << '\n';
    }
}

std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace ggrey::csv
