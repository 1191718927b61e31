#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slidestats/point_cloud.hpp"

namespace slide {

/// Shortest text that round-trips: 17 significant digits, "nan"/"inf" for
/// non-finite values.
std::string format_double(double x);

/// Splits one CSV line on commas, trimming blanks and surrounding quotes.
std::vector<std::string> split_csv_line(const std::string& line);

/// Parses a full numeric field; nullopt when the text is not a number.
std::optional<double> parse_number(const std::string& field);

struct CsvReadOptions {
    /// Use the first `dimension` columns; default is every column of the
    /// first data row.
    std::optional<std::size_t> dimension;
    /// Skip the first line unconditionally. Without it a first line that
    /// does not parse as numbers is treated as a header.
    bool skip_header = false;
};

/// One point per row. Throws ParseError naming the 1-based line number.
PointCloud read_point_cloud_csv(std::istream& in, const CsvReadOptions& opts = {});
PointCloud read_point_cloud_csv_file(const std::string& path, const CsvReadOptions& opts = {});

void write_point_cloud_csv(std::ostream& out, const PointCloud& pc);

/// Price column selector: zero-based index, or header name. Default is the
/// last column.
struct PriceColumn {
    std::optional<std::size_t> index;
    std::string name;

    static PriceColumn parse(const std::string& text);
};

/// Close prices in file order. A date column, if present, is ignored.
/// Throws ParseError or NonPositivePrice.
std::vector<double> load_prices(std::istream& in, const PriceColumn& column = {}, bool skip_header = false);
std::vector<double> load_prices_file(const std::string& path, const PriceColumn& column = {},
                                     bool skip_header = false);

}  // namespace slide
