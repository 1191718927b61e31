#include "slidestats/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "slidestats/error.hpp"

namespace slide {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return in;
}

bool all_numeric(const std::vector<std::string>& fields) {
    for (const auto& f : fields)
        if (!parse_number(f)) return false;
    return !fields.empty();
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0) x = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        std::string field = trim(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (field.size() >= 2 && field.front() == '"' && field.back() == '"')
            field = field.substr(1, field.size() - 2);
        out.push_back(std::move(field));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_number(const std::string& field) {
    if (field.empty()) return std::nullopt;
    const char* first = field.data();
    const char* last = first + field.size();
    if (*first == '+') ++first;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return v;
}

PointCloud read_point_cloud_csv(std::istream& in, const CsvReadOptions& opts) {
    std::vector<double> coords;
    std::optional<std::size_t> dim = opts.dimension;
    if (dim && *dim == 0) throw Error(ErrorCode::ParseError, "dimension must be >= 1");
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (first_content) {
            first_content = false;
            if (opts.skip_header || !all_numeric(fields)) continue;
        }
        if (!dim) dim = fields.size();
        if (fields.size() < *dim)
            throw parse_error(lineno, "expected " + std::to_string(*dim) + " columns, found " +
                                          std::to_string(fields.size()));
        for (std::size_t c = 0; c < *dim; ++c) {
            const auto v = parse_number(fields[c]);
            if (!v) throw parse_error(lineno, "column " + std::to_string(c + 1) + " is not a number: '" + fields[c] + "'");
            if (!std::isfinite(*v)) throw parse_error(lineno, "non-finite coordinate");
            coords.push_back(*v);
        }
    }
    if (!dim) throw Error(ErrorCode::ParseError, "no data rows");
    return PointCloud(*dim, std::move(coords));
}

PointCloud read_point_cloud_csv_file(const std::string& path, const CsvReadOptions& opts) {
    auto in = open_or_throw(path);
    return read_point_cloud_csv(in, opts);
}

void write_point_cloud_csv(std::ostream& out, const PointCloud& pc) {
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << ',';
            out << format_double(p[c]);
        }
        out << '\n';
    }
}

PriceColumn PriceColumn::parse(const std::string& text) {
    PriceColumn col;
    if (text.empty()) return col;
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
    if (ec == std::errc() && ptr == text.data() + text.size())
        col.index = idx;
    else
        col.name = text;
    return col;
}

std::vector<double> load_prices(std::istream& in, const PriceColumn& column, bool skip_header) {
    std::vector<double> prices;
    std::optional<std::size_t> index = column.index;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (first_content) {
            first_content = false;
            bool header = skip_header || !column.name.empty();
            if (!header) {
                const std::size_t c = index.value_or(fields.size() - 1);
                header = c < fields.size() && !parse_number(fields[c]);
            }
            if (header) {
                if (!column.name.empty()) {
                    for (std::size_t c = 0; c < fields.size(); ++c)
                        if (fields[c] == column.name) index = c;
                    if (!index) throw parse_error(lineno, "no column named '" + column.name + "'");
                }
                continue;
            }
        }
        const std::size_t c = index.value_or(fields.size() - 1);
        if (c >= fields.size())
            throw parse_error(lineno, "missing price column " + std::to_string(c));
        const auto v = parse_number(fields[c]);
        if (!v || !std::isfinite(*v)) throw parse_error(lineno, "price is not a number: '" + fields[c] + "'");
        if (*v <= 0)
            throw Error(ErrorCode::NonPositivePrice, "line " + std::to_string(lineno) + ": price " +
                                                         fields[c] + " is not positive");
        prices.push_back(*v);
    }
    return prices;
}

std::vector<double> load_prices_file(const std::string& path, const PriceColumn& column, bool skip_header) {
    auto in = open_or_throw(path);
    return load_prices(in, column, skip_header);
}

}  // namespace slide
