#include "stabjgl/io.hpp"

#include "stabjgl/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

namespace stabjgl::io {

ParseError::ParseError(const std::filesystem::path& path, std::size_t line, const std::string& what)
    : std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<long long> parse_integer(std::string_view s) {
    s = trim(s);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

CsvMatrix read_csv_matrix(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    CsvMatrix result;
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line, ',');
        std::vector<double> row;
        row.reserve(cells.size());
        bool numeric = true;
        for (const auto cell : cells) {
            const auto v = parse_double(cell);
            if (!v) {
                numeric = false;
                break;
            }
            row.push_back(*v);
        }
        if (!numeric) {
            if (rows.empty() && result.header.empty()) {
                for (const auto cell : cells) result.header.emplace_back(trim(cell));
                width = cells.size();
                continue;
            }
            throw ParseError(path, line_no, "non-numeric value");
        }
        if (width == 0) width = row.size();
        if (row.size() != width) {
            throw ParseError(path, line_no,
                             "expected " + std::to_string(width) + " columns, found " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    result.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(width));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) result.values(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
    return result;
}

void write_csv_matrix(const std::filesystem::path& path, const Matrix& values, const std::vector<std::string>& header) {
    if (!header.empty() && static_cast<Index>(header.size()) != values.cols()) {
        throw InputError("header length does not match the column count");
    }
    std::ofstream out = open_output(path);
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    if (!header.empty()) out << '\n';
    for (Index r = 0; r < values.rows(); ++r) {
        for (Index c = 0; c < values.cols(); ++c) out << (c ? "," : "") << format_double(values(r, c));
        out << '\n';
    }
    if (!out) throw InputError("failed writing " + path.string());
}

std::vector<EdgeRecord> read_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<EdgeRecord> records;
    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line, '\t');
        if (!seen_content) {
            seen_content = true;
            if (!parse_integer(cells.front())) {
                columns = cells.size();
                if (columns != 2 && columns != 3 && columns != 4) {
                    throw ParseError(path, line_no, "unrecognised edge-list header");
                }
                continue;
            }
        }
        if (columns == 0) columns = cells.size();
        if (cells.size() != columns) {
            throw ParseError(path, line_no,
                             "expected " + std::to_string(columns) + " fields, found " + std::to_string(cells.size()));
        }
        const auto i = parse_integer(cells[0]);
        const auto j = parse_integer(cells[1]);
        if (!i || !j) throw ParseError(path, line_no, "node indices must be integers");
        if (*i < 1 || *j < 1) throw ParseError(path, line_no, "node indices are 1-based");
        if (*i == *j) throw ParseError(path, line_no, "self-loop");
        EdgeRecord rec;
        rec.i = static_cast<Index>(*i - 1);
        rec.j = static_cast<Index>(*j - 1);
        if (columns == 3) {
            const auto g = parse_integer(cells[2]);
            if (!g || *g < 1) throw ParseError(path, line_no, "group must be a positive integer");
            rec.group = static_cast<int>(*g - 1);
        } else if (columns == 4) {
            const auto t = parse_double(cells[2]);
            const auto pc = parse_double(cells[3]);
            if (!t || !pc) throw ParseError(path, line_no, "theta and partial correlation must be numeric");
            rec.theta = *t;
            rec.partial_correlation = *pc;
        } else if (columns != 2) {
            throw ParseError(path, line_no, "edge lists have 2, 3 or 4 fields");
        }
        records.push_back(rec);
    }
    return records;
}

void write_group_edge_list(const std::filesystem::path& path, const std::vector<EdgeSet>& graphs) {
    std::ofstream out = open_output(path);
    out << "i\tj\tgroup\n";
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        for (const auto& e : graphs[g]) out << e.i + 1 << '\t' << e.j + 1 << '\t' << g + 1 << '\n';
    }
    if (!out) throw InputError("failed writing " + path.string());
}

void write_estimated_edge_list(const std::filesystem::path& path, const EdgeSet& edges, const Matrix& theta,
                               const Matrix& partial_correlation) {
    std::ofstream out = open_output(path);
    out << "i\tj\ttheta_ij\tpartial_correlation\n";
    for (const auto& e : edges) {
        out << e.i + 1 << '\t' << e.j + 1 << '\t' << format_double(theta(e.i, e.j)) << '\t'
            << format_double(partial_correlation(e.i, e.j)) << '\n';
    }
    if (!out) throw InputError("failed writing " + path.string());
}

EdgeSet edge_set_from_records(const std::vector<EdgeRecord>& records, Index p, int group) {
    EdgeSet edges(p);
    for (const auto& r : records) {
        if (group >= 0 && r.group != group) continue;
        if (r.i >= p || r.j >= p) {
            throw InputError("edge (" + std::to_string(r.i + 1) + ", " + std::to_string(r.j + 1) +
                             ") exceeds p = " + std::to_string(p));
        }
        edges.insert(r.i, r.j);
    }
    return edges;
}

}  // namespace stabjgl::io
