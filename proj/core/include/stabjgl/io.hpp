#pragma once

#include "stabjgl/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace stabjgl::io {

/// Malformed file content; the message carries path and 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::filesystem::path& path, std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct CsvMatrix {
    Matrix values;
    std::vector<std::string> header;  // empty when the file had no header row
};

/// Comma-separated numeric matrix. A first row that does not parse as numbers
/// is taken as the header.
CsvMatrix read_csv_matrix(const std::filesystem::path& path);

/// Writes with 17 significant digits so values round-trip exactly.
void write_csv_matrix(const std::filesystem::path& path, const Matrix& values,
                      const std::vector<std::string>& header = {});

/// One row of an edge-list file. Node indices are 1-based in files and
/// 0-based here; `group` is 0-based and -1 when the file has no group column.
struct EdgeRecord {
    Index i = 0;
    Index j = 0;
    int group = -1;
    double theta = 0.0;
    double partial_correlation = 0.0;
};

/// Tab-separated edge list with header. Recognised layouts:
///   i  j  group
///   i  j  theta_ij  partial_correlation
///   i  j
std::vector<EdgeRecord> read_edge_list(const std::filesystem::path& path);

/// Truth layout (i, j, group) for all groups in one file.
void write_group_edge_list(const std::filesystem::path& path, const std::vector<EdgeSet>& graphs);

/// Estimate layout (i, j, theta_ij, partial_correlation) for one group.
void write_estimated_edge_list(const std::filesystem::path& path, const EdgeSet& edges, const Matrix& theta,
                               const Matrix& partial_correlation);

/// Builds an EdgeSet on p nodes from records, optionally restricted to one
/// group. Out-of-range indices raise InputError.
EdgeSet edge_set_from_records(const std::vector<EdgeRecord>& records, Index p, int group = -1);

std::string format_double(double value);

}  // namespace stabjgl::io
