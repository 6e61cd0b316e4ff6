#pragma once

#include <stdexcept>
#include <string>

namespace stabjgl {

/// Raised when caller-supplied data, options or files violate a documented
/// precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A column with zero sample variance was found while standardizing.
class ZeroVarianceError : public InputError {
public:
    ZeroVarianceError(std::size_t group, std::size_t column);

    std::size_t group() const noexcept { return group_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t group_;
    std::size_t column_;
};

/// Numerical failure inside an estimation routine (non-PD matrix, failed
/// factorization, too many failed subsample fits).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wraps an error raised by one stage of the stabJGL pipeline.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what);

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace stabjgl
