#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dsd {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data problems: missing/unknown columns, unparsable cells, invariant
/// violations, unit declarations. Maps to CLI exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

class SchemaError : public InputError {
public:
    SchemaError(std::string column, const std::string& what)
        : InputError(what), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// A cell that could not be parsed. `row` is the 1-based line number in the
/// source, header included.
class ParseError : public InputError {
public:
    ParseError(std::size_t row, std::string column, const std::string& what)
        : InputError(what), row_(row), column_(std::move(column)) {}
    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

class ValidationError : public InputError {
public:
    ValidationError(std::optional<std::size_t> row, std::string column, const std::string& what)
        : InputError(what), row_(row), column_(std::move(column)) {}
    std::optional<std::size_t> row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::optional<std::size_t> row_;
    std::string column_;
};

class UnitError : public InputError {
public:
    using InputError::InputError;
};

/// A requested metric scale that the dataset cannot support (e.g. per floor
/// area without floor-area data).
class UnsupportedScaleError : public InputError {
public:
    using InputError::InputError;
};

/// Precondition violations on otherwise well-formed inputs (bad year range,
/// mismatched active sets, empty stages).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numeric breakdown during integration. Maps to CLI exit code 3.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what, std::optional<std::size_t> segment = std::nullopt)
        : Error(what), segment_(segment) {}
    std::optional<std::size_t> segment() const noexcept { return segment_; }

private:
    std::optional<std::size_t> segment_;
};

/// A counterfactual path that pushed an end-use share outside [0, 1].
class ShareRangeError : public NumericError {
public:
    ShareRangeError(const std::string& what, std::size_t segment, std::string use)
        : NumericError(what, segment), use_(std::move(use)) {}
    const std::string& use() const noexcept { return use_; }

private:
    std::string use_;
};

}  // namespace dsd
