#pragma once

#include <stdexcept>
#include <string>

namespace pertcheck {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Carries file path and 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": " + what),
          path_(std::move(path)), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

// A loaded data file violates a structural invariant (e.g. a pair map
// that is not an involution). Names the offending entry.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Bad run configuration: missing path, malformed URL, unknown option value.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A value outside its documented domain (penalty not in 0..10, score
// outside [0,1], non-digit numeral, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

// Required data is missing for part of the computation: a template without
// a penalty entry, a suite item without a metric score, a sample id absent
// from the dataset. CLI maps this to exit code 3.
class DataGapError : public Error {
public:
    using Error::Error;
};

// A correlation input with zero variance on one side.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

} // namespace pertcheck
