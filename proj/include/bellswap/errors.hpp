#pragma once

#include <stdexcept>
#include <string>

namespace bellswap {

// Malformed input text: state-spec strings, CLI grids, matrix file structure.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A density-matrix invariant failed (hermiticity, trace, positivity).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside its documented range.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Threshold search endpoints do not bracket a sign change.
struct bracket_error : std::runtime_error {
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellswap
