#pragma once

#include <stdexcept>
#include <string>

namespace metarich {

/// Malformed input data (CSV/TSV tables, abundance files).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Richness estimation failed (non-convergence, unstable fit, bad input shape).
class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Model fitting / testing contract violation (rank deficiency, df < 1, id mismatch).
class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
