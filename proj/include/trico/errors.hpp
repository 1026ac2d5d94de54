#pragma once

#include <stdexcept>
#include <string>

namespace trico {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// bad input text (polynomial grammar, cover files)
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// input that parses but violates a contract (weights, presets, degenerate data)
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// resource cap hit; distinct from any mathematical failure
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, unsigned long long used)
        : Error(msg), spairs(used) {}
    unsigned long long spairs;
};

// mathematical precondition failed at run time (e.g. solver asked to
// enumerate a positive-dimensional variety)
struct MathError : Error {
    explicit MathError(const std::string& msg) : Error(msg) {}
};

}  // namespace trico
