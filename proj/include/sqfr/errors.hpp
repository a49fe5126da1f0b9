#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqfr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_word : error {
    empty_word() : error("empty word") {}
};

struct unknown_symbol : error {
    size_t position;
    char symbol;
    unknown_symbol(size_t pos, char ch)
        : error("unknown symbol '" + std::string(1, ch) + "' at position " + std::to_string(pos)),
          position(pos),
          symbol(ch) {}
};

struct bad_alphabet : error {
    using error::error;
};

struct alphabet_mismatch : error {
    alphabet_mismatch() : error("alphabet mismatch") {}
};

struct invalid_occurrence : error {
    invalid_occurrence(size_t start, size_t period)
        : error("no square of period " + std::to_string(period) + " at position " +
                std::to_string(start)) {}
};

struct invalid_step : error {
    size_t index;
    explicit invalid_step(size_t idx)
        : error("trace step " + std::to_string(idx) + " is not a square occurrence"), index(idx) {}
};

struct invalid_trace : error {
    using error::error;
};

struct unknown_builtin : error {
    explicit unknown_builtin(const std::string& name) : error("unknown builtin: " + name) {}
};

struct length_mismatch : error {
    using error::error;
};

struct zero_exponent : error {
    zero_exponent() : error("exponents must be positive") {}
};

struct insufficient_prefixes : error {
    using error::error;
};

struct bad_anchor : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

}  // namespace sqfr
