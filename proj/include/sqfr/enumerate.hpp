#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "sqfr/alphabet.hpp"
#include "sqfr/errors.hpp"

namespace sqfr {

namespace detail {

// A freshly appended letter can only close a square that ends at the new
// position, so extending a square-free prefix needs just the suffix check.
inline bool suffix_square(std::string_view s) {
    const size_t n = s.size();
    for (size_t p = 1; 2 * p <= n; ++p) {
        if (s.compare(n - 2 * p, p, s, n - p, p) == 0) return true;
    }
    return false;
}

template <typename Fn>
bool enumerate_square_free_rec(std::string& cur, size_t target, const Alphabet& a, Fn&& fn) {
    if (cur.size() == target) return fn(std::string_view(cur));
    for (size_t i = 0; i < a.size(); ++i) {
        cur.push_back(a.symbol(i));
        if (!suffix_square(cur)) {
            if (!enumerate_square_free_rec(cur, target, a, fn)) {
                cur.pop_back();
                return false;
            }
        }
        cur.pop_back();
    }
    return true;
}

}  // namespace detail

// Visits every square-free word of length n over the alphabet, in
// lexicographic order. The visitor returns false to stop early.
template <typename Fn>
void for_each_square_free(const Alphabet& a, size_t n, Fn&& fn) {
    if (n == 0) return;
    std::string cur;
    cur.reserve(n);
    detail::enumerate_square_free_rec(cur, n, a, fn);
}

inline Alphabet standard_alphabet(size_t k) {
    if (k == 0 || k > Alphabet::max_size) throw bad_alphabet("alphabet size must be in 1..26");
    std::string symbols;
    for (size_t i = 0; i < k; ++i) symbols.push_back(static_cast<char>('a' + i));
    return Alphabet(symbols);
}

}  // namespace sqfr
