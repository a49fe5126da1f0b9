#pragma once

// Independent brute-force oracles for the property tests. Everything here is
// deliberately naive and separate from the library's implementation paths.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sqfr/word.hpp"

namespace oracles {

// O(n^3) triple loop over (start, period, offset).
inline std::vector<sqfr::SquareOccurrence> naive_squares(std::string_view s) {
    std::vector<sqfr::SquareOccurrence> out;
    const size_t n = s.size();
    for (size_t start = 0; start < n; ++start) {
        for (size_t period = 1; start + 2 * period <= n; ++period) {
            bool equal = true;
            for (size_t k = 0; k < period; ++k)
                if (s[start + k] != s[start + period + k]) {
                    equal = false;
                    break;
                }
            if (equal) out.push_back({start, period});
        }
    }
    return out;
}

inline bool naive_square_free(std::string_view s) { return naive_squares(s).empty(); }

inline std::string naive_reduce(std::string_view s, const sqfr::SquareOccurrence& occ) {
    std::string out(s.substr(0, occ.start + occ.period));
    out += s.substr(occ.start + 2 * occ.period);
    return out;
}

// Unpruned reachability closure: every word obtainable from s by any sequence
// of square reductions, s included.
inline std::set<std::string> closure(std::string_view s) {
    std::set<std::string> seen{std::string(s)};
    std::vector<std::string> stack{std::string(s)};
    while (!stack.empty()) {
        std::string cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& occ : naive_squares(cur)) {
            std::string next = naive_reduce(cur, occ);
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return seen;
}

inline std::set<std::string> reduct_set(std::string_view s) {
    std::set<std::string> out;
    for (const auto& w : closure(s))
        if (naive_square_free(w)) out.insert(w);
    return out;
}

// Shortest number of reductions to a square-free word, by plain BFS.
inline uint64_t bfs_distance(std::string_view s) {
    if (naive_square_free(s)) return 0;
    std::set<std::string> seen{std::string(s)};
    std::vector<std::string> layer{std::string(s)};
    for (uint64_t depth = 1;; ++depth) {
        std::vector<std::string> next_layer;
        for (const auto& cur : layer) {
            for (const auto& occ : naive_squares(cur)) {
                std::string next = naive_reduce(cur, occ);
                if (naive_square_free(next)) return depth;
                if (seen.insert(next).second) next_layer.push_back(std::move(next));
            }
        }
        layer = std::move(next_layer);
    }
}

// Deterministic word source. Uses modulo draws on raw mt19937 output so the
// sequence does not depend on the standard library's distribution details.
class WordGen {
  public:
    explicit WordGen(uint64_t seed) : rng_(seed) {}

    uint64_t below(uint64_t n) { return rng_() % n; }

    std::string word(size_t max_len, std::string_view symbols) {
        const size_t len = 1 + static_cast<size_t>(below(max_len));
        std::string out;
        out.reserve(len);
        for (size_t i = 0; i < len; ++i) out.push_back(symbols[below(symbols.size())]);
        return out;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace oracles
