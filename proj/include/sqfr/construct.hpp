#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqfr/builtins.hpp"
#include "sqfr/enumerate.hpp"
#include "sqfr/reduce.hpp"
#include "sqfr/word.hpp"

namespace sqfr {

// Exact count of square-free words of length n over k letters, by backtracking
// enumeration. The optional limits guard against infeasible (k, n).
inline uint64_t enumerate_square_free(size_t k, size_t n, const Limits& limits = Limits::none()) {
    const Alphabet a = standard_alphabet(k);
    detail::BudgetGuard guard(limits);
    uint64_t count = 0;
    bool out_of_budget = false;
    for_each_square_free(a, n, [&](std::string_view) {
        ++count;
        guard.note_word(n);
        if (!guard.ok()) {
            out_of_budget = true;
            return false;
        }
        return true;
    });
    if (out_of_budget) throw budget_exceeded("square-free enumeration out of budget");
    return count;
}

namespace detail {

// Prefix of the fixed point of a -> abc, b -> ac, c -> b starting from "a".
// The morphism fixes its infinite iterate and that word is square-free.
inline std::string square_free_fixed_point(size_t length) {
    std::string cur = "a";
    while (cur.size() < length) {
        std::string next;
        next.reserve(cur.size() * 3);
        for (char c : cur) {
            switch (c) {
                case 'a': next += "abc"; break;
                case 'b': next += "ac"; break;
                default: next += "b"; break;
            }
        }
        cur = std::move(next);
    }
    cur.resize(length);
    return cur;
}

}  // namespace detail

// Prefix of the fixed deterministic infinite square-free word over {a, b, y}
// that starts with y: the fixed point above renamed a -> y, b -> a, c -> b.
inline Word square_free_prefix(size_t length) {
    if (length == 0) throw empty_word();
    std::string s = detail::square_free_fixed_point(length);
    for (char& c : s) c = (c == 'a') ? 'y' : (c == 'b') ? 'a' : 'b';
    return Word(Alphabet("aby"), std::move(s));
}

// Strictly growing square-free prefixes W_1, W_2, ... of the fixed word over
// {a, b, y}; each starts and ends with y. W_i cuts at the i-th occurrence of y.
class PrefixFamily {
  public:
    explicit PrefixFamily(size_t count) {
        if (count == 0) throw insufficient_prefixes("prefix family needs at least one prefix");
        size_t length = 4 * count + 8;
        std::string base;
        std::vector<size_t> cuts;
        while (cuts.size() < count) {
            base = square_free_prefix(length).str();
            cuts.clear();
            for (size_t i = 0; i < base.size(); ++i)
                if (base[i] == 'y') cuts.push_back(i);
            length *= 2;
        }
        cuts.resize(count);
        base_ = base.substr(0, cuts.back() + 1);
        cuts_ = std::move(cuts);
    }

    size_t count() const { return cuts_.size(); }

    // 1-based, matching the W_i naming.
    Word prefix(size_t i) const {
        if (i == 0 || i > cuts_.size())
            throw insufficient_prefixes("prefix family holds " + std::to_string(cuts_.size()) +
                                        " prefixes");
        return Word(Alphabet("aby"), base_.substr(0, cuts_[i - 1] + 1));
    }

    const std::string& base() const { return base_; }

  private:
    std::string base_;
    std::vector<size_t> cuts_;
};

// (C D D D)^m over {a, b, c}. Each copy is 126 letters long.
inline Word build_W_m(size_t m) {
    if (m == 0) throw error("m must be positive");
    const std::string block =
        std::string(builtins::C_str) + builtins::D_str + builtins::D_str + builtins::D_str;
    std::string out;
    out.reserve(block.size() * m);
    for (size_t i = 0; i < m; ++i) out += block;
    return Word(builtins::ternary(), std::move(out));
}

// F W_1 F W_2 ... F W_i over {a, b, x, y}.
inline Word build_S_i(size_t i, const PrefixFamily& family) {
    if (i == 0) throw error("i must be positive");
    if (family.count() < i)
        throw insufficient_prefixes("family provides only " + std::to_string(family.count()) +
                                    " prefixes");
    const std::string f = builtins::F().str();
    std::string out;
    for (size_t j = 1; j <= i; ++j) {
        out += f;
        out += family.prefix(j).str();
    }
    return Word(builtins::abxy(), std::move(out));
}

// Factors T_1 .. T_j of the y-duplicated fixed word: T_i runs from the i-th
// occurrence of y to the next one inclusive, so it starts and ends with y,
// has no interior y, and is at most 5 letters long.
inline std::vector<Word> anchor_factors(size_t j) {
    size_t length = 4 * j + 16;
    std::vector<size_t> ys;
    std::string s;
    while (ys.size() < j + 1) {
        s = square_free_prefix(length).str();
        ys.clear();
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == 'y') ys.push_back(i);
        length *= 2;
    }
    std::vector<Word> out;
    out.reserve(j);
    for (size_t i = 0; i < j; ++i)
        out.emplace_back(Alphabet("aby"), s.substr(ys[i], ys[i + 1] - ys[i] + 1));
    return out;
}

// U T_1 U T_2 ... U T_j over {a, b, x, y}. U must be a word over {a, b, x}
// that starts and ends with x.
inline Word build_V_j(const Word& u, size_t j) {
    if (j == 0) throw error("j must be positive");
    for (char c : u.str())
        if (c != 'a' && c != 'b' && c != 'x')
            throw bad_anchor("U must use only the letters a, b, x");
    if (u.front() != 'x' || u.back() != 'x')
        throw bad_anchor("U must start and end with the letter x");
    const auto ts = anchor_factors(j);
    std::string out;
    for (size_t i = 0; i < j; ++i) {
        out += u.str();
        out += ts[i].str();
    }
    return Word(builtins::abxy(), std::move(out));
}

// Repeats letter i of W exactly exponents[i] times.
inline Word pad_letters(const Word& w, const std::vector<uint64_t>& exponents) {
    if (exponents.size() != w.size())
        throw length_mismatch("need exactly one exponent per letter");
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (exponents[i] == 0) throw zero_exponent();
        out.append(static_cast<size_t>(exponents[i]), w[i]);
    }
    return w.with_letters(std::move(out));
}

}  // namespace sqfr
