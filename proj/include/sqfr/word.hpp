#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfr/alphabet.hpp"
#include "sqfr/errors.hpp"

namespace sqfr {

// Locates a square factor: the two identical blocks occupy
// [start, start+period) and [start+period, start+2*period).
struct SquareOccurrence {
    size_t start = 0;
    size_t period = 0;

    friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

// A finite non-empty word over a fixed alphabet. Letters are stored as the
// alphabet's ASCII symbols, so str() is already the wire rendering.
class Word {
  public:
    Word(Alphabet alphabet, std::string letters)
        : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
        if (letters_.empty()) throw empty_word();
        for (size_t i = 0; i < letters_.size(); ++i)
            if (!alphabet_.contains(letters_[i])) throw unknown_symbol(i, letters_[i]);
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& str() const { return letters_; }
    size_t size() const { return letters_.size(); }
    char operator[](size_t i) const { return letters_[i]; }
    char front() const { return letters_.front(); }
    char back() const { return letters_.back(); }

    Word with_letters(std::string letters) const { return Word(alphabet_, std::move(letters)); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_ != b.letters_) return a.letters_ < b.letters_;
        return a.alphabet_.symbols() < b.alphabet_.symbols();
    }

  private:
    Alphabet alphabet_;
    std::string letters_;
};

inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
    return Word(alphabet, std::string(text));
}

// Alphabet consisting of the distinct letters of `text` in first-occurrence
// order. Used only where a command documents the inference.
inline Alphabet inferred_alphabet(std::string_view text) {
    std::string symbols;
    for (char c : text)
        if (symbols.find(c) == std::string::npos) symbols.push_back(c);
    return Alphabet(symbols);
}

namespace detail {

// Enumerates squares in O(n^2) time and O(n) space. For each period p, a
// right-to-left pass computes the match run length of s[i] vs s[i+p]; a square
// of period p starts at i exactly when the run reaches p.
template <typename Fn>
void for_each_square(std::string_view s, Fn&& fn) {
    const size_t n = s.size();
    std::vector<uint32_t> run(n, 0);
    for (size_t p = 1; 2 * p <= n; ++p) {
        const size_t last = n - p - 1;
        for (size_t k = n - p; k-- > 0;) {
            if (s[k] == s[k + p])
                run[k] = (k == last) ? 1 : run[k + 1] + 1;
            else
                run[k] = 0;
        }
        for (size_t i = 0; i + 2 * p <= n; ++i)
            if (run[i] >= p) fn(SquareOccurrence{i, p});
    }
}

inline bool has_square(std::string_view s) {
    const size_t n = s.size();
    std::vector<uint32_t> run(n, 0);
    for (size_t p = 1; 2 * p <= n; ++p) {
        const size_t last = n - p - 1;
        for (size_t k = n - p; k-- > 0;) {
            if (s[k] == s[k + p])
                run[k] = (k == last) ? 1 : run[k + 1] + 1;
            else
                run[k] = 0;
            if (run[k] >= p && k + 2 * p <= n) return true;
        }
    }
    return false;
}

inline bool occurrence_valid(std::string_view s, const SquareOccurrence& occ) {
    if (occ.period == 0 || occ.start + 2 * occ.period > s.size()) return false;
    return s.compare(occ.start, occ.period, s, occ.start + occ.period, occ.period) == 0;
}

inline bool is_subsequence_str(std::string_view needle, std::string_view hay) {
    size_t i = 0;
    for (char c : hay) {
        if (i < needle.size() && needle[i] == c) ++i;
        if (i == needle.size()) return true;
    }
    return i == needle.size();
}

}  // namespace detail

// All square occurrences of W, sorted ascending by (start, period).
inline std::vector<SquareOccurrence> find_squares(const Word& w) {
    std::vector<SquareOccurrence> out;
    detail::for_each_square(w.str(), [&](const SquareOccurrence& occ) { out.push_back(occ); });
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_square_free(const Word& w) { return !detail::has_square(w.str()); }

// True iff y can be obtained from x by deleting letters.
inline bool is_subsequence(const Word& y, const Word& x) {
    if (y.alphabet() != x.alphabet()) throw alphabet_mismatch();
    return detail::is_subsequence_str(y.str(), x.str());
}

inline Word reverse_word(const Word& w) {
    std::string s(w.str().rbegin(), w.str().rend());
    return w.with_letters(std::move(s));
}

inline Word apply_permutation(const AlphabetPermutation& perm, const Word& w) {
    if (perm.source() != w.alphabet()) throw alphabet_mismatch();
    bool same_alphabet = true;
    for (char c : perm.image())
        if (!w.alphabet().contains(c)) same_alphabet = false;
    Alphabet target = same_alphabet ? w.alphabet() : Alphabet(perm.image());
    return Word(std::move(target), perm.apply(w.str()));
}

// Searches W for a contiguous factor that is some alphabet permutation of F.
// Works by growing a partial bijection letter by letter, so it stays linear in
// the alphabet size instead of enumerating all k! permutations. The returned
// permutation is a full bijection source-alphabet -> target-alphabet extending
// the matched partial map (unused symbols filled in index order).
inline std::optional<AlphabetPermutation> contains_factor_up_to_permutation(const Word& w,
                                                                            const Word& f) {
    if (w.alphabet().size() != f.alphabet().size()) throw alphabet_mismatch();
    const std::string& hay = w.str();
    const std::string& pat = f.str();
    if (pat.size() > hay.size()) return std::nullopt;

    const Alphabet& src = f.alphabet();
    const Alphabet& dst = w.alphabet();
    const size_t k = src.size();

    for (size_t pos = 0; pos + pat.size() <= hay.size(); ++pos) {
        std::vector<int> fwd(k, -1), bwd(k, -1);
        bool ok = true;
        for (size_t i = 0; i < pat.size() && ok; ++i) {
            const size_t a = *src.index_of(pat[i]);
            const size_t b = *dst.index_of(hay[pos + i]);
            if (fwd[a] == -1 && bwd[b] == -1) {
                fwd[a] = static_cast<int>(b);
                bwd[b] = static_cast<int>(a);
            } else if (fwd[a] != static_cast<int>(b)) {
                ok = false;
            }
        }
        if (!ok) continue;
        size_t next = 0;
        std::string image(k, '?');
        for (size_t a = 0; a < k; ++a) {
            if (fwd[a] != -1) {
                image[a] = dst.symbol(static_cast<size_t>(fwd[a]));
            } else {
                while (bwd[next] != -1) ++next;
                image[a] = dst.symbol(next);
                bwd[next] = static_cast<int>(a);
            }
        }
        return AlphabetPermutation(src, image);
    }
    return std::nullopt;
}

namespace detail {

// Least image of s under any alphabet permutation: relabel distinct letters in
// first-occurrence order to the alphabet's symbols in index order.
inline std::string least_relabeling(std::string_view s, const Alphabet& a) {
    std::array<char, 128> lut{};
    size_t next = 0;
    std::string out(s);
    for (char& c : out) {
        char& slot = lut[static_cast<unsigned char>(c)];
        if (slot == 0) slot = a.symbol(next++);
        c = slot;
    }
    return out;
}

inline std::string canonical_str(std::string_view s, const Alphabet& a) {
    std::string fwd = least_relabeling(s, a);
    std::string rev(s.rbegin(), s.rend());
    rev = least_relabeling(rev, a);
    return std::min(fwd, rev);
}

}  // namespace detail

// Lexicographically least word in the orbit of W under alphabet permutations
// and reversal. Idempotent; every scan uses it to prune symmetric words.
inline Word canonical_form(const Word& w) {
    return w.with_letters(detail::canonical_str(w.str(), w.alphabet()));
}

}  // namespace sqfr
