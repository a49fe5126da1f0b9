#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfr/enumerate.hpp"
#include "sqfr/reduce.hpp"
#include "sqfr/word.hpp"

namespace sqfr {

// A non-erasing morphism: one non-empty image word per source letter, extended
// to words by concatenation. May change alphabets.
class Morphism {
  public:
    Morphism(Alphabet source, Alphabet target, std::vector<std::string> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_.size())
            throw bad_alphabet("morphism needs one image per source symbol");
        for (const auto& img : images_) {
            if (img.empty()) throw empty_word();
            for (size_t i = 0; i < img.size(); ++i)
                if (!target_.contains(img[i])) throw unknown_symbol(i, img[i]);
        }
    }

    static Morphism identity(const Alphabet& a) {
        std::vector<std::string> images;
        for (size_t i = 0; i < a.size(); ++i) images.emplace_back(1, a.symbol(i));
        return Morphism(a, a, std::move(images));
    }

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const std::string& image(size_t i) const { return images_[i]; }

    const std::string& image_of(char c) const {
        const auto idx = source_.index_of(c);
        if (!idx) throw unknown_symbol(0, c);
        return images_[*idx];
    }

    bool uniform() const {
        for (const auto& img : images_)
            if (img.size() != images_.front().size()) return false;
        return true;
    }

    std::string apply_str(std::string_view letters) const {
        size_t total = 0;
        for (char c : letters) total += image_of(c).size();
        std::string out;
        out.reserve(total);
        for (char c : letters) out.append(image_of(c));
        return out;
    }

  private:
    Alphabet source_;
    Alphabet target_;
    std::vector<std::string> images_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) {
    if (w.alphabet() != m.source()) throw alphabet_mismatch();
    return Word(m.target(), m.apply_str(w.str()));
}

struct MorphismCheck {
    enum class Verdict { pass, fail, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    // On fail: a square-free source word whose image contains a square.
    std::optional<Word> witness;

    bool passed() const { return verdict == Verdict::pass; }
};

// Square-freeness test for a morphism. Uniform morphisms are decided by the
// length-3 criterion: they are square-free iff the images of all square-free
// source words of length at most 3 are square-free. Non-uniform morphisms only
// get the brute-force sweep up to brute_len, so a clean result for them is
// reported as inconclusive rather than a certificate.
inline MorphismCheck check_square_free_morphism(const Morphism& m, size_t brute_len = 5) {
    std::optional<Word> witness;
    auto sweep = [&](size_t len) {
        for_each_square_free(m.source(), len, [&](std::string_view s) {
            if (detail::has_square(m.apply_str(s))) {
                witness = Word(m.source(), std::string(s));
                return false;
            }
            return true;
        });
        return !witness.has_value();
    };

    const size_t decisive_len = 3;
    for (size_t len = 1; len <= std::max(decisive_len, brute_len); ++len)
        if (!sweep(len)) return {MorphismCheck::Verdict::fail, std::move(witness)};

    if (m.uniform()) return {MorphismCheck::Verdict::pass, std::nullopt};
    return {MorphismCheck::Verdict::inconclusive, std::nullopt};
}

// Maps a trace on X to a trace on m(X). A step (i, p) on an intermediate word
// Z becomes (|m(Z[0..i))|, |m(Z[i..i+p))|): the image of the reduced square is
// itself a square in the image word.
inline ReductionTrace transport_trace(const Morphism& m, const Word& x,
                                      const ReductionTrace& trace) {
    if (x.alphabet() != m.source()) throw alphabet_mismatch();
    std::string cur = x.str();
    ReductionTrace out;
    out.reserve(trace.size());
    for (size_t i = 0; i < trace.size(); ++i) {
        const auto& step = trace[i];
        if (!detail::occurrence_valid(cur, step))
            throw invalid_trace("transport_trace: step " + std::to_string(i) +
                                " is not a square occurrence");
        size_t start = 0;
        for (size_t j = 0; j < step.start; ++j) start += m.image_of(cur[j]).size();
        size_t period = 0;
        for (size_t j = step.start; j < step.start + step.period; ++j)
            period += m.image_of(cur[j]).size();
        out.push_back(SquareOccurrence{start, period});
        cur = detail::reduce_at_str(cur, step);
    }
    return out;
}

}  // namespace sqfr
