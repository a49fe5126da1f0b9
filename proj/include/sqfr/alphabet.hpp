#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfr/errors.hpp"

namespace sqfr {

// An ordered set of distinct printable ASCII symbols. The declaration order is
// fixed and gives each symbol a stable index.
class Alphabet {
  public:
    static constexpr size_t max_size = 26;

    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.empty() || symbols_.size() > max_size)
            throw bad_alphabet("alphabet must have between 1 and 26 symbols");
        for (size_t i = 0; i < symbols_.size(); ++i) {
            const unsigned char c = static_cast<unsigned char>(symbols_[i]);
            if (c <= 0x20 || c >= 0x7f)
                throw bad_alphabet("alphabet symbols must be printable ASCII");
            if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
                throw bad_alphabet("alphabet symbols must be distinct");
        }
    }

    size_t size() const { return symbols_.size(); }
    char symbol(size_t i) const { return symbols_[i]; }
    const std::string& symbols() const { return symbols_; }

    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }

    std::optional<size_t> index_of(char c) const {
        const auto pos = symbols_.find(c);
        if (pos == std::string::npos) return std::nullopt;
        return pos;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) = default;

  private:
    std::string symbols_;
};

// A bijection on the symbols of one alphabet (or between two alphabets of the
// same size). image()[i] is where symbol i of the source alphabet goes.
class AlphabetPermutation {
  public:
    AlphabetPermutation(Alphabet source, std::string image)
        : source_(std::move(source)), image_(std::move(image)) {
        if (image_.size() != source_.size())
            throw bad_alphabet("permutation image size does not match alphabet");
        std::string sorted = image_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw bad_alphabet("permutation image symbols must be distinct");
    }

    static AlphabetPermutation identity(const Alphabet& a) {
        return AlphabetPermutation(a, a.symbols());
    }

    const Alphabet& source() const { return source_; }
    const std::string& image() const { return image_; }

    char map(char c) const {
        const auto idx = source_.index_of(c);
        if (!idx) throw unknown_symbol(0, c);
        return image_[*idx];
    }

    std::string apply(std::string_view letters) const {
        std::array<char, 128> lut{};
        for (size_t i = 0; i < source_.size(); ++i)
            lut[static_cast<unsigned char>(source_.symbol(i))] = image_[i];
        std::string out(letters);
        for (char& c : out) c = lut[static_cast<unsigned char>(c)];
        return out;
    }

    friend bool operator==(const AlphabetPermutation& a, const AlphabetPermutation& b) = default;

  private:
    Alphabet source_;
    std::string image_;
};

// All permutations of an alphabet onto itself, ordered lexicographically by
// image string. Factorial in the alphabet size; callers keep it small.
inline std::vector<AlphabetPermutation> all_permutations(const Alphabet& a) {
    if (a.size() > 8) throw bad_alphabet("permutation enumeration limited to 8 symbols");
    std::string image = a.symbols();
    std::sort(image.begin(), image.end());
    std::vector<AlphabetPermutation> out;
    do {
        out.emplace_back(a, image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace sqfr
