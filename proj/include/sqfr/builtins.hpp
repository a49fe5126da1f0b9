#pragma once

#include <string>
#include <vector>

#include "sqfr/morphism.hpp"
#include "sqfr/reduce.hpp"
#include "sqfr/word.hpp"

namespace sqfr {

// Catalog of the named words, morphisms and traces the library's verification
// commands are built around. Stable CLI-visible identifiers:
//   words:     A B C D F P Q U X1..X5 S1..S5 Y1..Y5
//   morphisms: phi phiPrime psi
//   traces:    traceDA traceDB
namespace builtins {

inline const Alphabet& ternary() {
    static const Alphabet a("abc");
    return a;
}

inline const Alphabet& abx() {
    static const Alphabet a("abx");
    return a;
}

inline const Alphabet& abxy() {
    static const Alphabet a("abxy");
    return a;
}

inline constexpr const char* A_str = "abacabcbacabacbabc";
inline constexpr const char* B_str = "abacabcbacbcacbabc";
inline constexpr const char* C_str = "abacbcacbacabcbabc";
inline constexpr const char* D_str = "abacabcbabcbabacabacacbcacbabcbababc";

inline Word A() { return Word(ternary(), A_str); }
inline Word B() { return Word(ternary(), B_str); }
inline Word C() { return Word(ternary(), C_str); }
inline Word D() { return Word(ternary(), D_str); }

inline Morphism phi() { return Morphism(ternary(), ternary(), {A_str, B_str, C_str}); }
inline Morphism phi_prime() { return Morphism(ternary(), ternary(), {B_str, A_str, C_str}); }
inline Morphism psi() { return Morphism(ternary(), ternary(), {D_str, D_str, C_str}); }

inline Word F() { return Word(abx(), "xabaxababx"); }
inline Word P() { return Word(abx(), "xabx"); }
inline Word Q() { return Word(abx(), "xabaxabx"); }
inline Word U() { return Word(abx(), "xabaxababxbabx"); }

// The five factor words covering all square-free ternary words of length 9
// (up to alphabet permutation), the longer words that reduce to them, and the
// strictly shorter second reducts.
inline std::vector<Word> cover_factors() {
    return {Word(ternary(), "abcabac"), Word(ternary(), "abcacba"), Word(ternary(), "abcbabc"),
            Word(ternary(), "abcbacab"), Word(ternary(), "abcbacb")};
}

inline std::vector<Word> cover_sources() {
    return {Word(ternary(), "abcbabcbcacbcacabacabcbacabcabacacbcabacac"),
            Word(ternary(), "abcbabcbcacbcabacbcabcbacbcabcacbcbabcba"),
            Word(ternary(), "abcbabcbcacbcacabacabcbabcbc"),
            Word(ternary(), "abcbabcbcacbcacabacabcbacabcabacacbcacbacab"),
            Word(ternary(), "abcbabcbcacbcabacbcabcbacbcabcacbabcacbcb")};
}

inline std::vector<Word> cover_shortcuts() {
    return {Word(ternary(), "abcbac"), Word(ternary(), "abcba"), Word(ternary(), "abc"),
            Word(ternary(), "abcab"), Word(ternary(), "abcacb")};
}

// Step lists transcribed from the two worked reductions of D; verify_trace
// certifies them against A and B, so any transcription slip is caught
// mechanically.
inline ReductionTrace trace_DA() {
    return {{6, 4}, {7, 2}, {13, 4}, {12, 2}, {13, 4}, {14, 2}};
}

inline ReductionTrace trace_DB() {
    return {{6, 4}, {7, 2}, {7, 4}, {8, 2}, {13, 4}, {14, 2}};
}

enum class Kind { word, morphism, trace };

struct Entry {
    const char* name;
    Kind kind;
};

inline const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = {
        {"A", Kind::word},          {"B", Kind::word},
        {"C", Kind::word},          {"D", Kind::word},
        {"phi", Kind::morphism},    {"phiPrime", Kind::morphism},
        {"psi", Kind::morphism},    {"F", Kind::word},
        {"P", Kind::word},          {"Q", Kind::word},
        {"U", Kind::word},          {"X1", Kind::word},
        {"X2", Kind::word},         {"X3", Kind::word},
        {"X4", Kind::word},         {"X5", Kind::word},
        {"S1", Kind::word},         {"S2", Kind::word},
        {"S3", Kind::word},         {"S4", Kind::word},
        {"S5", Kind::word},         {"Y1", Kind::word},
        {"Y2", Kind::word},         {"Y3", Kind::word},
        {"Y4", Kind::word},         {"Y5", Kind::word},
        {"traceDA", Kind::trace},   {"traceDB", Kind::trace},
    };
    return entries;
}

inline Kind kind_of(const std::string& name) {
    for (const auto& e : catalog())
        if (name == e.name) return e.kind;
    throw unknown_builtin(name);
}

inline Word word(const std::string& name) {
    if (name == "A") return A();
    if (name == "B") return B();
    if (name == "C") return C();
    if (name == "D") return D();
    if (name == "F") return F();
    if (name == "P") return P();
    if (name == "Q") return Q();
    if (name == "U") return U();
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '5') {
        const size_t i = static_cast<size_t>(name[1] - '1');
        if (name[0] == 'X') return cover_factors()[i];
        if (name[0] == 'S') return cover_sources()[i];
        if (name[0] == 'Y') return cover_shortcuts()[i];
    }
    throw unknown_builtin(name);
}

inline Morphism morphism(const std::string& name) {
    if (name == "phi") return phi();
    if (name == "phiPrime") return phi_prime();
    if (name == "psi") return psi();
    throw unknown_builtin(name);
}

inline ReductionTrace trace(const std::string& name) {
    if (name == "traceDA") return trace_DA();
    if (name == "traceDB") return trace_DB();
    throw unknown_builtin(name);
}

// Consistency checks over the stored constants: morphism images, lengths,
// suffix structure and both traces. Throws on any violation.
inline void self_check() {
    const auto phi_m = phi();
    if (apply_morphism(phi_m, Word(ternary(), "a")) != A() ||
        apply_morphism(phi_m, Word(ternary(), "b")) != B() ||
        apply_morphism(phi_m, Word(ternary(), "c")) != C())
        throw error("builtin self-check: phi images");
    if (A().size() != 18 || B().size() != 18 || C().size() != 18 || D().size() != 36)
        throw error("builtin self-check: word lengths");
    if (F().size() != 10 || U().size() != 14)
        throw error("builtin self-check: F/U lengths");
    const std::string q = Q().str(), p = P().str();
    if (q.substr(q.size() - p.size()) != p)
        throw error("builtin self-check: P must be a suffix of Q");
    if (verify_trace(D(), trace_DA()) != A() || verify_trace(D(), trace_DB()) != B())
        throw error("builtin self-check: traces");
    const auto xs = cover_factors();
    const auto ys = cover_shortcuts();
    for (size_t i = 0; i < xs.size(); ++i)
        if (ys[i].size() >= xs[i].size())
            throw error("builtin self-check: shortcut lengths");
}

}  // namespace builtins
}  // namespace sqfr
