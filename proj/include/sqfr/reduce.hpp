#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sqfr/word.hpp"

namespace sqfr {

// Resource caps for the search operations. Absent fields mean no cap.
struct Limits {
    std::optional<uint64_t> max_visited_words;
    std::optional<uint64_t> max_memory_bytes;
    std::optional<double> max_wall_seconds;

    static Limits none() { return {}; }
};

namespace detail {

// Tracks visited-word count, an approximate byte footprint and wall time
// against a Limits value. ok() turning false marks truncation; it never
// throws, callers decide how to surface the budget.
class BudgetGuard {
  public:
    explicit BudgetGuard(const Limits& limits)
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    void note_word(size_t len) {
        ++visited_;
        bytes_ += len + per_word_overhead;
    }

    uint64_t visited() const { return visited_; }

    bool ok() {
        if (limits_.max_visited_words && visited_ > *limits_.max_visited_words) return false;
        if (limits_.max_memory_bytes && bytes_ > *limits_.max_memory_bytes) return false;
        if (limits_.max_wall_seconds && ++ticks_ % 1024 == 0) {
            const auto elapsed = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - start_)
                                     .count();
            if (elapsed > *limits_.max_wall_seconds) timed_out_ = true;
        }
        return !timed_out_;
    }

  private:
    static constexpr uint64_t per_word_overhead = 64;
    Limits limits_;
    std::chrono::steady_clock::time_point start_;
    uint64_t visited_ = 0;
    uint64_t bytes_ = 0;
    uint64_t ticks_ = 0;
    bool timed_out_ = false;
};

inline std::string reduce_at_str(std::string_view s, const SquareOccurrence& occ) {
    std::string out;
    out.reserve(s.size() - occ.period);
    out.append(s.substr(0, occ.start + occ.period));
    out.append(s.substr(occ.start + 2 * occ.period));
    return out;
}

}  // namespace detail

// A sequence of square reductions, applied left to right. Serves as a
// checkable certificate that the final word is reachable from the first.
using ReductionTrace = std::vector<SquareOccurrence>;

inline ReductionTrace shift_trace(const ReductionTrace& trace, size_t offset) {
    ReductionTrace out = trace;
    for (auto& step : out) step.start += offset;
    return out;
}

inline ReductionTrace concat_traces(std::initializer_list<ReductionTrace> parts) {
    ReductionTrace out;
    for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

// Deletes the second block of the square at occ, giving U X V from U X X V.
inline Word reduce_at(const Word& w, const SquareOccurrence& occ) {
    if (!detail::occurrence_valid(w.str(), occ)) throw invalid_occurrence(occ.start, occ.period);
    return w.with_letters(detail::reduce_at_str(w.str(), occ));
}

// Distinct words reachable from W in exactly one reduction, sorted.
inline std::vector<Word> neighbors(const Word& w) {
    std::set<std::string> seen;
    detail::for_each_square(w.str(), [&](const SquareOccurrence& occ) {
        seen.insert(detail::reduce_at_str(w.str(), occ));
    });
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.push_back(w.with_letters(s));
    return out;
}

inline size_t out_degree(const Word& w) {
    std::set<std::string> seen;
    detail::for_each_square(w.str(), [&](const SquareOccurrence& occ) {
        seen.insert(detail::reduce_at_str(w.str(), occ));
    });
    return seen.size();
}

// The set R(W) of square-free reducts of W. `explored` counts distinct words
// visited by the traversal; `truncated` is set exactly when a limit was hit,
// in which case `reducts` is a subset of R(W).
struct ReductSet {
    Word source;
    std::vector<Word> reducts;  // sorted lexicographically
    uint64_t explored = 0;
    bool truncated = false;
    std::string diagnostic;

    bool contains(const Word& w) const {
        for (const auto& r : reducts)
            if (r.str() == w.str()) return true;
        return false;
    }
    uint64_t count() const { return reducts.size(); }
};

// Known complete reduct sets, keyed by exact word; closure traversal unions a
// hit instead of expanding it. Loaded from the memo cache.
using KnownReducts = std::unordered_map<std::string, std::vector<std::string>>;

// Exhaustive traversal of the reduction DAG below W with memoization on the
// exact word. R(W) is precisely the set of square-free words reachable from W,
// so a visited-set BFS collecting square-free members computes it exactly.
inline ReductSet reducts(const Word& w, const Limits& limits = Limits::none(),
                         const KnownReducts* known = nullptr) {
    detail::BudgetGuard guard(limits);
    std::unordered_set<std::string> visited;
    std::deque<const std::string*> queue;
    std::set<std::string> result;

    auto visit = [&](std::string&& s) {
        auto [it, inserted] = visited.insert(std::move(s));
        if (!inserted) return;
        guard.note_word(it->size());
        if (known) {
            if (auto hit = known->find(*it); hit != known->end()) {
                result.insert(hit->second.begin(), hit->second.end());
                return;
            }
        }
        queue.push_back(&*it);
    };

    visit(std::string(w.str()));
    bool truncated = false;
    while (!queue.empty()) {
        if (!guard.ok()) {
            truncated = true;
            break;
        }
        const std::string& cur = *queue.front();
        queue.pop_front();
        bool square_free = true;
        detail::for_each_square(cur, [&](const SquareOccurrence& occ) {
            square_free = false;
            visit(detail::reduce_at_str(cur, occ));
        });
        if (square_free) result.insert(cur);
    }

    ReductSet out{w, {}, guard.visited(), truncated, {}};
    out.reducts.reserve(result.size());
    for (const auto& s : result) out.reducts.push_back(w.with_letters(s));
    if (truncated) out.diagnostic = "budget exceeded; reduct set is a partial subset";
    return out;
}

// Applies the steps in order, validating each one. Throws invalid_step with
// the index of the first step that is not a square occurrence.
inline Word verify_trace(const Word& w, const ReductionTrace& trace) {
    std::string cur = w.str();
    for (size_t i = 0; i < trace.size(); ++i) {
        if (!detail::occurrence_valid(cur, trace[i])) throw invalid_step(i);
        cur = detail::reduce_at_str(cur, trace[i]);
    }
    return w.with_letters(std::move(cur));
}

enum class ReachStatus {
    found,            // trace returned
    absent,           // exhaustive search proved there is no trace
    budget_exceeded,  // undetermined: limits hit first
};

struct ReachResult {
    ReachStatus status = ReachStatus::absent;
    std::optional<ReductionTrace> trace;
    uint64_t explored = 0;
};

// Searches for a reduction sequence X ~> Y. Every intermediate word keeps X's
// first and last letter, contains Y as a subsequence and is at least as long
// as Y -- all three survive any further reduction, so pruning on them is sound
// and an exhausted search is a proof of absence.
inline ReachResult reachable(const Word& x, const Word& y, const Limits& limits = Limits::none()) {
    if (x.alphabet() != y.alphabet()) throw alphabet_mismatch();
    if (x.str() == y.str()) return {ReachStatus::found, ReductionTrace{}, 1};
    if (x.front() != y.front() || x.back() != y.back() || x.size() <= y.size() ||
        !detail::is_subsequence_str(y.str(), x.str()))
        return {ReachStatus::absent, std::nullopt, 1};

    detail::BudgetGuard guard(limits);
    struct Parent {
        const std::string* word;
        SquareOccurrence step;
    };
    std::unordered_map<std::string, Parent> visited;
    std::deque<const std::string*> queue;

    auto start = visited.emplace(x.str(), Parent{nullptr, {}}).first;
    guard.note_word(x.size());
    queue.push_back(&start->first);

    const std::string& target = y.str();
    while (!queue.empty()) {
        if (!guard.ok()) return {ReachStatus::budget_exceeded, std::nullopt, guard.visited()};
        const std::string& cur = *queue.front();
        queue.pop_front();
        bool found = false;
        SquareOccurrence found_step{};
        detail::for_each_square(cur, [&](const SquareOccurrence& occ) {
            if (found) return;
            std::string next = detail::reduce_at_str(cur, occ);
            if (next == target) {
                found = true;
                found_step = occ;
                return;
            }
            if (next.size() <= target.size()) return;
            if (!detail::is_subsequence_str(target, next)) return;
            auto [it, inserted] = visited.emplace(std::move(next), Parent{&cur, occ});
            if (inserted) {
                guard.note_word(it->first.size());
                queue.push_back(&it->first);
            }
        });
        if (found) {
            ReductionTrace trace{found_step};
            const std::string* node = &cur;
            while (node) {
                const Parent& p = visited.at(*node);
                if (!p.word) break;
                trace.push_back(p.step);
                node = p.word;
            }
            std::reverse(trace.begin(), trace.end());
            return {ReachStatus::found, std::move(trace), guard.visited()};
        }
    }
    return {ReachStatus::absent, std::nullopt, guard.visited()};
}

// Minimum number of reductions to any square-free word, via breadth-first
// layers. Zero exactly when W is already square-free.
inline uint64_t duplication_distance(const Word& w, const Limits& limits = Limits::none()) {
    if (is_square_free(w)) return 0;
    detail::BudgetGuard guard(limits);
    std::unordered_set<std::string> visited{w.str()};
    std::vector<std::string> layer{w.str()};
    guard.note_word(w.size());

    for (uint64_t depth = 1;; ++depth) {
        std::vector<std::string> next_layer;
        for (const std::string& cur : layer) {
            if (!guard.ok()) throw budget_exceeded("duplication distance search out of budget");
            bool hit_square_free = false;
            detail::for_each_square(cur, [&](const SquareOccurrence& occ) {
                if (hit_square_free) return;
                std::string next = detail::reduce_at_str(cur, occ);
                if (!detail::has_square(next)) {
                    hit_square_free = true;
                    return;
                }
                if (visited.insert(next).second) {
                    guard.note_word(next.size());
                    next_layer.push_back(std::move(next));
                }
            });
            if (hit_square_free) return depth;
        }
        if (next_layer.empty())
            throw error("reduction space exhausted without square-free word");  // unreachable
        layer = std::move(next_layer);
    }
}

}  // namespace sqfr
