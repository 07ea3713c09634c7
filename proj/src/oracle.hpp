#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "word.hpp"

namespace pregroup::oracle {

// Brute-force closure over the raw rewriting clauses of the free
// quasi-pregroup:
//
//   (g,z)(g,z+1)  ->  1            (cancellation of an exact adjoint pair)
//   1  ->  (g,z+1)(g,z)            (introduction of an exact adjoint pair)
//   (g,z) -> (h,z)                 (single-letter replacement along the
//                                   generator order, direction flipping with
//                                   the parity of z)
//
// each applied in any context.  This module deliberately re-derives everything
// from these clauses and shares no decision logic with the reduction engine;
// agreement between the two is what the equivalence suites certify.
//
// Limits: closures pack words into 128-bit keys, which supports posets with at
// most 15 generators, adjoint indices in [-8, 7], and words up to 16 terms.

enum class StepKind { pair_removal, pair_insertion, replacement };

struct RewriteStep {
  StepKind kind{};
  std::int32_t position{};  // leftmost position touched
  SimpleTerm a{}, b{};      // the pair involved, or old/new letter for replacements
};

struct StepResult {
  RewriteStep step;
  Word word;
};

// Single simplification moves: cancel one adjacent exact pair, or lower one
// letter along the order.  (Introductions are excluded; this enumerates the
// moves that never lengthen a word.)
std::vector<StepResult> step_down(const Word& w, const GeneratorPoset& poset);

struct ClosureResult {
  std::vector<Word> reachable;  // breadth-first order, starting word first
  bool frontier_exhausted{};
  bool step_bound_hit{};

  bool contains(const Word& w) const;

  // Internal membership index; see oracle.cpp for the packing.
  struct Key {
    std::uint64_t a{}, b{};
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  std::unordered_set<Key, KeyHash> index;
};

inline constexpr std::size_t kDefaultStepBound = 20'000'000;

// Everything reachable from w by steps that move up (resp. down) the word
// order, pruned to words of at most max_len terms.  Inserted pair indices stay
// within [-index_bound, index_bound]; an empty allowed list means "all
// generators of the poset".
ClosureResult closure_above(const Word& w, const GeneratorPoset& poset, std::size_t max_len,
                            std::int32_t index_bound, std::size_t max_steps = kDefaultStepBound,
                            const std::vector<GenId>& allowed = {});
ClosureResult closure_below(const Word& w, const GeneratorPoset& poset, std::size_t max_len,
                            std::int32_t index_bound, std::size_t max_steps = kDefaultStepBound,
                            const std::vector<GenId>& allowed = {});

struct LeqAnswer {
  bool holds{};
  bool inconclusive{};
};

// Does w <= v hold?  Breadth-first search from w through upward steps, pruning
// words longer than max_len (which must cover both inputs).  Exhausting the
// pruned search space without finding v answers "no" conclusively for that
// bound; hitting max_steps first leaves the answer inconclusive.
LeqAnswer oracle_leq(const Word& w, const Word& v, const GeneratorPoset& poset,
                     std::size_t max_len, std::size_t max_steps = kDefaultStepBound);

// All words of length <= max_len over the given generators, with adjoint
// indices in [-max_index, max_index], that cancel to the identity.  Decided by
// the reduction engine; the companion below recomputes the same set purely by
// rewriting search so the two can be compared.
std::vector<Word> down_closure(const GeneratorPoset& poset, const std::vector<GenId>& restrict_to,
                               std::size_t max_len, std::int32_t max_index);

std::vector<Word> down_closure_by_search(const GeneratorPoset& poset,
                                         const std::vector<GenId>& restrict_to,
                                         std::size_t max_len, std::int32_t max_index,
                                         std::size_t prune_len = 0 /* 0: max_len + 2 */);

// Deterministic order shared by the two down-closure routes: by length, then
// pointwise by (generator id, adjoint index).
bool word_order(const Word& a, const Word& b);

}  // namespace pregroup::oracle
