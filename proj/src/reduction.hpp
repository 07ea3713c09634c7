#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "word.hpp"

namespace pregroup {

enum class LinkKind { contraction, expansion };

// One arc joining two positions of a word.  Contraction arcs witness that the
// linked pair cancels; expansion arcs witness that it was introduced from the
// identity.
struct Link {
  std::int32_t left{};
  std::int32_t right{};
  LinkKind kind{LinkKind::contraction};

  friend bool operator==(const Link&, const Link&) = default;
  friend std::strong_ordering operator<=>(const Link& a, const Link& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    if (auto c = a.right <=> b.right; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

// A planar pattern of links over a word, plus the positions it leaves
// uncovered.  Links are kept sorted by (left, right); residuals ascend.
struct LinkDiagram {
  Word word;
  std::vector<Link> links;
  std::vector<std::int32_t> residuals;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

struct Verdict {
  bool holds{};
  std::optional<LinkDiagram> witness;
};

struct Enumeration {
  std::vector<LinkDiagram> diagrams;
  bool truncated{};
};

inline constexpr std::size_t kDefaultCap = 10'000;

// w <= 1: the word can be cancelled down to the identity.  The witness, when
// present, is the first complete contraction diagram in enumeration order.
Verdict contracts_to_empty(const Word& w, const GeneratorPoset& poset);

// 1 <= w: the word can be grown from the identity.  Witness links are
// expansion arcs.
Verdict expands_from_empty(const Word& w, const GeneratorPoset& poset);

// w <= v, decided as contracts_to_empty(w * right_adjoint(v)); the witness
// diagram lives on that product word.
Verdict leq(const Word& w, const Word& v, const GeneratorPoset& poset);

// w <= (target, 0): a diagram on w itself with exactly one residual position p
// carrying (g, 0) for some g <= target.  The empty word never qualifies.
Verdict reduces_to_simple(const Word& w, GenId target, const GeneratorPoset& poset);

// All diagrams witnessing w <= 1 (no target) or w <= (target, 0), in
// lexicographic order of their sorted link lists, up to cap (>= 1); truncated
// is set iff more exist.
Enumeration enumerate_reductions(const Word& w, std::optional<GenId> target,
                                 const GeneratorPoset& poset, std::size_t cap = kDefaultCap);

// Structural validation: every position in exactly one link or residual, links
// planar and properly nested, every link pair contractible/expandable once its
// interior has been cancelled, no residual strictly inside a link span.
// Returns a diagnostic for the first violation, or nothing when sound.
std::optional<std::string> check_diagram(const LinkDiagram& d, const GeneratorPoset& poset);

}  // namespace pregroup
