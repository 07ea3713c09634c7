#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "grammar.hpp"
#include "reduction.hpp"

namespace pregroup {

// One causal edge: a link of the reduction diagram whose endpoints fall in two
// different items of the bracketed word.
struct CausalEdge {
  std::int32_t a{};  // smaller item index
  std::int32_t b{};  // larger item index
  Link link{};       // the producing link, in flat-word positions
};

// Undirected multigraph on the items of a bracketed word.  Links internal to
// an item never affect connectivity and are kept aside.
struct CausalGraph {
  std::size_t nodes{};
  std::vector<CausalEdge> edges;      // sorted by (a, b, link.left, link.right)
  std::vector<Link> internal_links;   // diagram order

  // Connected components as sorted node lists, ordered by smallest member.
  std::vector<std::vector<std::int32_t>> components() const;
  bool connected() const;  // vacuously true for the empty graph
};

CausalGraph causal_graph(const BracketedWord& bw, const LinkDiagram& diagram);

// Quantifier over the reduction diagrams of a sentence: does some diagram
// connect the causal graph, or do all of them?
enum class Mode { exists, forall };

struct ConnectivityReport {
  bool connected{};
  std::vector<std::vector<std::int32_t>> components;  // of the representative
  Mode mode{Mode::exists};
  std::size_t diagrams_examined{};
  bool truncated{};  // enumeration cap was hit and the verdict leaned on it

  // Diagram and graph agreeing with the verdict (first connected one for an
  // exists yes, first disconnected one for a forall no, first overall else).
  LinkDiagram representative;
  CausalGraph graph;
  BracketedWord bracketed;

  // A truncated enumeration leaves exists-no and forall-yes unproven.
  bool conclusive() const {
    if (mode == Mode::exists && connected) return true;
    if (mode == Mode::forall && !connected) return true;
    return !truncated;
  }
};

// Requires the type string to be grammatical against the target (the sentence
// generator unless another target generator is supplied); errc::precondition
// otherwise.
ConnectivityReport sentence_connected(const Grammar& g, const std::vector<std::string>& type_names,
                                      Mode mode, std::size_t cap = kDefaultCap,
                                      std::optional<GenId> target = std::nullopt);

struct Counterexample {
  std::vector<std::string> types;
  std::string diagnostic;
};

enum class ModelProperty { s_connected, simply_reducing };

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Bounded model check: counterexamples are conclusive, their absence is only
// "none up to the bound".
struct ModelCheckReport {
  ModelProperty property{};
  std::size_t bound{};
  Mode mode{Mode::exists};
  std::vector<Counterexample> counterexamples;  // shortest first, then lexicographic
  bool conclusive{};
  std::size_t strings_checked{};
  std::size_t grammatical_count{};
};

// Sweeps all type strings of length 1..bound in declaration order and reports
// every grammatical one whose causal graph fails the connectivity mode.  The
// reduction target defaults to the sentence generator; any generator may be
// checked instead.
ModelCheckReport check_s_connected(const Grammar& g, std::size_t bound, Mode mode,
                                   std::size_t cap = kDefaultCap,
                                   std::size_t max_counterexamples = kNoLimit,
                                   std::optional<GenId> target = std::nullopt);

// Sweeps the same strings and reports every one that reduces to the sentence
// generator without factoring as u (t,0) v with t below it and u, v null words
// free of the sentence generator.
ModelCheckReport check_simply_reducing(const Grammar& g, std::size_t bound,
                                       std::size_t max_counterexamples = kNoLimit);

struct SimpleSplit {
  bool holds{};
  std::int32_t pivot{-1};  // position of the surviving simple term
  Word left, right;
};

SimpleSplit simply_reduces(const Word& w, const GeneratorPoset& poset, GenId s);

struct LintDiagnostic {
  std::string type_name;
  bool nonce_pattern{};  // image also avoids the sentence generator entirely
  std::string message;
};

// Flags every type whose image cancels to the identity: such a type preserves
// grammaticality wherever it is inserted, which deserves suspicion.
std::vector<LintDiagnostic> lint_down_closure(const Grammar& g);

struct AcyclicityReport {
  std::size_t words_checked{};
  std::vector<Word> violations;  // nonempty words with both w <= 1 and 1 <= w
  bool passed() const { return violations.empty(); }
};

// Exhaustively confirms that no nonempty word of bounded length and index is
// both below and above the identity.
AcyclicityReport acyclicity_sweep(const GeneratorPoset& poset, std::size_t max_len,
                                  std::int32_t max_index);

}  // namespace pregroup
