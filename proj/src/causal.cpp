#include "causal.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace pregroup {

namespace {

std::vector<std::int32_t> owner_of_position(const BracketedWord& bw) {
  std::vector<std::int32_t> owner(bw.flat.size(), -1);
  for (std::size_t i = 0; i < bw.items.size(); ++i)
    for (std::int32_t p = bw.items[i].begin; p < bw.items[i].end; ++p)
      owner[static_cast<std::size_t>(p)] = static_cast<std::int32_t>(i);
  return owner;
}

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::string components_text(const std::vector<std::vector<std::int32_t>>& components) {
  std::string out;
  for (const auto& block : components) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

// All type strings of length 1..bound in declaration order, shortest first.
// The callback returns false to stop the sweep.
template <typename Fn>
void for_each_type_string(const Grammar& g, std::size_t bound, Fn&& fn) {
  const auto k = g.types().size();
  if (k == 0) return;
  std::vector<std::string> names;
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      names.clear();
      for (const auto d : digits) names.push_back(g.types()[d].name);
      if (!fn(names)) return;
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
      if (i == 0) break;
    }
  }
}

ConnectivityReport connectivity_of(const Grammar&, ParseResult&& parse, Mode mode) {
  ConnectivityReport r;
  r.mode = mode;
  r.bracketed = std::move(parse.bracketed);
  const auto& diagrams = parse.reductions.diagrams;

  std::size_t decider = 0;
  bool decided_early = false;
  bool verdict = (mode == Mode::forall);
  CausalGraph decider_graph;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    auto graph = causal_graph(r.bracketed, diagrams[i]);
    const bool connected = graph.connected();
    r.diagrams_examined = i + 1;
    if (i == 0) decider_graph = graph;
    if (mode == Mode::exists && connected) {
      verdict = true;
      decider = i;
      decider_graph = std::move(graph);
      decided_early = true;
      break;
    }
    if (mode == Mode::forall && !connected) {
      verdict = false;
      decider = i;
      decider_graph = std::move(graph);
      decided_early = true;
      break;
    }
  }
  r.connected = verdict;
  r.truncated = parse.reductions.truncated && !decided_early;
  if (!diagrams.empty()) {
    r.representative = diagrams[decider];
    r.graph = std::move(decider_graph);
    r.components = r.graph.components();
  }
  return r;
}

std::string describe_disconnect(const ConnectivityReport& rep) {
  std::string out = rep.mode == Mode::exists
                        ? "no reduction connects the causal graph"
                        : "a reduction leaves the causal graph disconnected";
  out += "; components " + components_text(rep.components);
  out += " after " + std::to_string(rep.diagrams_examined) +
         (rep.diagrams_examined == 1 ? " reduction" : " reductions");
  if (rep.truncated) out += " (enumeration capped)";
  return out;
}

}  // namespace

std::vector<std::vector<std::int32_t>> CausalGraph::components() const {
  UnionFind uf(nodes);
  for (const auto& e : edges) uf.unite(e.a, e.b);
  std::vector<std::vector<std::int32_t>> blocks;
  std::vector<std::int32_t> root_block(nodes, -1);
  for (std::size_t v = 0; v < nodes; ++v) {
    const auto root = uf.find(static_cast<std::int32_t>(v));
    auto& slot = root_block[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<std::int32_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot)].push_back(static_cast<std::int32_t>(v));
  }
  return blocks;  // ordered by smallest member since vertices ascend
}

bool CausalGraph::connected() const { return components().size() <= 1; }

CausalGraph causal_graph(const BracketedWord& bw, const LinkDiagram& diagram) {
  if (diagram.word != bw.flat)
    throw error(errc::precondition, "diagram does not belong to this bracketed word");
  const auto owner = owner_of_position(bw);
  CausalGraph g;
  g.nodes = bw.items.size();
  for (const auto& link : diagram.links) {
    const auto a = owner[static_cast<std::size_t>(link.left)];
    const auto b = owner[static_cast<std::size_t>(link.right)];
    if (a == b) {
      g.internal_links.push_back(link);
    } else {
      g.edges.push_back({std::min(a, b), std::max(a, b), link});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const CausalEdge& x, const CausalEdge& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.link < y.link;
  });
  return g;
}

ConnectivityReport sentence_connected(const Grammar& g, const std::vector<std::string>& type_names,
                                      Mode mode, std::size_t cap, std::optional<GenId> target) {
  const GenId t = target ? *target : g.sentence();
  ParseResult parse;
  parse.bracketed = g.bracket(type_names);
  parse.reductions = enumerate_reductions(parse.bracketed.flat, t, g.poset(), cap);
  parse.grammatical = !parse.reductions.diagrams.empty();
  if (!parse.grammatical)
    throw error(errc::precondition, "type string is not grammatical; no causal graph to examine");
  return connectivity_of(g, std::move(parse), mode);
}

ModelCheckReport check_s_connected(const Grammar& g, std::size_t bound, Mode mode, std::size_t cap,
                                   std::size_t max_counterexamples, std::optional<GenId> target) {
  const GenId t = target ? *target : g.sentence();
  ModelCheckReport r;
  r.property = ModelProperty::s_connected;
  r.bound = bound;
  r.mode = mode;
  for_each_type_string(g, bound, [&](const std::vector<std::string>& names) {
    ++r.strings_checked;
    ParseResult parse;
    parse.bracketed = g.bracket(names);
    parse.reductions = enumerate_reductions(parse.bracketed.flat, t, g.poset(), cap);
    parse.grammatical = !parse.reductions.diagrams.empty();
    if (!parse.grammatical) return true;
    ++r.grammatical_count;
    const auto rep = connectivity_of(g, std::move(parse), mode);
    if (!rep.connected) {
      r.counterexamples.push_back({names, describe_disconnect(rep)});
      if (r.counterexamples.size() >= max_counterexamples) return false;
    }
    return true;
  });
  r.conclusive = !r.counterexamples.empty();
  return r;
}

ModelCheckReport check_simply_reducing(const Grammar& g, std::size_t bound,
                                       std::size_t max_counterexamples) {
  const GenId s = g.sentence();
  ModelCheckReport r;
  r.property = ModelProperty::simply_reducing;
  r.bound = bound;
  for_each_type_string(g, bound, [&](const std::vector<std::string>& names) {
    ++r.strings_checked;
    const auto flat = g.bracket(names).flat;
    if (!reduces_to_simple(flat, s, g.poset()).holds) return true;
    ++r.grammatical_count;
    if (!simply_reduces(flat, g.poset(), s).holds) {
      r.counterexamples.push_back(
          {names, "reduces to the sentence generator but admits no simple split"});
      if (r.counterexamples.size() >= max_counterexamples) return false;
    }
    return true;
  });
  r.conclusive = !r.counterexamples.empty();
  return r;
}

SimpleSplit simply_reduces(const Word& w, const GeneratorPoset& poset, GenId s) {
  (void)poset.name(s);  // validates the generator
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].adj != 0 || !poset.leq(w[p].gen, s)) continue;
    const Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    const Word right(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
    const auto s_free = [&](const Word& part) {
      return std::none_of(part.begin(), part.end(),
                          [&](const SimpleTerm& t) { return t.gen == s; });
    };
    if (!s_free(left) || !s_free(right)) continue;
    if (contracts_to_empty(left, poset).holds && contracts_to_empty(right, poset).holds)
      return {true, static_cast<std::int32_t>(p), left, right};
  }
  return {};
}

std::vector<LintDiagnostic> lint_down_closure(const Grammar& g) {
  std::vector<LintDiagnostic> out;
  const auto sentence = g.poset().sentence();
  for (const auto& entry : g.types()) {
    if (!contracts_to_empty(entry.image, g.poset()).holds) continue;
    LintDiagnostic d;
    d.type_name = entry.name;
    d.message = "image cancels to the identity";
    if (sentence) {
      const bool avoids = std::none_of(entry.image.begin(), entry.image.end(),
                                       [&](const SimpleTerm& t) { return t.gen == *sentence; });
      if (avoids) {
        d.nonce_pattern = true;
        d.message += "; it avoids the sentence generator, so inserting it anywhere preserves "
                     "grammaticality";
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

AcyclicityReport acyclicity_sweep(const GeneratorPoset& poset, std::size_t max_len,
                                  std::int32_t max_index) {
  if (max_index < 0) throw error(errc::invalid_argument, "max_index must be non-negative");
  AcyclicityReport r;
  std::vector<SimpleTerm> letters;
  for (GenId g = 0; g < static_cast<GenId>(poset.size()); ++g)
    for (std::int32_t z = -max_index; z <= max_index; ++z) letters.push_back({g, z});
  if (letters.empty()) return r;
  Word word;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    word.assign(len, letters[0]);
    for (;;) {
      for (std::size_t i = 0; i < len; ++i) word[i] = letters[digits[i]];
      ++r.words_checked;
      if (contracts_to_empty(word, poset).holds && expands_from_empty(word, poset).holds)
        r.violations.push_back(word);
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == letters.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return r;
}

}  // namespace pregroup
