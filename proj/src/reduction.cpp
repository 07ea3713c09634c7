#include "reduction.hpp"

#include <algorithm>

namespace pregroup {

namespace {

// Memo for "subword [i, j) cancels to the identity" over half-open intervals.
// 0 = unknown, 1 = yes, 2 = no.
struct NullTable {
  std::vector<std::uint8_t> memo;
  std::size_t n{};

  void reset(std::size_t size) {
    n = size;
    memo.assign((n + 1) * (n + 1), 0);
  }
  std::uint8_t& at(std::size_t i, std::size_t j) { return memo[i * (n + 1) + j]; }
};

bool pair_ok(const Word& w, const GeneratorPoset& poset, std::size_t i, std::size_t k,
             LinkKind kind) {
  return kind == LinkKind::contraction ? contractible_pair(w[i], w[k], poset)
                                       : expandable_pair(w[i], w[k], poset);
}

bool null_interval(const Word& w, const GeneratorPoset& poset, NullTable& t, std::size_t i,
                   std::size_t j, LinkKind kind) {
  if (((j - i) & 1) != 0) return false;
  if (i == j) return true;
  std::uint8_t& m = t.at(i, j);
  if (m) return m == 1;
  bool ok = false;
  for (std::size_t k = i + 1; k < j; k += 2) {
    if (pair_ok(w, poset, i, k, kind) && null_interval(w, poset, t, i + 1, k, kind) &&
        null_interval(w, poset, t, k + 1, j, kind)) {
      ok = true;
      break;
    }
  }
  m = ok ? 1 : 2;
  return ok;
}

// First witness in enumeration order, assuming null_interval(i, j) holds.
void reconstruct(const Word& w, const GeneratorPoset& poset, NullTable& t, std::size_t i,
                 std::size_t j, LinkKind kind, std::vector<Link>& out) {
  if (i == j) return;
  for (std::size_t k = i + 1; k < j; k += 2) {
    if (pair_ok(w, poset, i, k, kind) && null_interval(w, poset, t, i + 1, k, kind) &&
        null_interval(w, poset, t, k + 1, j, kind)) {
      out.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(k), kind});
      reconstruct(w, poset, t, i + 1, k, kind, out);
      reconstruct(w, poset, t, k + 1, j, kind, out);
      return;
    }
  }
}

thread_local NullTable scratch;

Verdict decide(const Word& w, const GeneratorPoset& poset, LinkKind kind) {
  scratch.reset(w.size());
  if (!null_interval(w, poset, scratch, 0, w.size(), kind)) return {};
  LinkDiagram d;
  d.word = w;
  reconstruct(w, poset, scratch, 0, w.size(), kind, d.links);
  return {true, std::move(d)};
}

// Type-erased continuation so the recursive walk below stays a plain function
// (a templated continuation would re-instantiate itself one level deeper per
// nesting depth).
struct Sink {
  void* ctx;
  bool (*fn)(void*);
  bool operator()() const { return fn(ctx); }
};

template <typename F>
Sink make_sink(F& f) {
  return {&f, [](void* c) { return (*static_cast<F*>(c))(); }};
}

// Emits, in lexicographic order of the accumulated (already sorted) link list,
// every complete matching of [i, j).  The continuation runs once per matching
// of the interval; a false return from the sink aborts the whole walk.
bool matchings(const Word& w, const GeneratorPoset& poset, NullTable& t, std::size_t i,
               std::size_t j, LinkKind kind, std::vector<Link>& prefix, Sink cont) {
  if (i == j) return cont();
  if (!null_interval(w, poset, t, i, j, kind)) return true;
  for (std::size_t k = i + 1; k < j; k += 2) {
    if (!pair_ok(w, poset, i, k, kind)) continue;
    if (!null_interval(w, poset, t, i + 1, k, kind) || !null_interval(w, poset, t, k + 1, j, kind))
      continue;
    prefix.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(k), kind});
    auto tail = [&] { return matchings(w, poset, t, k + 1, j, kind, prefix, cont); };
    const bool keep = matchings(w, poset, t, i + 1, k, kind, prefix, make_sink(tail));
    prefix.pop_back();
    if (!keep) return false;
  }
  return true;
}

bool diagram_less(const LinkDiagram& a, const LinkDiagram& b) { return a.links < b.links; }

}  // namespace

Verdict contracts_to_empty(const Word& w, const GeneratorPoset& poset) {
  return decide(w, poset, LinkKind::contraction);
}

Verdict expands_from_empty(const Word& w, const GeneratorPoset& poset) {
  return decide(w, poset, LinkKind::expansion);
}

Verdict leq(const Word& w, const Word& v, const GeneratorPoset& poset) {
  return contracts_to_empty(multiply(w, right_adjoint(v)), poset);
}

Verdict reduces_to_simple(const Word& w, GenId target, const GeneratorPoset& poset) {
  scratch.reset(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].adj != 0 || !poset.leq(w[p].gen, target)) continue;
    if (!null_interval(w, poset, scratch, 0, p, LinkKind::contraction)) continue;
    if (!null_interval(w, poset, scratch, p + 1, w.size(), LinkKind::contraction)) continue;
    LinkDiagram d;
    d.word = w;
    reconstruct(w, poset, scratch, 0, p, LinkKind::contraction, d.links);
    reconstruct(w, poset, scratch, p + 1, w.size(), LinkKind::contraction, d.links);
    d.residuals.push_back(static_cast<std::int32_t>(p));
    return {true, std::move(d)};
  }
  return {};
}

Enumeration enumerate_reductions(const Word& w, std::optional<GenId> target,
                                 const GeneratorPoset& poset, std::size_t cap) {
  if (cap == 0) throw error(errc::invalid_argument, "enumeration cap must be at least 1");

  Enumeration out;
  NullTable table;
  table.reset(w.size());
  std::vector<Link> prefix;

  if (!target) {
    // Single stream, already in lexicographic order.
    std::size_t budget = cap + 1;
    auto emit = [&] {
      LinkDiagram d;
      d.word = w;
      d.links = prefix;
      out.diagrams.push_back(std::move(d));
      return --budget > 0;
    };
    matchings(w, poset, table, 0, w.size(), LinkKind::contraction, prefix, make_sink(emit));
    if (out.diagrams.size() > cap) {
      out.diagrams.resize(cap);
      out.truncated = true;
    }
    return out;
  }

  // One stream per residual position, each in lexicographic order and cut off
  // at cap + 1 entries.  A stream's unseen tail is lexicographically above its
  // seen part, so the union of stream prefixes contains the global first cap.
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].adj != 0 || !poset.leq(w[p].gen, *target)) continue;
    std::size_t budget = cap + 1;
    auto emit = [&] {
      LinkDiagram d;
      d.word = w;
      d.links = prefix;
      d.residuals.push_back(static_cast<std::int32_t>(p));
      out.diagrams.push_back(std::move(d));
      return --budget > 0;
    };
    auto right = [&] {
      return matchings(w, poset, table, p + 1, w.size(), LinkKind::contraction, prefix,
                       make_sink(emit));
    };
    matchings(w, poset, table, 0, p, LinkKind::contraction, prefix, make_sink(right));
  }
  std::sort(out.diagrams.begin(), out.diagrams.end(), diagram_less);
  if (out.diagrams.size() > cap) {
    out.diagrams.resize(cap);
    out.truncated = true;
  }
  return out;
}

std::optional<std::string> check_diagram(const LinkDiagram& d, const GeneratorPoset& poset) {
  const std::size_t n = d.word.size();
  std::vector<std::int32_t> cover(n, -1);  // link index per position, -2 residual

  for (std::size_t li = 0; li < d.links.size(); ++li) {
    const Link& l = d.links[li];
    if (l.left < 0 || l.right < 0 || static_cast<std::size_t>(l.right) >= n || l.left >= l.right)
      return "link positions out of range or misordered";
    for (std::int32_t p : {l.left, l.right}) {
      if (cover[static_cast<std::size_t>(p)] != -1) return "position covered twice";
      cover[static_cast<std::size_t>(p)] = static_cast<std::int32_t>(li);
    }
  }
  for (std::int32_t r : d.residuals) {
    if (r < 0 || static_cast<std::size_t>(r) >= n) return "residual out of range";
    if (cover[static_cast<std::size_t>(r)] != -1) return "residual position also covered";
    cover[static_cast<std::size_t>(r)] = -2;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (cover[p] == -1) return "position " + std::to_string(p) + " uncovered";
  }
  if (!std::is_sorted(d.links.begin(), d.links.end())) return "links not sorted";
  if (!std::is_sorted(d.residuals.begin(), d.residuals.end())) return "residuals not sorted";

  for (std::int32_t r : d.residuals) {
    for (const Link& l : d.links) {
      if (l.left < r && r < l.right) return "residual inside a link span";
    }
  }

  // Scan with a stack: planarity and nesting mean every right end closes the
  // most recently opened link, at which point the pair is adjacent in the
  // partially cancelled word and must satisfy the pair test.
  std::vector<std::size_t> open;
  for (std::size_t p = 0; p < n; ++p) {
    if (cover[p] == -2) continue;
    const std::size_t li = static_cast<std::size_t>(cover[p]);
    const Link& l = d.links[li];
    if (static_cast<std::size_t>(l.left) == p) {
      open.push_back(li);
    } else {
      if (open.empty() || open.back() != li) return "crossing links";
      open.pop_back();
      const auto a = d.word[static_cast<std::size_t>(l.left)];
      const auto b = d.word[static_cast<std::size_t>(l.right)];
      const bool ok = l.kind == LinkKind::contraction ? contractible_pair(a, b, poset)
                                                      : expandable_pair(a, b, poset);
      if (!ok) return "linked pair fails its pair test";
    }
  }
  if (!open.empty()) return "unclosed link";
  return std::nullopt;
}

}  // namespace pregroup
