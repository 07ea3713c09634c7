#include "oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>

#include "reduction.hpp"

namespace pregroup::oracle {

namespace {

bool even(std::int32_t z) { return (z & 1) == 0; }

constexpr std::int32_t kMinAdj = -8;
constexpr std::int32_t kMaxAdj = 7;
constexpr std::size_t kMaxPackedLen = 16;
constexpr GenId kMaxGenerators = 15;

using Key = ClosureResult::Key;

Key pack(const Word& w) {
  std::uint64_t parts[2] = {0, 0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto byte = 1 + static_cast<std::uint64_t>(w[i].gen) * 16 +
                      static_cast<std::uint64_t>(w[i].adj - kMinAdj);
    parts[i / 8] |= byte << (8 * (i % 8));
  }
  return {parts[0], parts[1]};
}

void check_packable(const GeneratorPoset& poset, const Word& w, std::size_t max_len,
                    std::int32_t index_bound) {
  if (static_cast<GenId>(poset.size()) > kMaxGenerators)
    throw error(errc::precondition, "closure search supports at most 15 generators");
  if (max_len > kMaxPackedLen)
    throw error(errc::precondition, "closure search supports words of at most 16 terms");
  if (index_bound < 0 || index_bound > kMaxAdj)
    throw error(errc::precondition, "closure search supports index bounds in [0, 7]");
  if (w.size() > max_len)
    throw error(errc::precondition, "starting word is longer than max_len");
  for (const auto& t : w)
    if (t.adj < kMinAdj || t.adj > kMaxAdj)
      throw error(errc::precondition, "adjoint index out of the packable range [-8, 7]");
}

enum class Dir { up, down };

// Emits every word one raw rewriting step away from w in the given direction.
template <typename Sink>
void neighbours(const Word& w, Dir dir, const GeneratorPoset& poset, std::size_t max_len,
                std::int32_t index_bound, const std::vector<GenId>& gens, Sink&& sink) {
  const auto n = w.size();

  // Cancel an adjacent exact pair.  Removing (g,z)(g,z+1) moves up the order,
  // removing (g,z+1)(g,z) moves down.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i].gen != w[i + 1].gen) continue;
    const auto delta = w[i + 1].adj - w[i].adj;
    if ((dir == Dir::up && delta != 1) || (dir == Dir::down && delta != -1)) continue;
    Word next;
    next.reserve(n - 2);
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    sink(std::move(next));
  }

  // Introduce an exact pair.  Inserting (g,z+1)(g,z) moves up, (g,z)(g,z+1)
  // moves down; inserted indices stay within [-index_bound, index_bound].
  if (n + 2 <= max_len) {
    for (std::size_t pos = 0; pos <= n; ++pos) {
      for (const GenId g : gens) {
        for (std::int32_t z = -index_bound; z < index_bound; ++z) {
          Word next;
          next.reserve(n + 2);
          next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          if (dir == Dir::up) {
            next.push_back({g, z + 1});
            next.push_back({g, z});
          } else {
            next.push_back({g, z});
            next.push_back({g, z + 1});
          }
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
          sink(std::move(next));
        }
      }
    }
  }

  // Replace one letter along the order induced on simple terms: covariant in
  // the generator order at even indices, contravariant at odd ones.  Both
  // directions are computed explicitly; incomparable generators admit neither.
  for (std::size_t i = 0; i < n; ++i) {
    const auto [g, z] = w[i];
    for (const GenId h : gens) {
      if (h == g) continue;
      const bool raises = even(z) ? poset.leq(g, h) : poset.leq(h, g);
      const bool lowers = even(z) ? poset.leq(h, g) : poset.leq(g, h);
      if (dir == Dir::up ? !raises : !lowers) continue;
      Word next(w);
      next[i].gen = h;
      sink(std::move(next));
    }
  }
}

std::vector<GenId> generator_set(const GeneratorPoset& poset, const std::vector<GenId>& allowed) {
  if (!allowed.empty()) return allowed;
  std::vector<GenId> gens(poset.size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = static_cast<GenId>(i);
  return gens;
}

ClosureResult closure(const Word& start, Dir dir, const GeneratorPoset& poset, std::size_t max_len,
                      std::int32_t index_bound, std::size_t max_steps,
                      const std::vector<GenId>& allowed, const Word* target = nullptr,
                      bool* found = nullptr) {
  check_packable(poset, start, max_len, index_bound);
  const auto gens = generator_set(poset, allowed);

  ClosureResult result;
  result.reachable.push_back(start);
  result.index.insert(pack(start));
  if (found) *found = false;
  if (target && start == *target) {
    if (found) *found = true;
    result.frontier_exhausted = false;
    return result;
  }

  std::deque<std::size_t> queue{0};
  std::size_t steps = 0;
  bool hit_target = false;
  while (!queue.empty() && !hit_target) {
    if (steps++ >= max_steps) {
      result.step_bound_hit = true;
      return result;
    }
    const Word current = result.reachable[queue.front()];
    queue.pop_front();
    neighbours(current, dir, poset, max_len, index_bound, gens, [&](Word&& next) {
      if (hit_target) return;
      if (!result.index.insert(pack(next)).second) return;
      if (target && next == *target) {
        hit_target = true;
        if (found) *found = true;
      }
      queue.push_back(result.reachable.size());
      result.reachable.push_back(std::move(next));
    });
  }
  result.frontier_exhausted = queue.empty() && !hit_target;
  return result;
}

}  // namespace

std::size_t ClosureResult::KeyHash::operator()(const Key& k) const noexcept {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return static_cast<std::size_t>(mix(k.a) ^ (mix(k.b) + 0x100000001b3ULL));
}

bool ClosureResult::contains(const Word& w) const { return index.contains(pack(w)); }

std::vector<StepResult> step_down(const Word& w, const GeneratorPoset& poset) {
  std::vector<StepResult> out;
  const auto n = static_cast<std::int32_t>(w.size());
  for (std::int32_t i = 0; i + 1 < n; ++i) {
    const auto a = w[static_cast<std::size_t>(i)];
    const auto b = w[static_cast<std::size_t>(i) + 1];
    if (a.gen != b.gen || b.adj != a.adj + 1) continue;
    Word next;
    next.reserve(static_cast<std::size_t>(n) - 2);
    next.insert(next.end(), w.begin(), w.begin() + i);
    next.insert(next.end(), w.begin() + i + 2, w.end());
    out.push_back({{StepKind::pair_removal, i, a, b}, std::move(next)});
  }
  for (std::int32_t i = 0; i < n; ++i) {
    const auto [g, z] = w[static_cast<std::size_t>(i)];
    for (GenId h = 0; h < static_cast<GenId>(poset.size()); ++h) {
      if (h == g) continue;
      const bool lower = even(z) ? poset.leq(h, g) : poset.leq(g, h);
      if (!lower) continue;
      Word next(w);
      next[static_cast<std::size_t>(i)].gen = h;
      out.push_back({{StepKind::replacement, i, {g, z}, {h, z}}, std::move(next)});
    }
  }
  return out;
}

ClosureResult closure_above(const Word& w, const GeneratorPoset& poset, std::size_t max_len,
                            std::int32_t index_bound, std::size_t max_steps,
                            const std::vector<GenId>& allowed) {
  return closure(w, Dir::up, poset, max_len, index_bound, max_steps, allowed);
}

ClosureResult closure_below(const Word& w, const GeneratorPoset& poset, std::size_t max_len,
                            std::int32_t index_bound, std::size_t max_steps,
                            const std::vector<GenId>& allowed) {
  return closure(w, Dir::down, poset, max_len, index_bound, max_steps, allowed);
}

LeqAnswer oracle_leq(const Word& w, const Word& v, const GeneratorPoset& poset,
                     std::size_t max_len, std::size_t max_steps) {
  if (w == v) return {true, false};
  // Every raw step preserves length parity, so mismatched parities are a
  // conclusive no regardless of bounds.
  if (((w.size() + v.size()) & 1) != 0) return {false, false};
  if (max_len < std::max(w.size(), v.size()))
    throw error(errc::precondition, "oracle_leq needs max_len to cover both words");

  std::int32_t widest = 0;
  for (const auto& word : {w, v})
    for (const auto& t : word) widest = std::max(widest, std::abs(t.adj));
  const std::int32_t index_bound = std::min<std::int32_t>(widest + 1, kMaxAdj);

  bool found = false;
  const auto r = closure(w, Dir::up, poset, max_len, index_bound, max_steps, {}, &v, &found);
  if (found) return {true, false};
  return {false, !r.frontier_exhausted};
}

std::vector<Word> down_closure(const GeneratorPoset& poset, const std::vector<GenId>& restrict_to,
                               std::size_t max_len, std::int32_t max_index) {
  if (max_index < 0) throw error(errc::invalid_argument, "max_index must be non-negative");
  const auto gens = generator_set(poset, restrict_to);
  std::vector<SimpleTerm> letters;
  for (const GenId g : gens)
    for (std::int32_t z = -max_index; z <= max_index; ++z) letters.push_back({g, z});

  std::vector<Word> out{Word{}};  // the identity cancels to itself
  Word word;
  for (std::size_t len = 2; len <= max_len; len += 2) {
    std::vector<std::size_t> digits(len, 0);
    word.assign(len, letters.empty() ? SimpleTerm{} : letters[0]);
    if (letters.empty()) break;
    for (;;) {
      for (std::size_t i = 0; i < len; ++i) word[i] = letters[digits[i]];
      if (contracts_to_empty(word, poset).holds) out.push_back(word);
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == letters.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), word_order);
  return out;
}

std::vector<Word> down_closure_by_search(const GeneratorPoset& poset,
                                         const std::vector<GenId>& restrict_to,
                                         std::size_t max_len, std::int32_t max_index,
                                         std::size_t prune_len) {
  if (max_index < 0) throw error(errc::invalid_argument, "max_index must be non-negative");
  if (prune_len == 0) prune_len = max_len + 2;
  const auto index_bound = std::min<std::int32_t>(max_index + 1, kMaxAdj);
  const auto r =
      closure_below(Word{}, poset, prune_len, index_bound, kDefaultStepBound, restrict_to);
  if (r.step_bound_hit)
    throw error(errc::precondition, "down-closure search hit its step bound before exhausting");
  std::vector<Word> out;
  for (const auto& w : r.reachable) {
    if (w.size() > max_len) continue;
    const bool in_range = std::all_of(w.begin(), w.end(), [&](const SimpleTerm& t) {
      return std::abs(t.adj) <= max_index;
    });
    if (in_range) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), word_order);
  return out;
}

bool word_order(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace pregroup::oracle
