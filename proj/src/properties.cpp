#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "causal.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "word.hpp"

namespace pregroup {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

GeneratorPoset make_discrete_poset(std::size_t generators) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GeneratorPoset(std::move(names), {});
}

std::vector<SimpleTerm> letter_family(const GeneratorPoset& poset, std::int32_t max_index) {
  std::vector<SimpleTerm> letters;
  for (GenId g = 0; g < static_cast<GenId>(poset.size()); ++g)
    for (std::int32_t z = -max_index; z <= max_index; ++z) letters.push_back({g, z});
  return letters;
}

// All words of length 0..max_len over the letters, shortest first.
template <typename Fn>
void for_each_word(const std::vector<SimpleTerm>& letters, std::size_t max_len, Fn&& fn) {
  Word word;
  fn(word);
  if (letters.empty()) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    word.assign(len, letters[0]);
    for (;;) {
      for (std::size_t i = 0; i < len; ++i) word[i] = letters[digits[i]];
      fn(word);
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == letters.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
}

std::size_t family_size(std::size_t letters, std::size_t max_len) {
  std::size_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    layer *= letters;
  }
  return total;
}

Word random_word(std::mt19937_64& rng, const std::vector<SimpleTerm>& letters,
                 std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> letter_dist(0, letters.size() - 1);
  Word w(len_dist(rng));
  for (auto& t : w) t = letters[letter_dist(rng)];
  return w;
}

// Inserts one exact contraction pair, producing a word one step below v.
Word insert_contraction_pair(std::mt19937_64& rng, const Word& v, const GeneratorPoset& poset,
                             std::int32_t max_index) {
  std::uniform_int_distribution<std::size_t> pos_dist(0, v.size());
  std::uniform_int_distribution<GenId> gen_dist(0, static_cast<GenId>(poset.size()) - 1);
  std::uniform_int_distribution<std::int32_t> z_dist(-max_index, max_index - 1);
  const auto pos = static_cast<std::ptrdiff_t>(pos_dist(rng));
  const GenId g = gen_dist(rng);
  const auto z = z_dist(rng);
  Word w = v;
  w.insert(w.begin() + pos, {SimpleTerm{g, z}, SimpleTerm{g, z + 1}});
  return w;
}

// One step up from w: remove a raw contraction pair when possible, otherwise
// insert an expansion pair (if the length budget allows).
Word up_step(std::mt19937_64& rng, const Word& w, const GeneratorPoset& poset,
             std::int32_t max_index, std::size_t max_len) {
  std::vector<std::size_t> removable;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen && w[i + 1].adj == w[i].adj + 1) removable.push_back(i);
  const bool can_insert = w.size() + 2 <= max_len;
  if (!removable.empty() && (!can_insert || (rng() & 1))) {
    std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
    const auto i = removable[pick(rng)];
    Word next = w;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
               next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    return next;
  }
  if (can_insert) {
    std::uniform_int_distribution<std::size_t> pos_dist(0, w.size());
    std::uniform_int_distribution<GenId> gen_dist(0, static_cast<GenId>(poset.size()) - 1);
    std::uniform_int_distribution<std::int32_t> z_dist(-max_index, max_index - 1);
    const auto pos = static_cast<std::ptrdiff_t>(pos_dist(rng));
    const GenId g = gen_dist(rng);
    const auto z = z_dist(rng);
    Word next = w;
    next.insert(next.begin() + pos, {SimpleTerm{g, z + 1}, SimpleTerm{g, z}});
    return next;
  }
  return w;
}

template <typename Fn>
SectionResult run_section(const std::string& name, Fn&& body) {
  SectionResult s;
  s.name = name;
  const auto t0 = Clock::now();
  body(s);
  s.seconds = seconds_since(t0);
  s.passed = s.failures == 0 && s.inconclusive == 0;
  return s;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

bool PropertySuiteReport::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const SectionResult& s) { return s.passed; });
}

const SectionResult* PropertySuiteReport::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::string PropertySuiteReport::to_text() const {
  std::string out;
  std::size_t failed = 0;
  for (const auto& s : sections) {
    if (!s.passed) ++failed;
    out += s.passed ? "PASS  " : "FAIL  ";
    out += s.name + ": cases=" + std::to_string(s.cases) +
           " failures=" + std::to_string(s.failures) +
           " inconclusive=" + std::to_string(s.inconclusive) + " (" + format_seconds(s.seconds) +
           " s)";
    if (!s.detail.empty()) out += " [" + s.detail + "]";
    out += '\n';
  }
  out += failed == 0 ? "property suite: all " + std::to_string(sections.size()) +
                           " sections passed\n"
                     : "property suite: " + std::to_string(failed) + " of " +
                           std::to_string(sections.size()) + " sections FAILED\n";
  return out;
}

std::string PropertySuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    j["sections"].push_back({{"name", s.name},
                             {"passed", s.passed},
                             {"cases", s.cases},
                             {"failures", s.failures},
                             {"inconclusive", s.inconclusive},
                             {"seconds", s.seconds},
                             {"detail", s.detail}});
  }
  return j.dump(2);
}

PropertySuiteReport run_property_suite(const PropertySuiteConfig& config) {
  if (config.generators < 1 || config.generators > 15)
    throw error(errc::invalid_argument, "property suite supports 1 to 15 generators");
  if (config.max_len > 14)
    throw error(errc::invalid_argument, "property suite supports max_len up to 14");
  if (config.max_index < 0 || config.max_index > 6)
    throw error(errc::invalid_argument, "property suite supports max_index in [0, 6]");

  const auto poset = make_discrete_poset(config.generators);
  const auto letters = letter_family(poset, config.max_index);
  const auto max_len = config.max_len;
  const auto max_index = config.max_index;
  const auto prune = max_len + 2;
  const auto index_bound = max_index + 1;

  PropertySuiteReport report;
  std::mt19937_64 rng(config.seed);

  report.sections.push_back(run_section("acyclicity", [&](SectionResult& s) {
    const auto sweep = acyclicity_sweep(poset, max_len, max_index);
    s.cases = sweep.words_checked;
    s.failures = sweep.violations.size();
    if (!sweep.violations.empty())
      s.detail = "first violation: " + format_word(sweep.violations.front(), poset);
  }));

  report.sections.push_back(
      run_section("contraction-expansion oracle equivalence", [&](SectionResult& s) {
        const auto down = oracle::closure_below({}, poset, prune, index_bound);
        const auto up = oracle::closure_above({}, poset, prune, index_bound);
        if (!down.frontier_exhausted || !up.frontier_exhausted) {
          s.inconclusive = 1;
          s.detail = "closure search hit its step bound";
          return;
        }
        for_each_word(letters, max_len, [&](const Word& w) {
          const bool engine_c = contracts_to_empty(w, poset).holds;
          const bool oracle_c = down.contains(w);
          const bool engine_e = expands_from_empty(w, poset).holds;
          const bool oracle_e = up.contains(w);
          s.cases += 2;
          s.failures += static_cast<std::size_t>(engine_c != oracle_c) +
                        static_cast<std::size_t>(engine_e != oracle_e);
        });
        s.detail = "family=" + std::to_string(family_size(letters.size(), max_len)) +
                   " closure-below=" + std::to_string(down.reachable.size()) +
                   " closure-above=" + std::to_string(up.reachable.size());
      }));

  report.sections.push_back(run_section("leq oracle sampling", [&](SectionResult& s) {
    // Exhaustive stratum: every ordered pair of short words, where "short" is
    // the smallest length whose pair count reaches the configured minimum.
    std::size_t short_len = 0;
    while (short_len < max_len) {
      const auto n = family_size(letters.size(), short_len);
      if (n * n >= config.min_leq_pairs || n * n > 250'000) break;
      ++short_len;
    }
    std::vector<Word> short_words;
    for_each_word(letters, short_len, [&](const Word& w) { short_words.push_back(w); });

    for (const auto& w : short_words) {
      const auto cl = oracle::closure_above(w, poset, short_len + 2, index_bound);
      if (!cl.frontier_exhausted) {
        s.inconclusive += short_words.size();
        continue;
      }
      for (const auto& v : short_words) {
        const bool engine = leq(w, v, poset).holds;
        const bool oracle_says = cl.contains(v);
        ++s.cases;
        s.failures += static_cast<std::size_t>(engine != oracle_says);
      }
    }
    const auto exhaustive_pairs = s.cases;

    // Deep stratum: longer left words with constructed positives and random
    // candidates, one cached closure per left word.
    if (max_len > short_len) {
      for (std::size_t k = 0; k < config.deep_pair_words; ++k) {
        const auto w = random_word(rng, letters, short_len + 1, max_len);
        std::vector<Word> candidates{w};
        auto v1 = up_step(rng, w, poset, max_index, max_len);
        auto v2 = up_step(rng, v1, poset, max_index, max_len);
        candidates.push_back(std::move(v1));
        candidates.push_back(std::move(v2));
        for (int i = 0; i < 5; ++i)
          candidates.push_back(random_word(rng, letters, 0, max_len));
        std::size_t widest = w.size();
        for (const auto& v : candidates) widest = std::max(widest, v.size());
        const auto cl = oracle::closure_above(w, poset, widest + 2, index_bound);
        if (!cl.frontier_exhausted) {
          s.inconclusive += candidates.size();
          continue;
        }
        for (const auto& v : candidates) {
          const bool engine = leq(w, v, poset).holds;
          const bool oracle_says = cl.contains(v);
          ++s.cases;
          s.failures += static_cast<std::size_t>(engine != oracle_says);
        }
      }
    }
    s.detail = "exhaustive=" + std::to_string(exhaustive_pairs) +
               " deep=" + std::to_string(s.cases - exhaustive_pairs);
  }));

  report.sections.push_back(run_section("down-closure route agreement", [&](SectionResult& s) {
    const std::vector<GenId> first_gen{0};
    const auto mlen = std::min<std::size_t>(max_len, 6);
    const auto midx = std::min<std::int32_t>(max_index, 2);
    const auto engine_route = oracle::down_closure(poset, first_gen, mlen, midx);
    const auto search_route = oracle::down_closure_by_search(poset, first_gen, mlen, midx);
    s.cases = engine_route.size() + search_route.size();
    s.failures = engine_route == search_route ? 0 : 1;
    s.detail = "engine=" + std::to_string(engine_route.size()) +
               " search=" + std::to_string(search_route.size());
  }));

  const auto random_any = [&](std::mt19937_64& r) { return random_word(r, letters, 0, max_len); };

  report.sections.push_back(run_section("adjoint involution", [&](SectionResult& s) {
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto w = random_any(rng);
      ++s.cases;
      if (left_adjoint(right_adjoint(w)) != w || right_adjoint(left_adjoint(w)) != w) ++s.failures;
    }
  }));

  report.sections.push_back(run_section("adjoint anti-homomorphism", [&](SectionResult& s) {
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto u = random_any(rng);
      const auto v = random_any(rng);
      ++s.cases;
      if (left_adjoint(multiply(u, v)) != multiply(left_adjoint(v), left_adjoint(u)) ||
          right_adjoint(multiply(u, v)) != multiply(right_adjoint(v), right_adjoint(u)))
        ++s.failures;
    }
  }));

  report.sections.push_back(run_section("unit adjoints", [&](SectionResult& s) {
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto w = random_any(rng);
      ++s.cases;
      const bool ok = left_adjoint(Word{}).empty() && right_adjoint(Word{}).empty() &&
                      left_adjoint(multiply(w, Word{})) == left_adjoint(w) &&
                      right_adjoint(multiply(Word{}, w)) == right_adjoint(w);
      if (!ok) ++s.failures;
    }
  }));

  report.sections.push_back(run_section("fully proper", [&](SectionResult& s) {
    if (max_len == 0) {
      s.detail = "vacuous at max_len 0";
      return;
    }
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto w = random_word(rng, letters, 1, max_len);
      ++s.cases;
      if (left_adjoint(w) == right_adjoint(w)) ++s.failures;
    }
  }));

  report.sections.push_back(run_section("order inversion", [&](SectionResult& s) {
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      Word w, v;
      if (i % 2 == 0 && max_len >= 2) {
        v = random_word(rng, letters, 0, max_len - 2);
        w = insert_contraction_pair(rng, v, poset, max_index);  // w <= v by construction
      } else {
        w = random_any(rng);
        v = random_any(rng);
      }
      ++s.cases;
      const bool forward = leq(w, v, poset).holds;
      const bool via_left = leq(left_adjoint(v), left_adjoint(w), poset).holds;
      const bool via_right = leq(right_adjoint(v), right_adjoint(w), poset).holds;
      if (forward != via_left || forward != via_right) ++s.failures;
      if (i % 2 == 0 && max_len >= 2 && !forward) ++s.failures;  // constructed pairs must hold
    }
  }));

  report.sections.push_back(run_section("composition compatibility", [&](SectionResult& s) {
    if (max_len < 2) {
      s.detail = "vacuous below max_len 2";
      return;
    }
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto v1 = random_word(rng, letters, 0, max_len - 2);
      const auto v2 = random_word(rng, letters, 0, max_len - 2);
      const auto w1 = insert_contraction_pair(rng, v1, poset, max_index);
      const auto w2 = insert_contraction_pair(rng, v2, poset, max_index);
      ++s.cases;
      if (!leq(multiply(w1, w2), multiply(v1, v2), poset).holds) ++s.failures;
    }
  }));

  report.sections.push_back(run_section("pair-relation duality", [&](SectionResult& s) {
    const GeneratorPoset chain({"p", "q"}, {{"p", "q"}});
    for (const GeneratorPoset* p : {&poset, &chain}) {
      for (GenId g1 = 0; g1 < static_cast<GenId>(p->size()); ++g1) {
        for (GenId g2 = 0; g2 < static_cast<GenId>(p->size()); ++g2) {
          for (std::int32_t z = -2; z <= 2; ++z) {
            const SimpleTerm a{g1, z}, b{g2, z + 1};
            const bool contr = contractible_pair(a, b, *p);
            const bool expand_rev = expandable_pair(b, a, *p);
            ++s.cases;
            if (g1 == g2 && contr != expand_rev) ++s.failures;
            if (g1 != g2 && contr && expand_rev) ++s.failures;
            const auto down = oracle::oracle_leq({a, b}, {}, *p, 4);
            const auto up = oracle::oracle_leq({}, {b, a}, *p, 4);
            s.cases += 2;
            s.inconclusive += static_cast<std::size_t>(down.inconclusive) +
                              static_cast<std::size_t>(up.inconclusive);
            if (down.holds != contr) ++s.failures;
            if (up.holds != expand_rev) ++s.failures;
          }
        }
      }
    }
  }));

  report.sections.push_back(run_section("leq internal consistency", [&](SectionResult& s) {
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      Word w, v;
      if (i % 2 == 0 && max_len >= 2) {
        v = random_word(rng, letters, 0, max_len - 2);
        w = insert_contraction_pair(rng, v, poset, max_index);
      } else {
        w = random_any(rng);
        v = random_any(rng);
      }
      ++s.cases;
      const bool direct = leq(w, v, poset).holds;
      const bool via_right = contracts_to_empty(multiply(w, right_adjoint(v)), poset).holds;
      const bool via_left = contracts_to_empty(multiply(left_adjoint(v), w), poset).holds;
      if (direct != via_right || direct != via_left) ++s.failures;
    }
  }));

  report.sections.push_back(run_section("leq transitivity", [&](SectionResult& s) {
    if (max_len < 4) {
      s.detail = "vacuous below max_len 4";
      return;
    }
    for (std::size_t i = 0; i < config.law_cases; ++i) {
      const auto w = random_word(rng, letters, 0, max_len - 4);
      const auto v = insert_contraction_pair(rng, w, poset, max_index);  // v <= w
      const auto u = insert_contraction_pair(rng, v, poset, max_index);  // u <= v
      ++s.cases;
      if (!leq(u, w, poset).holds) ++s.failures;
    }
  }));

  return report;
}

}  // namespace pregroup
