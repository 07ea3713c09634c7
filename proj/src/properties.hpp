#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pregroup {

// Configuration of the self-validation suite: it builds a discrete poset with
// the requested number of generators and exercises the reduction engine
// against the rewriting oracle and the algebraic laws on bounded families.
struct PropertySuiteConfig {
  std::size_t max_len = 6;
  std::int32_t max_index = 2;
  std::size_t generators = 2;
  std::size_t min_leq_pairs = 10'000;  // exhaustive short pairs at least this many when possible
  std::size_t law_cases = 1'000;       // per algebraic law
  std::size_t deep_pair_words = 16;    // distinct left words for the long leq strata
  std::uint64_t seed = 0x5eed2026ULL;
};

struct SectionResult {
  std::string name;
  bool passed{};
  std::size_t cases{};
  std::size_t failures{};
  std::size_t inconclusive{};
  double seconds{};
  std::string detail;
};

struct PropertySuiteReport {
  std::vector<SectionResult> sections;
  bool passed() const;
  const SectionResult* section(const std::string& name) const;
  std::string to_text() const;
  std::string to_json() const;
};

// Section names, in run order:
//   acyclicity
//   contraction-expansion oracle equivalence
//   leq oracle sampling
//   down-closure route agreement
//   adjoint involution
//   adjoint anti-homomorphism
//   unit adjoints
//   fully proper
//   order inversion
//   composition compatibility
//   pair-relation duality
//   leq internal consistency
//   leq transitivity
PropertySuiteReport run_property_suite(const PropertySuiteConfig& config = {});

}  // namespace pregroup
