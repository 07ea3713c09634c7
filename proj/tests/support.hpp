#pragma once

#include <string>
#include <vector>

#include "grammar.hpp"
#include "word.hpp"

namespace testsupport {

using pregroup::GeneratorPoset;
using pregroup::Word;

inline std::string grammar_path(const char* name) {
  return std::string(PG_GRAMMARS_DIR "/") + name;
}

inline GeneratorPoset discrete_ns() { return GeneratorPoset({"n", "s"}, {}, "s"); }

inline GeneratorPoset discrete_ab() { return GeneratorPoset({"a", "b"}, {}, std::nullopt); }

inline GeneratorPoset welsh_poset() {
  return GeneratorPoset({"n", "s", "d_pt", "c1", "n_p"}, {{"n_p", "n"}, {"d_pt", "s"}}, "s");
}

inline Word W(const GeneratorPoset& poset, const char* text) {
  return pregroup::parse_word(text, poset);
}

inline std::vector<std::string> names(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

}  // namespace testsupport
