#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reduction.hpp"
#include "word.hpp"

namespace pregroup {

// A named type: a dictionary entry mapping the name to a word over the
// generator poset.  Declaration order is significant; sweeps over strings of
// types enumerate in this order.
struct TypeEntry {
  std::string name;
  Word image;
};

// One item of a bracketed string: which type it came from, the surface word
// when the string was tagged through a lexicon (empty otherwise), and the
// half-open span its image occupies in the flattened word.
struct Item {
  std::string type;
  std::string word;
  std::int32_t begin{};
  std::int32_t end{};
};

struct BracketedWord {
  Word flat;
  std::vector<Item> items;
};

// A lexicalised grammar: generator poset with a sentence generator, an
// ordered list of named types, and an optional lexicon mapping surface words
// to type names.
class Grammar {
public:
  Grammar(GeneratorPoset poset, std::vector<TypeEntry> types,
          std::vector<std::pair<std::string, std::string>> lexicon = {});

  const GeneratorPoset& poset() const noexcept { return poset_; }
  const std::vector<TypeEntry>& types() const noexcept { return types_; }
  std::optional<std::size_t> find_type(std::string_view name) const noexcept;
  const TypeEntry& type(std::string_view name) const;  // throws errc::lookup

  GenId sentence() const;  // throws errc::precondition if the poset names none
  Word sentence_image() const { return {{sentence(), 0}}; }

  const std::vector<std::pair<std::string, std::string>>& lexicon() const noexcept {
    return lexicon_;
  }
  const std::string& lex(std::string_view surface) const;  // throws errc::lookup

  // Copy with an extra type.  An existing name keeps its position and gets the
  // new image; a fresh name is appended.
  Grammar with_type(std::string name, Word image) const;

  BracketedWord bracket(const std::vector<std::string>& type_names) const;
  std::vector<std::string> tag(const std::vector<std::string>& surface) const;

  // Grammar files are JSON objects with fields "generators" (array of names),
  // "order" (array of [lower, upper] pairs), "sentence" (a generator name),
  // "types" (object, name -> word in term syntax, order preserved) and
  // optionally "lexicon" (object, surface word -> type name).  Unknown fields
  // are rejected.
  static Grammar load(const std::string& path);
  static Grammar from_json_text(std::string_view text);

private:
  GeneratorPoset poset_;
  std::vector<TypeEntry> types_;
  std::vector<std::pair<std::string, std::string>> lexicon_;
};

struct ParseResult {
  BracketedWord bracketed;
  bool grammatical{};
  // Diagrams reducing the flattened word to a simple term under the sentence
  // generator, in enumeration order.
  Enumeration reductions;
};

ParseResult parse_types(const Grammar& g, const std::vector<std::string>& type_names,
                        std::size_t cap = kDefaultCap);
ParseResult parse_surface(const Grammar& g, const std::vector<std::string>& surface,
                          std::size_t cap = kDefaultCap);

}  // namespace pregroup
