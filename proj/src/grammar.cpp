#include "grammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pregroup {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_symbol(const std::string& name, const char* what) {
  if (!valid_generator_name(name))
    throw error(errc::format, std::string("invalid ") + what + " name \"" + name + "\"");
}

}  // namespace

Grammar::Grammar(GeneratorPoset poset, std::vector<TypeEntry> types,
                 std::vector<std::pair<std::string, std::string>> lexicon)
    : poset_(std::move(poset)), types_(std::move(types)), lexicon_(std::move(lexicon)) {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    check_symbol(types_[i].name, "type");
    for (std::size_t j = 0; j < i; ++j)
      if (types_[j].name == types_[i].name)
        throw error(errc::format, "duplicate type \"" + types_[i].name + "\"");
  }
  for (std::size_t i = 0; i < lexicon_.size(); ++i) {
    const auto& [surface, type_name] = lexicon_[i];
    check_symbol(surface, "surface");
    if (!find_type(type_name))
      throw error(errc::format,
                  "lexicon entry \"" + surface + "\" names unknown type \"" + type_name + "\"");
    for (std::size_t j = 0; j < i; ++j)
      if (lexicon_[j].first == surface)
        throw error(errc::format, "duplicate lexicon entry \"" + surface + "\"");
  }
}

std::optional<std::size_t> Grammar::find_type(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < types_.size(); ++i)
    if (types_[i].name == name) return i;
  return std::nullopt;
}

const TypeEntry& Grammar::type(std::string_view name) const {
  if (auto i = find_type(name)) return types_[*i];
  throw error(errc::lookup, "unknown type \"" + std::string(name) + "\"");
}

GenId Grammar::sentence() const {
  if (auto s = poset_.sentence()) return *s;
  throw error(errc::precondition, "grammar has no sentence generator");
}

const std::string& Grammar::lex(std::string_view surface) const {
  for (const auto& [word, type_name] : lexicon_)
    if (word == surface) return type_name;
  throw error(errc::lookup, "word \"" + std::string(surface) + "\" is not in the lexicon");
}

Grammar Grammar::with_type(std::string name, Word image) const {
  Grammar g(*this);
  if (auto i = g.find_type(name)) {
    g.types_[*i].image = std::move(image);
  } else {
    check_symbol(name, "type");
    g.types_.push_back({std::move(name), std::move(image)});
  }
  return g;
}

BracketedWord Grammar::bracket(const std::vector<std::string>& type_names) const {
  BracketedWord out;
  for (const auto& name : type_names) {
    const auto& entry = type(name);
    const auto begin = static_cast<std::int32_t>(out.flat.size());
    out.flat.insert(out.flat.end(), entry.image.begin(), entry.image.end());
    out.items.push_back({entry.name, "", begin, static_cast<std::int32_t>(out.flat.size())});
  }
  return out;
}

std::vector<std::string> Grammar::tag(const std::vector<std::string>& surface) const {
  std::vector<std::string> out;
  out.reserve(surface.size());
  for (const auto& word : surface) out.push_back(lex(word));
  return out;
}

Grammar Grammar::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io, "cannot open grammar file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof())
    throw error(errc::io, "cannot read grammar file \"" + path + "\"");
  try {
    return from_json_text(buffer.str());
  } catch (const error& e) {
    if (e.kind() == errc::format) throw error(errc::format, path + ": " + e.what());
    throw;
  }
}

Grammar Grammar::from_json_text(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw error(errc::format, std::string("grammar is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw error(errc::format, "grammar file must be a JSON object");

  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "generators" && key != "order" && key != "sentence" && key != "types" &&
        key != "lexicon")
      throw error(errc::format, "unknown field \"" + key + "\" in grammar file");
  }
  for (const char* field : {"generators", "order", "sentence", "types"})
    if (!j.contains(field))
      throw error(errc::format, std::string("grammar file lacks the \"") + field + "\" field");

  if (!j["generators"].is_array())
    throw error(errc::format, "\"generators\" must be an array of names");
  std::vector<std::string> generators;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw error(errc::format, "\"generators\" must be an array of names");
    generators.push_back(g.get<std::string>());
  }

  if (!j["order"].is_array())
    throw error(errc::format, "\"order\" must be an array of [lower, upper] pairs");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : j["order"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw error(errc::format, "\"order\" must be an array of [lower, upper] pairs");
    covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }

  if (!j["sentence"].is_string())
    throw error(errc::format, "\"sentence\" must be a generator name");
  GeneratorPoset poset(std::move(generators), covers, j["sentence"].get<std::string>());

  if (!j["types"].is_object())
    throw error(errc::format, "\"types\" must be an object mapping names to words");
  std::vector<TypeEntry> types;
  for (const auto& [name, value] : j["types"].items()) {
    if (!value.is_string())
      throw error(errc::format, "type \"" + name + "\" must map to a word in term syntax");
    types.push_back({name, parse_word(value.get<std::string>(), poset)});
  }

  std::vector<std::pair<std::string, std::string>> lexicon;
  if (j.contains("lexicon")) {
    if (!j["lexicon"].is_object())
      throw error(errc::format, "\"lexicon\" must be an object mapping words to type names");
    for (const auto& [surface, value] : j["lexicon"].items()) {
      if (!value.is_string())
        throw error(errc::format, "lexicon entry \"" + surface + "\" must map to a type name");
      lexicon.emplace_back(surface, value.get<std::string>());
    }
  }

  return Grammar(std::move(poset), std::move(types), std::move(lexicon));
}

ParseResult parse_types(const Grammar& g, const std::vector<std::string>& type_names,
                        std::size_t cap) {
  ParseResult out;
  out.bracketed = g.bracket(type_names);
  out.reductions = enumerate_reductions(out.bracketed.flat, g.sentence(), g.poset(), cap);
  out.grammatical = !out.reductions.diagrams.empty();
  return out;
}

ParseResult parse_surface(const Grammar& g, const std::vector<std::string>& surface,
                          std::size_t cap) {
  auto result = parse_types(g, g.tag(surface), cap);
  for (std::size_t i = 0; i < surface.size(); ++i) result.bracketed.items[i].word = surface[i];
  return result;
}

}  // namespace pregroup
