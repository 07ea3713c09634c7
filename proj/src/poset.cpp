#include "poset.hpp"

namespace pregroup {

bool valid_generator_name(std::string_view name) noexcept {
  if (name.empty() || name == "1") return false;
  for (unsigned char c : name) {
    if (c <= ' ' || c == '^' || c == 0x7f) return false;
  }
  return true;
}

GeneratorPoset::GeneratorPoset(std::vector<std::string> generators,
                               const std::vector<std::pair<std::string, std::string>>& covers,
                               std::optional<std::string> sentence)
    : names_(std::move(generators)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& g = names_[i];
    if (!valid_generator_name(g)) {
      throw error(errc::format, "invalid generator name \"" + g + "\"");
    }
    if (!index_.emplace(g, static_cast<GenId>(i)).second) {
      throw error(errc::format, "duplicate generator \"" + g + "\"");
    }
  }

  const std::size_t n = names_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = find(lo);
    auto b = find(hi);
    if (!a || !b) {
      throw error(errc::format,
                  "order pair [" + lo + ", " + hi + "] mentions an unknown generator");
    }
    leq_[static_cast<std::size_t>(*a) * n + static_cast<std::size_t>(*b)] = 1;
  }
  // Warshall closure; the posets here are tiny.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_[i * n + j] && leq_[j * n + i]) {
        throw error(errc::format, "order is not antisymmetric: \"" + names_[i] + "\" and \"" +
                                      names_[j] + "\" lie below each other");
      }
    }
  }

  if (sentence) {
    auto s = find(*sentence);
    if (!s) {
      throw error(errc::format, "sentence generator \"" + *sentence + "\" is not declared");
    }
    sentence_ = *s;
  }
}

const std::string& GeneratorPoset::name(GenId id) const {
  check_id(id);
  return names_[static_cast<std::size_t>(id)];
}

bool GeneratorPoset::contains(std::string_view name) const noexcept {
  return find(name).has_value();
}

GenId GeneratorPoset::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw error(errc::lookup, "unknown generator \"" + std::string(name) + "\"");
}

std::optional<GenId> GeneratorPoset::find(std::string_view name) const noexcept {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GeneratorPoset::leq(GenId a, GenId b) const {
  check_id(a);
  check_id(b);
  return leq_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)] != 0;
}

const std::string& GeneratorPoset::sentence_name() const {
  if (!sentence_) throw error(errc::precondition, "poset has no sentence generator");
  return names_[static_cast<std::size_t>(*sentence_)];
}

std::vector<GenId> GeneratorPoset::below(GenId g) const {
  check_id(g);
  std::vector<GenId> out;
  for (std::size_t h = 0; h < names_.size(); ++h) {
    if (leq_[h * names_.size() + static_cast<std::size_t>(g)]) out.push_back(static_cast<GenId>(h));
  }
  return out;
}

std::vector<GenId> GeneratorPoset::above(GenId g) const {
  check_id(g);
  std::vector<GenId> out;
  for (std::size_t h = 0; h < names_.size(); ++h) {
    if (leq_[static_cast<std::size_t>(g) * names_.size() + h]) out.push_back(static_cast<GenId>(h));
  }
  return out;
}

bool GeneratorPoset::discrete() const noexcept {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i * n + j]) return false;
    }
  }
  return true;
}

void GeneratorPoset::check_id(GenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) {
    throw error(errc::invalid_argument, "generator id out of range");
  }
}

}  // namespace pregroup
