#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pregroup {

enum class errc {
  io,
  format,
  lookup,
  precondition,
  unsupported,
  invalid_argument,
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

using GenId = std::int32_t;

// Generating poset (G, <=) with an optional distinguished sentence generator.
// The order is stored as its reflexive-transitive closure.  Cover pairs whose
// closure would violate antisymmetry are rejected at construction.
class GeneratorPoset {
public:
  GeneratorPoset(std::vector<std::string> generators,
                 const std::vector<std::pair<std::string, std::string>>& covers,
                 std::optional<std::string> sentence = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }

  const std::string& name(GenId id) const;
  bool contains(std::string_view name) const noexcept;
  GenId id(std::string_view name) const;  // throws errc::lookup
  std::optional<GenId> find(std::string_view name) const noexcept;

  bool leq(GenId a, GenId b) const;

  std::optional<GenId> sentence() const noexcept { return sentence_; }
  const std::string& sentence_name() const;  // throws errc::precondition if unset

  // All h with h <= g (resp. g <= h), ascending by id; includes g itself.
  std::vector<GenId> below(GenId g) const;
  std::vector<GenId> above(GenId g) const;

  bool discrete() const noexcept;

private:
  void check_id(GenId id) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, GenId> index_;
  std::vector<std::uint8_t> leq_;  // row-major closure matrix
  std::optional<GenId> sentence_;
};

// Generator names are free-form except that they must be non-empty, must not
// contain whitespace, control characters or '^', and must not be the reserved
// identity spelling "1".
bool valid_generator_name(std::string_view name) noexcept;

}  // namespace pregroup
