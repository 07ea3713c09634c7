#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "poset.hpp"

namespace pregroup {

// Simple term (g, z): a generator g decorated with an integer adjoint index z.
// z = 0 is the plain generator, z = -1 its left adjoint, z = +1 its right
// adjoint, and so on through iterated adjoints.
struct SimpleTerm {
  GenId gen{};
  std::int32_t adj{};

  friend bool operator==(const SimpleTerm&, const SimpleTerm&) = default;
  friend std::strong_ordering operator<=>(const SimpleTerm&, const SimpleTerm&) = default;
};

// A word of the free (quasi-)pregroup: a finite sequence of simple terms.
// The empty word is the monoid identity, written "1" in the term syntax.
using Word = std::vector<SimpleTerm>;

inline SimpleTerm left_adjoint(SimpleTerm t) { return {t.gen, t.adj - 1}; }
inline SimpleTerm right_adjoint(SimpleTerm t) { return {t.gen, t.adj + 1}; }

Word multiply(const Word& u, const Word& v);
Word left_adjoint(const Word& w);
Word right_adjoint(const Word& w);

// Order induced on simple terms by the generator order.  The direction flips
// with the parity of the adjoint index: covariant at even z, contravariant at
// odd z.
bool induced_leq(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset);

// An adjacent pair a b may be cancelled (a b <= 1) iff b sits one adjoint step
// above a and the generators compare the right way around for the parity of
// a's index.
bool contractible_pair(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset);

// An adjacent pair a b may be introduced from the identity (1 <= a b) iff a
// sits one adjoint step above b, with the parity rule read off b's index.
bool expandable_pair(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset);

// Term syntax.  Words are whitespace-separated tokens; a token is a generator
// name optionally followed by '^' and either a string of 'l'/'r' characters
// (each 'l' decrements the index, each 'r' increments it) or a parenthesized
// integer.  "1" denotes the empty word and is accepted anywhere as the
// identity.  Examples: "n^r s n^l", "b a^rr", "s^(-3)", "1".
Word parse_word(std::string_view text, const GeneratorPoset& poset);

// Canonical rendering: indices -2..2 print as g^ll, g^l, g, g^r, g^rr; other
// indices print as g^(z).  The empty word prints as "1".
std::string format_term(SimpleTerm t, const GeneratorPoset& poset);
std::string format_word(const Word& w, const GeneratorPoset& poset);

}  // namespace pregroup
