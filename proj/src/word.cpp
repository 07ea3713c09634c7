#include "word.hpp"

#include <algorithm>
#include <charconv>

namespace pregroup {

namespace {

inline bool even_index(std::int32_t z) { return (z & 1) == 0; }

}  // namespace

Word multiply(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word left_adjoint(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(left_adjoint(*it));
  return out;
}

Word right_adjoint(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(right_adjoint(*it));
  return out;
}

bool induced_leq(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset) {
  if (a.adj != b.adj) return false;
  return even_index(a.adj) ? poset.leq(a.gen, b.gen) : poset.leq(b.gen, a.gen);
}

bool contractible_pair(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset) {
  if (b.adj != a.adj + 1) return false;
  return even_index(a.adj) ? poset.leq(a.gen, b.gen) : poset.leq(b.gen, a.gen);
}

bool expandable_pair(SimpleTerm a, SimpleTerm b, const GeneratorPoset& poset) {
  if (a.adj != b.adj + 1) return false;
  return even_index(b.adj + 1) ? poset.leq(b.gen, a.gen) : poset.leq(a.gen, b.gen);
}

namespace {

[[noreturn]] void bad_token(std::string_view token, const char* why) {
  throw error(errc::format, "bad term \"" + std::string(token) + "\": " + why);
}

// Accepts ASCII '-' and the typographic minus sign for negative indices.
std::string normalize_minus(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xe2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back('-');
      i += 3;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

SimpleTerm parse_token(std::string_view token, const GeneratorPoset& poset) {
  auto caret = token.find('^');
  std::string_view name = token.substr(0, caret);
  if (name.empty()) bad_token(token, "missing generator name");
  auto gen = poset.find(name);
  if (!gen) bad_token(token, "unknown generator");

  std::int32_t adj = 0;
  if (caret != std::string_view::npos) {
    std::string_view suffix = token.substr(caret + 1);
    if (suffix.empty()) bad_token(token, "empty adjoint suffix");
    if (suffix.front() == '(') {
      if (suffix.back() != ')') bad_token(token, "unterminated adjoint index");
      std::string digits = normalize_minus(suffix.substr(1, suffix.size() - 2));
      if (digits.empty()) bad_token(token, "empty adjoint index");
      const char* first = digits.data();
      const char* last = first + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, adj);
      if (ec != std::errc{} || ptr != last) bad_token(token, "adjoint index is not an integer");
    } else {
      for (char c : suffix) {
        if (c == 'l') {
          --adj;
        } else if (c == 'r') {
          ++adj;
        } else {
          bad_token(token, "adjoint suffix must be l/r letters or a parenthesized integer");
        }
      }
    }
  }
  return {*gen, adj};
}

}  // namespace

Word parse_word(std::string_view text, const GeneratorPoset& poset) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    if (token != "1") out.push_back(parse_token(token, poset));
    i = j;
  }
  return out;
}

std::string format_term(SimpleTerm t, const GeneratorPoset& poset) {
  std::string out = poset.name(t.gen);
  switch (t.adj) {
    case 0: break;
    case 1: out += "^r"; break;
    case 2: out += "^rr"; break;
    case -1: out += "^l"; break;
    case -2: out += "^ll"; break;
    default:
      out += "^(";
      out += std::to_string(t.adj);
      out += ')';
      break;
  }
  return out;
}

std::string format_word(const Word& w, const GeneratorPoset& poset) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_term(w[i], poset);
  }
  return out;
}

}  // namespace pregroup
