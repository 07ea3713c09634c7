#include "pregroup.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "causal.hpp"
#include "grammar.hpp"
#include "properties.hpp"
#include "render.hpp"

using namespace pregroup;

struct pg_grammar {
  std::shared_ptr<const Grammar> g;
};

struct pg_parse {
  std::shared_ptr<const Grammar> g;
  ParseResult r;
};

struct pg_connectivity {
  std::shared_ptr<const Grammar> g;
  ConnectivityReport r;
};

struct pg_report {
  bool passed{};
  std::size_t findings{};
  std::string text;
  std::string json;
};

namespace {

thread_local std::string t_last_error;

pg_status status_of(errc kind) {
  switch (kind) {
    case errc::io: return PG_ERR_IO;
    case errc::format: return PG_ERR_FORMAT;
    case errc::lookup: return PG_ERR_LOOKUP;
    case errc::precondition: return PG_ERR_PRECONDITION;
    case errc::unsupported: return PG_ERR_UNSUPPORTED;
    case errc::invalid_argument: return PG_ERR_INVALID_ARGUMENT;
  }
  return PG_ERR_INTERNAL;
}

template <typename Fn>
pg_status guarded(Fn&& fn) {
  t_last_error.clear();
  try {
    return fn();
  } catch (const error& e) {
    t_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PG_ERR_INTERNAL;
  }
}

pg_status fail(pg_status status, const char* message) {
  t_last_error = message;
  return status;
}

pg_status set_string(const std::string& s, char** out) {
  char* copy = static_cast<char*>(std::malloc(s.size() + 1));
  if (!copy) return fail(PG_ERR_INTERNAL, "out of memory");
  std::memcpy(copy, s.c_str(), s.size() + 1);
  *out = copy;
  return PG_OK;
}

std::vector<std::string> split_ws(const char* text) {
  std::istringstream in(text ? text : "");
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

Mode parse_mode(const char* mode) {
  const std::string m = mode ? mode : "exists";
  if (m == "exists" || m.empty()) return Mode::exists;
  if (m == "forall") return Mode::forall;
  throw error(errc::invalid_argument, "mode must be \"exists\" or \"forall\", got \"" + m + "\"");
}

std::size_t effective_cap(std::size_t cap) { return cap == 0 ? kDefaultCap : cap; }

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string model_check_text(const ModelCheckReport& r) {
  std::string out = "property ";
  out += r.property == ModelProperty::s_connected ? "s-connected" : "simply-reducing";
  out += ", bound " + std::to_string(r.bound);
  if (r.property == ModelProperty::s_connected)
    out += std::string(", mode ") + (r.mode == Mode::exists ? "exists" : "forall");
  out += "\nstrings checked: " + std::to_string(r.strings_checked) +
         " (grammatical: " + std::to_string(r.grammatical_count) + ")\n";
  if (r.counterexamples.empty()) {
    out += "no counterexample found; inconclusive up to " + std::to_string(r.bound) + "\n";
  } else {
    out += "counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
    for (const auto& c : r.counterexamples)
      out += "  " + join(c.types, ' ') + ": " + c.diagnostic + "\n";
  }
  return out;
}

std::string lint_text(const std::vector<LintDiagnostic>& diags) {
  if (diags.empty()) return "lint: nothing flagged\n";
  std::string out =
      "lint: " + std::to_string(diags.size()) + (diags.size() == 1 ? " type" : " types") +
      " flagged\n";
  for (const auto& d : diags) out += "  " + d.type_name + ": " + d.message + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }

const char* pg_last_error(void) { return t_last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_grammar_load(const char* path, pg_grammar** out) {
  if (!path || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto g = std::make_shared<const Grammar>(Grammar::load(path));
    *out = new pg_grammar{std::move(g)};
    return PG_OK;
  });
}

pg_status pg_grammar_from_json(const char* json_text, pg_grammar** out) {
  if (!json_text || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto g = std::make_shared<const Grammar>(Grammar::from_json_text(json_text));
    *out = new pg_grammar{std::move(g)};
    return PG_OK;
  });
}

pg_status pg_grammar_with_type(const pg_grammar* g, const char* name, const char* word_text,
                               pg_grammar** out) {
  if (!g || !name || !word_text || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto word = parse_word(word_text, g->g->poset());
    auto next = std::make_shared<const Grammar>(g->g->with_type(name, std::move(word)));
    *out = new pg_grammar{std::move(next)};
    return PG_OK;
  });
}

pg_status pg_grammar_sentence(const pg_grammar* g, char** out) {
  if (!g || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(g->g->poset().sentence_name(), out); });
}

size_t pg_grammar_type_count(const pg_grammar* g) { return g ? g->g->types().size() : 0; }

pg_status pg_grammar_type_name(const pg_grammar* g, size_t index, char** out) {
  if (!g || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= g->g->types().size()) return fail(PG_ERR_LOOKUP, "type index out of range");
  return guarded([&] { return set_string(g->g->types()[index].name, out); });
}

void pg_grammar_free(pg_grammar* g) { delete g; }

pg_status pg_word_check(const pg_grammar* g, const char* word_text) {
  if (!g || !word_text) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    (void)parse_word(word_text, g->g->poset());
    return PG_OK;
  });
}

pg_status pg_leq(const pg_grammar* g, const char* w_text, const char* v_text, int* holds) {
  if (!g || !w_text || !v_text || !holds) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto w = parse_word(w_text, g->g->poset());
    const auto v = parse_word(v_text, g->g->poset());
    *holds = leq(w, v, g->g->poset()).holds ? 1 : 0;
    return PG_OK;
  });
}

pg_status pg_contracts_to_empty(const pg_grammar* g, const char* w_text, int* holds) {
  if (!g || !w_text || !holds) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto w = parse_word(w_text, g->g->poset());
    *holds = contracts_to_empty(w, g->g->poset()).holds ? 1 : 0;
    return PG_OK;
  });
}

pg_status pg_parse_types(const pg_grammar* g, const char* types_text, size_t cap, pg_parse** out) {
  if (!g || !types_text || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = parse_types(*g->g, split_ws(types_text), effective_cap(cap));
    *out = new pg_parse{g->g, std::move(result)};
    return PG_OK;
  });
}

pg_status pg_parse_surface(const pg_grammar* g, const char* surface_text, size_t cap,
                           pg_parse** out) {
  if (!g || !surface_text || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = parse_surface(*g->g, split_ws(surface_text), effective_cap(cap));
    *out = new pg_parse{g->g, std::move(result)};
    return PG_OK;
  });
}

int pg_parse_grammatical(const pg_parse* p) { return p && p->r.grammatical ? 1 : 0; }

size_t pg_parse_diagram_count(const pg_parse* p) { return p ? p->r.reductions.diagrams.size() : 0; }

int pg_parse_truncated(const pg_parse* p) { return p && p->r.reductions.truncated ? 1 : 0; }

pg_status pg_parse_render_text(const pg_parse* p, size_t diagram_index, char** out) {
  if (!p || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  if (diagram_index >= p->r.reductions.diagrams.size())
    return fail(PG_ERR_LOOKUP, "diagram index out of range");
  return guarded([&] {
    return set_string(render_text_diagram(p->r.bracketed,
                                          p->r.reductions.diagrams[diagram_index],
                                          p->g->poset()),
                      out);
  });
}

pg_status pg_parse_to_json(const pg_parse* p, char** out) {
  if (!p || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(parse_to_json(p->r, *p->g), out); });
}

void pg_parse_free(pg_parse* p) { delete p; }

pg_status pg_connect(const pg_grammar* g, const char* types_text, const char* mode, size_t cap,
                     pg_connectivity** out) {
  if (!g || !types_text || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto report =
        sentence_connected(*g->g, split_ws(types_text), parse_mode(mode), effective_cap(cap));
    *out = new pg_connectivity{g->g, std::move(report)};
    return PG_OK;
  });
}

int pg_connectivity_connected(const pg_connectivity* c) { return c && c->r.connected ? 1 : 0; }

size_t pg_connectivity_component_count(const pg_connectivity* c) {
  return c ? c->r.components.size() : 0;
}

pg_status pg_connectivity_components_text(const pg_connectivity* c, char** out) {
  if (!c || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text;
    for (const auto& block : c->r.components) {
      text += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(block[i]);
      }
      text += '}';
    }
    return set_string(text, out);
  });
}

pg_status pg_connectivity_to_dot(const pg_connectivity* c, char** out) {
  if (!c || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(to_dot(c->r.graph, c->r.bracketed), out); });
}

pg_status pg_connectivity_to_json(const pg_connectivity* c, char** out) {
  if (!c || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(connectivity_to_json(c->r, *c->g), out); });
}

void pg_connectivity_free(pg_connectivity* c) { delete c; }

pg_status pg_check(const pg_grammar* g, const char* property, size_t bound, const char* mode,
                   size_t cap, pg_report** out) {
  if (!g || !property || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string prop = property;
    auto report = std::make_unique<pg_report>();
    if (prop == "s-connected") {
      const auto r = check_s_connected(*g->g, bound, parse_mode(mode), effective_cap(cap));
      report->passed = r.counterexamples.empty();
      report->findings = r.counterexamples.size();
      report->text = model_check_text(r);
      report->json = model_check_to_json(r);
    } else if (prop == "simply-reducing") {
      const auto r = check_simply_reducing(*g->g, bound);
      report->passed = r.counterexamples.empty();
      report->findings = r.counterexamples.size();
      report->text = model_check_text(r);
      report->json = model_check_to_json(r);
    } else if (prop == "lint") {
      const auto diags = lint_down_closure(*g->g);
      report->passed = diags.empty();
      report->findings = diags.size();
      report->text = lint_text(diags);
      report->json = lint_to_json(diags);
    } else {
      throw error(errc::invalid_argument,
                  "property must be \"s-connected\", \"simply-reducing\" or \"lint\", got \"" +
                      prop + "\"");
    }
    *out = report.release();
    return PG_OK;
  });
}

pg_status pg_run_properties(size_t max_len, int max_index, size_t generators, pg_report** out) {
  if (!out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    PropertySuiteConfig config;
    config.max_len = max_len;
    config.max_index = max_index;
    config.generators = generators;
    const auto suite = run_property_suite(config);
    auto report = std::make_unique<pg_report>();
    report->passed = suite.passed();
    report->findings = 0;
    for (const auto& s : suite.sections)
      if (!s.passed) ++report->findings;
    report->text = suite.to_text();
    report->json = suite.to_json();
    *out = report.release();
    return PG_OK;
  });
}

int pg_report_passed(const pg_report* r) { return r && r->passed ? 1 : 0; }

size_t pg_report_finding_count(const pg_report* r) { return r ? r->findings : 0; }

pg_status pg_report_text(const pg_report* r, char** out) {
  if (!r || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(r->text, out); });
}

pg_status pg_report_to_json(const pg_report* r, char** out) {
  if (!r || !out) return fail(PG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return set_string(r->json, out); });
}

void pg_report_free(pg_report* r) { delete r; }

}  // extern "C"
