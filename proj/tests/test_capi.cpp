#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pregroup.h>

#include <string>

namespace {

std::string path(const char* name) { return std::string(PG_GRAMMARS_DIR "/") + name; }

// Takes ownership of a malloc'd string from the API.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  pg_string_free(s);
  return out;
}

struct GrammarHandle {
  pg_grammar* g = nullptr;
  explicit GrammarHandle(const char* name) {
    REQUIRE(pg_grammar_load(path(name).c_str(), &g) == PG_OK);
  }
  ~GrammarHandle() { pg_grammar_free(g); }
  GrammarHandle(const GrammarHandle&) = delete;
  GrammarHandle& operator=(const GrammarHandle&) = delete;
};

}  // namespace

TEST_CASE("version and error channel basics") {
  CHECK(std::string(pg_version()) == "1.0.0");
  CHECK(std::string(pg_last_error()).empty());
  pg_string_free(nullptr);  // must be a no-op
}

TEST_CASE("grammar loading and inspection") {
  GrammarHandle welsh("welsh.json");
  char* sentence = nullptr;
  REQUIRE(pg_grammar_sentence(welsh.g, &sentence) == PG_OK);
  CHECK(take(sentence) == "s");
  CHECK(pg_grammar_type_count(welsh.g) == 4);
  char* name = nullptr;
  REQUIRE(pg_grammar_type_name(welsh.g, 0, &name) == PG_OK);
  CHECK(take(name) == "Dyma");
  REQUIRE(pg_grammar_type_name(welsh.g, 3, &name) == PG_OK);
  CHECK(take(name) == "i");

  char* none = nullptr;
  CHECK(pg_grammar_type_name(welsh.g, 99, &none) == PG_ERR_LOOKUP);
  CHECK(none == nullptr);
  CHECK(std::string(pg_last_error()).find("out of range") != std::string::npos);

  SUBCASE("failures fill the error channel, successes clear it") {
    pg_grammar* bad = nullptr;
    CHECK(pg_grammar_load(path("missing.json").c_str(), &bad) == PG_ERR_IO);
    CHECK(bad == nullptr);
    CHECK_FALSE(std::string(pg_last_error()).empty());
    CHECK(pg_word_check(welsh.g, "n") == PG_OK);
    CHECK(std::string(pg_last_error()).empty());
  }

  SUBCASE("from_json validates like the loader") {
    pg_grammar* g = nullptr;
    REQUIRE(pg_grammar_from_json(
                "{\"generators\": [\"s\"], \"order\": [], \"sentence\": \"s\","
                " \"types\": {\"X\": \"s\"}}",
                &g) == PG_OK);
    CHECK(pg_grammar_type_count(g) == 1);
    pg_grammar_free(g);

    pg_grammar* bad = nullptr;
    CHECK(pg_grammar_from_json("{oops", &bad) == PG_ERR_FORMAT);
    CHECK(pg_grammar_from_json(
              "{\"generators\": [\"s\"], \"order\": [], \"sentence\": \"s\","
              " \"types\": {}, \"zzz\": 0}",
              &bad) == PG_ERR_FORMAT);
    CHECK(bad == nullptr);
  }

  SUBCASE("null arguments are rejected") {
    pg_grammar* g = nullptr;
    CHECK(pg_grammar_load(nullptr, &g) == PG_ERR_INVALID_ARGUMENT);
    CHECK(pg_grammar_load("x", nullptr) == PG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(pg_last_error()).find("null") != std::string::npos);
    CHECK(pg_grammar_type_count(nullptr) == 0);
  }
}

TEST_CASE("word level queries") {
  GrammarHandle welsh("welsh.json");
  CHECK(pg_word_check(welsh.g, "n^r s n^l") == PG_OK);
  CHECK(pg_word_check(welsh.g, "1") == PG_OK);
  CHECK(pg_word_check(welsh.g, "q") == PG_ERR_FORMAT);
  CHECK(std::string(pg_last_error()).find("unknown generator") != std::string::npos);

  int holds = -1;
  REQUIRE(pg_leq(welsh.g, "n_p", "n", &holds) == PG_OK);
  CHECK(holds == 1);
  REQUIRE(pg_leq(welsh.g, "n", "n_p", &holds) == PG_OK);
  CHECK(holds == 0);

  REQUIRE(pg_contracts_to_empty(welsh.g, "n^l n", &holds) == PG_OK);
  CHECK(holds == 1);
  REQUIRE(pg_contracts_to_empty(welsh.g, "n^r n", &holds) == PG_OK);
  CHECK(holds == 0);
  CHECK(pg_contracts_to_empty(welsh.g, "n^r q", &holds) == PG_ERR_FORMAT);
}

TEST_CASE("parsing type strings and surface strings") {
  GrammarHandle welsh("welsh.json");
  pg_parse* p = nullptr;
  REQUIRE(pg_parse_types(welsh.g, "Dyma fy nghath i", 0, &p) == PG_OK);
  CHECK(pg_parse_grammatical(p) == 1);
  CHECK(pg_parse_diagram_count(p) == 1);
  CHECK(pg_parse_truncated(p) == 0);

  char* text = nullptr;
  REQUIRE(pg_parse_render_text(p, 0, &text) == PG_OK);
  const auto rendered = take(text);
  CHECK(rendered.find("( d_pt n^l )") != std::string::npos);
  CHECK(rendered.find("\\_______/") != std::string::npos);
  CHECK(pg_parse_render_text(p, 5, &text) == PG_ERR_LOOKUP);

  char* json = nullptr;
  REQUIRE(pg_parse_to_json(p, &json) == PG_OK);
  const auto dumped = take(json);
  CHECK(dumped.front() == '{');
  CHECK(dumped.find("\"grammatical\": true") != std::string::npos);
  pg_parse_free(p);

  SUBCASE("surface strings go through the lexicon") {
    pg_parse* sp = nullptr;
    REQUIRE(pg_parse_surface(welsh.g, "Dyma fy nghath i", 0, &sp) == PG_OK);
    CHECK(pg_parse_grammatical(sp) == 1);
    pg_parse_free(sp);

    CHECK(pg_parse_surface(welsh.g, "Dyma cath", 0, &sp) == PG_ERR_LOOKUP);
  }

  SUBCASE("unknown type names are lookup errors") {
    pg_parse* tp = nullptr;
    CHECK(pg_parse_types(welsh.g, "Dyma cath", 0, &tp) == PG_ERR_LOOKUP);
    CHECK(tp == nullptr);
  }

  SUBCASE("an ungrammatical string still yields a parse handle") {
    pg_parse* tp = nullptr;
    REQUIRE(pg_parse_types(welsh.g, "Dyma Dyma", 0, &tp) == PG_OK);
    CHECK(pg_parse_grammatical(tp) == 0);
    CHECK(pg_parse_diagram_count(tp) == 0);
    CHECK(pg_parse_render_text(tp, 0, &text) == PG_ERR_LOOKUP);
    pg_parse_free(tp);
  }

  SUBCASE("a grammar without a lexicon cannot parse surface text") {
    GrammarHandle toy("toy.json");
    pg_parse* tp = nullptr;
    CHECK(pg_parse_surface(toy.g, "NOUN intVERB", 0, &tp) == PG_ERR_LOOKUP);
  }

  SUBCASE("parse handles outlive their grammar handle") {
    pg_grammar* g = nullptr;
    REQUIRE(pg_grammar_load(path("welsh.json").c_str(), &g) == PG_OK);
    pg_parse* survivor = nullptr;
    REQUIRE(pg_parse_types(g, "Dyma fy nghath i", 0, &survivor) == PG_OK);
    pg_grammar_free(g);
    char* late = nullptr;
    REQUIRE(pg_parse_render_text(survivor, 0, &late) == PG_OK);
    CHECK(take(late).find("d_pt") != std::string::npos);
    pg_parse_free(survivor);
  }
}

TEST_CASE("connectivity handles") {
  GrammarHandle foo("foobar.json");
  pg_connectivity* c = nullptr;
  REQUIRE(pg_connect(foo.g, "FOO BAR DOG DUCK", "exists", 0, &c) == PG_OK);
  CHECK(pg_connectivity_connected(c) == 0);
  CHECK(pg_connectivity_component_count(c) == 2);
  char* s = nullptr;
  REQUIRE(pg_connectivity_components_text(c, &s) == PG_OK);
  CHECK(take(s) == "{0,1}{2,3}");
  REQUIRE(pg_connectivity_to_dot(c, &s) == PG_OK);
  CHECK(take(s).find("graph causal {") == 0);
  REQUIRE(pg_connectivity_to_json(c, &s) == PG_OK);
  CHECK(take(s).find("\"connected\": false") != std::string::npos);
  pg_connectivity_free(c);

  GrammarHandle welsh("welsh.json");
  REQUIRE(pg_connect(welsh.g, "Dyma fy nghath i", "forall", 0, &c) == PG_OK);
  CHECK(pg_connectivity_connected(c) == 1);
  CHECK(pg_connectivity_component_count(c) == 1);
  REQUIRE(pg_connectivity_components_text(c, &s) == PG_OK);
  CHECK(take(s) == "{0,1,2,3}");
  pg_connectivity_free(c);

  SUBCASE("non-grammatical strings are a precondition failure") {
    pg_connectivity* bad = nullptr;
    CHECK(pg_connect(foo.g, "FOO DOG", "exists", 0, &bad) == PG_ERR_PRECONDITION);
    CHECK(bad == nullptr);
  }
  SUBCASE("modes are validated") {
    pg_connectivity* bad = nullptr;
    CHECK(pg_connect(foo.g, "FOO BAR DOG DUCK", "sometimes", 0, &bad) ==
          PG_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("grammar extension feeds the model checks") {
  GrammarHandle toy("toy.json");
  pg_grammar* extended = nullptr;
  REQUIRE(pg_grammar_with_type(toy.g, "NONCE", "n^l n", &extended) == PG_OK);
  CHECK(pg_grammar_type_count(extended) == 5);
  CHECK(pg_grammar_type_count(toy.g) == 4);

  pg_report* r = nullptr;
  REQUIRE(pg_check(extended, "s-connected", 3, "exists", 0, &r) == PG_OK);
  CHECK(pg_report_passed(r) == 0);
  CHECK(pg_report_finding_count(r) == 3);
  char* text = nullptr;
  REQUIRE(pg_report_text(r, &text) == PG_OK);
  const auto body = take(text);
  CHECK(body.find("NOUN intVERB NONCE") != std::string::npos);
  CHECK(body.find("counterexamples: 3") != std::string::npos);
  pg_report_free(r);

  REQUIRE(pg_check(extended, "simply-reducing", 3, "exists", 0, &r) == PG_OK);
  CHECK(pg_report_passed(r) == 1);
  CHECK(pg_report_finding_count(r) == 0);
  REQUIRE(pg_report_text(r, &text) == PG_OK);
  CHECK(take(text).find("inconclusive up to 3") != std::string::npos);
  pg_report_free(r);

  REQUIRE(pg_check(extended, "lint", 0, "exists", 0, &r) == PG_OK);
  CHECK(pg_report_passed(r) == 0);
  CHECK(pg_report_finding_count(r) == 1);
  REQUIRE(pg_report_to_json(r, &text) == PG_OK);
  CHECK(take(text).find("NONCE") != std::string::npos);
  pg_report_free(r);

  REQUIRE(pg_check(toy.g, "lint", 0, "exists", 0, &r) == PG_OK);
  CHECK(pg_report_passed(r) == 1);
  REQUIRE(pg_report_text(r, &text) == PG_OK);
  CHECK(take(text).find("nothing flagged") != std::string::npos);
  pg_report_free(r);

  pg_report* bad = nullptr;
  CHECK(pg_check(toy.g, "definitely-not-a-property", 3, "exists", 0, &bad) ==
        PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_grammar_with_type(toy.g, "BAD", "q", &extended) == PG_ERR_FORMAT);
  pg_grammar_free(extended);
}

TEST_CASE("the self-validation suite runs behind the C boundary") {
  pg_report* r = nullptr;
  REQUIRE(pg_run_properties(3, 1, 2, &r) == PG_OK);
  CHECK(pg_report_passed(r) == 1);
  CHECK(pg_report_finding_count(r) == 0);
  char* text = nullptr;
  REQUIRE(pg_report_text(r, &text) == PG_OK);
  CHECK(take(text).find("all 13 sections passed") != std::string::npos);
  REQUIRE(pg_report_to_json(r, &text) == PG_OK);
  CHECK(take(text).find("\"sections\"") != std::string::npos);
  pg_report_free(r);

  pg_report* bad = nullptr;
  CHECK(pg_run_properties(20, 1, 2, &bad) == PG_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
}
