#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causal.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace pregroup;
using testsupport::W;
using testsupport::grammar_path;
using testsupport::names;

namespace {

Grammar single_s_grammar() {
  GeneratorPoset p({"s"}, {}, "s");
  std::vector<TypeEntry> types = {{"X", W(p, "s")}};
  return Grammar(std::move(p), std::move(types));
}

Grammar abc_grammar() {
  GeneratorPoset p({"s"}, {}, "s");
  std::vector<TypeEntry> types = {
      {"A", W(p, "s s^r")}, {"B", W(p, "s")}, {"C", W(p, "s^r s^rr")}};
  return Grammar(std::move(p), std::move(types));
}

}  // namespace

TEST_CASE("causal_graph projects diagram links onto items") {
  SUBCASE("a connected four-item sentence") {
    const auto g = Grammar::load(grammar_path("welsh.json"));
    const auto r = parse_types(g, names({"Dyma", "fy", "nghath", "i"}));
    REQUIRE(r.reductions.diagrams.size() == 1);
    const auto graph = causal_graph(r.bracketed, r.reductions.diagrams[0]);

    CHECK(graph.nodes == 4);
    REQUIRE(graph.edges.size() == 3);
    CHECK(graph.edges[0].a == 0);
    CHECK(graph.edges[0].b == 1);
    CHECK(graph.edges[0].link == Link{1, 2, LinkKind::contraction});
    CHECK(graph.edges[1].a == 1);
    CHECK(graph.edges[1].b == 2);
    CHECK(graph.edges[1].link == Link{4, 5, LinkKind::contraction});
    CHECK(graph.edges[2].a == 1);
    CHECK(graph.edges[2].b == 3);
    CHECK(graph.edges[2].link == Link{3, 6, LinkKind::contraction});
    CHECK(graph.internal_links.empty());
    CHECK(graph.connected());
    CHECK(graph.components() == std::vector<std::vector<std::int32_t>>{{0, 1, 2, 3}});
  }

  SUBCASE("a sentence that splits into two blocks") {
    const auto g = Grammar::load(grammar_path("foobar.json"));
    const auto r = parse_types(g, names({"FOO", "BAR", "DOG", "DUCK"}));
    REQUIRE(r.reductions.diagrams.size() == 1);
    const auto graph = causal_graph(r.bracketed, r.reductions.diagrams[0]);

    CHECK(graph.nodes == 4);
    REQUIRE(graph.edges.size() == 4);
    CHECK(graph.edges[0].link == Link{1, 4, LinkKind::contraction});
    CHECK(graph.edges[1].link == Link{2, 3, LinkKind::contraction});
    CHECK(graph.edges[2].link == Link{5, 8, LinkKind::contraction});
    CHECK(graph.edges[3].link == Link{6, 7, LinkKind::contraction});
    CHECK(graph.edges[0].a == 0);
    CHECK(graph.edges[0].b == 1);
    CHECK(graph.edges[3].a == 2);
    CHECK(graph.edges[3].b == 3);
    CHECK(graph.internal_links.empty());
    CHECK_FALSE(graph.connected());
    CHECK(graph.components() == std::vector<std::vector<std::int32_t>>{{0, 1}, {2, 3}});
  }

  SUBCASE("a single item is trivially connected") {
    const auto g = single_s_grammar();
    const auto r = parse_types(g, names({"X"}));
    REQUIRE(r.grammatical);
    const auto graph = causal_graph(r.bracketed, r.reductions.diagrams[0]);
    CHECK(graph.nodes == 1);
    CHECK(graph.edges.empty());
    CHECK(graph.connected());
  }

  SUBCASE("links inside one item do not create edges") {
    const auto g = abc_grammar();
    const auto r = parse_types(g, names({"A", "B", "C"}));
    REQUIRE(r.reductions.diagrams.size() == 2);

    const auto isolated = causal_graph(r.bracketed, r.reductions.diagrams[0]);
    CHECK(isolated.nodes == 3);
    CHECK(isolated.edges.empty());
    CHECK(isolated.internal_links.size() == 2);
    CHECK_FALSE(isolated.connected());
    CHECK(isolated.components() ==
          std::vector<std::vector<std::int32_t>>{{0}, {1}, {2}});

    const auto joined = causal_graph(r.bracketed, r.reductions.diagrams[1]);
    CHECK(joined.edges.size() == 2);
    CHECK(joined.internal_links.empty());
    CHECK(joined.connected());
  }

  SUBCASE("a diagram for a different word is rejected") {
    const auto g = single_s_grammar();
    const auto bw = g.bracket(names({"X"}));
    LinkDiagram foreign{W(g.poset(), "s s"), {}, {0, 1}};
    try {
      (void)causal_graph(bw, foreign);
      FAIL("expected an exception");
    } catch (const error& e) {
      CHECK(e.kind() == errc::precondition);
    }
  }
}

TEST_CASE("sentence_connected quantifies connectivity over all diagrams") {
  const auto welsh = Grammar::load(grammar_path("welsh.json"));
  for (Mode mode : {Mode::exists, Mode::forall}) {
    const auto r = sentence_connected(welsh, names({"Dyma", "fy", "nghath", "i"}), mode);
    CHECK(r.connected);
    CHECK(r.conclusive());
    CHECK(r.diagrams_examined == 1);
    CHECK(r.components == std::vector<std::vector<std::int32_t>>{{0, 1, 2, 3}});
  }

  const auto foo = Grammar::load(grammar_path("foobar.json"));
  for (Mode mode : {Mode::exists, Mode::forall}) {
    const auto r = sentence_connected(foo, names({"FOO", "BAR", "DOG", "DUCK"}), mode);
    CHECK_FALSE(r.connected);
    CHECK(r.conclusive());
    CHECK(r.components == std::vector<std::vector<std::int32_t>>{{0, 1}, {2, 3}});
  }

  SUBCASE("the two modes can disagree on the same string") {
    const auto abc = abc_grammar();
    const auto some = sentence_connected(abc, names({"A", "B", "C"}), Mode::exists);
    CHECK(some.connected);
    CHECK(some.conclusive());
    CHECK(some.diagrams_examined == 2);  // the first diagram is disconnected
    CHECK(some.representative.links ==
          std::vector<Link>{{1, 4, LinkKind::contraction}, {2, 3, LinkKind::contraction}});

    const auto every = sentence_connected(abc, names({"A", "B", "C"}), Mode::forall);
    CHECK_FALSE(every.connected);
    CHECK(every.conclusive());
    CHECK(every.diagrams_examined == 1);  // the first diagram already refutes
    CHECK(every.representative.links ==
          std::vector<Link>{{0, 1, LinkKind::contraction}, {3, 4, LinkKind::contraction}});
    CHECK(every.components == std::vector<std::vector<std::int32_t>>{{0}, {1}, {2}});
  }

  SUBCASE("ungrammatical strings have no graph to quantify over") {
    const auto toy = Grammar::load(grammar_path("toy.json"));
    try {
      (void)sentence_connected(toy, names({"NOUN", "transVERB"}), Mode::exists);
      FAIL("expected an exception");
    } catch (const error& e) {
      CHECK(e.kind() == errc::precondition);
    }
  }

  SUBCASE("any generator can serve as the reduction target") {
    const auto toy = Grammar::load(grammar_path("toy.json"));
    CHECK_THROWS_AS(
        (void)sentence_connected(toy, names({"NOUN"}), Mode::exists), error);

    const auto single = sentence_connected(toy, names({"NOUN"}), Mode::exists, kDefaultCap,
                                           toy.poset().id("n"));
    CHECK(single.connected);
    CHECK(single.graph.nodes == 1);

    const auto pair = sentence_connected(toy, names({"attADJ", "NOUN"}), Mode::forall,
                                         kDefaultCap, toy.poset().id("n"));
    CHECK(pair.connected);
    CHECK(pair.diagrams_examined == 1);
    CHECK(pair.representative.links == std::vector<Link>{{1, 2, LinkKind::contraction}});
    CHECK(pair.representative.residuals == std::vector<std::int32_t>{0});
  }
}

TEST_CASE("check_s_connected sweeps type strings up to a bound") {
  const auto toy_nonce = Grammar::load(grammar_path("toy_nonce.json"));

  SUBCASE("the extended toy model has exactly three disconnected sentences") {
    const auto r = check_s_connected(toy_nonce, 3, Mode::exists);
    CHECK(r.property == ModelProperty::s_connected);
    CHECK(r.bound == 3);
    CHECK(r.strings_checked == 155);
    CHECK(r.grammatical_count == 6);
    CHECK(r.conclusive);
    REQUIRE(r.counterexamples.size() == 3);
    CHECK(r.counterexamples[0].types == names({"NOUN", "intVERB", "NONCE"}));
    CHECK(r.counterexamples[1].types == names({"NOUN", "NONCE", "intVERB"}));
    CHECK(r.counterexamples[2].types == names({"NONCE", "NOUN", "intVERB"}));
    for (const auto& c : r.counterexamples)
      CHECK(c.diagnostic.find("components") != std::string::npos);
  }

  SUBCASE("the base toy model shows none up to the same bound") {
    const auto toy = Grammar::load(grammar_path("toy.json"));
    const auto r = check_s_connected(toy, 3, Mode::exists);
    CHECK(r.strings_checked == 84);
    CHECK(r.grammatical_count == 3);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.conclusive);
  }

  SUBCASE("bound zero checks nothing") {
    const auto r = check_s_connected(toy_nonce, 0, Mode::exists);
    CHECK(r.strings_checked == 0);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.conclusive);
  }

  SUBCASE("the counterexample limit stops the sweep early") {
    const auto r = check_s_connected(toy_nonce, 3, Mode::exists, kDefaultCap, 1);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].types == names({"NOUN", "intVERB", "NONCE"}));
    CHECK(r.conclusive);
  }
}

TEST_CASE("check_simply_reducing hunts sentences without a simple split") {
  const auto toy_nonce = Grammar::load(grammar_path("toy_nonce.json"));
  const auto clean = check_simply_reducing(toy_nonce, 3);
  CHECK(clean.property == ModelProperty::simply_reducing);
  CHECK(clean.counterexamples.empty());
  CHECK(clean.grammatical_count == 6);
  CHECK_FALSE(clean.conclusive);

  SUBCASE("a type reducing to the sentence with sentence-bearing context fails") {
    GeneratorPoset p({"s"}, {}, "s");
    const Grammar bad(p, {{"BAD", W(p, "s s^l s")}});
    const auto r = check_simply_reducing(bad, 1);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].types == names({"BAD"}));
    CHECK(r.counterexamples[0].diagnostic ==
          "reduces to the sentence generator but admits no simple split");
    CHECK(r.conclusive);
  }

  SUBCASE("bound zero checks nothing") {
    const auto r = check_simply_reducing(toy_nonce, 0);
    CHECK(r.strings_checked == 0);
    CHECK_FALSE(r.conclusive);
  }
}

TEST_CASE("simply_reduces factors a word around one surviving letter") {
  const auto ns = testsupport::discrete_ns();
  const GenId s = ns.id("s");

  const auto split = simply_reduces(W(ns, "n n^r s n^l n"), ns, s);
  CHECK(split.holds);
  CHECK(split.pivot == 2);
  CHECK(split.left == W(ns, "n n^r"));
  CHECK(split.right == W(ns, "n^l n"));

  const auto lone = simply_reduces(W(ns, "s"), ns, s);
  CHECK(lone.holds);
  CHECK(lone.pivot == 0);
  CHECK(lone.left.empty());
  CHECK(lone.right.empty());

  CHECK_FALSE(simply_reduces(W(ns, "s s^l s"), ns, s).holds);
  CHECK_FALSE(simply_reduces(W(ns, "n"), ns, s).holds);
  CHECK_FALSE(simply_reduces({}, ns, s).holds);

  const auto welsh = testsupport::welsh_poset();
  const auto flat = simply_reduces(W(welsh, "d_pt n^l n c1^l n_p^l n_p c1"), welsh,
                                   welsh.id("s"));
  CHECK(flat.holds);
  CHECK(flat.pivot == 0);  // d_pt sits below the sentence generator

  CHECK_THROWS_AS((void)simply_reduces(W(ns, "s"), ns, 99), error);
}

TEST_CASE("lint flags types whose image cancels to the identity") {
  const auto toy_nonce = Grammar::load(grammar_path("toy_nonce.json"));
  const auto flagged = lint_down_closure(toy_nonce);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].type_name == "NONCE");
  CHECK(flagged[0].nonce_pattern);
  CHECK(flagged[0].message.find("image cancels to the identity") != std::string::npos);
  CHECK(flagged[0].message.find("preserves grammaticality") != std::string::npos);

  const auto toy = Grammar::load(grammar_path("toy.json"));
  CHECK(lint_down_closure(toy).empty());

  SUBCASE("a cancelling type among ordinary ones is still caught") {
    const auto ns = testsupport::discrete_ns();
    const Grammar g(ns, {{"T1", W(ns, "n")},
                         {"T2", W(ns, "n^r s")},
                         {"T3", W(ns, "n^r s n^l")},
                         {"T4", W(ns, "n n^r")}});
    const auto caught = lint_down_closure(g);
    REQUIRE(caught.size() == 1);
    CHECK(caught[0].type_name == "T4");
    CHECK(caught[0].nonce_pattern);
    CHECK(contracts_to_empty(W(ns, "n n^r"), ns).holds);
    const auto confirmed = oracle::oracle_leq(W(ns, "n n^r"), {}, ns, 4);
    CHECK(confirmed.holds);
  }

  SUBCASE("an empty image is the degenerate cancelling case") {
    const auto ns = testsupport::discrete_ns();
    const Grammar g(ns, {{"EMPTY", {}}});
    const auto flagged_empty = lint_down_closure(g);
    REQUIRE(flagged_empty.size() == 1);
    CHECK(flagged_empty[0].type_name == "EMPTY");
    CHECK(flagged_empty[0].nonce_pattern);
  }
}

TEST_CASE("acyclicity_sweep finds no word on both sides of the identity") {
  const auto ns = testsupport::discrete_ns();
  const auto r = acyclicity_sweep(ns, 4, 1);
  CHECK(r.words_checked == 1554);
  CHECK(r.passed());

  const auto welsh = testsupport::welsh_poset();
  const auto rw = acyclicity_sweep(welsh, 3, 1);
  CHECK(rw.words_checked == 3615);
  CHECK(rw.passed());

  const auto empty = acyclicity_sweep(ns, 0, 1);
  CHECK(empty.words_checked == 0);
  CHECK(empty.passed());
}
