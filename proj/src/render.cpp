#include "render.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace pregroup {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Layout {
  std::string line;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [start, end) column per position
};

Layout layout_bracketed(const BracketedWord& bw, const GeneratorPoset& poset) {
  Layout out;
  out.spans.resize(bw.flat.size());
  auto append = [&](const std::string& token) {
    if (!out.line.empty()) out.line += ' ';
    const auto start = out.line.size();
    out.line += token;
    return std::pair{start, out.line.size()};
  };
  for (const auto& item : bw.items) {
    append("(");
    for (std::int32_t p = item.begin; p < item.end; ++p)
      out.spans[static_cast<std::size_t>(p)] =
          append(format_term(bw.flat[static_cast<std::size_t>(p)], poset));
    append(")");
  }
  return out;
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

ordered_json item_json(const Item& item) {
  return {{"type", item.type}, {"word", item.word}, {"begin", item.begin}, {"end", item.end}};
}

const char* kind_name(LinkKind k) {
  return k == LinkKind::contraction ? "contraction" : "expansion";
}

ordered_json link_json(const Link& l) {
  return {{"left", l.left}, {"right", l.right}, {"kind", kind_name(l.kind)}};
}

ordered_json diagram_json(const LinkDiagram& d) {
  ordered_json links = ordered_json::array();
  for (const auto& l : d.links) links.push_back(link_json(l));
  return {{"links", std::move(links)}, {"residuals", d.residuals}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_text_diagram(const BracketedWord& bw, const LinkDiagram& diagram,
                                const GeneratorPoset& poset) {
  if (diagram.word != bw.flat)
    throw error(errc::precondition, "diagram does not belong to this bracketed word");
  const auto layout = layout_bracketed(bw, poset);
  std::string out = layout.line;

  std::map<std::size_t, std::vector<Link>, std::greater<>> rows;  // innermost depth first
  for (const auto& link : diagram.links) {
    std::size_t depth = 0;
    for (const auto& other : diagram.links)
      if (other.left < link.left && link.right < other.right) ++depth;
    rows[depth].push_back(link);
  }
  for (const auto& [depth, links] : rows) {
    (void)depth;
    std::string row(layout.line.size(), ' ');
    for (const auto& link : links) {
      const auto lcol = layout.spans[static_cast<std::size_t>(link.left)].first;
      const auto rcol = layout.spans[static_cast<std::size_t>(link.right)].second - 1;
      row[lcol] = '\\';
      row[rcol] = '/';
      const char fill = link.kind == LinkKind::contraction ? '_' : '~';
      for (auto c = lcol + 1; c < rcol; ++c) row[c] = fill;
    }
    out += '\n' + rtrim(std::move(row));
  }
  return out;
}

std::string to_dot(const CausalGraph& graph, const BracketedWord& bw) {
  if (graph.nodes != bw.items.size())
    throw error(errc::precondition, "causal graph does not belong to this bracketed word");
  std::string out = "graph causal {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < bw.items.size(); ++i) {
    std::string label = std::to_string(i) + ": " + bw.items[i].type;
    if (!bw.items[i].word.empty()) label += " [" + bw.items[i].word + "]";
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"(" +
           std::to_string(e.link.left) + "," + std::to_string(e.link.right) + ")\"];\n";
  }
  out += "}\n";
  return out;
}

std::string parse_to_json(const ParseResult& r, const Grammar& g, std::size_t max_diagrams) {
  ordered_json j;
  j["grammatical"] = r.grammatical;
  j["flat"] = format_word(r.bracketed.flat, g.poset());
  j["items"] = ordered_json::array();
  for (const auto& item : r.bracketed.items) j["items"].push_back(item_json(item));
  j["diagram_count"] = r.reductions.diagrams.size();
  j["truncated"] = r.reductions.truncated;
  const auto listed = std::min(max_diagrams, r.reductions.diagrams.size());
  j["diagrams_listed"] = listed;
  j["diagrams"] = ordered_json::array();
  for (std::size_t i = 0; i < listed; ++i) j["diagrams"].push_back(diagram_json(r.reductions.diagrams[i]));
  return j.dump(2);
}

std::string connectivity_to_json(const ConnectivityReport& r, const Grammar& g) {
  (void)g;
  ordered_json j;
  j["connected"] = r.connected;
  j["mode"] = r.mode == Mode::exists ? "exists" : "forall";
  j["conclusive"] = r.conclusive();
  j["diagrams_examined"] = r.diagrams_examined;
  j["truncated"] = r.truncated;
  j["components"] = r.components;
  j["nodes"] = ordered_json::array();
  for (std::size_t i = 0; i < r.bracketed.items.size(); ++i) {
    auto node = item_json(r.bracketed.items[i]);
    node.erase("begin");
    node.erase("end");
    ordered_json entry{{"index", i}};
    entry.update(node);
    j["nodes"].push_back(std::move(entry));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : r.graph.edges) {
    j["edges"].push_back({{"a", e.a},
                          {"b", e.b},
                          {"left", e.link.left},
                          {"right", e.link.right},
                          {"kind", kind_name(e.link.kind)}});
  }
  j["internal_links"] = ordered_json::array();
  for (const auto& l : r.graph.internal_links) j["internal_links"].push_back(link_json(l));
  j["representative"] = diagram_json(r.representative);
  return j.dump(2);
}

std::string model_check_to_json(const ModelCheckReport& r) {
  ordered_json j;
  j["property"] = r.property == ModelProperty::s_connected ? "s-connected" : "simply-reducing";
  j["bound"] = r.bound;
  if (r.property == ModelProperty::s_connected)
    j["mode"] = r.mode == Mode::exists ? "exists" : "forall";
  j["strings_checked"] = r.strings_checked;
  j["grammatical"] = r.grammatical_count;
  j["conclusive"] = r.conclusive;
  j["counterexample_count"] = r.counterexamples.size();
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"types", c.types}, {"diagnostic", c.diagnostic}});
  return j.dump(2);
}

std::string lint_to_json(const std::vector<LintDiagnostic>& diagnostics) {
  ordered_json j;
  j["flagged"] = diagnostics.size();
  j["diagnostics"] = ordered_json::array();
  for (const auto& d : diagnostics)
    j["diagnostics"].push_back(
        {{"type", d.type_name}, {"nonce_pattern", d.nonce_pattern}, {"message", d.message}});
  return j.dump(2);
}

}  // namespace pregroup
