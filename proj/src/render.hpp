#pragma once

#include <string>

#include "causal.hpp"
#include "grammar.hpp"

namespace pregroup {

// The flattened word with item parentheses superimposed, followed by one row
// of arcs per nesting depth, innermost rows first.  Contraction arcs are drawn
// with underscores, expansion arcs with tildes:
//
//   ( d_pt n^l ) ( n c1^l n_p^l ) ( n_p ) ( c1 )
//                        \__________/
//          \_____/ \____________________________/
std::string render_text_diagram(const BracketedWord& bw, const LinkDiagram& diagram,
                                const GeneratorPoset& poset);

// Graphviz source for a causal graph, byte-stable: nodes ascend by item index
// with labels "index: type [word]", edges sorted by endpoints then by the
// producing link and labeled with its flat positions.
std::string to_dot(const CausalGraph& graph, const BracketedWord& bw);

// JSON mirrors of the reports, stable field order, two-space indent.
std::string parse_to_json(const ParseResult& r, const Grammar& g, std::size_t max_diagrams = 16);
std::string connectivity_to_json(const ConnectivityReport& r, const Grammar& g);
std::string model_check_to_json(const ModelCheckReport& r);
std::string lint_to_json(const std::vector<LintDiagnostic>& diagnostics);

}  // namespace pregroup
