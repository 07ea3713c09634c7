#include <CLI11.hpp>
#include <pregroup.h>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFinding = 1;
constexpr int kExitError = 2;

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Free(ptr);
  }
  T** out() { return &ptr; }
  operator T*() const { return ptr; }
};

using GrammarHandle = Handle<pg_grammar, pg_grammar_free>;
using ParseHandle = Handle<pg_parse, pg_parse_free>;
using ConnectivityHandle = Handle<pg_connectivity, pg_connectivity_free>;
using ReportHandle = Handle<pg_report, pg_report_free>;

std::string take(char* s) {
  std::string out = s ? s : "";
  pg_string_free(s);
  return out;
}

int engine_error() {
  std::cerr << "error: " << pg_last_error() << "\n";
  return kExitError;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

struct CommonArgs {
  std::string grammar_path;
  std::string types;
  std::string sentence;
  std::size_t cap = 10000;
  std::string format = "text";
};

bool one_input(const CommonArgs& args, bool allow_sentence, int& exit_code) {
  const bool has_types = !args.types.empty();
  const bool has_sentence = !args.sentence.empty();
  if (has_types == has_sentence) {
    exit_code = usage_error(allow_sentence ? "provide exactly one of --types or --sentence"
                                           : "provide --types");
    return false;
  }
  return true;
}

int run_parse(const CommonArgs& args, const std::string& diagram) {
  GrammarHandle g;
  if (pg_grammar_load(args.grammar_path.c_str(), g.out()) != PG_OK) return engine_error();

  ParseHandle p;
  const pg_status st = args.sentence.empty()
                           ? pg_parse_types(g, args.types.c_str(), args.cap, p.out())
                           : pg_parse_surface(g, args.sentence.c_str(), args.cap, p.out());
  if (st != PG_OK) return engine_error();

  const bool grammatical = pg_parse_grammatical(p) != 0;
  if (args.format == "json") {
    char* json = nullptr;
    if (pg_parse_to_json(p, &json) != PG_OK) return engine_error();
    std::cout << take(json) << "\n";
    return grammatical ? kExitPass : kExitFinding;
  }

  if (!grammatical) {
    std::cout << "not grammatical\n";
    return kExitFinding;
  }
  const std::size_t count = pg_parse_diagram_count(p);
  std::cout << "grammatical: " << count << (count == 1 ? " diagram" : " diagrams");
  if (pg_parse_truncated(p)) std::cout << " (enumeration capped)";
  std::cout << "\n";
  if (diagram == "text") {
    char* text = nullptr;
    if (pg_parse_render_text(p, 0, &text) != PG_OK) return engine_error();
    std::cout << take(text) << "\n";
  }
  return kExitPass;
}

int run_connect(const CommonArgs& args, const std::string& mode, const std::string& dot_path) {
  GrammarHandle g;
  if (pg_grammar_load(args.grammar_path.c_str(), g.out()) != PG_OK) return engine_error();

  ConnectivityHandle c;
  if (pg_connect(g, args.types.c_str(), mode.c_str(), args.cap, c.out()) != PG_OK)
    return engine_error();

  if (!dot_path.empty()) {
    char* dot = nullptr;
    if (pg_connectivity_to_dot(c, &dot) != PG_OK) return engine_error();
    std::ofstream out(dot_path, std::ios::binary);
    out << take(dot);
    if (!out) return usage_error("cannot write DOT file: " + dot_path);
  }

  const bool connected = pg_connectivity_connected(c) != 0;
  if (args.format == "json") {
    char* json = nullptr;
    if (pg_connectivity_to_json(c, &json) != PG_OK) return engine_error();
    std::cout << take(json) << "\n";
  } else {
    char* components = nullptr;
    if (pg_connectivity_components_text(c, &components) != PG_OK) return engine_error();
    std::cout << "connected: " << (connected ? "yes" : "no") << "\n"
              << "components: " << take(components) << "\n";
  }
  return connected ? kExitPass : kExitFinding;
}

int run_check(const CommonArgs& args, const std::string& property, std::size_t bound,
              const std::string& mode) {
  GrammarHandle g;
  if (pg_grammar_load(args.grammar_path.c_str(), g.out()) != PG_OK) return engine_error();

  ReportHandle r;
  if (pg_check(g, property.c_str(), bound, mode.c_str(), args.cap, r.out()) != PG_OK)
    return engine_error();

  char* payload = nullptr;
  const pg_status st =
      args.format == "json" ? pg_report_to_json(r, &payload) : pg_report_text(r, &payload);
  if (st != PG_OK) return engine_error();
  std::cout << take(payload);
  if (args.format == "json") std::cout << "\n";
  return pg_report_passed(r) ? kExitPass : kExitFinding;
}

int run_properties(std::size_t max_len, int max_index, std::size_t generators,
                   const std::string& format) {
  ReportHandle r;
  if (pg_run_properties(max_len, max_index, generators, r.out()) != PG_OK) return engine_error();

  char* payload = nullptr;
  const pg_status st =
      format == "json" ? pg_report_to_json(r, &payload) : pg_report_text(r, &payload);
  if (st != PG_OK) return engine_error();
  std::cout << take(payload);
  if (format == "json") std::cout << "\n";
  return pg_report_passed(r) ? kExitPass : kExitFinding;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pregroup grammar engine"};
  app.require_subcommand(1);

  CommonArgs parse_args;
  std::string parse_diagram = "text";
  auto* parse_cmd = app.add_subcommand("parse", "decide grammaticality of a type string");
  parse_cmd->add_option("grammar", parse_args.grammar_path, "grammar file (JSON)")->required();
  auto* parse_types_opt =
      parse_cmd->add_option("--types", parse_args.types, "whitespace-separated type names");
  parse_cmd->add_option("--sentence", parse_args.sentence,
                        "whitespace-separated surface words, looked up in the lexicon")
      ->excludes(parse_types_opt);
  parse_cmd->add_option("--diagram", parse_diagram, "render the first reduction diagram")
      ->check(CLI::IsMember({"text", "none"}))
      ->capture_default_str();
  parse_cmd->add_option("--cap", parse_args.cap, "diagram enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(parse_cmd, parse_args.format);

  CommonArgs connect_args;
  std::string connect_mode = "exists";
  std::string connect_dot;
  auto* connect_cmd =
      app.add_subcommand("connect", "check causal connectivity of a grammatical type string");
  connect_cmd->add_option("grammar", connect_args.grammar_path, "grammar file (JSON)")->required();
  connect_cmd->add_option("--types", connect_args.types, "whitespace-separated type names")
      ->required();
  connect_cmd->add_option("--mode", connect_mode, "quantifier over reduction diagrams")
      ->check(CLI::IsMember({"exists", "forall"}))
      ->capture_default_str();
  connect_cmd->add_option("--dot", connect_dot, "write the causal graph as Graphviz DOT");
  connect_cmd->add_option("--cap", connect_args.cap, "diagram enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(connect_cmd, connect_args.format);

  CommonArgs check_args;
  std::string check_property;
  std::string check_mode = "exists";
  std::size_t check_bound = 3;
  auto* check_cmd = app.add_subcommand("check", "run a bounded model check or lint");
  check_cmd->add_option("grammar", check_args.grammar_path, "grammar file (JSON)")->required();
  check_cmd->add_option("--property", check_property, "property to check")
      ->check(CLI::IsMember({"s-connected", "simply-reducing", "lint"}))
      ->required();
  check_cmd->add_option("--bound", check_bound, "maximum type-string length")
      ->capture_default_str();
  check_cmd->add_option("--mode", check_mode, "quantifier for s-connected")
      ->check(CLI::IsMember({"exists", "forall"}))
      ->capture_default_str();
  check_cmd->add_option("--cap", check_args.cap, "diagram enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(check_cmd, check_args.format);

  std::size_t prop_max_len = 6;
  int prop_max_index = 2;
  std::size_t prop_generators = 2;
  std::string prop_format = "text";
  auto* prop_cmd =
      app.add_subcommand("properties", "engine-vs-oracle and algebraic-law self validation");
  prop_cmd->add_option("--max-len", prop_max_len, "maximum word length")->capture_default_str();
  prop_cmd->add_option("--max-index", prop_max_index, "maximum adjoint index magnitude")
      ->capture_default_str();
  prop_cmd->add_option("--generators", prop_generators, "generator count of the discrete poset")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(prop_cmd, prop_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (app.got_subcommand(parse_cmd)) {
      int code = kExitError;
      if (!one_input(parse_args, true, code)) return code;
      return run_parse(parse_args, parse_diagram);
    }
    if (app.got_subcommand(connect_cmd))
      return run_connect(connect_args, connect_mode, connect_dot);
    if (app.got_subcommand(check_cmd))
      return run_check(check_args, check_property, check_bound, check_mode);
    if (app.got_subcommand(prop_cmd))
      return run_properties(prop_max_len, prop_max_index, prop_generators, prop_format);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return usage_error("no subcommand");
}
