// Command-line front end.  Talks to the core exclusively through the C
// API in raaglie.h; all mathematical output is rendered by the library so
// that API users and CLI users see identical bytes.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>

#include "raaglie.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct GraphDeleter {
  void operator()(raaglie_graph* g) const { raaglie_graph_free(g); }
};
using GraphHandle = std::unique_ptr<raaglie_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { raaglie_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

int status_to_exit(raaglie_status status) {
  switch (status) {
    case RAAGLIE_OK:
      return 0;
    case RAAGLIE_ERR_PARSE:
    case RAAGLIE_ERR_ARGUMENT:
      return kExitUsage;
    case RAAGLIE_ERR_DOMAIN:
    case RAAGLIE_ERR_LIMIT:
    default:
      return kExitDomain;
  }
}

int finish(raaglie_status status, const StringHandle& output) {
  if (status != RAAGLIE_OK) {
    std::fprintf(stderr, "error: %s\n", raaglie_last_error());
    return status_to_exit(status);
  }
  std::fputs(output.get(), stdout);
  const std::string_view text(output.get());
  if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyndon bases, Magnus expansions, and lower-central-series "
               "quotients of right-angled Artin groups"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string graph_path;
  std::string format_name = "text";
  std::size_t max_terms = 1'000'000;
  std::string word, trace_a, trace_b;
  int max_len = 0, degree = 0, truncate = 0, max_deg = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    cmd->add_option("--format", format_name, "output format (json|text)")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-terms", max_terms, "polynomial term cap");
  };

  CLI::App* lyndon = app.add_subcommand(
      "lyndon", "Lyndon elements with bracketings, grouped by length");
  add_common(lyndon);
  lyndon->add_option("--max-len", max_len, "maximum element length")->required();

  CLI::App* lcs_basis = app.add_subcommand(
      "lcs-basis", "basis of the degree-K lower-central-series quotient");
  add_common(lcs_basis);
  lcs_basis->add_option("--degree", degree, "quotient degree K")->required();

  CLI::App* magnus = app.add_subcommand("magnus", "truncated expansion of a word");
  add_common(magnus);
  magnus->add_option("--truncate", truncate, "truncation degree")->required();
  magnus->add_option("word", word, "group word")->required();

  CLI::App* normal_form =
      app.add_subcommand("normal-form", "canonical fully reduced form of a word");
  add_common(normal_form);
  normal_form->add_option("word", word, "group word")->required();

  CLI::App* member =
      app.add_subcommand("member", "filtration degree verdict for a word");
  add_common(member);
  member->add_option("--degree", degree, "queried degree K")->required();
  member->add_option("--truncate", truncate, "truncation (default K+1)");
  member->add_option("word", word, "group word")->required();

  CLI::App* coords = app.add_subcommand(
      "coords", "coordinates of a word in the Lyndon basis of degree K");
  add_common(coords);
  coords->add_option("--degree", degree, "quotient degree K")->required();
  coords->add_option("--truncate", truncate, "truncation (default K+1)");
  coords->add_option("word", word, "group word")->required();

  CLI::App* structure = app.add_subcommand(
      "structure", "structure constants of a bracket of two Lyndon elements");
  add_common(structure);
  structure->add_option("a", trace_a, "left Lyndon element (trace)")->required();
  structure->add_option("b", trace_b, "right Lyndon element (trace)")->required();

  CLI::App* verify_series = app.add_subcommand(
      "verify-series", "growth-series cross-check of the Lyndon ranks");
  add_common(verify_series);
  verify_series->add_option("--max-deg", max_deg, "maximum degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  raaglie_set_max_terms(max_terms);
  const raaglie_format format =
      format_name == "json" ? RAAGLIE_FORMAT_JSON : RAAGLIE_FORMAT_TEXT;

  raaglie_graph* raw_graph = nullptr;
  raaglie_status status = raaglie_graph_parse_file(graph_path.c_str(), &raw_graph);
  if (status != RAAGLIE_OK) {
    std::fprintf(stderr, "error: %s\n", raaglie_last_error());
    return status_to_exit(status);
  }
  GraphHandle graph(raw_graph);

  char* raw_out = nullptr;
  if (lyndon->parsed()) {
    status = raaglie_lyndon(graph.get(), max_len, format, &raw_out);
  } else if (lcs_basis->parsed()) {
    status = raaglie_lcs_basis(graph.get(), degree, format, &raw_out);
  } else if (magnus->parsed()) {
    status = raaglie_magnus(graph.get(), word.c_str(), truncate, format, &raw_out);
  } else if (normal_form->parsed()) {
    status = raaglie_normal_form(graph.get(), word.c_str(), format, &raw_out);
  } else if (member->parsed()) {
    status = raaglie_member(graph.get(), word.c_str(), degree, truncate, format,
                            &raw_out);
  } else if (coords->parsed()) {
    status = raaglie_coords(graph.get(), word.c_str(), degree, truncate, format,
                            &raw_out);
  } else if (structure->parsed()) {
    status = raaglie_structure(graph.get(), trace_a.c_str(), trace_b.c_str(),
                               format, &raw_out);
  } else {
    status = raaglie_verify_series(graph.get(), max_deg, format, &raw_out);
  }
  return finish(status, StringHandle(raw_out));
}
