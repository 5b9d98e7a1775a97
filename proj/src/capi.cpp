#include "raaglie.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "raaglie/errors.hpp"
#include "raaglie/polynomial.hpp"
#include "raaglie/report.hpp"

struct raaglie_graph {
  raaglie::GraphPtr graph;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

raaglie_status fail(raaglie_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

// Runs `fn` (returning the rendered string) under the common error mapping.
template <typename Fn>
raaglie_status run(char** out, Fn&& fn) {
  if (!out) return fail(RAAGLIE_ERR_ARGUMENT, "null output pointer");
  try {
    const std::string result = fn();
    char* s = dup_string(result);
    if (!s) return fail(RAAGLIE_ERR_INTERNAL, "allocation failure");
    *out = s;
    t_last_error.clear();
    return RAAGLIE_OK;
  } catch (const raaglie::ParseError& e) {
    return fail(RAAGLIE_ERR_PARSE, e.what());
  } catch (const raaglie::LimitError& e) {
    return fail(RAAGLIE_ERR_LIMIT, e.what());
  } catch (const raaglie::DomainError& e) {
    return fail(RAAGLIE_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(RAAGLIE_ERR_INTERNAL, e.what());
  }
}

raaglie::Format to_format(raaglie_format format) {
  return format == RAAGLIE_FORMAT_JSON ? raaglie::Format::kJson
                                       : raaglie::Format::kText;
}

bool check_graph(const raaglie_graph* graph) { return graph && graph->graph; }

}  // namespace

extern "C" {

raaglie_status raaglie_graph_parse(const char* json_text, raaglie_graph** out) {
  if (!json_text || !out) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  try {
    auto* handle = new raaglie_graph{raaglie::parse_graph(json_text)};
    *out = handle;
    t_last_error.clear();
    return RAAGLIE_OK;
  } catch (const raaglie::ParseError& e) {
    return fail(RAAGLIE_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(RAAGLIE_ERR_INTERNAL, e.what());
  }
}

raaglie_status raaglie_graph_parse_file(const char* path, raaglie_graph** out) {
  if (!path || !out) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  std::ifstream in(path);
  if (!in) return fail(RAAGLIE_ERR_PARSE, std::string("cannot open '") + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return raaglie_graph_parse(text.str().c_str(), out);
}

void raaglie_graph_free(raaglie_graph* graph) { delete graph; }

int raaglie_graph_vertex_count(const raaglie_graph* graph) {
  return check_graph(graph) ? graph->graph->vertex_count() : -1;
}

raaglie_status raaglie_graph_serialize(const raaglie_graph* graph, char** out) {
  if (!check_graph(graph)) return fail(RAAGLIE_ERR_ARGUMENT, "null graph");
  return run(out, [&] { return graph->graph->serialize(); });
}

raaglie_status raaglie_lyndon(const raaglie_graph* graph, int max_len,
                              raaglie_format format, char** out) {
  if (!check_graph(graph)) return fail(RAAGLIE_ERR_ARGUMENT, "null graph");
  return run(out, [&] {
    return raaglie::render_lyndon(graph->graph, max_len, to_format(format));
  });
}

raaglie_status raaglie_lcs_basis(const raaglie_graph* graph, int degree,
                                 raaglie_format format, char** out) {
  if (!check_graph(graph)) return fail(RAAGLIE_ERR_ARGUMENT, "null graph");
  return run(out, [&] {
    return raaglie::render_lcs_basis(graph->graph, degree, to_format(format));
  });
}

raaglie_status raaglie_magnus(const raaglie_graph* graph, const char* word,
                              int truncation, raaglie_format format, char** out) {
  if (!check_graph(graph) || !word) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  return run(out, [&] {
    return raaglie::render_magnus(graph->graph, word, truncation, to_format(format));
  });
}

raaglie_status raaglie_normal_form(const raaglie_graph* graph, const char* word,
                                   raaglie_format format, char** out) {
  if (!check_graph(graph) || !word) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  return run(out, [&] {
    return raaglie::render_normal_form(graph->graph, word, to_format(format));
  });
}

raaglie_status raaglie_member(const raaglie_graph* graph, const char* word,
                              int degree, int truncation, raaglie_format format,
                              char** out) {
  if (!check_graph(graph) || !word) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  return run(out, [&] {
    return raaglie::render_member(graph->graph, word, degree, truncation,
                                  to_format(format));
  });
}

raaglie_status raaglie_coords(const raaglie_graph* graph, const char* word,
                              int degree, int truncation, raaglie_format format,
                              char** out) {
  if (!check_graph(graph) || !word) return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  return run(out, [&] {
    return raaglie::render_coords(graph->graph, word, degree, truncation,
                                  to_format(format));
  });
}

raaglie_status raaglie_structure(const raaglie_graph* graph, const char* lyndon_a,
                                 const char* lyndon_b, raaglie_format format,
                                 char** out) {
  if (!check_graph(graph) || !lyndon_a || !lyndon_b)
    return fail(RAAGLIE_ERR_ARGUMENT, "null argument");
  return run(out, [&] {
    return raaglie::render_structure(graph->graph, lyndon_a, lyndon_b,
                                     to_format(format));
  });
}

raaglie_status raaglie_verify_series(const raaglie_graph* graph, int max_deg,
                                     raaglie_format format, char** out) {
  if (!check_graph(graph)) return fail(RAAGLIE_ERR_ARGUMENT, "null graph");
  return run(out, [&] {
    return raaglie::render_verify_series(graph->graph, max_deg, to_format(format));
  });
}

void raaglie_string_free(char* s) { std::free(s); }

const char* raaglie_last_error(void) { return t_last_error.c_str(); }

void raaglie_set_max_terms(size_t max_terms) {
  raaglie::limits::set_max_polynomial_terms(max_terms);
}

}  // extern "C"
