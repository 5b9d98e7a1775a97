#pragma once

#include <string>

#include "raaglie/graph.hpp"

namespace raaglie {

enum class Format { kText, kJson };

// Renderers behind the CLI subcommands.  Output is deterministic:
// byte-identical for identical inputs, and the text and JSON forms carry
// the same mathematical content.
std::string render_lyndon(const GraphPtr& g, int max_len, Format format);
std::string render_lcs_basis(const GraphPtr& g, int degree, Format format);
std::string render_magnus(const GraphPtr& g, const std::string& word_text,
                          int truncation, Format format);
std::string render_normal_form(const GraphPtr& g, const std::string& word_text,
                               Format format);
// truncation <= 0 selects the default degree + 1.
std::string render_member(const GraphPtr& g, const std::string& word_text,
                          int degree, int truncation, Format format);
std::string render_coords(const GraphPtr& g, const std::string& word_text,
                          int degree, int truncation, Format format);
std::string render_structure(const GraphPtr& g, const std::string& trace_a,
                             const std::string& trace_b, Format format);
std::string render_verify_series(const GraphPtr& g, int max_deg, Format format);

}  // namespace raaglie
