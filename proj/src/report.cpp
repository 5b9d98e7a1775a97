#include "raaglie/report.hpp"

#include <json.hpp>
#include <sstream>

#include "raaglie/errors.hpp"
#include "raaglie/liealg.hpp"
#include "raaglie/lyndon.hpp"
#include "raaglie/magnus.hpp"
#include "raaglie/series.hpp"

namespace raaglie {

namespace {

using Json = nlohmann::ordered_json;

Json trace_names(const CommutationGraph& g, const Trace& t) {
  Json names = Json::array();
  for (auto v : t.word()) names.push_back(g.label(v));
  return names;
}

Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [t, c] : p.terms())
    terms.push_back({{"coeff", c.get_str()}, {"trace", trace_names(*p.graph(), t)}});
  return Json{{"truncation", p.truncation()}, {"terms", std::move(terms)}};
}

Json coordinates_json(const CommutationGraph& g, const LyndonCoordinates& coords) {
  Json terms = Json::array();
  for (const auto& [t, c] : coords.entries())
    terms.push_back({{"lyndon", trace_names(g, t)}, {"coeff", c.get_str()}});
  return Json{{"degree", coords.degree()}, {"terms", std::move(terms)}};
}

std::string polynomial_text(const Polynomial& p) {
  std::ostringstream out;
  out << "truncation: " << p.truncation() << "\n";
  if (p.is_zero()) {
    out << "0\n";
    return out.str();
  }
  for (const auto& [t, c] : p.terms())
    out << c.get_str() << " " << t.str(*p.graph()) << "\n";
  return out.str();
}

std::string coordinates_text(const CommutationGraph& g,
                             const LyndonCoordinates& coords) {
  std::ostringstream out;
  out << "degree: " << coords.degree() << "\n";
  if (coords.is_zero()) {
    out << "0\n";
    return out.str();
  }
  for (const auto& [t, c] : coords.entries())
    out << c.get_str() << " " << t.str(g) << "\n";
  return out.str();
}

std::vector<std::string> series_strings(const IntegerSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

int default_truncation(int degree, int truncation) {
  // The smallest truncation certifying membership on both sides of the
  // queried level.
  return truncation <= 0 ? degree + 1 : truncation;
}

}  // namespace

std::string render_lyndon(const GraphPtr& g, int max_len, Format format) {
  const auto groups = enumerate_lyndon(*g, max_len);
  size_t total = 0;
  for (const auto& group : groups) total += group.size();

  if (format == Format::kJson) {
    Json lengths = Json::array();
    for (int n = 1; n <= max_len; ++n) {
      Json elements = Json::array();
      for (const auto& tree : groups[static_cast<size_t>(n)])
        elements.push_back({{"trace", trace_names(*g, tree->trace())},
                            {"bracketing", tree->bracket_str(*g)}});
      lengths.push_back({{"length", n},
                         {"count", groups[static_cast<size_t>(n)].size()},
                         {"elements", std::move(elements)}});
    }
    return Json{{"max_len", max_len}, {"total", total}, {"lengths", std::move(lengths)}}
        .dump(2);
  }

  std::ostringstream out;
  out << "lyndon elements up to length " << max_len << ": " << total << "\n";
  for (int n = 1; n <= max_len; ++n) {
    const auto& group = groups[static_cast<size_t>(n)];
    out << "length " << n << ": " << group.size() << "\n";
    for (const auto& tree : group)
      out << "  " << tree->trace().str(*g) << "  " << tree->bracket_str(*g) << "\n";
  }
  return out.str();
}

std::string render_lcs_basis(const GraphPtr& g, int degree, Format format) {
  const auto groups = enumerate_lyndon(*g, degree);
  const auto& basis = groups[static_cast<size_t>(degree)];

  if (format == Format::kJson) {
    Json generators = Json::array();
    for (const auto& tree : basis) generators.push_back(tree->bracket_str(*g));
    return Json{{"degree", degree},
                {"rank", basis.size()},
                {"generators", std::move(generators)}}
        .dump(2);
  }

  std::ostringstream out;
  out << "degree: " << degree << "\n";
  out << "rank: " << basis.size() << "\n";
  out << "generators: ";
  for (size_t i = 0; i < basis.size(); ++i)
    out << (i ? ", " : "") << basis[i]->bracket_str(*g);
  out << "\n";
  return out.str();
}

std::string render_magnus(const GraphPtr& g, const std::string& word_text,
                          int truncation, Format format) {
  const GroupWord w = GroupWord::parse(*g, word_text);
  const MagnusExpansion expansion = magnus(g, w, truncation);

  if (format == Format::kJson) {
    Json doc{{"word", w.str(*g)}};
    doc.update(polynomial_json(expansion.value));
    return doc.dump(2);
  }
  return polynomial_text(expansion.value);
}

std::string render_normal_form(const GraphPtr& g, const std::string& word_text,
                               Format format) {
  const GroupWord nf = normal_form(*g, GroupWord::parse(*g, word_text));

  if (format == Format::kJson) {
    Json syllables = Json::array();
    for (const auto& s : nf.syllables())
      syllables.push_back({{"vertex", g->label(s.vertex)}, {"exponent", s.exponent}});
    return Json{{"normal_form", nf.str(*g)}, {"syllables", std::move(syllables)}}
        .dump(2);
  }
  return nf.str(*g) + "\n";
}

std::string render_member(const GraphPtr& g, const std::string& word_text,
                          int degree, int truncation, Format format) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  truncation = default_truncation(degree, truncation);
  if (truncation < degree) throw DomainError("truncation must be at least the degree");
  const GroupWord w = GroupWord::parse(*g, word_text);
  const FiltrationDegree fd = filtration_degree(g, w, truncation);
  const bool member = fd.at_least(degree);

  if (format == Format::kJson) {
    return Json{{"word", w.str(*g)},
                {"degree", degree},
                {"truncation", truncation},
                {"filtration_degree", fd.value},
                {"exact", fd.exact},
                {"member", member}}
        .dump(2);
  }

  std::ostringstream out;
  out << "word: " << w.str(*g) << "\n";
  out << "degree: " << degree << "\n";
  out << "truncation: " << truncation << "\n";
  out << "filtration degree: " << (fd.exact ? "" : ">= ") << fd.value << "\n";
  out << "member: " << (member ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_coords(const GraphPtr& g, const std::string& word_text,
                          int degree, int truncation, Format format) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  truncation = default_truncation(degree, truncation);
  const GroupWord w = GroupWord::parse(*g, word_text);
  const LyndonCoordinates coords = lcs_coordinates(g, w, degree, truncation);

  if (format == Format::kJson) {
    Json doc{{"word", w.str(*g)}, {"truncation", truncation}};
    doc.update(coordinates_json(*g, coords));
    return doc.dump(2);
  }
  return coordinates_text(*g, coords);
}

std::string render_structure(const GraphPtr& g, const std::string& trace_a,
                             const std::string& trace_b, Format format) {
  const Trace a = Trace::parse(*g, trace_a);
  const Trace b = Trace::parse(*g, trace_b);
  if (!is_lyndon_element(a))
    throw NotLyndonError("'" + a.str(*g) + "' is not a Lyndon element");
  if (!is_lyndon_element(b))
    throw NotLyndonError("'" + b.str(*g) + "' is not a Lyndon element");

  LieExpander expander(g);
  LyndonTreeBuilder builder(*g);
  const LyndonCoordinates coords =
      expander.structure_constants(*builder.build(a), *builder.build(b));

  if (format == Format::kJson) {
    Json doc{{"a", trace_names(*g, a)}, {"b", trace_names(*g, b)}};
    doc.update(coordinates_json(*g, coords));
    return doc.dump(2);
  }

  std::ostringstream out;
  out << "a: " << a.str(*g) << "\n";
  out << "b: " << b.str(*g) << "\n";
  out << coordinates_text(*g, coords);
  return out.str();
}

std::string render_verify_series(const GraphPtr& g, int max_deg, Format format) {
  const WittReport report = witt_product_check(*g, max_deg);
  const IntegerSeries cliques = clique_polynomial(*g);

  if (format == Format::kJson) {
    return Json{{"max_deg", max_deg},
                {"clique_polynomial", series_strings(cliques)},
                {"ranks", report.ranks},
                {"lhs", series_strings(report.lhs)},
                {"rhs", series_strings(report.rhs)},
                {"equal", report.equal}}
        .dump(2);
  }

  std::ostringstream out;
  out << "clique polynomial: " << cliques.str() << "\n";
  out << "ranks:";
  for (long r : report.ranks) out << " " << r;
  out << "\n";
  out << "product: " << report.lhs.str() << "\n";
  out << "growth:  " << report.rhs.str() << "\n";
  out << "equal: " << (report.equal ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace raaglie
