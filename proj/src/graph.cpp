#include "raaglie/graph.hpp"

#include <algorithm>
#include <json.hpp>

#include "raaglie/errors.hpp"

namespace raaglie {

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; s != 0; ++v, s >>= 1)
    if (s & 1u) out.push_back(v);
  return out;
}

CommutationGraph::CommutationGraph(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& edges,
                                   int max_vertices)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw ParseError("graph must have at least one vertex");
  max_vertices = std::min(max_vertices, kHardMaxVertices);
  if (vertex_count() > max_vertices)
    throw ParseError("graph has " + std::to_string(vertex_count()) +
                     " vertices, limit is " + std::to_string(max_vertices));
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw ParseError("duplicate vertex name '" + labels_[i] + "'");

  neighbors_.assign(labels_.size(), 0);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count())
      throw ParseError("edge endpoint out of range");
    if (a == b)
      throw ParseError("self-loop at vertex '" + labels_[static_cast<size_t>(a)] + "'");
    neighbors_[static_cast<size_t>(a)] |= 1u << b;
    neighbors_[static_cast<size_t>(b)] |= 1u << a;
  }

  blockers_.resize(labels_.size());
  for (int v = 0; v < vertex_count(); ++v)
    blockers_[static_cast<size_t>(v)] = all_vertices() & ~neighbors_[static_cast<size_t>(v)];
}

CommutationGraph CommutationGraph::parse(const std::string& json_text, int max_vertices) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph document needs a \"vertices\" array");

  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    labels.push_back(v.get<std::string>());
  }

  auto index_of = [&](const std::string& name) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
      throw ParseError("edge endpoint '" + name + "' is not a vertex");
    return static_cast<int>(it - labels.begin());
  };

  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw ParseError("each edge must be a pair of vertex names");
      edges.emplace_back(index_of(e[0].get<std::string>()),
                         index_of(e[1].get<std::string>()));
    }
  }
  return CommutationGraph(std::move(labels), edges, max_vertices);
}

std::vector<std::vector<int>> CommutationGraph::cliques() const {
  const int r = vertex_count();
  std::vector<std::vector<int>> out;
  for (VertexSet s = 0; s < (1u << r); ++s) {
    bool ok = true;
    for (int v = 0; ok && v < r; ++v)
      if ((s >> v) & 1u)
        ok = (s & ~(1u << v) & ~neighbors_[static_cast<size_t>(v)]) == 0;
    if (ok) out.push_back(vertex_list(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string CommutationGraph::serialize() const {
  nlohmann::ordered_json doc;
  doc["vertices"] = labels_;
  doc["edges"] = nlohmann::ordered_json::array();
  for (int a = 0; a < vertex_count(); ++a)
    for (int b = a + 1; b < vertex_count(); ++b)
      if (adjacent(a, b))
        doc["edges"].push_back({label(a), label(b)});
  return doc.dump();
}

int CommutationGraph::find_vertex(std::string_view name) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<int>(i);
  return -1;
}

GraphPtr parse_graph(const std::string& json_text, int max_vertices) {
  return std::make_shared<const CommutationGraph>(
      CommutationGraph::parse(json_text, max_vertices));
}

}  // namespace raaglie
