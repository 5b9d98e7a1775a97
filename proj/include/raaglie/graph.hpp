#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raaglie {

// Vertex subset as a bitmask, bit i = vertex i.
using VertexSet = std::uint32_t;

std::vector<int> vertex_list(VertexSet s);

// Finite simple graph on an ordered vertex set.  An edge between two
// vertices declares that the corresponding generators commute; the
// document order of the vertices fixes the total order v1 < v2 < ... < vr
// used by every other module.  Immutable after construction.
class CommutationGraph {
public:
  static constexpr int kDefaultMaxVertices = 16;
  static constexpr int kHardMaxVertices = 31;

  CommutationGraph(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& edges,
                   int max_vertices = kDefaultMaxVertices);

  // Parses {"vertices": [names...], "edges": [[a,b]...]}.
  static CommutationGraph parse(const std::string& json_text,
                                int max_vertices = kDefaultMaxVertices);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
  // -1 when the name is unknown.
  int find_vertex(std::string_view name) const;

  bool adjacent(int a, int b) const {
    return (neighbors_[static_cast<size_t>(a)] >> b) & 1u;
  }
  VertexSet neighbors(int v) const { return neighbors_[static_cast<size_t>(v)]; }
  // Vertices that do not commute with v.  Includes v itself.
  VertexSet blockers(int v) const { return blockers_[static_cast<size_t>(v)]; }
  VertexSet all_vertices() const {
    return static_cast<VertexSet>((1u << vertex_count()) - 1u);
  }

  // All complete subsets including the empty one, sorted by size then
  // lexicographically as sorted vertex lists.
  std::vector<std::vector<int>> cliques() const;

  std::string serialize() const;

  bool operator==(const CommutationGraph& other) const {
    return labels_ == other.labels_ && neighbors_ == other.neighbors_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> neighbors_;
  std::vector<VertexSet> blockers_;
};

using GraphPtr = std::shared_ptr<const CommutationGraph>;

GraphPtr parse_graph(const std::string& json_text,
                     int max_vertices = CommutationGraph::kDefaultMaxVertices);

inline bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace raaglie
