#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raaglie/graph.hpp"
#include "raaglie/trace.hpp"

namespace raaglie {

struct Syllable {
  int vertex = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A group element given as a sequence of syllables v^e with nonzero
// exponents.  Construction drops zero-exponent syllables but performs no
// other reduction.
class GroupWord {
public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Syllable> syllables);

  // Grammar: whitespace-separated items, where an item is "name",
  // "name^integer", or "[x,y]" with x and y themselves sequences of items;
  // [x,y] expands to x y x^-1 y^-1.  "1" alone denotes the identity.
  static GroupWord parse(const CommutationGraph& g, const std::string& text);
  static GroupWord from_trace(const Trace& t);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  int syllable_count() const { return static_cast<int>(syllables_.size()); }

  std::string str(const CommutationGraph& g) const;  // "v1 v3^-1"; "1" when empty

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
  std::vector<Syllable> syllables_;
};

GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
// x y x^-1 y^-1.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

// Merges same-vertex syllables separated only by commuting syllables and
// drops zero exponents until neither move applies.  The result represents
// the same group element; every pair of equal-vertex syllables in it is
// separated by some non-commuting syllable.
GroupWord fully_reduce(const CommutationGraph& g, const GroupWord& w);

// The canonical fully reduced representative: among all swap-equivalent
// fully reduced forms, the one obtained by greedily emitting the maximal
// movable syllable (vertex index major, exponent minor).
GroupWord normal_form(const CommutationGraph& g, const GroupWord& w);

bool is_identity(const CommutationGraph& g, const GroupWord& w);
bool equal(const CommutationGraph& g, const GroupWord& a, const GroupWord& b);

// Vertices occurring as the first (last) syllable of some fully reduced
// representative.
VertexSet init_set(const CommutationGraph& g, const GroupWord& w);
VertexSet term_set(const CommutationGraph& g, const GroupWord& w);

}  // namespace raaglie
