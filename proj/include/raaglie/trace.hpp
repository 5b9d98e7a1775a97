#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "raaglie/graph.hpp"

namespace raaglie {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// An element of the free partially-commutative monoid on the vertices of a
// commutation graph: a word modulo swaps of adjacent commuting letters.
//
// A trace is stored through its canonical representative, the
// lexicographically greatest word in its equivalence class, obtained by
// greedily emitting the largest vertex that can be moved to the front.
// Two traces are equal iff their canonical words are equal, and the total
// order on traces is the lexicographic order of canonical words (with a
// proper prefix ordered before its extensions; the unequal-length corner
// cases of this rule are pinned by tests rather than further theory).
class Trace {
public:
  Trace() = default;  // the identity

  static Trace canonical(const CommutationGraph& g, std::span<const int> letters);
  static Trace generator(const CommutationGraph& g, int v);
  // Whitespace-separated vertex names; "1" or the empty string denote the
  // identity.
  static Trace parse(const CommutationGraph& g, const std::string& text);
  // The input must already be canonical.
  static Trace from_canonical_word(std::vector<std::uint8_t> word);

  const std::vector<std::uint8_t>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  std::vector<int> multidegree(const CommutationGraph& g) const;

  std::string str(const CommutationGraph& g) const;

  friend bool operator==(const Trace&, const Trace&) = default;
  friend std::strong_ordering operator<=>(const Trace&, const Trace&) = default;

private:
  std::vector<std::uint8_t> word_;
};

// Greedy canonical form of an arbitrary representative word.
std::vector<std::uint8_t> canonicalize_word(const CommutationGraph& g,
                                            std::span<const std::uint8_t> letters);

Trace multiply(const CommutationGraph& g, const Trace& a, const Trace& b);

VertexSet supp(const Trace& m);
// Vertices that occur as the first (last) letter of some representative.
VertexSet init_set(const CommutationGraph& g, const Trace& m);
VertexSet term_set(const CommutationGraph& g, const Trace& m);
// supp(m) together with every vertex that fails to commute with some
// vertex of supp(m).
VertexSet zeta(const CommutationGraph& g, const Trace& m);
// False iff some letter has two occurrences separated only by letters
// commuting with it, i.e. some representative contains "vv".
bool is_square_free(const CommutationGraph& g, const Trace& m);

// All traces of the given length, sorted ascending.
std::vector<Trace> enumerate_traces(const CommutationGraph& g, int length,
                                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace raaglie
