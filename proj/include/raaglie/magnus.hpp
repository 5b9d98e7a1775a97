#pragma once

#include <optional>

#include "raaglie/groupword.hpp"
#include "raaglie/liealg.hpp"
#include "raaglie/polynomial.hpp"

namespace raaglie {

// Image of a group word under the embedding sending each generator v to
// 1 + v, truncated at a fixed degree.  The constant term is always 1.
struct MagnusExpansion {
  GroupWord source;
  Polynomial value;

  int truncation() const { return value.truncation(); }
};

MagnusExpansion magnus(const GraphPtr& g, const GroupWord& w, int truncation);

// Lowest-degree nonzero homogeneous part of the expansion minus 1, when it
// exists within the truncation; nullopt means the expansion is 1 up to the
// truncation degree.
struct Derivation {
  int degree;
  Polynomial part;
};
std::optional<Derivation> derivation(const GraphPtr& g, const GroupWord& w,
                                     int truncation);

// Position of a word in the filtration by vanishing low-degree parts.
// exact=true: the word lies at level `value` and not deeper (value <= N);
// exact=false: the expansion is 1 up to degree N, so the level is at least
// value = N + 1.
struct FiltrationDegree {
  int value;
  bool exact;

  bool at_least(int k) const { return value >= k; }
  friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
};
FiltrationDegree filtration_degree(const GraphPtr& g, const GroupWord& w,
                                   int truncation);

// Coordinates of the degree-k part of the expansion in the Lyndon basis:
// the coordinate vector of the word in the k-th lower-central-series
// quotient.  Requires the word to lie at filtration level >= k (throws
// NotInFiltrationError otherwise); all-zero output means it lies at level
// >= k+1.
LyndonCoordinates lcs_coordinates(LieExpander& expander, const GroupWord& w,
                                  int k, int truncation);
LyndonCoordinates lcs_coordinates(const GraphPtr& g, const GroupWord& w,
                                  int k, int truncation);

// Reads a bracketing tree as nested group commutators [x,y] = x y x^-1 y^-1.
GroupWord commutator_word(const LyndonTree& t);

}  // namespace raaglie
