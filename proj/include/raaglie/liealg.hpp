#pragma once

#include <map>

#include "raaglie/lyndon.hpp"
#include "raaglie/polynomial.hpp"

namespace raaglie {

// Coordinates of a homogeneous Lie element in the basis of bracketed
// Lyndon elements of one fixed degree.
class LyndonCoordinates {
public:
  using EntryMap = std::map<Trace, mpz_class>;

  explicit LyndonCoordinates(int degree) : degree_(degree) {}
  LyndonCoordinates(int degree, EntryMap entries)
      : degree_(degree), entries_(std::move(entries)) {}

  int degree() const { return degree_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  void add(const Trace& key, const mpz_class& c);

  friend bool operator==(const LyndonCoordinates&, const LyndonCoordinates&) = default;

private:
  int degree_;
  EntryMap entries_;
};

// Expands bracketed Lyndon elements inside the trace algebra and rewrites
// homogeneous Lie elements in the Lyndon basis.  Expansions are memoized
// per trace; the expansion of an element of length k is homogeneous of
// degree k and is produced at truncation k.  The memo table is the only
// mutable state: share one expander per worker, results are
// value-identical either way.
class LieExpander {
public:
  explicit LieExpander(GraphPtr g);

  const GraphPtr& graph() const { return graph_; }

  Polynomial expand(const LyndonTree& t);
  Polynomial expand(const LyndonTree& t, int truncation);
  Polynomial expand(const Trace& lyndon_element);

  // Triangular elimination against expansions: repeatedly pivot on the
  // minimal trace of the remainder, which must be a Lyndon element with
  // expansion coefficient 1.  The input must be homogeneous of the given
  // degree.  Throws NonHomogeneousError / NotInLieSubalgebraError.
  LyndonCoordinates coordinates(const Polynomial& p, int degree);

  // Coordinates of [l(a), l(b)] in the Lyndon basis of degree |a|+|b|.
  // Swaps and negates when b < a; equal arguments give zero.
  LyndonCoordinates structure_constants(const LyndonTree& a, const LyndonTree& b);

  // Turns coordinates back into the polynomial sum(c * l(m)).
  Polynomial realize(const LyndonCoordinates& coords);

private:
  GraphPtr graph_;
  LyndonTreeBuilder builder_;
  std::map<Trace, Polynomial> memo_;
};

// Rank of the degree-k piece of the graded Lie algebra: the number of
// Lyndon elements of length k.
long graded_rank(const CommutationGraph& g, int k,
                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace raaglie
