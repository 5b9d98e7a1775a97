#include "raaglie/liealg.hpp"

#include "raaglie/errors.hpp"

namespace raaglie {

void LyndonCoordinates::add(const Trace& key, const mpz_class& c) {
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

LieExpander::LieExpander(GraphPtr g) : graph_(std::move(g)), builder_(*graph_) {}

Polynomial LieExpander::expand(const LyndonTree& t) {
  auto it = memo_.find(t.trace());
  if (it != memo_.end()) return it->second;

  Polynomial result(graph_, t.trace().length());
  if (t.is_leaf()) {
    result = Polynomial::generator(graph_, t.generator(), 1);
  } else {
    const int n = t.trace().length();
    result = lie_bracket(expand(*t.left(), n), expand(*t.right(), n));
  }
  memo_.emplace(t.trace(), result);
  return result;
}

Polynomial LieExpander::expand(const LyndonTree& t, int truncation) {
  if (t.trace().length() > truncation)
    throw DomainError("element of length " + std::to_string(t.trace().length()) +
                      " does not fit truncation " + std::to_string(truncation));
  return expand(t).with_truncation(truncation);
}

Polynomial LieExpander::expand(const Trace& lyndon_element) {
  return expand(*builder_.build(lyndon_element));
}

LyndonCoordinates LieExpander::coordinates(const Polynomial& p, int degree) {
  if (!same_graph(p.graph(), graph_))
    throw MismatchError("polynomial over a different graph");
  if (!p.is_homogeneous(degree))
    throw NonHomogeneousError("polynomial is not homogeneous of degree " +
                              std::to_string(degree));

  LyndonCoordinates coords(degree);
  Polynomial rest = p.with_truncation(degree);
  while (!rest.is_zero()) {
    // Minimal trace of the remainder; its coefficient survives unchanged in
    // the result because every other term of an expansion is strictly
    // larger, so the minimum strictly increases and the loop terminates.
    const Trace pivot = rest.terms().begin()->first;
    const mpz_class c = rest.terms().begin()->second;
    if (!is_lyndon_element(pivot))
      throw NotInLieSubalgebraError("minimal trace '" + pivot.str(*graph_) +
                                    "' is not a Lyndon element");
    rest -= c * expand(*builder_.build(pivot));
    coords.add(pivot, c);
  }
  return coords;
}

LyndonCoordinates LieExpander::structure_constants(const LyndonTree& a,
                                                   const LyndonTree& b) {
  if (a.trace() == b.trace())
    return LyndonCoordinates(a.trace().length() + b.trace().length());
  if (b.trace() < a.trace()) {
    LyndonCoordinates swapped = structure_constants(b, a);
    LyndonCoordinates::EntryMap negated;
    for (const auto& [t, c] : swapped.entries()) negated.emplace(t, -c);
    return LyndonCoordinates(swapped.degree(), std::move(negated));
  }
  const int n = a.trace().length() + b.trace().length();
  return coordinates(lie_bracket(expand(a, n), expand(b, n)), n);
}

Polynomial LieExpander::realize(const LyndonCoordinates& coords) {
  Polynomial sum(graph_, coords.degree());
  for (const auto& [t, c] : coords.entries())
    sum += c * expand(*builder_.build(t)).with_truncation(coords.degree());
  return sum;
}

long graded_rank(const CommutationGraph& g, int k, std::size_t cap) {
  if (k < 1) throw DomainError("degree must be at least 1");
  long count = 0;
  for (const auto& t : enumerate_traces(g, k, cap))
    if (is_lyndon_element(t)) ++count;
  return count;
}

}  // namespace raaglie
