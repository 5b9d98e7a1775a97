#include "raaglie/magnus.hpp"

#include "raaglie/errors.hpp"

namespace raaglie {

MagnusExpansion magnus(const GraphPtr& g, const GroupWord& w, int truncation) {
  if (truncation < 1) throw DomainError("truncation must be at least 1");
  Polynomial result = Polynomial::one(g, truncation);
  for (const auto& s : w.syllables()) {
    Polynomial base = Polynomial::one(g, truncation) +
                      Polynomial::generator(g, s.vertex, truncation);
    if (s.exponent < 0) base = invert_unit(base);
    const auto mag = static_cast<unsigned long long>(s.exponent);
    const unsigned long long e = s.exponent < 0 ? 0ull - mag : mag;
    result = result * pow_trunc(base, e);
  }
  return MagnusExpansion{w, std::move(result)};
}

std::optional<Derivation> derivation(const GraphPtr& g, const GroupWord& w,
                                     int truncation) {
  const Polynomial value = magnus(g, w, truncation).value;
  const int k = value.min_positive_degree();
  if (k < 0) return std::nullopt;
  return Derivation{k, value.homogeneous_part(k)};
}

FiltrationDegree filtration_degree(const GraphPtr& g, const GroupWord& w,
                                   int truncation) {
  const auto d = derivation(g, w, truncation);
  if (!d) return FiltrationDegree{truncation + 1, false};
  return FiltrationDegree{d->degree, true};
}

LyndonCoordinates lcs_coordinates(LieExpander& expander, const GroupWord& w,
                                  int k, int truncation) {
  if (k < 1) throw DomainError("degree must be at least 1");
  if (truncation < k) throw DomainError("truncation must be at least the degree");
  const Polynomial value = magnus(expander.graph(), w, truncation).value;
  for (int l = 1; l < k; ++l)
    if (!value.homogeneous_part(l).is_zero())
      throw NotInFiltrationError("word lies at filtration level " +
                                 std::to_string(l) + " < " + std::to_string(k));
  return expander.coordinates(value.homogeneous_part(k), k);
}

LyndonCoordinates lcs_coordinates(const GraphPtr& g, const GroupWord& w,
                                  int k, int truncation) {
  LieExpander expander(g);
  return lcs_coordinates(expander, w, k, truncation);
}

GroupWord commutator_word(const LyndonTree& t) {
  if (t.is_leaf()) return GroupWord({{t.generator(), 1}});
  return commutator(commutator_word(*t.left()), commutator_word(*t.right()));
}

}  // namespace raaglie
