#include "raaglie/series.hpp"

#include "raaglie/errors.hpp"
#include "raaglie/liealg.hpp"

namespace raaglie {

IntegerSeries IntegerSeries::one(int degree_bound) {
  IntegerSeries s(degree_bound);
  s[0] = 1;
  return s;
}

IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b) {
  if (a.degree_bound() != b.degree_bound())
    throw MismatchError("series with different degree bounds");
  IntegerSeries s(a.degree_bound());
  for (int i = 0; i <= a.degree_bound(); ++i) s[i] = a[i] + b[i];
  return s;
}

IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b) {
  if (a.degree_bound() != b.degree_bound())
    throw MismatchError("series with different degree bounds");
  IntegerSeries s(a.degree_bound());
  for (int i = 0; i <= a.degree_bound(); ++i)
    for (int j = 0; i + j <= a.degree_bound(); ++j) s[i + j] += a[i] * b[j];
  return s;
}

IntegerSeries IntegerSeries::inverse() const {
  const int n = degree_bound();
  if (coeff_[0] != 1 && coeff_[0] != -1)
    throw NotUnitError("series constant term is not a unit");
  IntegerSeries inv(n);
  inv[0] = coeff_[0];  // self-inverse constant
  for (int i = 1; i <= n; ++i) {
    mpz_class acc = 0;
    for (int j = 1; j <= i; ++j) acc += coeff_[static_cast<size_t>(j)] * inv[i - j];
    inv[i] = -coeff_[0] * acc;
  }
  return inv;
}

std::string IntegerSeries::str() const {
  std::string out;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (i) out += ' ';
    out += coeff_[i].get_str();
  }
  return out;
}

IntegerSeries geometric_power(int k, long r, int degree_bound) {
  if (k < 1 || r < 0) throw DomainError("bad geometric power parameters");
  IntegerSeries s(degree_bound);
  // Coefficient of t^(k*j) is binomial(r - 1 + j, j).
  mpz_class binom = 1;
  for (int j = 0; k * j <= degree_bound; ++j) {
    if (r == 0 && j > 0) break;
    s[k * j] = binom;
    binom = binom * (r + j) / (j + 1);
  }
  return s;
}

IntegerSeries clique_polynomial(const CommutationGraph& g) {
  const auto cliques = g.cliques();
  const int max_size = static_cast<int>(cliques.back().size());
  IntegerSeries s(max_size);
  for (const auto& c : cliques) s[static_cast<int>(c.size())] += 1;
  return s;
}

IntegerSeries growth_series(const CommutationGraph& g, int degree_bound) {
  if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
  const IntegerSeries cliques = clique_polynomial(g);
  IntegerSeries alternating(degree_bound);
  for (int i = 0; i <= std::min(degree_bound, cliques.degree_bound()); ++i)
    alternating[i] = (i % 2 == 0) ? cliques[i] : -cliques[i];
  return alternating.inverse();
}

WittReport witt_product_check(const CommutationGraph& g, int degree_bound,
                              std::size_t cap) {
  if (degree_bound < 1) throw DomainError("degree bound must be at least 1");
  WittReport report{IntegerSeries::one(degree_bound),
                    growth_series(g, degree_bound), {}, false};
  for (int k = 1; k <= degree_bound; ++k) {
    const long rank = graded_rank(g, k, cap);
    report.ranks.push_back(rank);
    report.lhs = report.lhs * geometric_power(k, rank, degree_bound);
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace raaglie
