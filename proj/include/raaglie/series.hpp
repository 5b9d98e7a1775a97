#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "raaglie/graph.hpp"
#include "raaglie/trace.hpp"

namespace raaglie {

// Dense univariate integer series truncated at a fixed degree.  This is a
// deliberately separate little kernel, independent of the trace algebra,
// so that the growth cross-checks do not share code with what they check.
class IntegerSeries {
public:
  explicit IntegerSeries(int degree_bound)
      : coeff_(static_cast<size_t>(degree_bound) + 1, 0) {}
  static IntegerSeries one(int degree_bound);

  int degree_bound() const { return static_cast<int>(coeff_.size()) - 1; }
  const mpz_class& operator[](int i) const { return coeff_[static_cast<size_t>(i)]; }
  mpz_class& operator[](int i) { return coeff_[static_cast<size_t>(i)]; }
  const std::vector<mpz_class>& coefficients() const { return coeff_; }

  friend IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b);

  // Multiplicative inverse; the constant term must be +-1.
  IntegerSeries inverse() const;

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

  std::string str() const;  // "1 3 8 21"

private:
  std::vector<mpz_class> coeff_;
};

// (1 - t^k)^(-r) modulo t^(bound+1), expanded with exact binomials.
IntegerSeries geometric_power(int k, long r, int degree_bound);

// Coefficient of t^k counts the k-cliques; natural length.
IntegerSeries clique_polynomial(const CommutationGraph& g);

// Number of traces of each length 0..degree_bound: the inverse of the
// alternating-sign clique polynomial.
IntegerSeries growth_series(const CommutationGraph& g, int degree_bound);

// Cross-check tying the Lyndon ranks to the growth of the trace monoid:
// the product over k of (1 - t^k)^(-rank_k) must reproduce the growth
// series.  A mismatch indicates a defect in trace or Lyndon enumeration,
// not in this module.
struct WittReport {
  IntegerSeries lhs, rhs;
  std::vector<long> ranks;  // ranks[k-1] = rank at degree k
  bool equal = false;
};
WittReport witt_product_check(const CommutationGraph& g, int degree_bound,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace raaglie
