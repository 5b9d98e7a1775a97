#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>

#include "raaglie/graph.hpp"
#include "raaglie/trace.hpp"

namespace raaglie {

namespace limits {
std::size_t max_polynomial_terms();
void set_max_polynomial_terms(std::size_t n);
}  // namespace limits

// An element of the trace algebra truncated at a fixed degree: a finitely
// supported integer combination of traces of length <= truncation, graded
// by trace length.  Coefficients are exact big integers.  Zero
// coefficients are never stored, so equality is structural; term iteration
// follows the canonical trace order.
//
// Every binary operation requires both operands to carry the same graph
// and the same truncation degree; products of traces whose combined length
// exceeds the truncation are discarded.
class Polynomial {
public:
  using TermMap = std::map<Trace, mpz_class>;

  Polynomial(GraphPtr g, int truncation);  // zero
  static Polynomial one(GraphPtr g, int truncation);
  static Polynomial constant(GraphPtr g, const mpz_class& c, int truncation);
  static Polynomial generator(GraphPtr g, int v, int truncation);
  static Polynomial from_terms(GraphPtr g, int truncation, TermMap terms);

  const GraphPtr& graph() const { return graph_; }
  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  mpz_class coeff(const Trace& t) const;
  mpz_class constant_term() const { return coeff(Trace()); }

  // Lowest degree with a nonzero homogeneous part; -1 for the zero
  // polynomial.  The zero constant term does not count.
  int min_positive_degree() const;
  Polynomial homogeneous_part(int degree) const;
  bool is_homogeneous(int degree) const;

  // Same terms under a different truncation degree; lowering the degree
  // requires that no term exceeds it.
  Polynomial with_truncation(int truncation) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
  friend Polynomial operator*(const mpz_class& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

  // "3 v1 v1 - 2 v2" style rendering; "0" when zero.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& out, const Polynomial& p) {
    return out << p.str();
  }

private:
  void check_compatible(const Polynomial& other) const;
  void add_scaled(const Trace& t, const mpz_class& c);

  GraphPtr graph_;
  int truncation_ = 0;
  TermMap terms_;
};

// ab - ba.
Polynomial lie_bracket(const Polynomial& a, const Polynomial& b);

// Inverse of a polynomial with constant term +-1, modulo degrees above the
// truncation: with a = 1 + sum a_i the inverse is 1 + sum c_i where
// c_i = -(c_0 a_i + c_1 a_{i-1} + ... + c_{i-1} a_1).
Polynomial invert_unit(const Polynomial& a);

// a^e by repeated squaring, e >= 0.
Polynomial pow_trunc(const Polynomial& a, unsigned long long e);

}  // namespace raaglie
