#include <doctest.h>

#include "raaglie/errors.hpp"
#include "raaglie/polynomial.hpp"
#include "support/oracles.hpp"

using namespace raaglie;
using namespace raaglie::testing;

namespace {

Trace make(const GraphPtr& g, std::initializer_list<int> letters) {
  return Trace::canonical(*g, std::vector<int>(letters));
}

Polynomial from_list(const GraphPtr& g, int truncation,
                     std::initializer_list<std::pair<Trace, long>> terms) {
  Polynomial::TermMap map;
  for (const auto& [t, c] : terms) map[t] += c;
  return Polynomial::from_terms(g, truncation, std::move(map));
}

Polynomial random_homogeneous(Rng& rng, const GraphPtr& g, int degree, int truncation) {
  Polynomial::TermMap map;
  const auto traces = enumerate_traces(*g, degree);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (const auto& t : traces)
    if (rng() % 3 == 0) map[t] = coeff(rng);
  return Polynomial::from_terms(g, truncation, std::move(map));
}

Polynomial random_poly(Rng& rng, const GraphPtr& g, int truncation) {
  Polynomial p(g, truncation);
  for (int d = 0; d <= truncation; ++d) p += random_homogeneous(rng, g, d, truncation);
  return p;
}

}  // namespace

TEST_CASE("products canonicalize traces and truncate") {
  const auto mini = mini_graph();
  const auto v = [&](int i) { return Polynomial::generator(mini, i, 2); };
  CHECK(v(1) * v(2) == from_list(mini, 2, {{make(mini, {2, 1}), 1}}));

  Rng rng(1);
  const Polynomial a = random_poly(rng, mini, 2);
  CHECK(a * Polynomial::one(mini, 2) == a);
  CHECK(Polynomial::one(mini, 2) * a == a);

  const Polynomial v1 = Polynomial::generator(mini, 0, 1);
  CHECK((v1 * v1).is_zero());
}

TEST_CASE("ring laws on random samples") {
  Rng rng(42);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 12; ++iter) {
      const Polynomial a = random_poly(rng, g, 3);
      const Polynomial b = random_poly(rng, g, 3);
      const Polynomial c = random_poly(rng, g, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Polynomial(g, 3));
    }
  }
}

TEST_CASE("multiplication respects the grading") {
  Rng rng(7);
  const auto g = path4_graph();
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      const Polynomial a = random_homogeneous(rng, g, i, 4);
      const Polynomial b = random_homogeneous(rng, g, j, 4);
      const Polynomial ab = a * b;
      CHECK(ab.is_homogeneous(i + j));
    }
  }
}

TEST_CASE("lie bracket on generators") {
  const auto mini = mini_graph();
  const auto v = [&](int i, int n) { return Polynomial::generator(mini, i, n); };
  CHECK(lie_bracket(v(0, 2), v(1, 2)) ==
        from_list(mini, 2, {{make(mini, {0, 1}), 1}, {make(mini, {1, 0}), -1}}));
  CHECK(lie_bracket(v(1, 2), v(2, 2)).is_zero());  // commuting generators

  const auto free2 = edgeless_graph(2);
  const auto u = [&](int i) { return Polynomial::generator(free2, i, 3); };
  const Polynomial inner = lie_bracket(u(0), u(1)).with_truncation(3);
  CHECK(lie_bracket(u(0), inner) ==
        from_list(free2, 3,
                  {{make(free2, {0, 0, 1}), 1},
                   {make(free2, {0, 1, 0}), -2},
                   {make(free2, {1, 0, 0}), 1}}));
}

TEST_CASE("bracket is alternating and satisfies the Jacobi identity") {
  Rng rng(4242);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 10; ++iter) {
      const Polynomial a = random_homogeneous(rng, g, 1 + static_cast<int>(rng() % 2), 6);
      const Polynomial b = random_homogeneous(rng, g, 1 + static_cast<int>(rng() % 2), 6);
      const Polynomial c = random_homogeneous(rng, g, 1 + static_cast<int>(rng() % 2), 6);
      CHECK(lie_bracket(a, a).is_zero());
      const Polynomial jacobi = lie_bracket(a, lie_bracket(b, c)) +
                                lie_bracket(b, lie_bracket(c, a)) +
                                lie_bracket(c, lie_bracket(a, b));
      CHECK(jacobi.is_zero());
    }
  }
}

TEST_CASE("unit inversion") {
  const auto mini = mini_graph();
  const Polynomial v1 = Polynomial::generator(mini, 0, 3);
  const Polynomial inv = invert_unit(Polynomial::one(mini, 3) + v1);
  CHECK(inv == from_list(mini, 3,
                         {{Trace(), 1},
                          {make(mini, {0}), -1},
                          {make(mini, {0, 0}), 1},
                          {make(mini, {0, 0, 0}), -1}}));

  CHECK(invert_unit(Polynomial::one(mini, 4)) == Polynomial::one(mini, 4));

  const Polynomial prod = (Polynomial::one(mini, 2) + Polynomial::generator(mini, 0, 2)) *
                          (Polynomial::one(mini, 2) + Polynomial::generator(mini, 1, 2));
  CHECK(prod * invert_unit(prod) == Polynomial::one(mini, 2));

  CHECK_THROWS_AS(invert_unit(Polynomial(mini, 2)), NotUnitError);
  CHECK_THROWS_AS(invert_unit(Polynomial::constant(mini, 2, 2)), NotUnitError);
  CHECK_THROWS_AS(invert_unit(Polynomial::generator(mini, 0, 2)), NotUnitError);
}

TEST_CASE("round trip over random units") {
  Rng rng(31415);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 25; ++iter) {
      Polynomial u = random_poly(rng, g, 4);
      u -= Polynomial::constant(g, u.constant_term(), 4);
      const mpz_class sign = (rng() % 2 == 0) ? 1 : -1;
      u += Polynomial::constant(g, sign, 4);
      const Polynomial inv = invert_unit(u);
      CHECK(u * inv == Polynomial::one(g, 4));
      CHECK(inv * u == Polynomial::one(g, 4));
    }
  }
}

TEST_CASE("powers by repeated squaring") {
  const auto free2 = edgeless_graph(2);
  const Polynomial base = Polynomial::one(free2, 5) + Polynomial::generator(free2, 0, 5);
  Polynomial expected = Polynomial::one(free2, 5);
  for (int i = 0; i < 9; ++i) expected = expected * base;
  CHECK(pow_trunc(base, 9) == expected);
  CHECK(pow_trunc(base, 0) == Polynomial::one(free2, 5));
}

TEST_CASE("mismatched operands are rejected") {
  const auto mini = mini_graph();
  const auto free3 = edgeless_graph(3);
  const Polynomial a(mini, 2), b(mini, 3), c(free3, 2);
  CHECK_THROWS_AS(a + b, MismatchError);
  CHECK_THROWS_AS(a * c, MismatchError);
  CHECK_THROWS_AS(
      Polynomial::generator(mini, 0, 2).with_truncation(0), DomainError);
}

TEST_CASE("term cap aborts oversized products") {
  const auto g = edgeless_graph(3);
  Polynomial sum(g, 6);
  for (int v = 0; v < 3; ++v) sum += Polynomial::generator(g, v, 6);
  const std::size_t saved = limits::max_polynomial_terms();
  limits::set_max_polynomial_terms(50);
  CHECK_THROWS_AS(pow_trunc(sum, 6), LimitError);
  limits::set_max_polynomial_terms(saved);
  CHECK_NOTHROW(pow_trunc(sum, 6));
}

TEST_CASE("construction drops zero coefficients") {
  const auto mini = mini_graph();
  const Polynomial p = from_list(mini, 2, {{make(mini, {0}), 3}, {make(mini, {1}), 0}});
  CHECK(p.terms().size() == 1);
  CHECK(p.coeff(make(mini, {1})) == 0);
  CHECK_THROWS_AS(from_list(mini, 1, {{make(mini, {0, 1}), 1}}), DomainError);
}
