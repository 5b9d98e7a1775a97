#include "raaglie/polynomial.hpp"

#include <atomic>
#include <sstream>

#include "raaglie/errors.hpp"

namespace raaglie {

namespace limits {
namespace {
std::atomic<std::size_t> g_max_terms{1'000'000};
}
std::size_t max_polynomial_terms() { return g_max_terms.load(); }
void set_max_polynomial_terms(std::size_t n) { g_max_terms.store(n); }
}  // namespace limits

Polynomial::Polynomial(GraphPtr g, int truncation)
    : graph_(std::move(g)), truncation_(truncation) {
  if (!graph_) throw DomainError("polynomial needs a graph");
  if (truncation_ < 0) throw DomainError("truncation degree must be nonnegative");
}

Polynomial Polynomial::one(GraphPtr g, int truncation) {
  return constant(std::move(g), 1, truncation);
}

Polynomial Polynomial::constant(GraphPtr g, const mpz_class& c, int truncation) {
  Polynomial p(std::move(g), truncation);
  if (c != 0) p.terms_.emplace(Trace(), c);
  return p;
}

Polynomial Polynomial::generator(GraphPtr g, int v, int truncation) {
  Polynomial p(g, truncation);
  if (truncation < 1) throw DomainError("truncation too small for a generator");
  p.terms_.emplace(Trace::generator(*g, v), 1);
  return p;
}

Polynomial Polynomial::from_terms(GraphPtr g, int truncation, TermMap terms) {
  Polynomial p(std::move(g), truncation);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.length() > truncation)
      throw DomainError("term of degree " + std::to_string(it->first.length()) +
                        " exceeds truncation " + std::to_string(truncation));
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

mpz_class Polynomial::coeff(const Trace& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::min_positive_degree() const {
  // Term order is not graded by length, so scan everything.
  int best = -1;
  for (const auto& [t, c] : terms_)
    if (t.length() > 0 && (best < 0 || t.length() < best)) best = t.length();
  return best;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(graph_, truncation_);
  for (const auto& [t, c] : terms_)
    if (t.length() == degree) p.terms_.emplace(t, c);
  return p;
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& [t, c] : terms_)
    if (t.length() != degree) return false;
  return true;
}

Polynomial Polynomial::with_truncation(int truncation) const {
  Polynomial p(graph_, truncation);
  for (const auto& [t, c] : terms_)
    if (t.length() > truncation)
      throw DomainError("cannot lower truncation below an existing term");
    else
      p.terms_.emplace(t, c);
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_graph(graph_, other.graph_))
    throw MismatchError("polynomials over different graphs");
  if (truncation_ != other.truncation_)
    throw MismatchError("polynomials with different truncation degrees (" +
                        std::to_string(truncation_) + " vs " +
                        std::to_string(other.truncation_) + ")");
}

void Polynomial::add_scaled(const Trace& t, const mpz_class& c) {
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(graph_, truncation_);
  for (const auto& [t, c] : terms_) p.terms_.emplace(t, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [t, c] : other.terms_) add_scaled(t, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [t, c] : other.terms_) add_scaled(t, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial p(a.graph_, a.truncation_);
  const std::size_t cap = limits::max_polynomial_terms();
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      if (ta.length() + tb.length() > a.truncation_) continue;
      p.add_scaled(multiply(*a.graph_, ta, tb), ca * cb);
      if (p.terms_.size() > cap)
        throw LimitError("polynomial term cap of " + std::to_string(cap) +
                         " exceeded");
    }
  }
  return p;
}

bool Polynomial::operator==(const Polynomial& other) const {
  check_compatible(other);
  return terms_ == other.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (first) {
      if (c < 0) out << "- ";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const mpz_class a = abs(c);
    if (a != 1 || t.empty()) out << a.get_str() << (t.empty() ? "" : " ");
    if (!t.empty()) out << t.str(*graph_);
  }
  return out.str();
}

Polynomial lie_bracket(const Polynomial& a, const Polynomial& b) {
  return a * b - b * a;
}

Polynomial invert_unit(const Polynomial& a) {
  const mpz_class c0 = a.constant_term();
  if (c0 == -1) return -invert_unit(-a);
  if (c0 != 1) throw NotUnitError("constant term is not a unit");

  const int n = a.truncation();
  std::vector<Polynomial> parts;
  parts.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) parts.push_back(a.homogeneous_part(i));

  Polynomial result = Polynomial::one(a.graph(), n);
  std::vector<Polynomial> inv_parts{Polynomial::one(a.graph(), n)};
  for (int i = 1; i <= n; ++i) {
    Polynomial ci(a.graph(), n);
    for (int j = 0; j < i; ++j) ci -= inv_parts[static_cast<size_t>(j)] * parts[static_cast<size_t>(i - j)];
    result += ci;
    inv_parts.push_back(std::move(ci));
  }
  return result;
}

Polynomial pow_trunc(const Polynomial& a, unsigned long long e) {
  Polynomial result = Polynomial::one(a.graph(), a.truncation());
  Polynomial base = a;
  while (e > 0) {
    if (e & 1ull) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace raaglie
