#include "raaglie/trace.hpp"

#include <sstream>

#include "raaglie/errors.hpp"

namespace raaglie {

std::vector<std::uint8_t> canonicalize_word(const CommutationGraph& g,
                                            std::span<const std::uint8_t> letters) {
  std::vector<std::uint8_t> rest(letters.begin(), letters.end());
  std::vector<std::uint8_t> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // The movable-to-front letters are those whose first occurrence is
    // preceded only by commuting letters; take the largest.
    VertexSet blocked = 0;
    int best = -1;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const int v = rest[i];
      if (!((blocked >> v) & 1u) && v > best) {
        best = v;
        best_pos = i;
      }
      blocked |= g.blockers(v);
      if (blocked == g.all_vertices()) break;
    }
    out.push_back(static_cast<std::uint8_t>(best));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }
  return out;
}

Trace Trace::canonical(const CommutationGraph& g, std::span<const int> letters) {
  std::vector<std::uint8_t> w;
  w.reserve(letters.size());
  for (int v : letters) {
    if (v < 0 || v >= g.vertex_count())
      throw ParseError("vertex index " + std::to_string(v) + " out of range");
    w.push_back(static_cast<std::uint8_t>(v));
  }
  Trace t;
  t.word_ = canonicalize_word(g, w);
  return t;
}

Trace Trace::generator(const CommutationGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw ParseError("vertex index " + std::to_string(v) + " out of range");
  Trace t;
  t.word_.push_back(static_cast<std::uint8_t>(v));
  return t;
}

Trace Trace::parse(const CommutationGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string name;
  while (in >> name) tokens.push_back(name);
  if (tokens.size() == 1 && tokens[0] == "1" && g.find_vertex("1") < 0)
    return Trace();
  std::vector<int> letters;
  for (const auto& tok : tokens) {
    const int v = g.find_vertex(tok);
    if (v < 0) throw ParseError("unknown vertex '" + tok + "'");
    letters.push_back(v);
  }
  return canonical(g, letters);
}

Trace Trace::from_canonical_word(std::vector<std::uint8_t> word) {
  Trace t;
  t.word_ = std::move(word);
  return t;
}

std::vector<int> Trace::multidegree(const CommutationGraph& g) const {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (auto v : word_) ++deg[v];
  return deg;
}

std::string Trace::str(const CommutationGraph& g) const {
  if (word_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += g.label(word_[i]);
  }
  return out;
}

Trace multiply(const CommutationGraph& g, const Trace& a, const Trace& b) {
  std::vector<std::uint8_t> w;
  w.reserve(a.word().size() + b.word().size());
  w.insert(w.end(), a.word().begin(), a.word().end());
  w.insert(w.end(), b.word().begin(), b.word().end());
  return Trace::from_canonical_word(canonicalize_word(g, w));
}

VertexSet supp(const Trace& m) {
  VertexSet s = 0;
  for (auto v : m.word()) s |= 1u << v;
  return s;
}

VertexSet init_set(const CommutationGraph& g, const Trace& m) {
  VertexSet init = 0, blocked = 0;
  for (auto v : m.word()) {
    if (!((blocked >> v) & 1u)) init |= 1u << v;
    blocked |= g.blockers(v);
  }
  return init;
}

VertexSet term_set(const CommutationGraph& g, const Trace& m) {
  VertexSet term = 0, blocked = 0;
  for (auto it = m.word().rbegin(); it != m.word().rend(); ++it) {
    if (!((blocked >> *it) & 1u)) term |= 1u << *it;
    blocked |= g.blockers(*it);
  }
  return term;
}

VertexSet zeta(const CommutationGraph& g, const Trace& m) {
  const VertexSet s = supp(m);
  VertexSet z = s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s & g.blockers(v) & ~(1u << v)) z |= 1u << v;
  return z;
}

bool is_square_free(const CommutationGraph& g, const Trace& m) {
  const auto& w = m.word();
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == w[i]) {
        bool meet = true;
        for (size_t t = i + 1; t < j && meet; ++t)
          meet = g.adjacent(w[i], w[t]);
        if (meet) return false;
        break;  // only the next occurrence matters
      }
    }
  }
  return true;
}

namespace {

void enumerate_rec(const CommutationGraph& g, int length, std::size_t cap,
                   std::vector<std::uint8_t>& prefix, std::vector<Trace>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    if (out.size() >= cap)
      throw LimitError("trace enumeration exceeded cap of " + std::to_string(cap));
    out.push_back(Trace::from_canonical_word(prefix));
    return;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    prefix.push_back(static_cast<std::uint8_t>(v));
    // Canonical words are closed under prefixes, so rechecking the whole
    // prefix prunes every non-canonical branch.
    if (canonicalize_word(g, prefix) == prefix)
      enumerate_rec(g, length, cap, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Trace> enumerate_traces(const CommutationGraph& g, int length,
                                    std::size_t cap) {
  if (length < 0) throw DomainError("trace length must be nonnegative");
  std::vector<Trace> out;
  std::vector<std::uint8_t> prefix;
  enumerate_rec(g, length, cap, prefix, out);
  return out;
}

}  // namespace raaglie
