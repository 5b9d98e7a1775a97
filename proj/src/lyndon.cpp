#include "raaglie/lyndon.hpp"

#include <algorithm>

#include "raaglie/errors.hpp"

namespace raaglie {

bool is_lyndon_word(std::span<const std::uint8_t> w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    auto suffix = w.subspan(i);
    if (!std::lexicographical_compare(w.begin(), w.end(),
                                      suffix.begin(), suffix.end()))
      return false;
  }
  return true;
}

bool is_lyndon_element(const Trace& m) { return is_lyndon_word(m.word()); }

std::pair<Trace, Trace> standard_factorization(const CommutationGraph& g,
                                               const Trace& m) {
  if (!is_lyndon_element(m))
    throw NotLyndonError("'" + m.str(g) + "' is not a Lyndon element");
  if (m.length() < 2)
    throw DomainError("standard factorization needs length >= 2");

  const auto& w = m.word();
  bool found = false;
  std::pair<Trace, Trace> best;
  for (size_t i = 1; i < w.size(); ++i) {
    // A prefix of a canonical word is canonical.
    Trace left = Trace::from_canonical_word({w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)});
    Trace right = Trace::from_canonical_word(
        canonicalize_word(g, std::span(w).subspan(i)));
    if (!is_lyndon_element(left) || !is_lyndon_element(right)) continue;
    if (!found || right < best.second) {
      best = {std::move(left), std::move(right)};
      found = true;
    }
  }
  if (!found)
    throw DomainError("no Lyndon split of '" + m.str(g) + "'");  // unreachable
  return best;
}

LyndonTreePtr LyndonTree::leaf(Trace t) {
  auto node = std::make_shared<LyndonTree>();
  node->trace_ = std::move(t);
  return node;
}

LyndonTreePtr LyndonTree::node(Trace t, LyndonTreePtr left, LyndonTreePtr right) {
  auto node = std::make_shared<LyndonTree>();
  node->trace_ = std::move(t);
  node->left_ = std::move(left);
  node->right_ = std::move(right);
  return node;
}

std::string LyndonTree::bracket_str(const CommutationGraph& g) const {
  if (is_leaf()) return g.label(generator());
  return "[" + left_->bracket_str(g) + "," + right_->bracket_str(g) + "]";
}

LyndonTreePtr LyndonTreeBuilder::build(const Trace& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  LyndonTreePtr result;
  if (m.length() == 1) {
    result = LyndonTree::leaf(m);
  } else {
    auto [x, y] = standard_factorization(graph_, m);
    auto left = build(x);
    auto right = build(y);
    result = LyndonTree::node(m, std::move(left), std::move(right));
  }
  cache_.emplace(m, result);
  return result;
}

std::vector<std::vector<LyndonTreePtr>> enumerate_lyndon(
    const CommutationGraph& g, int max_len, std::size_t cap) {
  if (max_len < 1) throw DomainError("max length must be at least 1");
  LyndonTreeBuilder builder(g);
  std::vector<std::vector<LyndonTreePtr>> out(static_cast<size_t>(max_len) + 1);
  for (int n = 1; n <= max_len; ++n)
    for (const auto& t : enumerate_traces(g, n, cap))
      if (is_lyndon_element(t)) out[static_cast<size_t>(n)].push_back(builder.build(t));
  return out;
}

}  // namespace raaglie
