#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "raaglie/trace.hpp"

namespace raaglie {

// True iff w is nonempty and strictly smaller than each of its proper
// nonempty suffixes.
bool is_lyndon_word(std::span<const std::uint8_t> w);

// A trace is a Lyndon element iff its canonical word is a Lyndon word.
bool is_lyndon_element(const Trace& m);

// Splits a Lyndon element of length >= 2 into the pair of Lyndon elements
// (x, y) with m = x*y whose right factor y is minimal in trace order.
// Every such pair appears as a split of the canonical word, and the pair
// is unique because traces are cancellative.
std::pair<Trace, Trace> standard_factorization(const CommutationGraph& g,
                                               const Trace& m);

class LyndonTree;
using LyndonTreePtr = std::shared_ptr<const LyndonTree>;

// A Lyndon element together with the bracketing induced by recursively
// taking standard factorizations.
class LyndonTree {
public:
  static LyndonTreePtr leaf(Trace t);
  static LyndonTreePtr node(Trace t, LyndonTreePtr left, LyndonTreePtr right);

  const Trace& trace() const { return trace_; }
  bool is_leaf() const { return left_ == nullptr; }
  const LyndonTreePtr& left() const { return left_; }
  const LyndonTreePtr& right() const { return right_; }
  int generator() const { return trace_.word()[0]; }

  // Nested bracket rendering, e.g. "[[v1,v3],v2]".
  std::string bracket_str(const CommutationGraph& g) const;

private:
  Trace trace_;
  LyndonTreePtr left_, right_;
};

// Builds bracketing trees, sharing subtrees between calls.
class LyndonTreeBuilder {
public:
  explicit LyndonTreeBuilder(const CommutationGraph& g) : graph_(g) {}
  LyndonTreePtr build(const Trace& m);  // throws NotLyndonError

private:
  const CommutationGraph& graph_;
  std::map<Trace, LyndonTreePtr> cache_;
};

// All Lyndon elements of length <= max_len with their bracketings.
// Entry [n] lists the elements of length n in ascending trace order
// (entry [0] is empty).
std::vector<std::vector<LyndonTreePtr>> enumerate_lyndon(
    const CommutationGraph& g, int max_len,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace raaglie
