#include <doctest.h>

#include <algorithm>

#include "raaglie/errors.hpp"
#include "raaglie/trace.hpp"
#include "support/oracles.hpp"

using namespace raaglie;
using namespace raaglie::testing;

namespace {
Trace make(const GraphPtr& g, std::initializer_list<int> letters) {
  return Trace::canonical(*g, std::vector<int>(letters));
}
}  // namespace

TEST_CASE("canonical form picks the largest representative") {
  const auto mini = mini_graph();
  // std(v1 v2 v3) = v1 v3 v2
  CHECK(make(mini, {0, 1, 2}).word() == Word{0, 2, 1});
  CHECK(make(mini, {0, 1, 2}).str(*mini) == "v1 v3 v2");

  // nothing commutes: words are untouched
  const auto free3 = edgeless_graph(3);
  CHECK(make(free3, {1, 0, 2, 0}).word() == Word{1, 0, 2, 0});

  // a commuting pair sorts descending
  const auto k2 = complete_graph(2);
  CHECK(make(k2, {0, 1}).word() == Word{1, 0});
}

TEST_CASE("canonical form matches the brute-force maximum") {
  Rng rng(12345);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int len = 0; len <= 8; ++len) {
      for (int iter = 0; iter < 30; ++iter) {
        const Word w = random_word(rng, *g, len);
        const Word canonical = canonicalize_word(*g, w);
        CHECK(canonical == lex_max_representative(*g, w));
        // constant on the whole commutation class, and idempotent
        for (const auto& rep : all_representatives(*g, w))
          CHECK(canonicalize_word(*g, rep) == canonical);
        CHECK(canonicalize_word(*g, canonical) == canonical);
      }
    }
  }
}

TEST_CASE("parse reads whitespace-separated names") {
  const auto mini = mini_graph();
  CHECK(Trace::parse(*mini, "v1 v2 v3") == make(mini, {0, 1, 2}));
  CHECK(Trace::parse(*mini, "  v1   v3 v2 ") == make(mini, {0, 1, 2}));
  CHECK(Trace::parse(*mini, "1") == Trace());
  CHECK(Trace::parse(*mini, "") == Trace());
  CHECK_THROWS_AS(Trace::parse(*mini, "v1 bogus"), ParseError);
}

TEST_CASE("multiplication concatenates and re-canonicalizes") {
  const auto mini = mini_graph();
  CHECK(multiply(*mini, make(mini, {0, 2}), make(mini, {1})) == make(mini, {0, 1, 2}));
  CHECK(multiply(*mini, Trace(), make(mini, {1, 2})) == make(mini, {1, 2}));
  CHECK(multiply(*mini, make(mini, {1}), make(mini, {2})).word() == Word{2, 1});
}

TEST_CASE("length and multidegree are additive") {
  Rng rng(777);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 50; ++iter) {
      const Trace a = Trace::canonical(*g, std::vector<int>{});
      const Word wa = random_word(rng, *g, 4), wb = random_word(rng, *g, 3);
      const Trace ta = Trace::from_canonical_word(canonicalize_word(*g, wa));
      const Trace tb = Trace::from_canonical_word(canonicalize_word(*g, wb));
      const Trace tab = multiply(*g, ta, tb);
      CHECK(tab.length() == ta.length() + tb.length());
      const auto da = ta.multidegree(*g), db = tb.multidegree(*g),
                 dab = tab.multidegree(*g);
      for (int v = 0; v < g->vertex_count(); ++v)
        CHECK(dab[v] == da[v] + db[v]);
      CHECK(a.length() == 0);
    }
  }
}

TEST_CASE("multiplication is associative") {
  Rng rng(31337);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 60; ++iter) {
      const auto t = [&](int len) {
        return Trace::from_canonical_word(
            canonicalize_word(*g, random_word(rng, *g, len)));
      };
      const Trace a = t(3), b = t(2), c = t(4);
      CHECK(multiply(*g, multiply(*g, a, b), c) == multiply(*g, a, multiply(*g, b, c)));
    }
  }
}

TEST_CASE("trace order") {
  const auto mini = mini_graph();
  CHECK(make(mini, {0}) < make(mini, {0, 1}));  // prefix comes first
  CHECK(make(mini, {0, 1}) == make(mini, {0, 1}));
  // std forms v1v3v2 vs v2v1v3
  CHECK(make(mini, {0, 1, 2}) < make(mini, {1, 0, 2}));
}

TEST_CASE("order laws under multiplication") {
  Rng rng(2024);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 80; ++iter) {
      const auto t = [&](int len) {
        return Trace::from_canonical_word(
            canonicalize_word(*g, random_word(rng, *g, len)));
      };
      const Trace a = t(1 + static_cast<int>(rng() % 4));
      const Trace b = t(1 + static_cast<int>(rng() % 4));
      const Trace c = t(1 + static_cast<int>(rng() % 4));
      const auto cat = [](const Trace& x, const Trace& y) {
        Word w = x.word();
        w.insert(w.end(), y.word().begin(), y.word().end());
        return w;
      };
      // both laws compare concatenated canonical words, not products:
      // the product can re-canonicalize past the boundary
      if (b < c) CHECK(cat(a, b) < cat(a, c));
      if (a.length() >= b.length() && a < b) CHECK(cat(a, c) < cat(b, c));
      // canonical words majorize products of canonical words
      CHECK(multiply(*g, a, b).word() >= cat(a, b));
    }
  }
}

TEST_CASE("supp, init, and term") {
  const auto mini = mini_graph();
  CHECK(init_set(*mini, make(mini, {0, 1, 2})) == mask({0}));
  const Trace single = make(mini, {1});
  CHECK(supp(single) == mask({1}));
  CHECK(init_set(*mini, single) == mask({1}));
  CHECK(term_set(*mini, single) == mask({1}));
  const auto k3 = complete_graph(3);
  CHECK(init_set(*k3, make(k3, {0, 1, 2})) == mask({0, 1, 2}));
  CHECK(term_set(*k3, make(k3, {0, 1, 2})) == mask({0, 1, 2}));
}

TEST_CASE("init and term match brute force and form cliques") {
  Rng rng(99);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 60; ++iter) {
      const Trace m = Trace::from_canonical_word(
          canonicalize_word(*g, random_word(rng, *g, 1 + static_cast<int>(rng() % 6))));
      const VertexSet init = init_set(*g, m), term = term_set(*g, m);
      CHECK(init == brute_force_init(*g, m));
      CHECK(term == brute_force_term(*g, m));
      for (VertexSet s : {init, term}) {
        const auto vs = vertex_list(s);
        for (size_t i = 0; i < vs.size(); ++i)
          for (size_t j = i + 1; j < vs.size(); ++j)
            CHECK(g->adjacent(vs[i], vs[j]));
      }
    }
  }
}

TEST_CASE("zeta collects the support and its non-commuting neighbors") {
  const auto mini = mini_graph();
  CHECK(zeta(*mini, make(mini, {1})) == mask({0, 1}));   // v3 commutes with v2
  CHECK(zeta(*mini, make(mini, {0})) == mask({0, 1, 2}));
  const auto free3 = edgeless_graph(3);
  CHECK(zeta(*free3, make(free3, {2})) == mask({0, 1, 2}));
  CHECK(zeta(*free3, Trace()) == 0);
}

TEST_CASE("square-freeness") {
  const auto mini = mini_graph();
  CHECK_FALSE(is_square_free(*mini, make(mini, {0, 0})));
  CHECK(is_square_free(*mini, make(mini, {0, 1, 2})));
  // v2 v3 v2: the two v2 occurrences meet across the commuting v3
  CHECK_FALSE(is_square_free(*mini, make(mini, {1, 2, 1})));

  Rng rng(555);
  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int iter = 0; iter < 80; ++iter) {
      const Trace m = Trace::from_canonical_word(
          canonicalize_word(*g, random_word(rng, *g, static_cast<int>(rng() % 7))));
      CHECK(is_square_free(*g, m) == brute_force_square_free(*g, m));
    }
  }
}

TEST_CASE("trace enumeration") {
  const auto mini = mini_graph();
  CHECK(enumerate_traces(*mini, 0) == std::vector<Trace>{Trace()});
  CHECK(enumerate_traces(*mini, 2).size() == 8);
  CHECK(enumerate_traces(*mini, 3).size() == 21);

  for (const auto& [name, g] : all_test_graphs()) {
    CAPTURE(name);
    for (int n = 0; n <= 5; ++n) {
      const auto traces = enumerate_traces(*g, n);
      CHECK(std::is_sorted(traces.begin(), traces.end()));
      std::set<Word> words;
      for (const auto& t : traces) {
        CHECK(t.length() == n);
        CHECK(canonicalize_word(*g, t.word()) == t.word());
        words.insert(t.word());
      }
      CHECK(words.size() == traces.size());
      CHECK(words == brute_force_traces(*g, n));
    }
  }
}

TEST_CASE("trace enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_traces(*edgeless_graph(3), 5, 10), LimitError);
}
