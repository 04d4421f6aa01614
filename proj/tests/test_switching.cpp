#include <doctest.h>

#include <random>

#include "sgraph/families.hpp"
#include "sgraph/switching.hpp"
#include "support.hpp"

using namespace sgraph;

TEST_CASE("switch sets") {
  const SwitchSet s({3, 1, 3});
  CHECK(s.vertices() == std::vector<Vertex>{1, 3});
  CHECK(SwitchSet::from_mask(4, 0b1010) == s);
  CHECK(s.indicator(4) == std::vector<bool>{false, true, false, true});
  CHECK(SwitchSet().empty());
}

TEST_CASE("switch_at matches the definition") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const SignedGraph g = sgtest::random_graph(rng, 1, 10);
    const SwitchSet u(sgtest::random_subset(rng, g.order()));
    const SignedGraph s = switch_at(g, u);
    CHECK(s == sgtest::switch_by_definition(g, u.indicator(g.order())));
    CHECK(switch_at(s, u) == g);
    CHECK(same_underlying(s, g));
  }
  SignedGraph g(2);
  g.set_edge(0, 1, Sign::Positive);
  CHECK_THROWS(switch_at(g, SwitchSet({5})));
}

TEST_CASE("balance on small examples") {
  SignedGraph tri(3);
  tri.set_edge(0, 1, Sign::Negative).set_edge(0, 2, Sign::Positive).set_edge(1, 2, Sign::Positive);
  const auto r = is_balanced(tri);
  CHECK_FALSE(r.balanced);
  CHECK(r.negative_cycle.size() == 3);

  SignedGraph path(3);
  path.set_edge(0, 1, Sign::Negative).set_edge(1, 2, Sign::Negative);
  const auto p = is_balanced(path);
  REQUIRE(p.balanced);
  for (const auto& e : path.edges()) CHECK(p.bisigning[e.u] * p.bisigning[e.v] == e.sign);

  CHECK(is_balanced(SignedGraph(0)).balanced);
  CHECK_FALSE(is_balanced(complete_signed(3, Sign::Negative)).balanced);
  CHECK(is_balanced(complete_signed(4, Sign::Positive)).balanced);
}

TEST_CASE("balance witnesses and oracle agreement") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2000; ++trial) {
    const SignedGraph g = sgtest::random_graph(rng, 1, 9);
    const auto r = is_balanced(g);
    CHECK(r.balanced == sgtest::balanced_by_search(g));
    if (r.balanced) {
      for (const auto& e : g.edges()) CHECK(r.bisigning[e.u] * r.bisigning[e.v] == e.sign);
    } else {
      const auto& c = r.negative_cycle;
      REQUIRE(c.size() >= 3);
      Sign s = Sign::Positive;
      std::set<Vertex> distinct(c.begin(), c.end());
      CHECK(distinct.size() == c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto e = g.sign(c[i], c[(i + 1) % c.size()]);
        REQUIRE(e.has_value());
        s = s * *e;
      }
      CHECK(s == Sign::Negative);
    }
    CHECK(r.balanced == switching_equivalent(g, underlying(g)));
  }
}

TEST_CASE("forest normal form") {
  const SignedGraph g = gamma1(6);
  const auto forest = bfs_forest(g);
  CHECK(forest.size() == 5);
  CHECK(forest.front() == ForestEdge{0, 1});
  const NormalForm nf = forest_normal_form(g);
  for (const auto& fe : nf.forest) CHECK(nf.normalized.sign(fe.u, fe.v) == Sign::Positive);
  CHECK(nf.normalized == switch_at(g, nf.switch_set));
  CHECK(nf.cotree.size() == g.edge_count() - forest.size());

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const SignedGraph h = sgtest::random_graph(rng, 1, 10);
    const NormalForm a = forest_normal_form(h);
    CHECK(a.forest.size() == h.order() - component_count(h));
    const SignedGraph s = switch_at(h, SwitchSet(sgtest::random_subset(rng, h.order())));
    CHECK(forest_normal_form(s).normalized == a.normalized);
  }
}

TEST_CASE("switching equivalence is an equivalence relation") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const SignedGraph a = sgtest::random_graph(rng, 1, 8);
    auto resign = [&](const SignedGraph& g) {
      SignedGraph out = g;
      for (const auto& e : g.edges())
        if (rng() % 4 == 0) out.set_edge(e.u, e.v, -e.sign);
      return out;
    };
    const SignedGraph b = rng() & 1U ? switch_at(a, SwitchSet(sgtest::random_subset(rng, a.order()))) : resign(a);
    const SignedGraph c = rng() & 1U ? switch_at(b, SwitchSet(sgtest::random_subset(rng, a.order()))) : resign(b);
    CHECK(switching_equivalent(a, a));
    CHECK(switching_equivalent(a, b) == switching_equivalent(b, a));
    if (switching_equivalent(a, b) && switching_equivalent(b, c)) CHECK(switching_equivalent(a, c));
    CHECK(switching_equivalent(a, b) == (sgtest::switching_orbit_min(a) == sgtest::switching_orbit_min(b)));
  }
  SignedGraph x(3), y(3);
  x.set_edge(0, 1, Sign::Positive);
  y.set_edge(1, 2, Sign::Positive);
  CHECK_THROWS_AS(switching_equivalent(x, y), std::invalid_argument);
}

TEST_CASE("switching isomorphism against exhaustive search") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const SignedGraph a = sgtest::random_graph(rng, n, 0.6, 0.4);
    SignedGraph b;
    if (rng() & 1U) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      b = switch_at(permute(a, perm), SwitchSet(sgtest::random_subset(rng, n)));
    } else {
      b = sgtest::random_graph(rng, n, 0.6, 0.4);
    }
    const auto pi = switching_isomorphic(a, b);
    CHECK(pi.has_value() == sgtest::switching_isomorphic_brute(a, b));
    if (pi) CHECK(switching_equivalent(permute(a, *pi), b));
  }
  CHECK_THROWS(switching_isomorphic(SignedGraph(3), SignedGraph(4)));
}

TEST_CASE("gamma1 relabelled and switched is recognised") {
  const SignedGraph g = gamma1(7);
  const std::vector<Vertex> perm{6, 5, 4, 3, 2, 1, 0};
  const SignedGraph h = switch_at(permute(g, perm), SwitchSet({0, 2, 3}));
  CHECK(switching_isomorphic(h, g).has_value());
  CHECK_FALSE(switching_isomorphic(gamma2(7), g).has_value());
}
