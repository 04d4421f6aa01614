#pragma once

// Random inputs and brute-force reference implementations shared by the
// test suites. Nothing here calls the library routine it is checking.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sgraph/polynomial.hpp"
#include "sgraph/signed_graph.hpp"

namespace sgtest {

using sgraph::BigInt;
using sgraph::IntPolynomial;
using sgraph::Sign;
using sgraph::SignedGraph;
using sgraph::Vertex;

inline SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, double negative) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SignedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < density) g.set_edge(u, v, unit(rng) < negative ? Sign::Negative : Sign::Positive);
  return g;
}

inline SignedGraph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = order(rng);
  return random_graph(rng, n, 0.2 + 0.7 * unit(rng), unit(rng));
}

inline std::vector<Vertex> random_subset(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1U) out.push_back(v);
  return out;
}

/// Switching straight from the definition.
inline SignedGraph switch_by_definition(const SignedGraph& g, const std::vector<bool>& in_u) {
  SignedGraph out(g.order());
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, in_u[e.u] != in_u[e.v] ? -e.sign : e.sign);
  return out;
}

/// Upper-triangle sign word: 0 non-edge, 1 positive, 2 negative, pairs in
/// row-major order, base 3.
inline std::uint64_t sign_word(const SignedGraph& g) {
  std::uint64_t w = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int e = g.entry(u, v);
      w = w * 3 + (e == 0 ? 0 : e > 0 ? 1 : 2);
    }
  return w;
}

/// Minimum sign word over all 2^n switchings.
inline std::uint64_t switching_orbit_min(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> in_u(n);
    for (Vertex v = 0; v < n; ++v) in_u[v] = (mask >> v) & 1U;
    best = std::min(best, sign_word(switch_by_definition(g, in_u)));
  }
  return best;
}

/// Number of switching orbits among all 2^m signings of g's underlying
/// graph. A signing is a bitmask over g.edges() (bit set = negative);
/// switching at U flips exactly the edges of the cut (U, V \ U).
inline std::size_t orbit_count(const SignedGraph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.order();
  std::vector<std::uint64_t> cuts;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
    std::uint64_t cut = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (((u >> edges[i].u) & 1U) != ((u >> edges[i].v) & 1U)) cut |= std::uint64_t{1} << i;
    cuts.push_back(cut);
  }
  std::set<std::uint64_t> orbits;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    std::uint64_t best = s;
    for (std::uint64_t c : cuts) best = std::min(best, s ^ c);
    orbits.insert(best);
  }
  return orbits.size();
}

/// Balanced iff some switching makes every edge positive.
inline bool balanced_by_search(const SignedGraph& g) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      const bool cut = ((mask >> e.u) & 1U) != ((mask >> e.v) & 1U);
      if ((e.sign == Sign::Negative) != cut) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

struct BruteCycle {
  std::vector<Vertex> vertices;  // minimum first, then the smaller neighbour
  Sign sign;
  bool operator<(const BruteCycle& o) const {
    return vertices.size() != o.vertices.size() ? vertices.size() < o.vertices.size() : vertices < o.vertices;
  }
};

/// Every simple cycle, found by trying every ordered vertex sequence.
inline std::vector<BruteCycle> all_cycles(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<BruteCycle> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) sub.push_back(v);
    if (sub.size() < 3) continue;
    // sub[0] is the minimum; permute the rest
    std::vector<Vertex> rest(sub.begin() + 1, sub.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<Vertex> cyc{sub[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      int sign = 1;
      bool ok = true;
      for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
        const int e = g.entry(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (e == 0) ok = false;
        sign *= e;
      }
      if (ok) out.push_back({cyc, sign > 0 ? Sign::Positive : Sign::Negative});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(xI - A) from sums of principal minors: the coefficient of x^(n-k)
/// is (-1)^k times the sum of all k x k principal minors of A.
inline IntPolynomial charpoly_by_minors(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<BigInt> ek(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.push_back(v);
    std::vector<std::vector<BigInt>> m(s.size(), std::vector<BigInt>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = g.entry(s[i], s[j]);
    ek[s.size()] += bareiss_det(m);
  }
  std::vector<BigInt> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 ? -ek[k] : ek[k]);
  return IntPolynomial(c);
}

/// Switching isomorphism by trying every permutation and every switching.
inline bool switching_isomorphic_brute(const SignedGraph& a, const SignedGraph& b) {
  const std::size_t n = a.order();
  if (b.order() != n || a.edge_count() != b.edge_count()) return false;
  const std::uint64_t target = switching_orbit_min(b);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    SignedGraph p(n);
    for (const auto& e : a.edges()) p.set_edge(perm[e.u], perm[e.v], e.sign);
    if (switching_orbit_min(p) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Row-major upper-triangle bitstring minimized over all n! relabellings.
inline std::uint64_t brute_canonical_bits(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t w = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) w = (w << 1) | (g.adjacent(perm[u], perm[v]) ? 1U : 0U);
    best = std::min(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of all 2^C(n,2) labelled graphs, grouped by degree
/// sequence before the n! canonical form is taken.
inline std::size_t brute_graph_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::pair<std::vector<std::size_t>, std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    SignedGraph g(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1U) g.set_edge(u, v, Sign::Positive);
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    seen.insert({deg, brute_canonical_bits(g)});
  }
  return seen.size();
}

/// Largest root of a cubic known to change sign on [lo, hi], by plain
/// bisection in long double.
inline long double bisect_root(const IntPolynomial& p, long double lo, long double hi) {
  auto f = [&](long double x) { return p.evaluate(x); };
  const bool rising = f(hi) > 0;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    if ((f(mid) > 0) == rising)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

/// The numerically largest eigenvalue by power iteration on A + shift I.
inline double power_index(const SignedGraph& g, int iterations = 20000) {
  const std::size_t n = g.order();
  const double shift = static_cast<double>(n);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.01 * static_cast<double>(i);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = shift * x[i];
      for (std::size_t j = 0; j < n; ++j) s += g.entry(i, j) * x[j];
      y[i] = s;
    }
    double norm = 0.0, dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      norm += y[i] * y[i];
      dot += x[i] * y[i];
    }
    double xx = 0.0;
    for (double v : x) xx += v * v;
    lambda = dot / xx - shift;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return lambda;
}

}  // namespace sgtest
