#include "sgraph/cycles.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sgraph {

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k == 0) return {};
  const auto it = std::min_element(cycle.begin(), cycle.end());
  const std::size_t start = static_cast<std::size_t>(it - cycle.begin());
  const Vertex next = cycle[(start + 1) % k];
  const Vertex prev = cycle[(start + k - 1) % k];
  std::vector<Vertex> out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = next <= prev ? cycle[(start + i) % k] : cycle[(start + k - i) % k];
  return out;
}

Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<bool> seen(g.order(), false);
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % k];
    if (u >= g.order() || v >= g.order()) throw std::invalid_argument("cycle vertex out of range");
    if (seen[u]) throw std::invalid_argument("cycle repeats vertex " + std::to_string(u));
    seen[u] = true;
    const auto e = g.sign(u, v);
    if (!e) throw std::invalid_argument("cycle uses non-edge " + std::to_string(u) + "-" + std::to_string(v));
    s = s * *e;
  }
  return s;
}

namespace {

/// DFS over canonical k-cycles: path[0] is the minimum, inner vertices
/// exceed it, and path[1] < path[k-1] fixes the direction.
class CycleSearch {
 public:
  CycleSearch(const SignedGraph& g, std::size_t k, bool negative_only)
      : g_(g), k_(k), negative_only_(negative_only), used_(g.order(), false) {}

  std::optional<CycleWitness> first() {
    for (Vertex s = 0; s + k_ <= g_.order(); ++s) {
      path_.assign(1, s);
      used_[s] = true;
      const bool found = extend(Sign::Positive);
      used_[s] = false;
      if (found) return CycleWitness{path_, sign_};
    }
    return std::nullopt;
  }

 private:
  bool extend(Sign acc) {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    if (path_.size() == k_) {
      const int close = g_.entry(last, s);
      if (close == 0 || path_[1] > last) return false;
      sign_ = acc * (close > 0 ? Sign::Positive : Sign::Negative);
      return !negative_only_ || sign_ == Sign::Negative;
    }
    for (Vertex w = s + 1; w < g_.order(); ++w) {
      if (used_[w]) continue;
      const int e = g_.entry(last, w);
      if (e == 0) continue;
      used_[w] = true;
      path_.push_back(w);
      if (extend(acc * (e > 0 ? Sign::Positive : Sign::Negative))) {
        used_[w] = false;
        return true;
      }
      path_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  const SignedGraph& g_;
  std::size_t k_;
  bool negative_only_;
  Sign sign_ = Sign::Positive;
  std::vector<bool> used_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<CycleWitness> find_negative_ck(const SignedGraph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (k > g.order()) return std::nullopt;
  return CycleSearch(g, k, true).first();
}

std::optional<CycleWitness> find_ck(const SignedGraph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (k > g.order()) return std::nullopt;
  return CycleSearch(g, k, false).first();
}

bool is_ck_negative_free(const SignedGraph& g, std::size_t k) { return !find_negative_ck(g, k); }

SignedGraph double_cover(const SignedGraph& g) {
  const std::size_t n = g.order();
  SignedGraph cover(2 * n);
  for (const auto& e : g.edges()) {
    if (e.sign == Sign::Positive) {
      cover.set_edge(e.u, e.v, Sign::Positive);
      cover.set_edge(e.u + n, e.v + n, Sign::Positive);
    } else {
      cover.set_edge(e.u, e.v + n, Sign::Positive);
      cover.set_edge(e.u + n, e.v, Sign::Positive);
    }
  }
  return cover;
}

namespace {

Sign walk_sign(const SignedGraph& g, const std::vector<Vertex>& walk, std::size_t from, std::size_t to) {
  Sign s = Sign::Positive;
  for (std::size_t i = from; i < to; ++i) s = s * *g.sign(walk[i], walk[i + 1]);
  return s;
}

/// Reduces a closed negative walk (walk.front() == walk.back()) to a simple
/// negative cycle by excising closed sub-walks at repeated vertices.
std::vector<Vertex> simple_negative_cycle(const SignedGraph& g, std::vector<Vertex> walk) {
  for (;;) {
    const std::size_t len = walk.size() - 1;
    std::size_t ri = 0, rj = 0;
    for (std::size_t i = 0; i < len && rj == 0; ++i)
      for (std::size_t j = i + 1; j <= len; ++j)
        if (walk[i] == walk[j] && !(i == 0 && j == len)) {
          ri = i;
          rj = j;
          break;
        }
    if (rj == 0) break;
    if (walk_sign(g, walk, ri, rj) == Sign::Negative) {
      walk = std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(ri),
                                 walk.begin() + static_cast<std::ptrdiff_t>(rj) + 1);
    } else {
      walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(ri),
                 walk.begin() + static_cast<std::ptrdiff_t>(rj));
    }
  }
  walk.pop_back();
  return walk;
}

/// Shortest (v,+) -> (v,-) path in the double cover, projected to g.
std::optional<std::vector<Vertex>> negative_closed_walk(const SignedGraph& g, Vertex v) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(2 * n, kNone);
  std::vector<bool> seen(2 * n, false);
  std::queue<std::size_t> q;
  q.push(v);
  seen[v] = true;
  const std::size_t target = v + n;
  while (!q.empty() && !seen[target]) {
    const std::size_t cur = q.front();
    q.pop();
    const Vertex base = cur % n;
    const bool neg_layer = cur >= n;
    for (Vertex w = 0; w < n; ++w) {
      const int e = g.entry(base, w);
      if (e == 0) continue;
      const bool next_layer = neg_layer != (e < 0);
      const std::size_t nxt = w + (next_layer ? n : 0);
      if (seen[nxt]) continue;
      seen[nxt] = true;
      parent[nxt] = cur;
      q.push(nxt);
    }
  }
  if (!seen[target]) return std::nullopt;
  std::vector<Vertex> walk;
  for (std::size_t cur = target; cur != kNone; cur = parent[cur]) walk.push_back(cur % n);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

std::optional<CycleWitness> shortest_negative_cycle(const SignedGraph& g) {
  std::optional<CycleWitness> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto walk = negative_closed_walk(g, v);
    if (!walk) continue;
    if (best && walk->size() - 1 > best->length()) continue;
    CycleWitness cand{canonical_cycle(simple_negative_cycle(g, std::move(*walk))), Sign::Negative};
    if (!best || cand.length() < best->length() ||
        (cand.length() == best->length() && cand.vertices < best->vertices))
      best = std::move(cand);
  }
  return best;
}

}  // namespace sgraph
