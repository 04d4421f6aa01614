#include "sgraph/switching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sgraph {

SwitchSet::SwitchSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

SwitchSet SwitchSet::from_mask(std::size_t n, unsigned long long mask) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1ULL) vs.push_back(v);
  return SwitchSet(std::move(vs));
}

std::vector<bool> SwitchSet::indicator(std::size_t n) const {
  std::vector<bool> in(n, false);
  for (Vertex v : vertices_) {
    if (v >= n) throw std::out_of_range("switch set vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

SignedGraph switch_at(const SignedGraph& g, const SwitchSet& u) {
  const auto in = u.indicator(g.order());
  SignedGraph out(g.order());
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, in[e.u] != in[e.v] ? -e.sign : e.sign);
  return out;
}

namespace {

struct BfsState {
  std::vector<ForestEdge> forest;
  std::vector<Sign> potential;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

BfsState run_bfs(const SignedGraph& g) {
  const std::size_t n = g.order();
  BfsState st{{}, std::vector<Sign>(n, Sign::Positive), std::vector<std::size_t>(n, kNone),
              std::vector<std::size_t>(n, 0)};
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w = 0; w < n; ++w) {
        const int e = g.entry(u, w);
        if (e == 0 || seen[w]) continue;
        seen[w] = true;
        st.parent[w] = u;
        st.depth[w] = st.depth[u] + 1;
        st.potential[w] = st.potential[u] * (e > 0 ? Sign::Positive : Sign::Negative);
        st.forest.push_back({u, w});
        q.push(w);
      }
    }
  }
  return st;
}

std::vector<Vertex> tree_cycle(const BfsState& st, Vertex a, Vertex b) {
  std::vector<Vertex> left{a};
  std::vector<Vertex> right{b};
  while (a != b) {
    if (st.depth[a] >= st.depth[b]) {
      a = st.parent[a];
      left.push_back(a);
    } else {
      b = st.parent[b];
      right.push_back(b);
    }
  }
  // left ends at the lca, right ends at the same vertex; drop the duplicate.
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
  const BfsState st = run_bfs(g);
  for (const auto& e : g.edges()) {
    if (st.potential[e.u] * st.potential[e.v] != e.sign) {
      return {false, {}, tree_cycle(st, e.u, e.v)};
    }
  }
  return {true, st.potential, {}};
}

std::vector<ForestEdge> bfs_forest(const SignedGraph& g) { return run_bfs(g).forest; }

NormalForm forest_normal_form(const SignedGraph& g) {
  BfsState st = run_bfs(g);
  std::vector<Vertex> flip;
  for (Vertex v = 0; v < g.order(); ++v)
    if (st.potential[v] == Sign::Negative) flip.push_back(v);
  NormalForm nf{g, std::move(st.forest), {}, SwitchSet(std::move(flip)), {}};
  nf.normalized = switch_at(g, nf.switch_set);

  std::vector<bool> in_forest(g.order() * g.order(), false);
  for (const auto& fe : nf.forest) {
    in_forest[fe.u * g.order() + fe.v] = true;
    in_forest[fe.v * g.order() + fe.u] = true;
  }
  for (const auto& e : nf.normalized.edges())
    if (!in_forest[e.u * g.order() + e.v]) nf.cotree.push_back(e);
  return nf;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!same_underlying(a, b))
    throw std::invalid_argument("switching_equivalent: underlying graphs differ");
  return forest_normal_form(a).cotree == forest_normal_form(b).cotree;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const SignedGraph& a, const SignedGraph& b) : a_(a), b_(b), n_(a.order()) {
    deg_a_.resize(n_);
    deg_b_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      deg_a_[v] = a.degree(v);
      deg_b_[v] = b.degree(v);
    }
    profile_a_ = profiles(a, deg_a_);
    profile_b_ = profiles(b, deg_b_);
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return deg_a_[x] > deg_a_[y]; });
    image_.assign(n_, kNone);
    used_.assign(n_, false);
  }

  bool quick_reject() const {
    auto da = deg_a_, db = deg_b_;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return true;
    auto pa = profile_a_, pb = profile_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa != pb;
  }

  bool search(std::size_t depth) {
    if (depth == n_) {
      return switching_equivalent(permute(a_, image_), b_);
    }
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[w] || deg_b_[w] != deg_a_[v] || profile_b_[w] != profile_a_[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex u = order_[k];
        ok = a_.adjacent(u, v) == b_.adjacent(image_[u], w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
      image_[v] = kNone;
    }
    return false;
  }

  std::vector<Vertex> image() const { return image_; }

 private:
  static std::vector<std::vector<std::size_t>> profiles(const SignedGraph& g,
                                                        const std::vector<std::size_t>& deg) {
    std::vector<std::vector<std::size_t>> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) out[v].push_back(deg[w]);
      std::sort(out[v].begin(), out[v].end());
    }
    return out;
  }

  const SignedGraph& a_;
  const SignedGraph& b_;
  std::size_t n_;
  std::vector<std::size_t> deg_a_, deg_b_;
  std::vector<std::vector<std::size_t>> profile_a_, profile_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> switching_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("switching_isomorphic: order mismatch");
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  if (is_balanced(a).balanced != is_balanced(b).balanced) return std::nullopt;
  IsoSearch search(a, b);
  if (search.quick_reject()) return std::nullopt;
  if (!search.search(0)) return std::nullopt;
  return search.image();
}

}  // namespace sgraph
