#include "sgraph/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sgraph {

Sign sign_from_int(int value) {
  if (value == 1) return Sign::Positive;
  if (value == -1) return Sign::Negative;
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
}

char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

SignedGraph::SignedGraph(std::size_t n) : n_(n), table_(n * n, 0) {}

void SignedGraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    std::ostringstream os;
    os << "vertex " << v << " out of range for order " << n_;
    throw std::out_of_range(os.str());
  }
}

void SignedGraph::check_pair(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

bool SignedGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return table_[u * n_ + v] != 0;
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  const int e = entry(u, v);
  if (e == 0) return std::nullopt;
  return e > 0 ? Sign::Positive : Sign::Negative;
}

int SignedGraph::entry(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return table_[u * n_ + v];
}

SignedGraph& SignedGraph::set_edge(Vertex u, Vertex v, Sign s) {
  check_pair(u, v);
  if (table_[u * n_ + v] == 0) ++m_;
  table_[u * n_ + v] = static_cast<std::int8_t>(to_int(s));
  table_[v * n_ + u] = static_cast<std::int8_t>(to_int(s));
  return *this;
}

SignedGraph& SignedGraph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (table_[u * n_ + v] == 0) {
    std::ostringstream os;
    os << "no edge between " << u << " and " << v;
    throw std::invalid_argument(os.str());
  }
  table_[u * n_ + v] = 0;
  table_[v * n_ + u] = 0;
  --m_;
  return *this;
}

std::size_t SignedGraph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += table_[v * n_ + j] != 0;
  return d;
}

std::vector<Vertex> SignedGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (table_[v * n_ + j] != 0) out.push_back(j);
  return out;
}

std::size_t SignedGraph::negative_edge_count() const {
  std::size_t c = 0;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) c += table_[u * n_ + v] < 0;
  return c;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (const int e = table_[u * n_ + v]; e != 0)
        out.push_back({u, v, e > 0 ? Sign::Positive : Sign::Negative});
  return out;
}

Matrix<int> SignedGraph::adjacency_matrix() const {
  Matrix<int> a(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = table_[i * n_ + j];
  return a;
}

Matrix<double> SignedGraph::adjacency_matrix_real() const {
  return adjacency_matrix().cast<double>();
}

SignedGraph new_graph(std::size_t n) { return SignedGraph(n); }

SignedGraph complete_signed(std::size_t n, Sign s) {
  SignedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_edge(u, v, s);
  return g;
}

SignedGraph underlying(const SignedGraph& g) {
  SignedGraph out(g.order());
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, Sign::Positive);
  return out;
}

bool same_underlying(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> subset) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : subset) {
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    if (seen[v]) throw std::invalid_argument("induced_subgraph: repeated vertex");
    seen[v] = true;
  }
  InducedSubgraph out{SignedGraph(subset.size()), {subset.begin(), subset.end()}};
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (auto s = g.sign(subset[i], subset[j])) out.graph.set_edge(i, j, *s);
  return out;
}

SignedGraph permute(const SignedGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = true;
  }
  SignedGraph out(g.order());
  for (const auto& e : g.edges()) out.set_edge(perm[e.u], perm[e.v], e.sign);
  return out;
}

std::size_t component_count(const SignedGraph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  return count;
}

}  // namespace sgraph
