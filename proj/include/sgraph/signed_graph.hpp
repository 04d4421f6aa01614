#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgraph/matrix.hpp"

namespace sgraph {

using Vertex = std::size_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
Sign sign_from_int(int value);
char sign_char(Sign s) noexcept;

/// An edge with canonical endpoint order u < v.
struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple undirected graph whose edges carry a sign in {-1, +1}.
///
/// Storage is a dense n x n table of {-1, 0, +1}; the regime this library
/// targets keeps n small (a few hundred at most). An unsigned graph G is
/// represented by (G,+), i.e. every edge positive.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::optional<Sign> sign(Vertex u, Vertex v) const;
  /// Adjacency entry: sign as +-1, or 0 for non-edges (and the diagonal).
  int entry(Vertex u, Vertex v) const;

  /// Inserts {u,v} with sign s, overwriting a previous sign.
  SignedGraph& set_edge(Vertex u, Vertex v, Sign s);
  /// Throws std::invalid_argument if {u,v} is not an edge.
  SignedGraph& remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t negative_edge_count() const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<SignedEdge> edges() const;

  Matrix<int> adjacency_matrix() const;
  Matrix<double> adjacency_matrix_real() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void check_vertex(Vertex v) const;
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::int8_t> table_;
};

SignedGraph new_graph(std::size_t n);

/// K_n with every edge carrying sign s.
SignedGraph complete_signed(std::size_t n, Sign s);

/// (G,+): the same edge set with every sign positive.
SignedGraph underlying(const SignedGraph& g);

bool same_underlying(const SignedGraph& a, const SignedGraph& b);

struct InducedSubgraph {
  SignedGraph graph;
  /// original[i] is the host vertex that became vertex i.
  std::vector<Vertex> original;
};

/// Vertices of `subset` are renumbered 0..|S|-1 in the order given.
InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> subset);

/// Relabels vertex v of g as perm[v].
SignedGraph permute(const SignedGraph& g, std::span<const Vertex> perm);

std::size_t component_count(const SignedGraph& g);

}  // namespace sgraph
