#pragma once

#include <optional>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// A vertex subset U. Switching at U and at V \ U produce the same graph.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(std::vector<Vertex> vertices);

  static SwitchSet from_mask(std::size_t n, unsigned long long mask);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  /// Membership indicator over 0..n-1.
  std::vector<bool> indicator(std::size_t n) const;

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<Vertex> vertices_;  // sorted, unique
};

/// Negates every edge with exactly one endpoint in U.
SignedGraph switch_at(const SignedGraph& g, const SwitchSet& u);

struct BalanceResult {
  bool balanced = true;
  /// When balanced: s with sigma(uv) = s(u) s(v) on every edge.
  std::vector<Sign> bisigning;
  /// When unbalanced: the first conflict cycle met in BFS order.
  std::vector<Vertex> negative_cycle;
};

BalanceResult is_balanced(const SignedGraph& g);

struct ForestEdge {
  Vertex u;
  Vertex v;
  friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};

/// Forest normalization: a deterministic BFS spanning forest (roots in
/// increasing index order, neighbours ascending) is made all-positive by
/// switching; the remaining cotree signs identify the switching class.
struct NormalForm {
  SignedGraph host;
  std::vector<ForestEdge> forest;
  SignedGraph normalized;
  SwitchSet switch_set;
  /// Cotree edges of `normalized` in canonical (u, v) order.
  std::vector<SignedEdge> cotree;
};

/// Canonical BFS forest of the underlying graph, edges as (parent, child)
/// in discovery order.
std::vector<ForestEdge> bfs_forest(const SignedGraph& g);

NormalForm forest_normal_form(const SignedGraph& g);

/// Labeled switching equivalence. Throws std::invalid_argument if the
/// underlying graphs differ.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// Searches for a permutation pi with switch(pi(a)) = b for some switching.
/// Returns pi as pi[v] = image of vertex v. Throws on order mismatch.
std::optional<std::vector<Vertex>> switching_isomorphic(const SignedGraph& a,
                                                        const SignedGraph& b);

}  // namespace sgraph
