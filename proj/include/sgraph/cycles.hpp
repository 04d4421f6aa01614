#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// A simple cycle c0 c1 ... c(k-1) c0, stored in canonical rotation:
/// minimum vertex first, then the smaller of its two cycle neighbours.
struct CycleWitness {
  std::vector<Vertex> vertices;
  Sign sign = Sign::Positive;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Rotates/reflects a vertex cycle into canonical form.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

/// Product of edge signs around the cycle. Throws std::invalid_argument for
/// sequences that are not simple cycles of length >= 3 in g.
Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle);

/// Lexicographically least negative cycle of length exactly k, if any.
std::optional<CycleWitness> find_negative_ck(const SignedGraph& g, std::size_t k);

/// Lexicographically least cycle of length exactly k, of either sign.
std::optional<CycleWitness> find_ck(const SignedGraph& g, std::size_t k);

bool is_ck_negative_free(const SignedGraph& g, std::size_t k);

/// Signed double cover: vertex v+ is v, vertex v- is v+n; an edge uv of
/// sign s joins (u,e)-(v,e*s). Returned all-positive.
SignedGraph double_cover(const SignedGraph& g);

/// A negative cycle of minimum length (lexicographically least among those),
/// or nullopt iff g is balanced.
std::optional<CycleWitness> shortest_negative_cycle(const SignedGraph& g);

}  // namespace sgraph
