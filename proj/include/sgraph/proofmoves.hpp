#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sgraph/signed_graph.hpp"
#include "sgraph/spectra.hpp"

namespace sgraph {

enum class MoveKind { AddPositiveEdge, DeleteEdge, NegateEdgePair, RotateEdge };

std::string move_kind_name(MoveKind k);

/// A local perturbation of a signed graph.
///
///  AddPositiveEdge  {a,b} non-edge becomes a positive edge.
///  DeleteEdge       edge {a,b} is removed.
///  NegateEdgePair   negative edges {a,b} and {c,d} both become positive.
///  RotateEdge       edge {a=pivot, b=old} moves to {pivot, c=new}, keeping
///                   its sign; {pivot,new} must be a non-edge.
struct Move {
  MoveKind kind;
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;

  static Move add_positive_edge(Vertex u, Vertex v);
  static Move delete_edge(Vertex u, Vertex v);
  static Move negate_edge_pair(Vertex u, Vertex v, Vertex w, Vertex t);
  static Move rotate_edge(Vertex pivot, Vertex old_end, Vertex new_end);

  std::string describe() const;
  /// Lexicographic key used for deterministic tie-breaks.
  std::vector<std::size_t> key() const;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveCertificate {
  double host_index = 0.0;
  double result_index = 0.0;
  /// x^T A(result) x - x^T A(host) x at the host's unit leading vector x,
  /// from the closed form for the move kind.
  double rayleigh_delta = 0.0;
  bool still_unbalanced = false;
  bool still_c4_negative_free = false;
};

struct MoveOutcome {
  SignedGraph graph;
  MoveCertificate certificate;
};

enum class MoveMode { Lenient, Strict };

/// Throws std::invalid_argument on invalid operands; in Strict mode also
/// throws std::domain_error when the result is balanced or has a negative C4.
MoveOutcome apply_move(const SignedGraph& g, const Move& m, MoveMode mode = MoveMode::Lenient);

/// As above, reusing a precomputed host spectrum.
MoveOutcome apply_move(const SignedGraph& g, const SpectrumReport& host, const Move& m,
                       MoveMode mode = MoveMode::Lenient);

/// Only the graph change; validates operands.
SignedGraph transform(const SignedGraph& g, const Move& m);

/// Closed-form Rayleigh change:
///   add uv            2 x_u x_v
///   delete uv         -2 sigma(uv) x_u x_v
///   negate uv, wt     4 (x_u x_v + x_w x_t)   (= 4 x_v (x_u + x_w) when v = t)
///   rotate p: o -> q  2 sigma(po) x_p (x_q - x_o)
double closed_form_delta(const SignedGraph& g, const Move& m, std::span<const double> x);

/// Every valid move of each kind on g, in lexicographic key order.
/// DeleteEdge is limited to negative edges off `protected_cycle` when given.
std::vector<Move> candidate_moves(const SignedGraph& g, const std::vector<Vertex>* protected_cycle = nullptr);

struct AscentStep {
  Move move;
  double index = 0.0;
};

struct AscentResult {
  SignedGraph start;
  SignedGraph graph;
  /// lambda1 of the start followed by lambda1 after each accepted move.
  std::vector<double> trajectory;
  std::vector<AscentStep> steps;
  bool local_maximum = false;
};

/// Random unbalanced graph without a negative C4, reproducible from seed.
SignedGraph random_unbalanced_c4free(std::size_t n, std::uint64_t seed);

/// Steepest ascent from `start` over constraint-preserving moves; each
/// accepted move raises lambda1 by more than 1e-12.
AscentResult greedy_ascent_from(const SignedGraph& start, std::size_t max_steps);

AscentResult greedy_ascent(std::size_t n, std::uint64_t seed, std::size_t max_steps);

}  // namespace sgraph
