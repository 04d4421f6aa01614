#include "sgraph/proofmoves.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sgraph/cycles.hpp"
#include "sgraph/switching.hpp"

namespace sgraph {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::AddPositiveEdge: return "add_positive_edge";
    case MoveKind::DeleteEdge: return "delete_edge";
    case MoveKind::NegateEdgePair: return "negate_edge_pair";
    case MoveKind::RotateEdge: return "rotate_edge";
  }
  return "?";
}

Move Move::add_positive_edge(Vertex u, Vertex v) {
  return {MoveKind::AddPositiveEdge, std::min(u, v), std::max(u, v), 0, 0};
}

Move Move::delete_edge(Vertex u, Vertex v) { return {MoveKind::DeleteEdge, std::min(u, v), std::max(u, v), 0, 0}; }

Move Move::negate_edge_pair(Vertex u, Vertex v, Vertex w, Vertex t) {
  std::pair e1{std::min(u, v), std::max(u, v)};
  std::pair e2{std::min(w, t), std::max(w, t)};
  if (e2 < e1) std::swap(e1, e2);
  return {MoveKind::NegateEdgePair, e1.first, e1.second, e2.first, e2.second};
}

Move Move::rotate_edge(Vertex pivot, Vertex old_end, Vertex new_end) {
  return {MoveKind::RotateEdge, pivot, old_end, new_end, 0};
}

std::string Move::describe() const {
  std::ostringstream os;
  os << move_kind_name(kind) << ' ';
  switch (kind) {
    case MoveKind::AddPositiveEdge:
    case MoveKind::DeleteEdge: os << a + 1 << '-' << b + 1; break;
    case MoveKind::NegateEdgePair: os << a + 1 << '-' << b + 1 << ',' << c + 1 << '-' << d + 1; break;
    case MoveKind::RotateEdge: os << a + 1 << ':' << b + 1 << "->" << c + 1; break;
  }
  return os.str();
}

std::vector<std::size_t> Move::key() const { return {static_cast<std::size_t>(kind), a, b, c, d}; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid move: " + what);
}

void check_vertices(const SignedGraph& g, std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) require(v < g.order(), "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SignedGraph transform(const SignedGraph& g, const Move& m) {
  SignedGraph out = g;
  switch (m.kind) {
    case MoveKind::AddPositiveEdge:
      check_vertices(g, {m.a, m.b});
      require(m.a != m.b && !g.adjacent(m.a, m.b), "add_positive_edge needs a non-edge");
      out.set_edge(m.a, m.b, Sign::Positive);
      break;
    case MoveKind::DeleteEdge:
      check_vertices(g, {m.a, m.b});
      require(m.a != m.b && g.adjacent(m.a, m.b), "delete_edge needs an edge");
      out.remove_edge(m.a, m.b);
      break;
    case MoveKind::NegateEdgePair:
      check_vertices(g, {m.a, m.b, m.c, m.d});
      require(m.a != m.b && m.c != m.d, "negate_edge_pair needs two edges");
      require(!(std::minmax(m.a, m.b) == std::minmax(m.c, m.d)), "negate_edge_pair needs distinct edges");
      require(g.sign(m.a, m.b) == Sign::Negative && g.sign(m.c, m.d) == Sign::Negative,
              "negate_edge_pair needs two negative edges");
      out.set_edge(m.a, m.b, Sign::Positive);
      out.set_edge(m.c, m.d, Sign::Positive);
      break;
    case MoveKind::RotateEdge: {
      check_vertices(g, {m.a, m.b, m.c});
      require(m.a != m.b && m.a != m.c && m.b != m.c, "rotate_edge needs three distinct vertices");
      const auto s = g.sign(m.a, m.b);
      require(s.has_value(), "rotate_edge needs edge pivot-old");
      require(!g.adjacent(m.a, m.c), "rotate_edge needs non-edge pivot-new");
      out.remove_edge(m.a, m.b);
      out.set_edge(m.a, m.c, *s);
      break;
    }
  }
  return out;
}

double closed_form_delta(const SignedGraph& g, const Move& m, std::span<const double> x) {
  require(x.size() == g.order(), "vector length differs from graph order");
  switch (m.kind) {
    case MoveKind::AddPositiveEdge: return 2.0 * x[m.a] * x[m.b];
    case MoveKind::DeleteEdge: return -2.0 * g.entry(m.a, m.b) * x[m.a] * x[m.b];
    case MoveKind::NegateEdgePair: {
      // Shared-vertex form 4 x_v (x_u + x_w) is the same sum regrouped.
      return 4.0 * (x[m.a] * x[m.b] + x[m.c] * x[m.d]);
    }
    case MoveKind::RotateEdge: return 2.0 * g.entry(m.a, m.b) * x[m.a] * (x[m.c] - x[m.b]);
  }
  return 0.0;
}

MoveOutcome apply_move(const SignedGraph& g, const SpectrumReport& host, const Move& m, MoveMode mode) {
  SignedGraph out = transform(g, m);
  MoveCertificate cert;
  cert.host_index = host.lambda1;
  cert.rayleigh_delta = closed_form_delta(g, m, host.leading_vector);
  cert.still_unbalanced = !is_balanced(out).balanced;
  cert.still_c4_negative_free = is_ck_negative_free(out, 4);
  if (mode == MoveMode::Strict && !(cert.still_unbalanced && cert.still_c4_negative_free))
    throw std::domain_error(m.describe() + " breaks the unbalanced / negative-C4-free constraint");
  cert.result_index = index(out);
  return {std::move(out), cert};
}

MoveOutcome apply_move(const SignedGraph& g, const Move& m, MoveMode mode) {
  return apply_move(g, spectrum(g), m, mode);
}

std::vector<Move> candidate_moves(const SignedGraph& g, const std::vector<Vertex>* protected_cycle) {
  const std::size_t n = g.order();
  std::vector<bool> guarded(n * n, false);
  if (protected_cycle && !protected_cycle->empty()) {
    const auto& c = *protected_cycle;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex u = c[i], v = c[(i + 1) % c.size()];
      guarded[u * n + v] = guarded[v * n + u] = true;
    }
  }
  std::vector<Move> moves;
  std::vector<SignedEdge> negatives;
  for (const auto& e : g.edges())
    if (e.sign == Sign::Negative) negatives.push_back(e);

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) moves.push_back(Move::add_positive_edge(u, v));
  for (const auto& e : negatives)
    if (!guarded[e.u * n + e.v]) moves.push_back(Move::delete_edge(e.u, e.v));
  for (std::size_t i = 0; i < negatives.size(); ++i)
    for (std::size_t j = i + 1; j < negatives.size(); ++j)
      moves.push_back(Move::negate_edge_pair(negatives[i].u, negatives[i].v, negatives[j].u, negatives[j].v));
  for (Vertex p = 0; p < n; ++p)
    for (Vertex o = 0; o < n; ++o) {
      if (o == p || !g.adjacent(p, o)) continue;
      for (Vertex q = 0; q < n; ++q)
        if (q != p && q != o && !g.adjacent(p, q)) moves.push_back(Move::rotate_edge(p, o, q));
    }
  return moves;
}

SignedGraph random_unbalanced_c4free(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("an unbalanced graph needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double density = 0.3 + 0.5 * unit(rng);
    SignedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit(rng) < density) g.set_edge(u, v, unit(rng) < 0.3 ? Sign::Negative : Sign::Positive);
    while (auto c = find_negative_ck(g, 4)) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
      g.remove_edge(c->vertices[i], c->vertices[(i + 1) % 4]);
    }
    if (!is_balanced(g).balanced) return g;
  }
  SignedGraph g(n);
  g.set_edge(0, 1, Sign::Negative).set_edge(0, 2, Sign::Positive).set_edge(1, 2, Sign::Positive);
  return g;
}

AscentResult greedy_ascent_from(const SignedGraph& start, std::size_t max_steps) {
  AscentResult res{start, start, {}, {}, false};
  SpectrumReport host = spectrum(res.graph);
  res.trajectory.push_back(host.lambda1);
  constexpr double kMinGain = 1e-12;
  constexpr double kTie = 1e-13;

  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto shortest = shortest_negative_cycle(res.graph);
    const std::vector<Vertex> guard = shortest ? shortest->vertices : std::vector<Vertex>{};
    const auto moves = candidate_moves(res.graph, &guard);

    const Move* best = nullptr;
    double best_gain = kMinGain;
    SignedGraph best_graph;
    double best_index = 0.0;
    for (const auto& m : moves) {
      SignedGraph cand = transform(res.graph, m);
      if (!is_ck_negative_free(cand, 4) || is_balanced(cand).balanced) continue;
      const double idx = index(cand);
      const double gain = idx - host.lambda1;
      // moves arrive in key order, so a later move must beat the incumbent
      if (gain > best_gain + (best ? kTie : 0.0)) {
        best = &m;
        best_gain = gain;
        best_graph = std::move(cand);
        best_index = idx;
      }
    }
    if (!best) {
      res.local_maximum = true;
      return res;
    }
    res.steps.push_back({*best, best_index});
    res.graph = std::move(best_graph);
    host = spectrum(res.graph);
    res.trajectory.push_back(host.lambda1);
  }
  return res;
}

AscentResult greedy_ascent(std::size_t n, std::uint64_t seed, std::size_t max_steps) {
  if (n < 5) throw std::invalid_argument("greedy_ascent requires n >= 5");
  return greedy_ascent_from(random_unbalanced_c4free(n, seed), max_steps);
}

}  // namespace sgraph
