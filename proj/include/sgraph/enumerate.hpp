#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// Largest order the built-in underlying-graph enumerator accepts.
inline constexpr std::size_t kMaxBuiltinOrder = 7;

/// Isomorphism-invariant code of the underlying graph: the smallest
/// upper-triangle bitstring (graph6 column order, pair (0,1) most
/// significant) over all vertex orders that sort vertices by (degree,
/// neighbour degrees), descending. Requires n <= 11.
std::uint64_t canonical_code(const SignedGraph& g);

/// (G,+) relabelled into the order realizing canonical_code.
SignedGraph canonical_graph(const SignedGraph& g);

/// All non-isomorphic simple graphs on n vertices as (G,+), sorted by
/// (edge count, canonical code). Throws std::invalid_argument for n > 7.
std::vector<SignedGraph> enumerate_underlying(std::size_t n);

/// One representative per switching class of G: forest edges positive,
/// cotree edge i negative iff bit i of the class index is set.
std::vector<SignedGraph> switching_classes(const SignedGraph& g);
std::size_t switching_class_count(const SignedGraph& g);

struct Maximizer {
  double lambda1 = 0.0;
  SignedGraph graph;
};

/// Census of one underlying graph.
struct GraphCensus {
  std::size_t graph_index = 0;
  std::uint64_t classes = 0;
  std::uint64_t unbalanced = 0;
  std::uint64_t candidates = 0;  // unbalanced and negative-C4-free
  std::optional<double> max_candidate;
  std::vector<Maximizer> maximizers;  // candidates within tol of max_candidate
  std::optional<double> max_balanced;
  std::optional<double> max_unbalanced_any;
};

struct VerificationReport {
  std::size_t n = 0;
  std::uint64_t underlying_graphs = 0;
  std::uint64_t switching_classes = 0;
  std::uint64_t unbalanced_classes = 0;
  std::uint64_t candidate_classes = 0;
  std::optional<double> max_lambda1;
  std::vector<Maximizer> maximizers;
  double gamma1_index = 0.0;
  /// Maximizers whose exact characteristic polynomial differs from gamma1(n)'s.
  std::size_t charpoly_mismatches = 0;
  std::size_t maximizers_switching_isomorphic = 0;
  /// Maximizers up to switching isomorphism.
  std::size_t maximizer_classes = 0;
  std::optional<double> max_lambda1_balanced;
  std::optional<double> max_lambda1_unbalanced_any;
  bool verdict = false;
  double seconds = 0.0;
};

struct VerifyProgress {
  std::size_t graphs_done = 0;
  std::size_t graphs_total = 0;
  std::uint64_t classes_done = 0;
};

struct VerifyOptions {
  double tol = 1e-9;
  unsigned jobs = 1;
  /// Replaces the built-in enumeration (e.g. an ingested graph6 list).
  std::optional<std::vector<SignedGraph>> graphs;
  /// JSON-lines checkpoint; per-graph records are flushed after every
  /// `checkpoint_every` classes and at the end.
  std::optional<std::filesystem::path> checkpoint;
  bool resume = false;
  std::uint64_t checkpoint_every = 100000;
  std::function<void(const VerifyProgress&)> on_progress;
};

GraphCensus census_of(const SignedGraph& underlying_graph, std::size_t graph_index, double tol);

/// Exhaustive check over every switching class of every underlying graph of
/// order n: the largest index among unbalanced negative-C4-free classes and
/// whether all maximizers are switching isomorphic to gamma1(n).
VerificationReport verify_theorem(std::size_t n, const VerifyOptions& options = {});

struct Lemma33Report {
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t c4_free = 0;
  std::vector<SignedGraph> failures;
  bool holds = true;
};

Lemma33Report lemma33_report(std::size_t n);
bool verify_lemma33(std::size_t n);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const GraphCensus& c);
GraphCensus census_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Lemma33Report& r);

}  // namespace sgraph
