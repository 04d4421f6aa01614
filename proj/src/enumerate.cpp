#include "sgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sgraph/cycles.hpp"
#include "sgraph/families.hpp"
#include "sgraph/io.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"

namespace sgraph {

namespace {

/// Branch-and-bound over invariant-respecting vertex orders. Bits are laid
/// out column by column, (0,1), (0,2), (1,2), (0,3), ..., so the pairs among
/// the first k placed vertices always form a prefix of the code.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SignedGraph& g) : g_(g), n_(g.order()) {
    if (n_ > 11) throw std::invalid_argument("canonical_code supports n <= 11");
    total_bits_ = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    std::vector<std::size_t> deg(n_);
    for (Vertex v = 0; v < n_; ++v) deg[v] = g.degree(v);
    invariant_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      auto& inv = invariant_[v];
      inv.push_back(deg[v]);
      std::vector<std::size_t> nd;
      for (Vertex w : g.neighbors(v)) nd.push_back(deg[w]);
      std::sort(nd.rbegin(), nd.rend());
      inv.insert(inv.end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> sorted(n_);
    for (Vertex v = 0; v < n_; ++v) sorted[v] = v;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](Vertex a, Vertex b) { return invariant_[a] > invariant_[b]; });
    slot_class_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) slot_class_[i] = invariant_[sorted[i]];
    used_.assign(n_, false);
    order_.resize(n_);
  }

  void run() {
    if (n_ == 0) {
      found_ = true;
      return;
    }
    place(0, 0, 0);
  }

  std::uint64_t code() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  void place(std::size_t pos, std::uint64_t partial, std::size_t bits) {
    if (pos == n_) {
      if (!found_ || partial < best_) {
        best_ = partial;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || invariant_[v] != slot_class_[pos]) continue;
      std::uint64_t next = partial;
      for (std::size_t i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      const std::size_t next_bits = bits + pos;
      if (found_) {
        const std::uint64_t best_prefix = next_bits == 0 ? 0 : best_ >> (total_bits_ - next_bits);
        if (next > best_prefix) continue;
      }
      used_[v] = true;
      order_[pos] = v;
      place(pos + 1, next, next_bits);
      used_[v] = false;
    }
  }

  const SignedGraph& g_;
  std::size_t n_;
  std::size_t total_bits_ = 0;
  std::vector<std::vector<std::size_t>> invariant_;
  std::vector<std::vector<std::size_t>> slot_class_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::uint64_t canonical_code(const SignedGraph& g) {
  CanonicalSearch s(g);
  s.run();
  return s.code();
}

SignedGraph canonical_graph(const SignedGraph& g) {
  CanonicalSearch s(g);
  s.run();
  std::vector<Vertex> perm(g.order());
  const auto& ord = s.best_order();
  for (std::size_t pos = 0; pos < ord.size(); ++pos) perm[ord[pos]] = pos;
  return permute(underlying(g), perm);
}

std::vector<SignedGraph> enumerate_underlying(std::size_t n) {
  if (n > kMaxBuiltinOrder)
    throw std::invalid_argument("built-in enumeration supports n <= " + std::to_string(kMaxBuiltinOrder) +
                                "; pass a graph list file for larger orders");
  if (n == 0) return {SignedGraph(0)};
  // Every graph on n vertices is some graph on n-1 vertices plus one vertex.
  std::map<std::pair<std::size_t, std::uint64_t>, SignedGraph> seen;
  for (const auto& h : enumerate_underlying(n - 1)) {
    for (unsigned long long mask = 0; mask < (1ULL << (n - 1)); ++mask) {
      SignedGraph g(n);
      for (const auto& e : h.edges()) g.set_edge(e.u, e.v, Sign::Positive);
      for (Vertex v = 0; v + 1 < n; ++v)
        if ((mask >> v) & 1ULL) g.set_edge(v, n - 1, Sign::Positive);
      const auto key = std::make_pair(g.edge_count(), canonical_code(g));
      if (!seen.contains(key)) seen.emplace(key, canonical_graph(g));
    }
  }
  std::vector<SignedGraph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

std::size_t switching_class_count(const SignedGraph& g) {
  const std::size_t cotree = g.edge_count() - bfs_forest(g).size();
  if (cotree >= 63) throw std::overflow_error("too many switching classes to count");
  return std::size_t{1} << cotree;
}

std::vector<SignedGraph> switching_classes(const SignedGraph& g) {
  const auto forest = bfs_forest(g);
  const std::size_t n = g.order();
  std::vector<bool> in_forest(n * n, false);
  for (const auto& fe : forest) in_forest[fe.u * n + fe.v] = in_forest[fe.v * n + fe.u] = true;
  std::vector<SignedEdge> cotree;
  for (const auto& e : g.edges())
    if (!in_forest[e.u * n + e.v]) cotree.push_back(e);
  if (cotree.size() > 24) throw std::invalid_argument("switching_classes: too many cotree edges to enumerate");

  SignedGraph base(n);
  for (const auto& fe : forest) base.set_edge(fe.u, fe.v, Sign::Positive);
  std::vector<SignedGraph> out;
  out.reserve(std::size_t{1} << cotree.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << cotree.size()); ++mask) {
    SignedGraph rep = base;
    for (std::size_t i = 0; i < cotree.size(); ++i)
      rep.set_edge(cotree[i].u, cotree[i].v, (mask >> i) & 1U ? Sign::Negative : Sign::Positive);
    out.push_back(std::move(rep));
  }
  return out;
}

GraphCensus census_of(const SignedGraph& underlying_graph, std::size_t graph_index, double tol) {
  GraphCensus c;
  c.graph_index = graph_index;
  for (auto& rep : switching_classes(underlying_graph)) {
    ++c.classes;
    const bool balanced = is_balanced(rep).balanced;
    const double lambda = rep.order() == 0 ? 0.0 : index(rep);
    if (balanced) {
      c.max_balanced = std::max(c.max_balanced.value_or(lambda), lambda);
      continue;
    }
    ++c.unbalanced;
    c.max_unbalanced_any = std::max(c.max_unbalanced_any.value_or(lambda), lambda);
    if (!is_ck_negative_free(rep, 4)) continue;
    ++c.candidates;
    if (!c.max_candidate || lambda > *c.max_candidate) {
      c.max_candidate = lambda;
      std::erase_if(c.maximizers, [&](const Maximizer& m) { return m.lambda1 < lambda - tol; });
    }
    if (lambda >= *c.max_candidate - tol) c.maximizers.push_back({lambda, std::move(rep)});
  }
  return c;
}

namespace {

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<double> opt_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

nlohmann::json maximizers_json(const std::vector<Maximizer>& ms) {
  auto arr = nlohmann::json::array();
  for (const auto& m : ms) arr.push_back({{"lambda1", m.lambda1}, {"sg", to_sg(m.graph)}});
  return arr;
}

template <typename T>
void keep_max(std::optional<T>& acc, const std::optional<T>& v) {
  if (v && (!acc || *v > *acc)) acc = v;
}

class CheckpointWriter {
 public:
  CheckpointWriter(const std::filesystem::path& path, bool append) {
    out_.open(path, append ? std::ios::app : std::ios::trunc | std::ios::out);
    if (!out_) throw IoError("cannot open checkpoint " + path.string());
  }
  void line(const nlohmann::json& j) { buffer_ << j.dump() << '\n'; }
  void flush() {
    out_ << buffer_.str();
    out_.flush();
    buffer_.str({});
    if (!out_) throw IoError("checkpoint write failed");
  }

 private:
  std::ofstream out_;
  std::ostringstream buffer_;
};

std::map<std::size_t, GraphCensus> load_checkpoint(const std::filesystem::path& path, std::size_t n,
                                                   std::size_t graphs) {
  std::map<std::size_t, GraphCensus> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      // A torn final line from an interrupted run is dropped.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, 0, std::string("bad checkpoint record: ") + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (j.at("n").get<std::size_t>() != n || j.at("graphs").get<std::size_t>() != graphs)
        throw std::runtime_error("checkpoint " + path.string() + " belongs to a different run");
      header = true;
    } else if (type == "graph") {
      GraphCensus c = census_from_json(j);
      done.emplace(c.graph_index, std::move(c));
    }
  }
  if (!done.empty() && !header) throw std::runtime_error("checkpoint " + path.string() + " has no header");
  return done;
}

}  // namespace

VerificationReport verify_theorem(std::size_t n, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 5) throw std::invalid_argument("verify_theorem requires n >= 5");
  const std::vector<SignedGraph> graphs = options.graphs ? *options.graphs : enumerate_underlying(n);
  for (const auto& g : graphs)
    if (g.order() != n) throw std::invalid_argument("graph list contains a graph of order " + std::to_string(g.order()));

  std::map<std::size_t, GraphCensus> preloaded;
  std::optional<CheckpointWriter> writer;
  if (options.checkpoint) {
    if (options.resume) preloaded = load_checkpoint(*options.checkpoint, n, graphs.size());
    // Rewritten from what survived, which also drops a torn final line.
    writer.emplace(*options.checkpoint, false);
    writer->line({{"type", "header"}, {"n", n}, {"graphs", graphs.size()}, {"tol", options.tol}});
    for (const auto& [i, c] : preloaded) {
      auto j = to_json(c);
      j["type"] = "graph";
      writer->line(j);
    }
    writer->flush();
  }

  std::vector<std::optional<GraphCensus>> results(graphs.size());
  for (auto& [i, c] : preloaded)
    if (i < results.size()) results[i] = c;

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::size_t completed = preloaded.size();
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      {
        std::lock_guard lock(mu);
        if (results[i] || failure) continue;
      }
      try {
        GraphCensus c = census_of(graphs[i], i, options.tol);
        std::lock_guard lock(mu);
        results[i] = std::move(c);
        ++completed;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        ++completed;
      }
      cv.notify_one();
    }
  };

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  // Coordinator: records are written in graph order so the checkpoint is
  // independent of scheduling.
  std::size_t written = 0;
  std::uint64_t classes_done = 0;
  std::uint64_t since_flush = 0;
  {
    std::unique_lock lock(mu);
    for (;;) {
      while (written < results.size() && results[written]) {
        const auto& c = *results[written];
        classes_done += c.classes;
        if (writer && !preloaded.contains(written)) {
          auto j = to_json(c);
          j["type"] = "graph";
          writer->line(j);
          since_flush += c.classes;
          if (since_flush >= options.checkpoint_every) {
            writer->line({{"type", "progress"}, {"graphs_done", written + 1}, {"classes_done", classes_done}});
            writer->flush();
            since_flush = 0;
          }
        }
        ++written;
        if (options.on_progress) options.on_progress({written, results.size(), classes_done});
      }
      if (completed >= results.size() || failure) break;
      cv.wait(lock);
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  while (written < results.size()) {
    // Stragglers finished after the loop saw `completed`; drain them.
    const auto& c = *results[written];
    classes_done += c.classes;
    if (writer && !preloaded.contains(written)) {
      auto j = to_json(c);
      j["type"] = "graph";
      writer->line(j);
    }
    ++written;
  }
  if (writer) {
    writer->line({{"type", "progress"}, {"graphs_done", written}, {"classes_done", classes_done}});
    writer->flush();
  }

  VerificationReport rep;
  rep.n = n;
  rep.underlying_graphs = graphs.size();
  for (const auto& r : results) {
    const auto& c = *r;
    rep.switching_classes += c.classes;
    rep.unbalanced_classes += c.unbalanced;
    rep.candidate_classes += c.candidates;
    keep_max(rep.max_lambda1, c.max_candidate);
    keep_max(rep.max_lambda1_balanced, c.max_balanced);
    keep_max(rep.max_lambda1_unbalanced_any, c.max_unbalanced_any);
  }
  if (rep.max_lambda1)
    for (const auto& r : results)
      for (const auto& m : r->maximizers)
        if (m.lambda1 >= *rep.max_lambda1 - options.tol) rep.maximizers.push_back(m);

  const SignedGraph extremal = gamma1(n);
  rep.gamma1_index = index(extremal);
  const IntPolynomial extremal_poly = char_poly_exact(extremal);
  for (const auto& m : rep.maximizers) {
    if (char_poly_exact(m.graph) != extremal_poly) ++rep.charpoly_mismatches;
    if (switching_isomorphic(m.graph, extremal)) ++rep.maximizers_switching_isomorphic;
  }
  std::vector<const SignedGraph*> distinct;
  for (const auto& m : rep.maximizers) {
    const bool known = std::any_of(distinct.begin(), distinct.end(), [&](const SignedGraph* d) {
      return d->edge_count() == m.graph.edge_count() && switching_isomorphic(*d, m.graph).has_value();
    });
    if (!known) distinct.push_back(&m.graph);
  }
  rep.maximizer_classes = distinct.size();
  rep.verdict = rep.max_lambda1 && std::abs(*rep.max_lambda1 - rep.gamma1_index) <= options.tol &&
                !rep.maximizers.empty() && rep.maximizers_switching_isomorphic == rep.maximizers.size();
  rep.seconds = seconds_since(t0);
  return rep;
}

Lemma33Report lemma33_report(std::size_t n) {
  Lemma33Report rep;
  rep.n = n;
  for (const auto& g : enumerate_underlying(n)) {
    ++rep.graphs;
    if (n >= 4 && find_ck(g, 4)) continue;
    ++rep.c4_free;
    if (n == 0) continue;
    if (!c4free_bound_check(g).applicable_holds) rep.failures.push_back(g);
  }
  rep.holds = rep.failures.empty();
  return rep;
}

bool verify_lemma33(std::size_t n) { return lemma33_report(n).holds; }

nlohmann::json to_json(const VerificationReport& r) {
  return {{"n", r.n},
          {"underlying_graphs", r.underlying_graphs},
          {"switching_classes", r.switching_classes},
          {"unbalanced_classes", r.unbalanced_classes},
          {"unbalanced_c4free_classes", r.candidate_classes},
          {"max_lambda1", opt_json(r.max_lambda1)},
          {"gamma1_lambda1", r.gamma1_index},
          {"maximizers", maximizers_json(r.maximizers)},
          {"maximizers_switching_isomorphic_to_gamma1", r.maximizers_switching_isomorphic},
          {"maximizer_classes", r.maximizer_classes},
          {"maximizer_charpoly_mismatches", r.charpoly_mismatches},
          {"max_lambda1_balanced", opt_json(r.max_lambda1_balanced)},
          {"max_lambda1_unbalanced_any", opt_json(r.max_lambda1_unbalanced_any)},
          {"verdict", r.verdict}};
}

nlohmann::json to_json(const GraphCensus& c) {
  return {{"index", c.graph_index},
          {"classes", c.classes},
          {"unbalanced", c.unbalanced},
          {"candidates", c.candidates},
          {"max_candidate", opt_json(c.max_candidate)},
          {"max_balanced", opt_json(c.max_balanced)},
          {"max_unbalanced_any", opt_json(c.max_unbalanced_any)},
          {"maximizers", maximizers_json(c.maximizers)}};
}

GraphCensus census_from_json(const nlohmann::json& j) {
  GraphCensus c;
  c.graph_index = j.at("index").get<std::size_t>();
  c.classes = j.at("classes").get<std::uint64_t>();
  c.unbalanced = j.at("unbalanced").get<std::uint64_t>();
  c.candidates = j.at("candidates").get<std::uint64_t>();
  c.max_candidate = opt_from(j.at("max_candidate"));
  c.max_balanced = opt_from(j.at("max_balanced"));
  c.max_unbalanced_any = opt_from(j.at("max_unbalanced_any"));
  for (const auto& m : j.at("maximizers")) c.maximizers.push_back({m.at("lambda1").get<double>(), parse_sg(m.at("sg").get<std::string>())});
  return c;
}

nlohmann::json to_json(const Lemma33Report& r) {
  auto failures = nlohmann::json::array();
  for (const auto& g : r.failures) failures.push_back(to_graph6(g));
  return {{"n", r.n}, {"graphs", r.graphs}, {"c4_free", r.c4_free}, {"failures", failures}, {"holds", r.holds}};
}

}  // namespace sgraph
