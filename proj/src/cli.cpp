#include "sgraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgraph/cycles.hpp"
#include "sgraph/enumerate.hpp"
#include "sgraph/families.hpp"
#include "sgraph/io.hpp"
#include "sgraph/proofmoves.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"

namespace sgraph::cli {

namespace {

using nlohmann::json;

/// Bad flag values that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

json charpoly_json(const IntPolynomial& p) {
  auto arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(coefficient_json(c));
  return arr;
}

std::string one_based(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i] + 1;
  return os.str();
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw IoError("cannot write " + *path);
  f << text;
  if (!f) throw IoError("write failed for " + *path);
}

unsigned default_jobs() {
  const char* env = std::getenv(kJobsEnv);
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 1024) throw UsageError(std::string(kJobsEnv) + " must be an integer in 0..1024");
  return static_cast<unsigned>(v);
}

int cmd_gen(const std::string& family, std::size_t n, const std::optional<std::string>& out_path,
            std::ostream& out) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SignedGraph g;
  try {
    g = make_family({f, n});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, out_path, to_sg(g));
  return kOk;
}

int cmd_spectrum(const std::string& path, bool exact, std::ostream& out) {
  const SignedGraph g = read_sg_file(path);
  json j{{"n", g.order()}};
  if (g.order() == 0) {
    j["lambda1"] = nullptr;
    j["eigenvalues"] = json::array();
  } else {
    const SpectrumReport r = spectrum(g);
    j["lambda1"] = r.lambda1;
    j["eigenvalues"] = r.eigenvalues;
    j["leading_vector"] = r.leading_vector;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
  }
  if (exact) j["charpoly"] = charpoly_json(char_poly_exact(g));
  out << j.dump() << '\n';
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const SignedGraph g = read_sg_file(path);
  const BalanceResult bal = is_balanced(g);
  if (bal.balanced) {
    std::vector<Vertex> minus;
    for (Vertex v = 0; v < g.order(); ++v)
      if (bal.bisigning[v] == Sign::Negative) minus.push_back(v);
    out << "balance: balanced\n";
    out << "switch to all-positive at: " << (minus.empty() ? "-" : one_based(minus)) << '\n';
  } else {
    out << "balance: unbalanced\n";
    out << "negative cycle: " << one_based(bal.negative_cycle) << '\n';
  }
  const auto c4 = g.order() >= 4 ? find_negative_ck(g, 4) : std::nullopt;
  out << "C4-negative-free: " << (c4 ? "no" : "yes") << '\n';
  if (c4) out << "negative C4: " << one_based(c4->vertices) << '\n';
  if (const auto c = shortest_negative_cycle(g))
    out << "shortest negative cycle: length " << c->length() << ": " << one_based(c->vertices) << '\n';
  else
    out << "shortest negative cycle: none\n";
  return kOk;
}

int cmd_quotient(const std::string& path, const std::string& partition_spec, std::ostream& out) {
  const SignedGraph g = read_sg_file(path);
  VertexPartition partition = VertexPartition::discrete(g.order());
  try {
    partition = VertexPartition::parse(g.order(), partition_spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--partition: ") + e.what());
  }
  const QuotientResult q = quotient_matrix(g.adjacency_matrix(), partition);
  json j;
  if (q.equitable()) {
    j["equitable"] = true;
    j["quotient"] = q.quotient->to_rows();
    j["charpoly"] = charpoly_json(char_poly_exact(*q.quotient));
    j["eigenvalues"] = quotient_eigenvalues(*q.quotient);
  } else {
    const auto& v = *q.violation;
    j["equitable"] = false;
    j["violation"] = {{"block_row", v.block_row + 1}, {"block_col", v.block_col + 1}, {"vertex", v.row + 1},
                      {"expected", v.expected}, {"found", v.found}};
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_normalize(const std::string& path, std::ostream& out) {
  const SignedGraph g = read_sg_file(path);
  if (g.order() == 0) {
    out << to_sg(g);
    return kOk;
  }
  const NonnegativeForm f = nonneg_eigenvector_form(g);
  out << "# switched at: " << (f.switch_set.empty() ? "-" : one_based(f.switch_set.vertices())) << '\n';
  out << "# lambda1: " << std::setprecision(17) << f.report.lambda1 << '\n';
  out << to_sg(f.graph);
  return kOk;
}

int cmd_verify(std::size_t n, unsigned jobs, const std::optional<std::string>& graphs_path,
               const std::optional<std::string>& out_path, bool long_run,
               const std::optional<std::string>& checkpoint, bool resume, bool progress, std::ostream& out,
               std::ostream& err) {
  VerifyOptions opt;
  opt.jobs = jobs;
  if (graphs_path) {
    opt.graphs = ingest_graph_list(*graphs_path);
  } else {
    if (n < 5 || n > kMaxBuiltinOrder)
      throw UsageError("--n must be in 5.." + std::to_string(kMaxBuiltinOrder) + " without --graphs");
    if (n == kMaxBuiltinOrder && !long_run)
      throw UsageError("n = 7 runs for a long time; pass --long-run (and ideally --checkpoint)");
  }
  if (n < 5) throw UsageError("--n must be at least 5");
  if (resume && !checkpoint) throw UsageError("--resume needs --checkpoint");
  if (checkpoint) opt.checkpoint = *checkpoint;
  opt.resume = resume;
  if (progress) {
    opt.on_progress = [&err](const VerifyProgress& p) {
      if (p.graphs_done % 50 == 0 || p.graphs_done == p.graphs_total)
        err << "verify: " << p.graphs_done << "/" << p.graphs_total << " graphs, " << p.classes_done
            << " classes\n";
    };
  }
  VerificationReport rep;
  try {
    rep = verify_theorem(n, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, out_path, to_json(rep).dump(2) + "\n");
  err << "verify: n=" << n << " verdict " << (rep.verdict ? "true" : "false") << " in " << std::fixed
      << std::setprecision(2) << rep.seconds << " s\n";
  return rep.verdict ? kOk : kVerdictFalse;
}

int cmd_search(std::size_t n, std::uint64_t seed, std::size_t max_steps, std::ostream& out) {
  if (n < 5) throw UsageError("--n must be at least 5");
  const AscentResult r = greedy_ascent(n, seed, max_steps);
  out << std::setprecision(17);
  out << "# start lambda1 " << r.trajectory.front() << '\n';
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    out << "# step " << i + 1 << ' ' << r.steps[i].move.describe() << " lambda1 " << r.trajectory[i + 1] << '\n';
  out << "# " << (r.local_maximum ? "local maximum" : "step limit reached") << " after " << r.steps.size()
      << " steps\n";
  out << to_sg(r.graph);
  return kOk;
}

int cmd_bounds(std::size_t n, std::ostream& out) {
  if (n > kMaxBuiltinOrder) throw UsageError("--n must be at most " + std::to_string(kMaxBuiltinOrder));
  const Lemma33Report rep = lemma33_report(n);
  out << to_json(rep).dump() << '\n';
  return rep.holds ? kOk : kVerdictFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed graph spectra, switching and extremal verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  std::string family, file, partition;
  std::size_t n = 0;
  std::optional<std::string> out_path, graphs_path, checkpoint;
  bool exact = false, long_run = false, resume = false, progress = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;

  auto* gen = app.add_subcommand("gen", "Write a family member as .sg");
  gen->add_option("--family", family, "gamma1 | gamma2 | kn+ | kn-")->required();
  gen->add_option("--n", n, "Order")->required();
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* spec = app.add_subcommand("spectrum", "Print the adjacency spectrum as JSON");
  spec->add_option("file", file, ".sg file")->required();
  spec->add_flag("--exact", exact, "Include the exact characteristic polynomial");

  auto* check = app.add_subcommand("check", "Balance, negative-C4 and shortest negative cycle");
  check->add_option("file", file, ".sg file")->required();

  auto* quot = app.add_subcommand("quotient", "Quotient matrix of an equitable partition");
  quot->add_option("file", file, ".sg file")->required();
  quot->add_option("--partition", partition, "Blocks such as \"1|2|3|4-10\"")->required();

  auto* norm = app.add_subcommand("normalize", "Switch to a nonnegative leading eigenvector");
  norm->add_option("file", file, ".sg file")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive extremal check at order n");
  verify->add_option("--n", n, "Order")->required();
  auto* jobs_opt = verify->add_option("--jobs", jobs, std::string("Worker threads, 0 = all cores (default $") +
                                                          kJobsEnv + " or 1)");
  verify->add_option("--graphs", graphs_path, "Underlying graphs (graph6 or unsigned .sg list)");
  verify->add_option("--out", out_path, "Report file (default stdout)");
  verify->add_flag("--long-run", long_run, "Allow the long n = 7 run");
  verify->add_option("--checkpoint", checkpoint, "JSON-lines checkpoint file");
  verify->add_flag("--resume", resume, "Continue from --checkpoint");
  verify->add_flag("--progress", progress, "Report progress on stderr");

  auto* search = app.add_subcommand("search", "Greedy ascent from a random start");
  search->add_option("--n", n, "Order")->required();
  search->add_option("--seed", seed, "RNG seed")->required();
  search->add_option("--max-steps", max_steps, "Step limit")->required();

  auto* bounds = app.add_subcommand("bounds", "Check the C4-free index bound at order n");
  bounds->add_option("--n", n, "Order")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (verify->parsed() && jobs_opt->count() == 0) jobs = default_jobs();
    if (gen->parsed()) return cmd_gen(family, n, out_path, out);
    if (spec->parsed()) return cmd_spectrum(file, exact, out);
    if (check->parsed()) return cmd_check(file, out);
    if (quot->parsed()) return cmd_quotient(file, partition, out);
    if (norm->parsed()) return cmd_normalize(file, out);
    if (verify->parsed())
      return cmd_verify(n, jobs, graphs_path, out_path, long_run, checkpoint, resume, progress, out, err);
    if (search->parsed()) return cmd_search(n, seed, max_steps, out);
    if (bounds->parsed()) return cmd_bounds(n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  }
  return kUsage;
}

}  // namespace sgraph::cli
