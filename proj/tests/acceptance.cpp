// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "sgraph/enumerate.hpp"
#include "sgraph/families.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"

using namespace sgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome fail(Outcome o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
  return o;
}

Outcome gamma1_charpoly() {
  Outcome o;
  for (std::size_t n = 5; n <= 40; ++n) {
    const IntPolynomial want = IntPolynomial::linear(-1).pow(n - 4) * IntPolynomial::linear(1) * f_cubic(n);
    if (char_poly_exact(gamma1(n)) != want) o = fail(o, "mismatch at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=5..40 exact";
  return o;
}

Outcome gamma1_root() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n = 5; n <= 40; ++n) {
    const double nd = static_cast<double>(n);
    const double idx = index(gamma1(n));
    worst = std::max(worst, std::abs(idx - predicted_index_gamma1(n)));
    if (!(idx > nd - 3 && idx < nd - 2)) o = fail(o, "outside (n-3, n-2) at n=" + std::to_string(n));
    if (std::abs(idx - predicted_index_gamma1(n)) > 1e-9) o = fail(o, "off prediction at n=" + std::to_string(n));
  }
  if (o.pass) {
    std::ostringstream os;
    os << "max |index - predicted| = " << worst << " (tol 1e-9)";
    o.detail = os.str();
  }
  return o;
}

Outcome gamma2_order() {
  Outcome o;
  for (std::size_t n = 5; n <= 40; ++n) {
    const double i1 = index(gamma1(n)), i2 = index(gamma2(n));
    if (!(i2 < i1)) o = fail(o, "index(gamma2) >= index(gamma1) at n=" + std::to_string(n));
    if (n >= 7 && !(i2 < static_cast<double>(n) - 3)) o = fail(o, "index(gamma2) >= n-3 at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=5..40";
  return o;
}

Outcome quotient_containment() {
  Outcome o;
  for (std::size_t n = 5; n <= 20; ++n) {
    if (!check_quotient_containment(gamma1(n).adjacency_matrix(), q1_matrix(n), 1e-8))
      o = fail(o, "Q1 at n=" + std::to_string(n));
    if (!check_quotient_containment(gamma2(n).adjacency_matrix(), q2_matrix(n), 1e-8))
      o = fail(o, "Q2 at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=5..20, tol 1e-8";
  return o;
}

Outcome verify_at(std::size_t n, unsigned jobs, double want) {
  VerifyOptions opt;
  opt.jobs = jobs;
  const VerificationReport r = verify_theorem(n, opt);
  Outcome o;
  std::ostringstream os;
  if (!r.verdict) o = fail(o, "verdict false");
  if (!r.max_lambda1 || std::abs(*r.max_lambda1 - want) > 1e-9) o = fail(o, "max lambda1 off target");
  if (r.maximizers_switching_isomorphic != r.maximizers.size()) o = fail(o, "maximizer not switching isomorphic");
  os << "max lambda1 = " << std::setprecision(15) << r.max_lambda1.value_or(NAN) << ", " << r.maximizers.size()
     << " maximizer(s), " << r.maximizer_classes << " class(es), " << r.switching_classes << " classes scanned";
  if (o.pass) o.detail = os.str();
  else o.detail += "; " + os.str();
  return o;
}

Outcome c4free_bounds() {
  Outcome o;
  for (std::size_t n = 4; n <= 7; ++n)
    if (!verify_lemma33(n)) o = fail(o, "fails at n=" + std::to_string(n));
  if (o.pass) o.detail = "n=4..7";
  return o;
}

Outcome properties() {
  Outcome o;
  std::ostringstream os;
  for (const auto& p : sgtest::all_properties()) {
    os << "\n    " << (p.ok() && p.cases >= sgtest::kPropertyCases ? "ok  " : "FAIL") << ' ' << p.name << " ("
       << p.cases << " cases)";
    if (!p.ok()) {
      o.pass = false;
      os << "\n      first failure: " << p.first_failure;
    }
    if (p.cases < sgtest::kPropertyCases) o.pass = false;
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  const double root6 = static_cast<double>(sgtest::bisect_root(IntPolynomial{1, -7, -1, 1}, 3, 4));
  const std::vector<Criterion> criteria{
      {1, "exact characteristic polynomial of gamma1(n), n=5..40", 5, gamma1_charpoly},
      {2, "index(gamma1(n)) in (n-3, n-2) and equal to the predicted root", 5, gamma1_root},
      {3, "index(gamma2(n)) < index(gamma1(n)); < n-3 for n >= 7", 5, gamma2_order},
      {4, "quotient eigenvalues contained in the adjacency spectrum, n=5..20", 2, quotient_containment},
      {5, "exhaustive verification at n=5 (1 worker)", 30, [] { return verify_at(5, 1, std::sqrt(5.0)); }},
      {6, "exhaustive verification at n=6 (4 workers)", 300, [&] { return verify_at(6, 4, root6); }},
      {7, "C4-free index bound, n=4..7", 120, c4free_bounds},
      {8, "randomized property suites (>= 10^4 cases each)", 180, properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s | %.3f s (budget %.0f s)%s | %s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, c.budget_seconds, in_time ? "" : " OVER BUDGET", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
