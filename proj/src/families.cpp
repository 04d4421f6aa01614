#include "sgraph/families.hpp"

#include <cmath>
#include <stdexcept>

namespace sgraph {

namespace {

void require_order(std::size_t n, std::size_t min, const char* what) {
  if (n < min)
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min) + ", got " +
                                std::to_string(n));
}

long long ll(std::size_t n) { return static_cast<long long>(n); }

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "gamma1") return Family::Gamma1;
  if (name == "gamma2") return Family::Gamma2;
  if (name == "kn+") return Family::CompletePositive;
  if (name == "kn-") return Family::CompleteNegative;
  throw std::invalid_argument("unknown family '" + name + "' (expected gamma1, gamma2, kn+, kn-)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Gamma1: return "gamma1";
    case Family::Gamma2: return "gamma2";
    case Family::CompletePositive: return "kn+";
    case Family::CompleteNegative: return "kn-";
  }
  return "?";
}

SignedGraph make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Gamma1: return gamma1(spec.n);
    case Family::Gamma2: return gamma2(spec.n);
    case Family::CompletePositive:
      require_order(spec.n, 1, "kn+");
      return complete_signed(spec.n, Sign::Positive);
    case Family::CompleteNegative:
      require_order(spec.n, 1, "kn-");
      return complete_signed(spec.n, Sign::Negative);
  }
  throw std::invalid_argument("unknown family");
}

SignedGraph gamma1(std::size_t n) {
  require_order(n, 5, "gamma1");
  SignedGraph g(n);
  g.set_edge(0, 1, Sign::Negative);
  g.set_edge(0, 2, Sign::Positive);
  g.set_edge(1, 2, Sign::Positive);
  for (Vertex u = 2; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_edge(u, v, Sign::Positive);
  return g;
}

SignedGraph gamma2(std::size_t n) {
  require_order(n, 5, "gamma2");
  SignedGraph g(n);
  g.set_edge(0, 1, Sign::Negative);
  for (Vertex hub : {Vertex{2}, Vertex{3}}) {
    g.set_edge(0, hub, Sign::Positive);
    g.set_edge(1, hub, Sign::Positive);
    for (Vertex w = 4; w < n; ++w) g.set_edge(hub, w, Sign::Positive);
  }
  for (Vertex u = 4; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_edge(u, v, Sign::Positive);
  return g;
}

IntPolynomial f_cubic(std::size_t n) {
  require_order(n, 5, "f_cubic");
  const long long k = ll(n);
  return IntPolynomial{k - 5, 5 - 2 * k, 5 - k, 1};
}

IntPolynomial g_cubic(std::size_t n) {
  require_order(n, 5, "g_cubic");
  const long long k = ll(n);
  return IntPolynomial{2 * k - 12, 9 - 3 * k, 6 - k, 1};
}

double predicted_index_gamma1(std::size_t n, double tol) {
  const IntPolynomial f = f_cubic(n);
  const IntPolynomial df = f.derivative();
  long double lo = static_cast<long double>(n) - 3.0L;
  long double hi = static_cast<long double>(n) - 2.0L;
  // cubic(n-3) = -2 and cubic(n-2) = (n-3)(n+1) > 0.
  while (hi - lo > tol) {
    const long double mid = (lo + hi) / 2;
    if (f.evaluate(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  long double x = (lo + hi) / 2;
  if (const long double d = df.evaluate(x); d != 0) {
    const long double polished = x - f.evaluate(x) / d;
    if (polished >= lo && polished <= hi) x = polished;
  }
  return static_cast<double>(x);
}

Matrix<long long> q1_matrix(std::size_t n) {
  require_order(n, 5, "q1_matrix");
  const long long k = ll(n);
  return Matrix<long long>::from_rows({{0, -1, 1, 0}, {-1, 0, 1, 0}, {1, 1, 0, k - 3}, {0, 0, 1, k - 4}});
}

Matrix<long long> q2_matrix(std::size_t n) {
  require_order(n, 5, "q2_matrix");
  const long long k = ll(n);
  return Matrix<long long>::from_rows({{0, -1, 2, 0}, {-1, 0, 2, 0}, {1, 1, 0, k - 4}, {0, 0, 2, k - 5}});
}

VertexPartition gamma1_partition(std::size_t n) {
  require_order(n, 5, "gamma1_partition");
  std::vector<Vertex> rest;
  for (Vertex v = 3; v < n; ++v) rest.push_back(v);
  return VertexPartition(n, {{0}, {1}, {2}, rest});
}

VertexPartition gamma2_partition(std::size_t n) {
  require_order(n, 5, "gamma2_partition");
  std::vector<Vertex> rest;
  for (Vertex v = 4; v < n; ++v) rest.push_back(v);
  return VertexPartition(n, {{0}, {1}, {2, 3}, rest});
}

}  // namespace sgraph
