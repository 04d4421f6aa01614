#include "sgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgraph {

namespace {

double off_norm(const Matrix<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

void normalize_sign(std::vector<double>& x) {
  if (x.empty()) return;
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  for (double v : x) {
    if (std::abs(v) >= best - 1e-12) {
      if (v < 0)
        for (double& w : x) w = -w;
      return;
    }
  }
}

double residual_of(const Matrix<double>& m, double lambda, const std::vector<double>& x) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double acc = -lambda * x[i];
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    r += acc * acc;
  }
  return std::sqrt(r);
}

}  // namespace

SpectrumReport eigenvalues_sym(const Matrix<double>& m, double tol) {
  if (!m.square()) throw std::invalid_argument("eigenvalues_sym: matrix must be square");
  if (!(tol > 0)) throw std::invalid_argument("eigenvalues_sym: tolerance must be positive");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12)
        throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");

  Matrix<double> a = m;
  Matrix<double> v = Matrix<double>::identity(n);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm(a) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  SpectrumReport rep;
  rep.tolerance = tol;
  rep.eigenvalues.resize(n);
  rep.eigenvectors = Matrix<double>(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    rep.eigenvalues[k] = a(order[k], order[k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, order[k]);
    normalize_sign(col);
    for (std::size_t i = 0; i < n; ++i) rep.eigenvectors(i, k) = col[i];
  }
  if (n > 0) {
    rep.lambda1 = rep.eigenvalues.front();
    rep.leading_vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) rep.leading_vector[i] = rep.eigenvectors(i, 0);
    rep.residual = residual_of(m, rep.lambda1, rep.leading_vector);
  }
  return rep;
}

SpectrumReport spectrum(const SignedGraph& g, double tol) {
  return eigenvalues_sym(g.adjacency_matrix_real(), tol);
}

double index(const SignedGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("index of the empty graph is undefined");
  return spectrum(g).lambda1;
}

double spectral_radius(const SignedGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty graph is undefined");
  const auto rep = spectrum(g);
  return std::max(std::abs(rep.eigenvalues.front()), std::abs(rep.eigenvalues.back()));
}

IntPolynomial char_poly_exact(const SignedGraph& g) { return char_poly_exact(g.adjacency_matrix()); }

double rayleigh(const Matrix<double>& m, std::span<const double> y) {
  if (!m.square() || y.size() != m.rows()) throw std::invalid_argument("rayleigh: dimension mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    num += y[i] * row;
    den += y[i] * y[i];
  }
  if (den == 0.0) throw std::invalid_argument("rayleigh: zero vector");
  return num / den;
}

NonnegativeForm nonneg_eigenvector_form(const SignedGraph& g, double tol) {
  const SpectrumReport host = spectrum(g, tol);
  std::vector<Vertex> flip;
  for (Vertex v = 0; v < g.order(); ++v)
    if (host.leading_vector[v] < 0) flip.push_back(v);
  NonnegativeForm out{switch_at(g, SwitchSet(flip)), host, SwitchSet(flip)};
  // Switching is the similarity D A D with D = diag(+-1); carry the host's
  // eigenvectors across instead of re-solving so the degenerate case keeps
  // the vector that was actually sign-normalized.
  for (Vertex v : flip)
    for (std::size_t k = 0; k < g.order(); ++k) out.report.eigenvectors(v, k) = -out.report.eigenvectors(v, k);
  for (std::size_t i = 0; i < g.order(); ++i) out.report.leading_vector[i] = out.report.eigenvectors(i, 0);
  out.report.residual = residual_of(out.graph.adjacency_matrix_real(), out.report.lambda1, out.report.leading_vector);
  return out;
}

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    for (Vertex v : b) {
      if (v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v + 1) + " out of range");
      if (seen[v]) throw std::invalid_argument("partition repeats vertex " + std::to_string(v + 1));
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover every vertex");
}

VertexPartition VertexPartition::discrete(std::size_t n) {
  std::vector<std::vector<Vertex>> blocks(n);
  for (Vertex v = 0; v < n; ++v) blocks[v] = {v};
  return VertexPartition(n, std::move(blocks));
}

VertexPartition VertexPartition::parse(std::size_t n, const std::string& spec) {
  auto parse_num = [&](const std::string& s) -> Vertex {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition entry '" + s + "'");
    const unsigned long v = std::stoul(s);
    if (v < 1) throw std::invalid_argument("partition vertices are 1-based");
    return v - 1;
  };
  std::vector<std::vector<Vertex>> blocks;
  std::stringstream ss(spec);
  std::string block;
  while (std::getline(ss, block, '|')) {
    std::vector<Vertex> members;
    std::stringstream bs(block);
    std::string item;
    while (std::getline(bs, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
      if (const auto dash = item.find('-'); dash != std::string::npos) {
        const Vertex lo = parse_num(item.substr(0, dash));
        const Vertex hi = parse_num(item.substr(dash + 1));
        if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
        for (Vertex v = lo; v <= hi; ++v) members.push_back(v);
      } else {
        members.push_back(parse_num(item));
      }
    }
    blocks.push_back(std::move(members));
  }
  if (!spec.empty() && spec.back() == '|') blocks.emplace_back();
  return VertexPartition(n, std::move(blocks));
}

QuotientResult quotient_matrix(const Matrix<int>& m, const VertexPartition& partition) {
  if (!m.square() || m.rows() != partition.order())
    throw std::invalid_argument("quotient_matrix: partition order does not match matrix");
  const auto& blocks = partition.blocks();
  const std::size_t k = blocks.size();
  Matrix<long long> q(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto row_sum = [&](Vertex r) {
        long long s = 0;
        for (Vertex c : blocks[j]) s += m(r, c);
        return s;
      };
      const long long first = row_sum(blocks[i].front());
      for (Vertex r : blocks[i]) {
        const long long s = row_sum(r);
        if (s != first) return {std::nullopt, EquitabilityViolation{i, j, r, first, s}};
      }
      q(i, j) = first;
    }
  }
  return {std::move(q), std::nullopt};
}

std::vector<double> quotient_eigenvalues(const Matrix<long long>& q) {
  auto roots = real_roots(char_poly_exact(q));
  std::reverse(roots.begin(), roots.end());
  return roots;
}

bool check_quotient_containment(const Matrix<int>& m, const Matrix<long long>& q, double tol) {
  const auto full = eigenvalues_sym(m.cast<double>()).eigenvalues;
  for (double r : quotient_eigenvalues(q)) {
    const bool hit = std::any_of(full.begin(), full.end(), [&](double e) { return std::abs(e - r) <= tol; });
    if (!hit) return false;
  }
  return true;
}

namespace {

/// Largest real root of x^3 - x^2 - (n-1)x + 1; the cubic is <= 0 at 1 for
/// n >= 2 and positive at n + 1.
double even_bound_root(std::size_t n) {
  if (n < 2) return 1.0;
  const long double a = static_cast<long double>(n) - 1.0L;
  auto f = [a](long double x) { return x * x * x - x * x - a * x + 1.0L; };
  long double lo = 1.0L, hi = static_cast<long double>(n) + 1.0L;
  for (int i = 0; i < 200 && hi - lo > 1e-18L; ++i) {
    const long double mid = (lo + hi) / 2;
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return static_cast<double>(lo);
}

}  // namespace

C4BoundCheck c4free_bound_check(std::size_t n, double lambda) {
  const double nm1 = static_cast<double>(n) - 1.0;
  C4BoundCheck out;
  out.odd_value = lambda * lambda - lambda - nm1;
  out.even_value = lambda * lambda * lambda - lambda * lambda - nm1 * lambda + 1.0;
  out.odd_root = n == 0 ? 0.0 : (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0)) / 2.0;
  out.even_root = even_bound_root(n);
  const double slack = kBoundSlack * std::max(1.0, static_cast<double>(n));
  out.odd_holds = lambda <= out.odd_root + slack;
  out.even_holds = lambda <= out.even_root + slack;
  out.applicable_holds = n % 2 == 1 ? out.odd_holds : out.even_holds;
  return out;
}

C4BoundCheck c4free_bound_check(const SignedGraph& g) {
  return c4free_bound_check(g.order(), g.order() == 0 ? 0.0 : index(underlying(g)));
}

}  // namespace sgraph
