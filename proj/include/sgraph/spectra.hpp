#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgraph/matrix.hpp"
#include "sgraph/polynomial.hpp"
#include "sgraph/signed_graph.hpp"
#include "sgraph/switching.hpp"

namespace sgraph {

inline constexpr double kDefaultEigenTol = 1e-12;

struct SpectrumReport {
  /// Sorted descending.
  std::vector<double> eigenvalues;
  double lambda1 = 0.0;
  /// Unit eigenvector for lambda1; its largest-magnitude entry (lowest index
  /// on ties) is nonnegative.
  std::vector<double> leading_vector;
  /// ||A x - lambda1 x||_2
  double residual = 0.0;
  double tolerance = kDefaultEigenTol;
  /// All eigenvectors, column k belonging to eigenvalues[k].
  Matrix<double> eigenvectors;
};

/// Cyclic Jacobi on a symmetric matrix until the off-diagonal Frobenius
/// norm is <= tol. Throws std::invalid_argument if max |M - M^T| > 1e-12.
SpectrumReport eigenvalues_sym(const Matrix<double>& m, double tol = kDefaultEigenTol);

SpectrumReport spectrum(const SignedGraph& g, double tol = kDefaultEigenTol);

/// Largest adjacency eigenvalue lambda1(g).
double index(const SignedGraph& g);
/// Largest absolute adjacency eigenvalue; differs from the index for e.g. (K_n,-).
double spectral_radius(const SignedGraph& g);

IntPolynomial char_poly_exact(const SignedGraph& g);

/// y^T M y / y^T y. Throws on a zero vector or dimension mismatch.
double rayleigh(const Matrix<double>& m, std::span<const double> y);

struct NonnegativeForm {
  SignedGraph graph;
  SpectrumReport report;
  SwitchSet switch_set;
};

/// Switches at {v : x_v < 0} for the computed leading eigenvector x; the
/// result has an entrywise nonnegative leading eigenvector and the same
/// spectrum.
NonnegativeForm nonneg_eigenvector_form(const SignedGraph& g, double tol = kDefaultEigenTol);

/// Ordered blocks X_1..X_k covering 0..n-1.
class VertexPartition {
 public:
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint
  /// and cover 0..n-1.
  VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

  /// "1|2|3|4-10": '|' separates blocks, entries are 1-based vertices or
  /// inclusive ranges, comma separated within a block.
  static VertexPartition parse(std::size_t n, const std::string& spec);
  static VertexPartition discrete(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> blocks_;
};

struct EquitabilityViolation {
  std::size_t block_row;  // i
  std::size_t block_col;  // j
  Vertex row;             // a vertex of X_i whose row sum into X_j differs
  long long expected;     // row sum of the first vertex of X_i
  long long found;
};

struct QuotientResult {
  std::optional<Matrix<long long>> quotient;
  std::optional<EquitabilityViolation> violation;
  bool equitable() const noexcept { return quotient.has_value(); }
};

QuotientResult quotient_matrix(const Matrix<int>& m, const VertexPartition& partition);

/// Distinct real roots of det(xI - Q), descending, via its exact
/// characteristic polynomial.
std::vector<double> quotient_eigenvalues(const Matrix<long long>& q);

/// True iff every eigenvalue of Q lies within tol of an eigenvalue of M.
bool check_quotient_containment(const Matrix<int>& m, const Matrix<long long>& q, double tol);

/// The index bounds for C4-free graphs, read as "lambda is at most the
/// largest root": lambda^2 - lambda - (n-1) for odd n and
/// lambda^3 - lambda^2 - (n-1) lambda + 1 for even n. The cubic is also
/// positive on [0, its middle root), which only the edgeless graph reaches.
struct C4BoundCheck {
  double odd_value = 0.0;
  double even_value = 0.0;
  double odd_root = 0.0;
  double even_root = 0.0;
  bool odd_holds = false;
  bool even_holds = false;
  /// The inequality selected by the parity of n.
  bool applicable_holds = false;
};

/// Slack (times max(1, n)) for comparing lambda with the roots; the
/// extremal graphs attain equality.
inline constexpr double kBoundSlack = 1e-9;

C4BoundCheck c4free_bound_check(std::size_t n, double lambda);
C4BoundCheck c4free_bound_check(const SignedGraph& g);

}  // namespace sgraph
