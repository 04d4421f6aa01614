#pragma once

#include <cstddef>
#include <string>

#include "sgraph/matrix.hpp"
#include "sgraph/polynomial.hpp"
#include "sgraph/signed_graph.hpp"
#include "sgraph/spectra.hpp"

namespace sgraph {

enum class Family { Gamma1, Gamma2, CompletePositive, CompleteNegative };

struct FamilySpec {
  Family family;
  std::size_t n;
};

/// Accepts "gamma1", "gamma2", "kn+", "kn-".
Family parse_family(const std::string& name);
std::string family_name(Family f);

SignedGraph make_family(const FamilySpec& spec);

/// Vertices v1..vn are 0..n-1. v1v2 is the only negative edge, v1 and v2
/// are both joined to v3, and {v3..vn} is an all-positive clique.
/// Throws std::invalid_argument for n < 5.
SignedGraph gamma1(std::size_t n);

/// v1v2 negative; v1, v2 joined to v3 and v4; v3 and v4 non-adjacent and
/// joined to all of {v5..vn}, an all-positive clique. Throws for n < 5.
SignedGraph gamma2(std::size_t n);

/// x^3 + (5-n)x^2 + (5-2n)x + (n-5); det(xI - Q1) = (x-1) f_cubic(n).
IntPolynomial f_cubic(std::size_t n);
/// x^3 + (6-n)x^2 + (9-3n)x + (2n-12); det(xI - Q2) = (x-1) g_cubic(n).
IntPolynomial g_cubic(std::size_t n);

/// The root of f_cubic(n) inside (n-3, n-2): bisection down to tol, then
/// Newton polish.
double predicted_index_gamma1(std::size_t n, double tol = 1e-14);

/// Quotient of A(gamma1(n)) over {v1},{v2},{v3},{v4..vn}.
Matrix<long long> q1_matrix(std::size_t n);
/// Quotient of A(gamma2(n)) over {v1},{v2},{v3,v4},{v5..vn}.
Matrix<long long> q2_matrix(std::size_t n);

VertexPartition gamma1_partition(std::size_t n);
VertexPartition gamma2_partition(std::size_t n);

}  // namespace sgraph
