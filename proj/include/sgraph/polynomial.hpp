#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sgraph/matrix.hpp"

namespace sgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, stored low degree
/// first and kept trimmed (no trailing zeros; the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(std::size_t degree);
  /// x - r
  static IntPolynomial linear(long long root);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;

  IntPolynomial derivative() const;
  IntPolynomial pow(std::size_t e) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  struct DivResult;
  /// Exact division by a monic divisor.
  DivResult divmod_monic(const IntPolynomial& divisor) const;
  bool divisible_by(const IntPolynomial& divisor) const;

  /// e.g. "x^3 - 3x - 2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct IntPolynomial::DivResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Largest k with (x - r)^k dividing p. Returns 0 for the zero polynomial.
std::size_t root_multiplicity_exact(const IntPolynomial& p, long long r);

/// det(xI - M) by the Faddeev-LeVerrier recurrence in exact integers.
IntPolynomial char_poly_exact(const Matrix<long long>& m);
IntPolynomial char_poly_exact(const Matrix<int>& m);

/// All distinct real roots, ascending, each to within `tol` absolute.
/// Root counting and isolation use an exact rational Sturm sequence.
std::vector<double> real_roots(const IntPolynomial& p, double tol = 1e-13);

}  // namespace sgraph
