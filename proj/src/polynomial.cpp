#include "sgraph/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgraph {

using Rational = boost::multiprecision::cpp_rational;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, 0);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(long long root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial::DivResult IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  const long dd = divisor.degree();
  if (degree() < dd) return {{}, *this};
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (long k = degree(); k >= dd; --k) {
    const BigInt lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = lead;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= lead * divisor.c_[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
  return divmod_monic(divisor).remainder.is_zero();
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::size_t root_multiplicity_exact(const IntPolynomial& p, long long r) {
  if (p.is_zero()) return 0;
  std::size_t k = 0;
  IntPolynomial cur = p;
  const IntPolynomial lin = IntPolynomial::linear(r);
  for (;;) {
    auto [q, rem] = cur.divmod_monic(lin);
    if (!rem.is_zero()) return k;
    ++k;
    cur = std::move(q);
  }
}

namespace {

IntPolynomial faddeev_leverrier(const Matrix<BigInt>& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  // Sparse row lists of A; adjacency-like inputs are mostly zeros.
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) rows[i].emplace_back(j, a(i, j));

  Matrix<BigInt> mk(n, n, BigInt(0));  // M_0 = 0
  Matrix<BigInt> next(n, n, BigInt(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) next(i, j) = 0;
      for (const auto& [col, val] : rows[i])
        for (std::size_t j = 0; j < n; ++j)
          if (mk(col, j) != 0) next(i, j) += val * mk(col, j);
      next(i, i) += c[n - k + 1];
    }
    std::swap(mk, next);
    // c_{n-k} = -tr(A M_k) / k
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [col, val] : rows[i]) tr += val * mk(col, i);
    if (tr % static_cast<long long>(k) != 0)
      throw std::logic_error("Faddeev-LeVerrier: inexact division");
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

template <typename T>
Matrix<BigInt> to_big(const Matrix<T>& m) {
  Matrix<BigInt> out(m.rows(), m.cols(), BigInt(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

// Rational polynomials for the Sturm machinery, low degree first.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_quot(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - db, 0);
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
  return d;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational rat_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

class Sturm {
 public:
  explicit Sturm(const RatPoly& squarefree) {
    chain_.push_back(squarefree);
    chain_.push_back(rat_derivative(squarefree));
    while (!chain_.back().empty()) {
      RatPoly r = rat_rem(chain_[chain_.size() - 2], chain_.back());
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      chain_.push_back(std::move(r));
    }
    if (chain_.back().empty()) chain_.pop_back();
  }

  int variations(const Rational& x) const {
    int v = 0;
    int prev = 0;
    for (const auto& p : chain_) {
      const int s = sign_of(rat_eval(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int sign_at(const Rational& x) const { return sign_of(rat_eval(chain_.front(), x)); }

 private:
  std::vector<RatPoly> chain_;
};

}  // namespace

IntPolynomial char_poly_exact(const Matrix<long long>& m) { return faddeev_leverrier(to_big(m)); }
IntPolynomial char_poly_exact(const Matrix<int>& m) { return faddeev_leverrier(to_big(m)); }

std::vector<double> real_roots(const IntPolynomial& p, double tol) {
  if (p.degree() <= 0) return {};
  RatPoly rp;
  for (const auto& c : p.coefficients()) rp.emplace_back(c);
  RatPoly g = rat_gcd(rp, rat_derivative(rp));
  RatPoly sf = g.size() > 1 ? rat_quot(rp, g) : rp;
  const Sturm sturm(sf);

  Rational bound = 0;
  for (std::size_t k = 0; k + 1 < sf.size(); ++k) {
    Rational r = sf[k] / sf.back();
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  bound += 1;

  const Rational width_goal(tol);
  std::vector<double> roots;
  struct Interval {
    Rational lo, hi;
  };
  std::vector<Interval> work{{-bound, bound}};

  // Any interior point that is not a root; finitely many roots means the
  // search over fractions i/d terminates.
  auto split_point = [&](const Rational& lo, const Rational& hi) {
    for (long long d = 2;; ++d)
      for (long long i = d / 2; i >= 1; --i) {
        Rational m = lo + (hi - lo) * Rational(i, d);
        if (sturm.sign_at(m) != 0) return m;
      }
  };

  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sturm.variations(lo) - sturm.variations(hi);
    if (count == 0) continue;
    if (count > 1) {
      const Rational m = split_point(lo, hi);
      work.push_back({m, hi});
      work.push_back({lo, m});
      continue;
    }
    const int s_lo = sturm.sign_at(lo);
    while (hi - lo > width_goal) {
      const Rational mid = (lo + hi) / 2;
      const int s = sturm.sign_at(mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(Rational((lo + hi) / 2).convert_to<double>());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sgraph
