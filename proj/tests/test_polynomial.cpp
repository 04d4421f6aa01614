#include <doctest.h>

#include <random>

#include "sgraph/polynomial.hpp"
#include "support.hpp"

using namespace sgraph;

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial x = IntPolynomial::monomial(1);
  const IntPolynomial p{-2, -3, 0, 1};  // x^3 - 3x - 2 = (x+1)^2 (x-2)
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(p.to_string() == "x^3 - 3x - 2");
  CHECK(IntPolynomial::linear(-1).pow(2) * IntPolynomial::linear(2) == p);
  CHECK(p.evaluate(BigInt(2)) == 0);
  CHECK(p.derivative() == IntPolynomial{-3, 0, 3});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(x * x + x == IntPolynomial{0, 1, 1});
  CHECK(IntPolynomial{1, 2, 0, 0} == IntPolynomial{1, 2});
  CHECK(IntPolynomial().to_string() == "0");

  const auto d = p.divmod_monic(IntPolynomial::linear(2));
  CHECK(d.quotient == IntPolynomial{1, 2, 1});
  CHECK(d.remainder.is_zero());
  CHECK(p.divisible_by(IntPolynomial::linear(-1).pow(2)));
  CHECK_FALSE(p.divisible_by(IntPolynomial::linear(1)));
  CHECK_THROWS(p.divmod_monic(IntPolynomial{1, 2}));
}

TEST_CASE("root multiplicity") {
  const IntPolynomial p = IntPolynomial::linear(-1).pow(4) * IntPolynomial::linear(3);
  CHECK(root_multiplicity_exact(p, -1) == 4);
  CHECK(root_multiplicity_exact(p, 3) == 1);
  CHECK(root_multiplicity_exact(p, 0) == 0);
}

TEST_CASE("characteristic polynomial of small matrices") {
  const auto j = Matrix<long long>::from_rows({{0, 1}, {1, 0}});
  CHECK(char_poly_exact(j) == IntPolynomial{-1, 0, 1});
  const auto t = Matrix<long long>::from_rows({{2, 1, 0}, {0, 3, 4}, {0, 0, -1}});
  CHECK(char_poly_exact(t) == IntPolynomial::linear(2) * IntPolynomial::linear(3) * IntPolynomial::linear(-1));
  CHECK(char_poly_exact(Matrix<long long>(0, 0)) == IntPolynomial{1});
  CHECK_THROWS(char_poly_exact(Matrix<long long>(2, 3)));
}

TEST_CASE("characteristic polynomial against principal minors") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const SignedGraph g = sgtest::random_graph(rng, 0, 9);
    CHECK(char_poly_exact(g.adjacency_matrix()) == sgtest::charpoly_by_minors(g));
  }
}

TEST_CASE("real roots") {
  const IntPolynomial p = IntPolynomial::linear(-1).pow(2) * IntPolynomial::linear(2);
  const auto r = real_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-13));

  const IntPolynomial q{-2, 0, 1};  // x^2 - 2
  const auto s = real_roots(q);
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[1] - std::sqrt(2.0)) < 1e-13);
  CHECK(real_roots(IntPolynomial{1, 0, 1}).empty());
  CHECK(real_roots(IntPolynomial{0, 1}) == std::vector<double>{0.0});

  // roots of x^3 - x^2 - 7x + 1, each checked by a sign change
  const IntPolynomial c{1, -7, -1, 1};
  const auto cr = real_roots(c);
  REQUIRE(cr.size() == 3);
  for (double x : cr) CHECK(c.evaluate(static_cast<long double>(x - 1e-12)) * c.evaluate(static_cast<long double>(x + 1e-12)) <= 0);
}

TEST_CASE("real roots of random products of linear factors") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    IntPolynomial p{1};
    std::set<long long> roots;
    const int deg = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < deg; ++i) {
      const long long r = static_cast<long long>(rng() % 21) - 10;
      roots.insert(r);
      p = p * IntPolynomial::linear(r);
    }
    const auto found = real_roots(p);
    REQUIRE(found.size() == roots.size());
    std::size_t i = 0;
    for (long long r : roots) CHECK(std::abs(found[i++] - static_cast<double>(r)) < 1e-12);
  }
}
