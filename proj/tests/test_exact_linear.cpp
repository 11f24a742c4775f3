#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mfp/error.hpp"
#include "mfp/exact_linear.hpp"

using namespace mfp;
using mfp::testing::q;

namespace {

UnivariatePolynomial U(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.push_back(x);
  return UnivariatePolynomial(std::move(r));
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = mfp::testing::random_rational(rng, 5, 3);
  return m;
}

}  // namespace

TEST_CASE("sturm_real_root_count") {
  CHECK(sturm_real_root_count(U({1, 0, 1})) == 0);
  CHECK(sturm_real_root_count(U({-5, 0, 0, 1})) == 1);
  CHECK(sturm_real_root_count(U({-2, 0, 1})) == 2);
  // Repeated roots are counted once: (z-1)^2 (z+3).
  CHECK(sturm_real_root_count(U({1, -2, 1}) * U({3, 1})) == 2);
  CHECK_THROWS_AS(sturm_real_root_count(UnivariatePolynomial{}), Error);
}

TEST_CASE("sturm_count_in is half-open") {
  auto f = U({-1, 0, 1});  // roots -1, 1
  CHECK(sturm_count_in(f, q(-1), q(1)) == 1);
  CHECK(sturm_count_in(f, q(-2), q(1)) == 2);
  CHECK(sturm_count_in(f, q(0), q(1, 2)) == 0);
}

TEST_CASE("rational_roots finds exactly the rational ones") {
  // (2z - 3)(z^2 - 2)(z + 5)
  auto f = U({-3, 2}) * U({-2, 0, 1}) * U({5, 1});
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == q(-5));
  CHECK(roots[1] == q(3, 2));
  CHECK(rational_roots(U({1, 0, 1})).empty());
  CHECK(rational_roots(U({0, 1})) == std::vector<Rational>{q(0)});
}

TEST_CASE("characteristic_polynomial") {
  CHECK(characteristic_polynomial(RationalMatrix(2, 2)) == U({0, 0, 1}));
  CHECK(characteristic_polynomial(RationalMatrix::identity(2)) == U({1, -2, 1}));
  CHECK(characteristic_polynomial(RationalMatrix::diagonal({q(2), q(-4)})) == U({-8, 2, 1}));
  CHECK_THROWS_AS(characteristic_polynomial(RationalMatrix(2, 3)), Error);
  // Companion-like 3x3 with a zero sub-diagonal entry forces pivoting.
  RationalMatrix m(3, 3);
  m(0, 2) = 1;
  m(1, 0) = 0;
  m(2, 0) = 1;
  m(1, 1) = 2;
  // det(lI - m) = (l - 2)(l^2 - 1)
  CHECK(characteristic_polynomial(m) == U({2, -1, -2, 1}));
}

TEST_CASE("symmetric_signature") {
  CHECK(symmetric_signature(RationalMatrix::identity(3)) == Signature{3, 0});
  CHECK(symmetric_signature(RationalMatrix::diagonal({q(2), q(-4)})) == Signature{1, 1});
  CHECK(symmetric_signature(RationalMatrix(2, 2)) == Signature{0, 0});
  RationalMatrix ns(2, 2);
  ns(0, 1) = 1;
  CHECK_THROWS_AS(symmetric_signature(ns), Error);
}

TEST_CASE("property: rational arithmetic is exact") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = mfp::testing::random_rational(rng, 1000, 997);
    Rational b = mfp::testing::random_rational(rng, 1000, 997);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("property: charpoly is a similarity invariant") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 4;
    RationalMatrix m = random_matrix(rng, n);
    RationalMatrix p = random_matrix(rng, n);
    if (rank(p) < n) continue;
    CHECK(characteristic_polynomial(p * m * inverse(p)) == characteristic_polynomial(m));
  }
}

TEST_CASE("property: signature agrees with Sturm counts on each half-line") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 5;
    RationalMatrix a = random_matrix(rng, n);
    RationalMatrix s = a + a.transpose();
    auto chi = characteristic_polynomial(s);
    if (gcd(chi, chi.derivative()).degree() > 0) continue;  // repeated eigenvalue
    Rational bound = 1;
    for (const auto& c : chi.coefficients()) bound += abs(c);
    std::size_t pos = sturm_count_in(chi, q(0), bound);
    std::size_t neg = sturm_count_in(chi, -bound, q(0)) - (chi.evaluate(q(0)) == 0 ? 1 : 0);
    Signature sig = symmetric_signature(s);
    CHECK(sig.n_plus == pos);
    CHECK(sig.n_minus == neg);
    ++checked;
  }
  CHECK(checked > 20);
}
