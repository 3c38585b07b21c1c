#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilfibre/symalg.hpp"
#include "oracles.hpp"

using namespace nilfibre;
using oracle::c;
using oracle::poly;
using oracle::x;

TEST_CASE("add: identity, cancellation, two-term minor") {
  const Polynomial p = x(1, 2) * x(2, 3) + Polynomial(4);
  CHECK(add(p, Polynomial()) == p);
  CHECK(add(x(1, 2), -x(1, 2)).is_zero());
  const Polynomial i2 = add(x(2, 4) * x(3, 5), -(x(2, 5) * x(3, 4)));
  CHECK(i2.size() == 2);
  CHECK(to_text(i2) == "x_{2,4}*x_{3,5} - x_{2,5}*x_{3,4}");
}

TEST_CASE("mul: unit, distribution, powers of c") {
  const Polynomial p = x(1, 2) * x(2, 4) + x(1, 3) * x(3, 4);
  CHECK(mul(p, Polynomial(1)) == p);
  CHECK(mul(p, x(4, 6)) == poly({{1, {{1, 2}, {2, 4}, {4, 6}}}, {1, {{1, 3}, {3, 4}, {4, 6}}}}));
  const Polynomial cc = mul(c(), c());
  CHECK(cc.size() == 1);
  CHECK(cc.terms().begin()->first.exponent(Variable::deform()) == 2);
  CHECK(to_text(cc) == "c^2");
}

TEST_CASE("substitute_zero") {
  const Polynomial i1 = poly({{1, {{1, 2}, {2, 4}, {4, 6}}},
                              {1, {{1, 2}, {2, 5}, {5, 6}}},
                              {1, {{1, 3}, {3, 4}, {4, 6}}},
                              {1, {{1, 3}, {3, 5}, {5, 6}}}});
  CHECK(substitute_zero(i1, {}) == i1);
  CHECK(substitute_zero(i1, {Variable::coord(2, 5), Variable::coord(3, 5)}) ==
        poly({{1, {{1, 2}, {2, 4}, {4, 6}}}, {1, {{1, 3}, {3, 4}, {4, 6}}}}));
  CHECK(substitute_zero(x(1, 2) * x(2, 4), {Variable::coord(1, 2)}).is_zero());
}

TEST_CASE("det_symbolic examples") {
  PolyMatrix m{{x(2, 4), x(2, 5)}, {x(3, 4), x(3, 5)}};
  CHECK(det_symbolic(m) == x(2, 4) * x(3, 5) - x(2, 5) * x(3, 4));
  PolyMatrix d{{c(), Polynomial()}, {Polynomial(), c()}};
  CHECK(det_symbolic(d) == c() * c());
  CHECK(det_symbolic(PolyMatrix{}) == Polynomial(1));
  CHECK_THROWS_AS(det_symbolic(PolyMatrix{{x(1, 2), x(1, 3)}}), std::invalid_argument);
}

TEST_CASE("det_symbolic matches the Leibniz expansion on random sparse matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int size = 1; size <= 5; ++size)
    for (int trial = 0; trial < 12; ++trial) {
      PolyMatrix m(size, std::vector<Polynomial>(size));
      for (auto& row : m)
        for (auto& e : row)
          if (sparse(rng) == 0) e = oracle::random_poly(rng, 3, 6, true);
      CHECK(det_symbolic(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("lowest_c_coefficient") {
  const auto low = lowest_c_coefficient(c() * c() * x(1, 2) + c() * c() * c() * x(1, 3));
  CHECK(low.coeff == x(1, 2));
  CHECK(low.power == 2);
  const Polynomial plain = x(1, 2) * x(2, 3) - x(1, 3);
  CHECK(lowest_c_coefficient(plain).coeff == plain);
  CHECK(lowest_c_coefficient(plain).power == 0);
  CHECK_THROWS_WITH_AS(lowest_c_coefficient(Polynomial()), "zero polynomial has no lowest coefficient",
                       std::domain_error);
}

TEST_CASE("lowest_c_coefficient shifts with a power of c") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = oracle::random_poly(rng, 4, 5, true);
    if (p.is_zero()) continue;
    const auto base = lowest_c_coefficient(p);
    for (int k = 1; k <= 3; ++k) {
      Polynomial q = p;
      for (int e = 0; e < k; ++e) q *= c();
      const auto shifted = lowest_c_coefficient(q);
      CHECK(shifted.coeff == base.coeff);
      CHECK(shifted.power == base.power + k);
    }
  }
}

TEST_CASE("equals_up_to_sign") {
  const Polynomial p = x(2, 4) * x(3, 5) - x(2, 5) * x(3, 4);
  CHECK(equals_up_to_sign(p, p));
  CHECK(equals_up_to_sign(p, -p));
  CHECK(equals_up_to_sign(p, x(2, 5) * x(3, 4) - x(2, 4) * x(3, 5)));
  CHECK_FALSE(equals_up_to_sign(p, p + x(1, 2)));
  CHECK_FALSE(equals_up_to_sign(p, 2 * p));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial p = oracle::random_poly(rng, 4, 5, true);
    const Polynomial q = oracle::random_poly(rng, 4, 5, true);
    const Polynomial r = oracle::random_poly(rng, 4, 5, true);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Polynomial());
  }
}

TEST_CASE("substitute_zero composes") {
  std::mt19937_64 rng(5);
  const std::set<Variable> a{Variable::coord(1, 2), Variable::coord(2, 4)};
  const std::set<Variable> b{Variable::coord(3, 5), Variable::coord(1, 2), Variable::deform()};
  std::set<Variable> ab = a;
  ab.insert(b.begin(), b.end());
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = oracle::random_poly(rng, 6, 5, true);
    CHECK(substitute_zero(substitute_zero(p, a), b) == substitute_zero(p, ab));
  }
}

TEST_CASE("term order, sign normalization and text") {
  // Graded: higher degree first; x_{1,2} outranks x_{1,3}; c last.
  const Polynomial p = x(1, 3) + x(1, 2) * x(2, 3) + c() + x(1, 2);
  CHECK(to_text(p) == "x_{1,2}*x_{2,3} + x_{1,2} + x_{1,3} + c");
  CHECK(to_text(sign_normalized(-p)) == to_text(p));
  CHECK(to_text(Polynomial(-3) * x(1, 2) * c() * c()) == "-3*x_{1,2}*c^2");
  CHECK(to_text(Polynomial()) == "0");
  CHECK(to_text(Polynomial(7)) == "7");
  CHECK_THROWS_AS(Variable::coord(3, 3), std::invalid_argument);
}

TEST_CASE("variable order: c first, then coordinates lexicographically") {
  CHECK(Variable::deform() < Variable::coord(1, 2));
  CHECK(Variable::coord(1, 2) < Variable::coord(1, 3));
  CHECK(Variable::coord(1, 9) < Variable::coord(2, 3));
}

TEST_CASE("multilinear and homogeneous predicates") {
  CHECK((x(1, 2) * x(2, 3) + x(1, 3) * c()).is_homogeneous());
  CHECK_FALSE((x(1, 2) + x(1, 2) * x(2, 3)).is_homogeneous());
  CHECK((x(1, 2) * c() * c()).is_multilinear());
  CHECK_FALSE((x(1, 2) * x(1, 2)).is_multilinear());
}
