#include <doctest.h>

#include "excov/qpoly.hpp"

using excov::Int;
using excov::QPoly;

TEST_CASE("arithmetic basics") {
  const QPoly a = QPoly::one_plus_q_pow(3);           // 1 + q^3
  const QPoly b = QPoly::monomial(2, -1) + QPoly(5);  // 2q^-1 + 5

  CHECK((a + b).coeff(0) == 5 + 1);
  CHECK((a * b).coeff(2) == 2);
  CHECK((a * b).coeff(3) == 5);
  CHECK((a - a).is_zero());
  CHECK(a.eval_one() == 2);
  CHECK((a * b).min_degree() == -1);
  CHECK((a * b).max_degree() == 3);
  CHECK(!b.is_polynomial());
  CHECK(a.is_polynomial());
}

TEST_CASE("zero coefficients are dropped") {
  QPoly p;
  p.add_term(4, 7);
  p.add_term(4, -7);
  CHECK(p.is_zero());
  CHECK(p == QPoly());
}

TEST_CASE("exact division") {
  const QPoly num = QPoly::one_plus_q_pow(1) * QPoly::one_plus_q_pow(3);
  SUBCASE("divides") {
    auto q = num.exact_div(QPoly::one_plus_q_pow(3));
    REQUIRE(q.has_value());
    CHECK(*q == QPoly::one_plus_q_pow(1));
  }
  SUBCASE("reports failure instead of truncating") {
    CHECK(!num.exact_div(QPoly::one_plus_q_pow(2)).has_value());
    CHECK(!QPoly::one_plus_q_pow(4).exact_div(QPoly::one_minus_q_pow(3)).has_value());
  }
  SUBCASE("laurent divisor") {
    // (1 + q^-1) divides q^2 + q^3
    const QPoly n2 = QPoly::q_pow(2) + QPoly::q_pow(3);
    auto q = n2.exact_div(QPoly::one() + QPoly::q_pow(-1));
    REQUIRE(q.has_value());
    CHECK(*q == QPoly::q_pow(3));
  }
  SUBCASE("geometric ratio") {
    auto q = QPoly::one_minus_q_pow(8).exact_div(QPoly::one_minus_q_pow(4));
    REQUIRE(q.has_value());
    CHECK(*q == QPoly::one_plus_q_pow(4));
  }
}

TEST_CASE("division by randomized products round-trips") {
  // hand-rolled LCG keeps this deterministic
  uint64_t state = 42;
  auto rnd = [&](int m) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % m);
  };
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a, b;
    for (int t = 0; t < 4; ++t) {
      a.add_term(rnd(9) - 2, rnd(7) - 3);
      b.add_term(rnd(6) - 1, rnd(7) - 3);
    }
    if (b.is_zero()) continue;
    const QPoly prod = a * b;
    const auto q = prod.exact_div(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("mirror and printing") {
  QPoly m;  // q + q^2
  m.add_term(1, 1);
  m.add_term(2, 1);
  CHECK(m.mirrored(3) == m);
  CHECK(m.str() == "q + q^2");
  CHECK((QPoly(-1) + QPoly::monomial(-2, 5)).str() == "-1 - 2*q^5");
  CHECK(m.latex() == "q+q^{2}");
  CHECK(QPoly().str() == "0");
}

TEST_CASE("nonnegativity") {
  CHECK(QPoly::one_plus_q_pow(2).nonnegative());
  CHECK(!QPoly::one_minus_q_pow(2).nonnegative());
}
