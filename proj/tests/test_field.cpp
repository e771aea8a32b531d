#include <doctest.h>

#include <stdexcept>

#include <map>
#include <vector>

#include "ffappell/field.hpp"

using ffa::FieldContext;
using ffa::FieldElement;

TEST_CASE("F_5 construction") {
  FieldContext f(5, 1);
  CHECK(f.q() == 5);
  CHECK(f.generator() == f.from_int(2));  // 2 is the smallest element of order 4
  CHECK(f.dlog(f.from_int(4)) == 2);
  CHECK(f.dlog(f.one()) == 0);
  CHECK(f.dlog(f.generator()) == 1);
  CHECK(f.inv(f.from_int(2)) == f.from_int(3));
  CHECK(f.trace(f.from_int(3)) == 3);
  CHECK(f.label(f.from_int(4)) == "g^2");
  CHECK(f.parse("g^2") == f.from_int(4));
  CHECK(f.parse("0") == f.zero());
}

TEST_CASE("F_9 construction") {
  FieldContext f(3, 2);
  CHECK(f.q() == 9);
  CHECK(f.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
  CHECK(f.modulus_string() == "x^2 + 1");
  std::vector<int> gen = f.coeffs(f.generator());
  CHECK(gen == std::vector<int>{1, 1});  // t + 1
  CHECK(f.generator_string() == "t + 1");

  FieldElement t = f.from_coeffs(std::vector<int>{0, 1});
  FieldElement t1 = f.from_coeffs(std::vector<int>{1, 1});
  CHECK(f.mul(t1, t1) == f.from_coeffs(std::vector<int>{0, 2}));  // (t+1)^2 = 2t
  CHECK(f.dlog(f.from_int(2)) == 4);                              // (t+1)^4 = 2
  CHECK(f.trace(t) == 0);
  CHECK(f.trace(f.one()) == 2);
  CHECK(f.zeta_order() == 24);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldContext(2, 1), std::invalid_argument);  // p must be odd
  CHECK_THROWS_AS(FieldContext(4, 1), std::invalid_argument);  // p must be prime
  CHECK_THROWS_AS(FieldContext(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(3, 11), std::invalid_argument);  // 3^11 > 2^16
  CHECK_NOTHROW(FieldContext(3, 4));
}

TEST_CASE("field axioms and error paths") {
  FieldContext f(3, 2);
  for (uint32_t c = 0; c < f.q(); ++c) {
    FieldElement a = f.from_code(c);
    CHECK(f.add(a, f.neg(a)) == f.zero());
    CHECK(f.sub(a, a) == f.zero());
    if (c != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
  }
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  CHECK_THROWS_AS(f.dlog(f.zero()), std::domain_error);

  FieldContext g(5, 1);
  CHECK_THROWS_AS(f.add(f.one(), g.one()), std::invalid_argument);  // mixed contexts
  CHECK_THROWS_AS(f.parse("t+1"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse("g^"), std::invalid_argument);
}

TEST_CASE("dlog round trip is a bijection") {
  for (auto [p, r] : std::vector<std::pair<long long, int>>{{5, 1}, {3, 2}, {3, 3}, {11, 2},
                                                            {3, 7}}) {
    FieldContext f(p, r);
    std::vector<bool> seen(f.q() - 1, false);
    for (uint32_t c = 1; c < f.q(); ++c) {
      FieldElement a = f.from_code(c);
      int k = f.dlog(a);
      REQUIRE(k >= 0);
      REQUIRE(k < static_cast<int>(f.q() - 1));
      CHECK_FALSE(seen[k]);
      seen[k] = true;
      CHECK(f.gen_pow(k) == a);
    }
  }
}

TEST_CASE("trace is F_p-linear, onto, Frobenius-stable") {
  for (auto [p, r] : std::vector<std::pair<long long, int>>{{5, 1}, {3, 2}, {3, 4}, {5, 2}}) {
    FieldContext f(p, r);
    // linearity, exhaustive over all pairs (q <= 81)
    for (uint32_t a = 0; a < f.q(); ++a)
      for (uint32_t b = 0; b < f.q(); ++b) {
        FieldElement x = f.from_code(a), y = f.from_code(b);
        CHECK(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % static_cast<int>(f.p()));
      }
    // onto, each fiber exactly q/p elements
    std::map<int, int> fibers;
    for (uint32_t a = 0; a < f.q(); ++a) ++fibers[f.trace(f.from_code(a))];
    CHECK(fibers.size() == f.p());
    for (auto [value, count] : fibers) CHECK(count == static_cast<int>(f.q() / f.p()));
    // trace(a^p) = trace(a)
    for (uint32_t a = 0; a < f.q(); ++a) {
      FieldElement x = f.from_code(a);
      FieldElement xp = x;
      for (uint32_t i = 1; i < f.p(); ++i) xp = f.mul(xp, x);
      CHECK(f.trace(xp) == f.trace(x));
    }
  }
}

TEST_CASE("modulus is deterministic and irreducible by inspection") {
  // lexicographically smallest monic irreducible, low-degree-first comparison
  CHECK(FieldContext(3, 2).modulus() == std::vector<int>{1, 0, 1});    // x^2+1
  CHECK(FieldContext(5, 2).modulus() == std::vector<int>{1, 1, 1});    // x^2+x+1
  CHECK(FieldContext(3, 3).modulus() == std::vector<int>{1, 0, 2, 1}); // x^3+2x^2+1
  // no roots in F_p for the chosen moduli of degree <= 3
  for (auto [p, r] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    FieldContext f(p, r);
    const std::vector<int>& mod = f.modulus();
    for (int x = 0; x < static_cast<int>(p); ++x) {
      long long v = 0;
      for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) v = (v * x + mod[i]) % p;
      CHECK(v != 0);
    }
  }
}
