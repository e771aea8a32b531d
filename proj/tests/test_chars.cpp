#include <doctest.h>

#include <stdexcept>

#include "ffappell/chars.hpp"

using namespace ffa;

TEST_CASE("multiplicative character values") {
  FieldContext f(5, 1);
  MultChar eps = character(f, 0);
  CHECK(eval_mult(f, eps, f.zero()).is_zero());  // chi(0) = 0 including eps
  for (uint32_t c = 1; c < f.q(); ++c) CHECK(eval_mult(f, eps, f.from_code(c)).is_one());
  MultChar quad = character(f, 2);
  CHECK(eval_mult(f, quad, f.from_int(2)).equals(CycloNumber::from_rational(20, Rational(-1))));
  CHECK(sign_at_minus_one(quad) == 1);
  CHECK(sign_at_minus_one(character(f, 1)) == -1);
  CHECK(eval_mult(f, quad, f.from_int(-1)).equals(CycloNumber::from_rational(20, Rational(1))));
}

TEST_CASE("additive character") {
  FieldContext f5(5, 1);
  CHECK(eval_add(f5, f5.zero()).is_one());
  // theta(2) = zeta_5^2 = zeta_20^8
  CHECK(eval_add(f5, f5.from_int(2)).equals(CycloNumber::root_of_unity(20, 8)));
  FieldContext f9(3, 2);
  FieldElement t = f9.from_coeffs(std::vector<int>{0, 1});
  CHECK(eval_add(f9, t).is_one());  // trace(t) = 0
  // theta(a+b) = theta(a) theta(b), exhaustive
  for (uint32_t a = 0; a < f9.q(); ++a)
    for (uint32_t b = 0; b < f9.q(); ++b) {
      FieldElement x = f9.from_code(a), y = f9.from_code(b);
      CHECK(eval_add(f9, f9.add(x, y)).equals(eval_add(f9, x) * eval_add(f9, y)));
    }
  // theta(x) theta(-x) = 1
  for (uint32_t a = 0; a < f9.q(); ++a) {
    FieldElement x = f9.from_code(a);
    CHECK((eval_add(f9, x) * eval_add(f9, f9.neg(x))).is_one());
  }
}

TEST_CASE("character group operations") {
  FieldContext f(5, 1);
  CHECK(is_trivial(char_inverse(f, character(f, 0))));
  CHECK(char_product(f, character(f, 1), character(f, 3)).k == 0);
  CHECK(char_inverse(f, character(f, 2)).k == 2);  // quadratic character self-inverse
  CHECK(char_label(character(f, 3)) == "chi_3");
  CHECK(character(f, -1).k == 3);
  // chi_1 has order exactly q-1
  MultChar acc = character(f, 1);
  int order = 1;
  while (!is_trivial(acc)) {
    acc = char_product(f, acc, character(f, 1));
    ++order;
  }
  CHECK(order == static_cast<int>(f.q() - 1));
}

TEST_CASE("delta functions") {
  FieldContext f(5, 1);
  CHECK(delta(character(f, 0)) == Rational(1));
  CHECK(delta(character(f, 1)) == Rational(0));
  CHECK(delta(f, f.zero()) == Rational(1));
  CHECK(delta(f, f.one()) == Rational(0));
}

TEST_CASE("orthogonality: sum over characters") {
  for (auto [p, r] : std::vector<std::pair<long long, int>>{{3, 1}, {5, 1}, {3, 2}, {3, 3}, {3, 4}}) {
    FieldContext f(p, r);
    const int m = f.zeta_order();
    for (uint32_t c = 0; c < f.q(); ++c) {
      FieldElement x = f.from_code(c);
      CycloNumber sum(m);
      for (uint32_t k = 0; k + 1 < f.q(); ++k) sum += eval_mult(f, character(f, k), x);
      long long expect = (x == f.one()) ? f.q() - 1 : 0;
      CHECK(sum.equals(CycloNumber::from_rational(m, Rational(expect))));
    }
  }
}

TEST_CASE("multiplicativity over nonzero pairs") {
  for (auto [p, r] : std::vector<std::pair<long long, int>>{{5, 1}, {13, 1}, {3, 2}}) {
    FieldContext f(p, r);
    for (uint32_t k = 0; k + 1 < f.q(); ++k) {
      MultChar chi = character(f, k);
      for (uint32_t a = 1; a < f.q(); ++a)
        for (uint32_t b = 1; b < f.q(); ++b) {
          FieldElement x = f.from_code(a), y = f.from_code(b);
          CHECK(eval_mult(f, chi, f.mul(x, y)).equals(eval_mult(f, chi, x) * eval_mult(f, chi, y)));
        }
    }
  }
}

TEST_CASE("context mismatch") {
  FieldContext f(5, 1), g(7, 1);
  CHECK_THROWS_AS(eval_mult(f, character(g, 1), f.one()), std::invalid_argument);
  CHECK_THROWS_AS(eval_mult(f, character(f, 1), g.one()), std::invalid_argument);
  CHECK_THROWS_AS(char_product(f, character(f, 1), character(g, 1)), std::invalid_argument);
}
