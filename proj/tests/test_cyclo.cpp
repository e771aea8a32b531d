#include <doctest.h>

#include <stdexcept>

#include <complex>
#include <cstdint>

#include "ffappell/cyclo.hpp"

using ffa::CycloNumber;
using ffa::Rational;

namespace {

CycloNumber zeta(int m, long long e) { return CycloNumber::root_of_unity(m, e); }
CycloNumber rat(int m, long long n, long long d = 1) {
  return CycloNumber::from_rational(m, Rational(n, d));
}

struct Rng {
  uint64_t s;
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

// random sparse value: a few monomials with small rational coefficients
CycloNumber random_value(Rng& rng, int m) {
  CycloNumber v(m);
  int terms = 1 + static_cast<int>(rng.below(4));
  for (int i = 0; i < terms; ++i) {
    long long num = rng.below(9) - 4;
    long long den = 1 + rng.below(4);
    v += zeta(m, rng.below(m)).scaled(Rational(num, den));
  }
  return v;
}

}  // namespace

TEST_CASE("roots of unity basics") {
  CHECK(zeta(3, 3).equals(rat(3, 1)));
  CHECK(zeta(12, 6).equals(rat(12, -1)));
  CHECK((zeta(3, 1) + zeta(3, 2)).equals(rat(3, -1)));
  CHECK(zeta(5, 7).terms()[0].e == 2);  // exponent reduced mod m
}

TEST_CASE("cyclo arithmetic") {
  CycloNumber a = zeta(3, 1) - zeta(3, 2);
  CHECK(a.conjugate().equals(zeta(3, 2) - zeta(3, 1)));
  CHECK((a * a).equals(rat(3, -3)));
  CHECK(a.scaled(Rational(1, 1)).equals(a));
  CHECK((zeta(4, 2) + rat(4, 1)).is_zero());
  CHECK_FALSE((zeta(5, 1) - zeta(5, 2)).is_zero());
  CHECK((rat(6, 0)).is_zero());
  CHECK_THROWS(zeta(3, 1) + zeta(4, 1));  // mixed orders
}

TEST_CASE("is_zero via cyclotomic reduction") {
  CycloNumber s(3);
  s += rat(3, 1);
  s += zeta(3, 1);
  s += zeta(3, 2);
  CHECK(s.is_zero());
  // zeta_9^3 is a primitive cube root: 1 + z^3 + z^6 = 0 in Q(zeta_9)
  CHECK((rat(9, 1) + zeta(9, 3) + zeta(9, 6)).is_zero());
}

TEST_CASE("to_complex embedding") {
  CHECK(std::abs(zeta(4, 1).to_complex() - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(rat(7, -3).to_complex() - std::complex<double>(-3, 0)) < 1e-12);
  CycloNumber a = zeta(3, 1) - zeta(3, 2);
  CHECK(std::abs(a.to_complex() - std::complex<double>(0, 1.7320508075688772)) < 1e-9);
}

TEST_CASE("to_complex is multiplicative on random values") {
  Rng rng{12345};
  for (int trial = 0; trial < 1200; ++trial) {
    int m = 2 + static_cast<int>(rng.below(40));
    CycloNumber a = random_value(rng, m);
    CycloNumber b = random_value(rng, m);
    std::complex<double> lhs = (a * b).to_complex();
    std::complex<double> rhs = a.to_complex() * b.to_complex();
    double scale = std::max(1.0, std::abs(rhs));
    CHECK(std::abs(lhs - rhs) / scale < 1e-9);
  }
}

TEST_CASE("conjugation is an involution") {
  Rng rng{99};
  for (int trial = 0; trial < 500; ++trial) {
    int m = 1 + static_cast<int>(rng.below(60));
    CycloNumber a = random_value(rng, m);
    CycloNumber cc = a.conjugate().conjugate();
    REQUIRE(cc.terms().size() == a.terms().size());
    for (size_t i = 0; i < a.terms().size(); ++i) {
      CHECK(cc.terms()[i].e == a.terms()[i].e);
      CHECK(cc.terms()[i].c == a.terms()[i].c);
    }
  }
}

TEST_CASE("conjugation is a ring automorphism") {
  Rng rng{7};
  for (int trial = 0; trial < 200; ++trial) {
    int m = 2 + static_cast<int>(rng.below(30));
    CycloNumber a = random_value(rng, m);
    CycloNumber b = random_value(rng, m);
    CHECK((a * b).conjugate().equals(a.conjugate() * b.conjugate()));
    CHECK((a + b).conjugate().equals(a.conjugate() + b.conjugate()));
  }
}

TEST_CASE("canonical reduction is idempotent for every monomial, m <= 200") {
  for (int m = 1; m <= 200; ++m) {
    for (int e = 0; e < m; ++e) {
      CycloNumber once = zeta(m, e).canonical();
      CycloNumber twice = once.canonical();
      REQUIRE(once.terms().size() == twice.terms().size());
      for (size_t i = 0; i < once.terms().size(); ++i) {
        CHECK(once.terms()[i].e == twice.terms()[i].e);
        CHECK(once.terms()[i].c == twice.terms()[i].c);
      }
    }
  }
}

TEST_CASE("monomial product is exponent addition mod m") {
  Rng rng{2024};
  for (int trial = 0; trial < 400; ++trial) {
    int m = 1 + static_cast<int>(rng.below(100));
    long a = rng.below(m), b = rng.below(m);
    CycloNumber prod = zeta(m, a) * zeta(m, b);
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].e == (a + b) % m);
    CHECK(prod.terms()[0].c == Rational(1));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(ffa::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(ffa::cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(ffa::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  // first index with a coefficient outside {-1,0,1}
  CHECK(ffa::cyclotomic_polynomial(105)[7] == -2);
  CHECK(ffa::euler_phi(1) == 1);
  CHECK(ffa::euler_phi(12) == 4);
  CHECK(ffa::euler_phi(105) == 48);
}

TEST_CASE("guarded inverse") {
  Rng rng{5};
  for (int m : {4, 12, 20, 21}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloNumber a = random_value(rng, m);
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
    }
    CHECK_THROWS_AS(CycloNumber(m).inverse(), std::domain_error);
  }
}

TEST_CASE("printing") {
  CHECK(rat(5, 0).to_string() == "0");
  CHECK(rat(5, 3, 5).to_string() == "3/5");
  CHECK(zeta(5, 1).to_string() == "z");
  CHECK((zeta(5, 3).scaled(Rational(-1)) + rat(5, 1, 2)).to_string() == "1/2 - z^3");
  CHECK(zeta(4, 3).to_string() == "-z");  // z^3 = -z in Q(i)
}
