#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ffappell/rational.hpp"

namespace ffa {

int euler_phi(int m);

/// m-th cyclotomic polynomial, monic, coefficients low-degree-first
/// (size phi(m)+1). Computed by dividing x^m - 1 by the product of the
/// cyclotomic polynomials of the proper divisors of m.
std::vector<long long> cyclotomic_polynomial(int m);

/// Element of Q(zeta_m), stored as a sparse sum of c_e * zeta_m^e with exact
/// rational coefficients and exponents in [0, m). The representation is not
/// unique; canonicalization (reduction modulo Phi_m) runs lazily, only inside
/// zero tests, equality and serialization.
class CycloNumber {
 public:
  struct Term {
    int e;
    Rational c;
  };

  explicit CycloNumber(int m);  // zero of Q(zeta_m)
  static CycloNumber from_rational(int m, const Rational& c);
  static CycloNumber root_of_unity(int m, long long e);  // zeta_m^e

  int order() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool structurally_zero() const { return terms_.empty(); }

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.equals(b); }

  CycloNumber scaled(const Rational& s) const;
  CycloNumber shifted(long long e) const;  // multiply by zeta_m^e
  CycloNumber conjugate() const;           // zeta_m^e -> zeta_m^{m-e}

  bool is_zero() const;
  bool equals(const CycloNumber& o) const;
  bool is_one() const;

  /// Canonical representative: exponents below phi(m) after reduction mod
  /// Phi_m. Reducing a canonical value is the identity.
  CycloNumber canonical() const;

  std::complex<double> to_complex() const;

  /// Human-readable canonical form, e.g. "-1/5 + z^3" with z = zeta_m.
  std::string to_string() const;

  /// Multiplicative inverse as the Galois-conjugate product over the field
  /// norm. Guarded fallback only; the sum evaluators use the closed-form
  /// inverses from the Gauss sum lemmas instead.
  CycloNumber inverse() const;

 private:
  int m_;
  std::vector<Term> terms_;  // ascending exponent, nonzero coefficients
  friend class CycloAccum;
};

/// Dense accumulation buffer over the exponent range [0, m). The sum kernels
/// add thousands of shifted sparse values; accumulating densely and collecting
/// once keeps them allocation-light.
class CycloAccum {
 public:
  explicit CycloAccum(int m);
  int order() const { return m_; }
  void clear();
  void add(const CycloNumber& a);
  void add_shifted(const CycloNumber& a, long long e);
  void add_shifted_scaled(const CycloNumber& a, long long e, const Rational& s);
  void add_term(long long e, const Rational& c);
  void add_product(const CycloNumber& a, const CycloNumber& b);
  CycloNumber take();  // collect and reset

 private:
  int m_;
  std::vector<Rational> buf_;
};

}  // namespace ffa
