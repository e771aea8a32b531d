#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffa {

/// Element of one F_q, identified by a canonical code: 0 is the zero element,
/// a nonzero element with polynomial-basis coefficients (a_0,...,a_{r-1}) has
/// code sum a_i p^i. Carries the owning context id so cross-context use is
/// rejected.
struct FieldElement {
  uint32_t code = 0;
  uint32_t ctx = 0;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// F_{p^r} with deterministic construction: the modulus is the
/// lexicographically smallest monic irreducible of degree r over F_p
/// (coefficients compared low-degree-first) and the generator is the smallest
/// primitive element in the same coefficient order. Immutable after
/// construction; all tables are dense.
class FieldContext {
 public:
  static constexpr uint32_t kDefaultMaxQ = 1u << 16;

  FieldContext(long long p, int r, uint32_t max_q = kDefaultMaxQ);

  uint32_t p() const { return p_; }
  int r() const { return r_; }
  uint32_t q() const { return q_; }
  uint32_t id() const { return id_; }
  /// Order m = p(q-1) of the cyclotomic field holding every character value.
  int zeta_order() const { return static_cast<int>(p_ * (q_ - 1)); }

  /// Monic modulus, coefficients low-degree-first, size r+1. For r = 1 this is
  /// just x.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0, id_}; }
  FieldElement one() const { return {one_code_, id_}; }
  FieldElement generator() const { return {gen_code_, id_}; }

  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElement a) const;
  FieldElement from_code(uint32_t code) const;
  FieldElement from_int(long long n) const;  // n mod p embedded in the prime field

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // throws on zero

  int trace(FieldElement a) const;  // in [0, p-1]
  int dlog(FieldElement a) const;   // in [0, q-2], throws on zero
  FieldElement gen_pow(long long k) const;

  /// Text labels used by every interface: "0" or "g^k".
  std::string label(FieldElement a) const;
  FieldElement parse(const std::string& label) const;

  std::string modulus_string() const;    // e.g. "x^2 + 1"
  std::string generator_string() const;  // e.g. "t + 1"

 private:
  void check(FieldElement a) const;
  uint32_t raw_add(uint32_t a, uint32_t b) const;
  uint32_t raw_neg(uint32_t a) const;
  uint32_t raw_mul(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0;
  int r_ = 0;
  uint32_t q_ = 0;
  uint32_t id_ = 0;
  uint32_t one_code_ = 1;
  uint32_t gen_code_ = 0;
  std::vector<int> modulus_;
  std::vector<uint32_t> exp_;    // k -> code of g^k, size q-1
  std::vector<uint32_t> dlog_;   // code -> k (entry 0 unused)
  std::vector<uint8_t> trace_;   // code -> trace in [0, p-1]
};

}  // namespace ffa
