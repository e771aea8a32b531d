#pragma once

#include <cstdint>

#include "ffappell/cyclo.hpp"
#include "ffappell/field.hpp"

namespace ffa {

/// Multiplicative character chi_k of F_q^x, k mod (q-1), extended by
/// chi(0) = 0 (including the trivial character chi_0 = eps). Values are
/// chi_k(g^j) = zeta_{q-1}^{kj}, embedded in Q(zeta_m) via
/// zeta_{q-1} = zeta_m^p, m = p(q-1).
struct MultChar {
  uint32_t k = 0;
  uint32_t ctx = 0;
  friend bool operator==(const MultChar&, const MultChar&) = default;
};

MultChar character(const FieldContext& ctx, long long k);
MultChar char_product(const FieldContext& ctx, MultChar a, MultChar b);
MultChar char_inverse(const FieldContext& ctx, MultChar a);
bool is_trivial(MultChar a);
std::string char_label(MultChar a);  // "chi_k"

/// Exponent of chi(x) as a power of zeta_m, or -1 when x = 0 (value 0).
int char_exponent(const FieldContext& ctx, MultChar chi, FieldElement x);
/// Exponent of theta(x) = zeta_p^{tr x} as a power of zeta_m (never -1).
int theta_exponent(const FieldContext& ctx, FieldElement x);

CycloNumber eval_mult(const FieldContext& ctx, MultChar chi, FieldElement x);
CycloNumber eval_add(const FieldContext& ctx, FieldElement x);

/// chi_k(-1) = (-1)^k, since dlog(-1) = (q-1)/2.
int sign_at_minus_one(MultChar chi);

Rational delta(MultChar chi);       // 1 iff trivial
Rational delta(const FieldContext& ctx, FieldElement x);  // 1 iff x = 0

}  // namespace ffa
