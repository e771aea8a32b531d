#include "ffappell/chars.hpp"

#include <stdexcept>

namespace ffa {

namespace {

void check_ctx(const FieldContext& ctx, MultChar a) {
  if (a.ctx != ctx.id()) throw std::invalid_argument("character belongs to a different context");
}

}  // namespace

MultChar character(const FieldContext& ctx, long long k) {
  long long n = ctx.q() - 1;
  long long v = k % n;
  if (v < 0) v += n;
  return {static_cast<uint32_t>(v), ctx.id()};
}

MultChar char_product(const FieldContext& ctx, MultChar a, MultChar b) {
  check_ctx(ctx, a);
  check_ctx(ctx, b);
  return character(ctx, static_cast<long long>(a.k) + b.k);
}

MultChar char_inverse(const FieldContext& ctx, MultChar a) {
  check_ctx(ctx, a);
  return character(ctx, -static_cast<long long>(a.k));
}

bool is_trivial(MultChar a) { return a.k == 0; }

std::string char_label(MultChar a) { return "chi_" + std::to_string(a.k); }

int char_exponent(const FieldContext& ctx, MultChar chi, FieldElement x) {
  check_ctx(ctx, chi);
  if (x.code == 0) {
    if (x.ctx != ctx.id()) throw std::invalid_argument("field element belongs to a different context");
    return -1;
  }
  long long n = ctx.q() - 1;
  long long e = static_cast<long long>(chi.k) * ctx.dlog(x) % n;
  return static_cast<int>(ctx.p() * e);
}

int theta_exponent(const FieldContext& ctx, FieldElement x) {
  return static_cast<int>((ctx.q() - 1) * static_cast<uint32_t>(ctx.trace(x)));
}

CycloNumber eval_mult(const FieldContext& ctx, MultChar chi, FieldElement x) {
  int e = char_exponent(ctx, chi, x);
  if (e < 0) return CycloNumber(ctx.zeta_order());
  return CycloNumber::root_of_unity(ctx.zeta_order(), e);
}

CycloNumber eval_add(const FieldContext& ctx, FieldElement x) {
  return CycloNumber::root_of_unity(ctx.zeta_order(), theta_exponent(ctx, x));
}

int sign_at_minus_one(MultChar chi) { return (chi.k % 2 == 0) ? 1 : -1; }

Rational delta(MultChar chi) { return Rational(chi.k == 0 ? 1 : 0); }

Rational delta(const FieldContext& ctx, FieldElement x) {
  if (x.ctx != ctx.id()) throw std::invalid_argument("field element belongs to a different context");
  return Rational(x.code == 0 ? 1 : 0);
}

}  // namespace ffa
