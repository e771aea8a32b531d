#include "ffappell/appell.hpp"

#include <stdexcept>

namespace ffa {

bool appell_is_star(AppellKind k) {
  return k == AppellKind::F1Star || k == AppellKind::F2Star || k == AppellKind::F3Star ||
         k == AppellKind::F4Star;
}

size_t appell_char_count(AppellKind k) {
  switch (k) {
    case AppellKind::F1:
    case AppellKind::F1Star:
    case AppellKind::F4Star:
      return 4;
    default:
      return 5;
  }
}

std::vector<std::string> appell_roles(AppellKind k) {
  switch (k) {
    case AppellKind::F1:
    case AppellKind::F1Star:
      return {"A", "B", "B'", "C"};
    case AppellKind::F2:
    case AppellKind::F2Star:
      return {"A", "B", "B'", "C", "C'"};
    case AppellKind::F3:
    case AppellKind::F3Star:
      return {"A", "A'", "B", "B'", "C"};
    case AppellKind::F4Star:
      return {"A", "B", "C", "C'"};
  }
  return {};
}

std::string appell_kind_name(AppellKind k) {
  switch (k) {
    case AppellKind::F1: return "f1";
    case AppellKind::F2: return "f2";
    case AppellKind::F3: return "f3";
    case AppellKind::F1Star: return "f1star";
    case AppellKind::F2Star: return "f2star";
    case AppellKind::F3Star: return "f3star";
    case AppellKind::F4Star: return "f4star";
  }
  return "";
}

std::optional<AppellKind> appell_kind_from_name(const std::string& name) {
  for (AppellKind k : {AppellKind::F1, AppellKind::F2, AppellKind::F3, AppellKind::F1Star,
                       AppellKind::F2Star, AppellKind::F3Star, AppellKind::F4Star})
    if (appell_kind_name(k) == name) return k;
  return std::nullopt;
}

namespace {

void check_spec(const FieldContext& ctx, const AppellSpec& spec) {
  if (spec.chars.size() != appell_char_count(spec.kind))
    throw std::invalid_argument("wrong number of characters for " + appell_kind_name(spec.kind));
  for (MultChar c : spec.chars)
    if (c.ctx != ctx.id()) throw std::invalid_argument("character belongs to a different context");
  if (spec.x.ctx != ctx.id() || spec.y.ctx != ctx.id())
    throw std::invalid_argument("argument belongs to a different context");
}

}  // namespace

CycloNumber appell_fieldsum(const FieldContext& ctx, const AppellSpec& spec) {
  check_spec(ctx, spec);
  const int m = ctx.zeta_order();
  if (spec.x.code == 0 || spec.y.code == 0) return CycloNumber(m);  // eps(xy) = 0
  const FieldElement one = ctx.one();
  CycloAccum acc(m);
  switch (spec.kind) {
    case AppellKind::F1: {
      MultChar A = spec.chars[0], B = spec.chars[1], Bp = spec.chars[2], C = spec.chars[3];
      MultChar AbarC = char_product(ctx, char_inverse(ctx, A), C);
      MultChar Bbar = char_inverse(ctx, B), Bpbar = char_inverse(ctx, Bp);
      int sgn = sign_at_minus_one(A) * sign_at_minus_one(C);
      for (uint32_t code = 0; code < ctx.q(); ++code) {
        FieldElement u = ctx.from_code(code);
        int e0 = char_exponent(ctx, A, u);
        if (e0 < 0) continue;
        int e1 = char_exponent(ctx, AbarC, ctx.sub(one, u));
        if (e1 < 0) continue;
        int e2 = char_exponent(ctx, Bbar, ctx.sub(one, ctx.mul(u, spec.x)));
        if (e2 < 0) continue;
        int e3 = char_exponent(ctx, Bpbar, ctx.sub(one, ctx.mul(u, spec.y)));
        if (e3 < 0) continue;
        acc.add_term(static_cast<long long>(e0) + e1 + e2 + e3, Rational(sgn));
      }
      return acc.take();
    }
    case AppellKind::F2: {
      MultChar A = spec.chars[0], B = spec.chars[1], Bp = spec.chars[2], C = spec.chars[3],
               Cp = spec.chars[4];
      MultChar BbarC = char_product(ctx, char_inverse(ctx, B), C);
      MultChar BpbarCp = char_product(ctx, char_inverse(ctx, Bp), Cp);
      MultChar Abar = char_inverse(ctx, A);
      int sgn = sign_at_minus_one(B) * sign_at_minus_one(Bp) * sign_at_minus_one(C) *
                sign_at_minus_one(Cp);
      for (uint32_t cu = 0; cu < ctx.q(); ++cu) {
        FieldElement u = ctx.from_code(cu);
        int e0 = char_exponent(ctx, B, u);
        if (e0 < 0) continue;
        int e1 = char_exponent(ctx, BbarC, ctx.sub(one, u));
        if (e1 < 0) continue;
        FieldElement ux = ctx.mul(u, spec.x);
        for (uint32_t cv = 0; cv < ctx.q(); ++cv) {
          FieldElement v = ctx.from_code(cv);
          int e2 = char_exponent(ctx, Bp, v);
          if (e2 < 0) continue;
          int e3 = char_exponent(ctx, BpbarCp, ctx.sub(one, v));
          if (e3 < 0) continue;
          int e4 = char_exponent(ctx, Abar, ctx.sub(ctx.sub(one, ux), ctx.mul(v, spec.y)));
          if (e4 < 0) continue;
          acc.add_term(static_cast<long long>(e0) + e1 + e2 + e3 + e4, Rational(sgn));
        }
      }
      return acc.take();
    }
    case AppellKind::F3: {
      MultChar A = spec.chars[0], Ap = spec.chars[1], B = spec.chars[2], Bp = spec.chars[3],
               C = spec.chars[4];
      MultChar CBbarBpbar =
          char_product(ctx, C, char_inverse(ctx, char_product(ctx, B, Bp)));
      MultChar Abar = char_inverse(ctx, A), Apbar = char_inverse(ctx, Ap);
      int sgn = sign_at_minus_one(B) * sign_at_minus_one(Bp);
      for (uint32_t cu = 0; cu < ctx.q(); ++cu) {
        FieldElement u = ctx.from_code(cu);
        int e0 = char_exponent(ctx, B, u);
        if (e0 < 0) continue;
        int e1 = char_exponent(ctx, Abar, ctx.sub(one, ctx.mul(u, spec.x)));
        if (e1 < 0) continue;
        for (uint32_t cv = 0; cv < ctx.q(); ++cv) {
          FieldElement v = ctx.from_code(cv);
          int e2 = char_exponent(ctx, Bp, v);
          if (e2 < 0) continue;
          int e3 = char_exponent(ctx, CBbarBpbar, ctx.sub(ctx.sub(one, u), v));
          if (e3 < 0) continue;
          int e4 = char_exponent(ctx, Apbar, ctx.sub(one, ctx.mul(v, spec.y)));
          if (e4 < 0) continue;
          acc.add_term(static_cast<long long>(e0) + e1 + e2 + e3 + e4, Rational(sgn));
        }
      }
      return acc.take();
    }
    default:
      throw std::invalid_argument("appell_fieldsum expects a field-sum kind (f1, f2, f3)");
  }
}

AppellStarKernel::AppellStarKernel(const SumTables& t, AppellKind kind,
                                   std::span<const long> idx)
    : t_(&t), n_(t.n()), inv_(t.ctx().zeta_order()), scale_(1) {
  if (!appell_is_star(kind)) throw std::invalid_argument("kernel requires a starred kind");
  if (idx.size() != appell_char_count(kind))
    throw std::invalid_argument("wrong number of characters for " + appell_kind_name(kind));
  kernel_.reserve(static_cast<size_t>(n_) * n_);
  switch (kind) {
    case AppellKind::F1Star: {
      long a = idx[0], b = idx[1], bp = idx[2], c = idx[3];
      for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
          kernel_.push_back(t.pair(a + i + j, -c - i - j) * t.pair(b + i, -i) *
                            t.pair(bp + j, -j));
      inv_ = t.pair(-a, -b) * t.pair(-bp, c);
      scale_ = t.gauss_inv_scale(a) * t.gauss_inv_scale(b) * t.gauss_inv_scale(bp) *
               t.gauss_inv_scale(-c);
      break;
    }
    case AppellKind::F2Star: {
      long a = idx[0], b = idx[1], bp = idx[2], c = idx[3], cp = idx[4];
      for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
          kernel_.push_back(t.gauss(a + i + j) * t.pair(b + i, -c - i) *
                            t.pair(bp + j, -cp - j) * t.pair(-i, -j));
      inv_ = t.pair(-a, -b) * t.pair(-bp, c) * t.gauss_inv_poly(-cp);
      scale_ = t.gauss_inv_scale(a) * t.gauss_inv_scale(b) * t.gauss_inv_scale(bp) *
               t.gauss_inv_scale(-c) * t.gauss_inv_scale(-cp);
      break;
    }
    case AppellKind::F3Star: {
      long a = idx[0], ap = idx[1], b = idx[2], bp = idx[3], c = idx[4];
      for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
          kernel_.push_back(t.pair(a + i, b + i) * t.pair(ap + j, bp + j) *
                            t.pair(-c - i - j, -i) * t.gauss(-j));
      inv_ = t.pair(-a, -ap) * t.pair(-b, -bp) * t.gauss_inv_poly(-c);
      scale_ = t.gauss_inv_scale(a) * t.gauss_inv_scale(ap) * t.gauss_inv_scale(b) *
               t.gauss_inv_scale(bp) * t.gauss_inv_scale(-c);
      break;
    }
    case AppellKind::F4Star: {
      long a = idx[0], b = idx[1], c = idx[2], cp = idx[3];
      for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
          kernel_.push_back(t.pair(a + i + j, b + i + j) * t.pair(-c - i, -i) *
                            t.pair(-cp - j, -j));
      inv_ = t.pair(-a, -b) * t.pair(c, cp);
      scale_ = t.gauss_inv_scale(a) * t.gauss_inv_scale(b) * t.gauss_inv_scale(-c) *
               t.gauss_inv_scale(-cp);
      break;
    }
    default:
      break;
  }
}

CycloNumber AppellStarKernel::eval(FieldElement x, FieldElement y) const {
  const FieldContext& ctx = t_->ctx();
  const int m = ctx.zeta_order();
  if (x.code == 0 || y.code == 0) return CycloNumber(m);  // psi(0) / chi(0) annihilate
  const long dx = ctx.dlog(x), dy = ctx.dlog(y);
  const long long p = ctx.p();
  CycloAccum acc(m);
  for (long i = 0; i < n_; ++i) {
    long ei = (i * dx) % n_;
    for (long j = 0; j < n_; ++j)
      acc.add_shifted(kernel_[static_cast<size_t>(i) * n_ + j], p * ((ei + j * dy) % n_));
  }
  CycloNumber sum = acc.take() * inv_;
  return sum.scaled(scale_ * Rational(1, static_cast<long long>(ctx.q() - 1) * (ctx.q() - 1)));
}

CycloNumber appell_star(const SumTables& t, const AppellSpec& spec) {
  check_spec(t.ctx(), spec);
  if (!appell_is_star(spec.kind))
    throw std::invalid_argument("appell_star expects a starred kind (f1star..f4star)");
  std::vector<long> idx;
  idx.reserve(spec.chars.size());
  for (MultChar c : spec.chars) idx.push_back(c.k);
  return AppellStarKernel(t, spec.kind, idx).eval(spec.x, spec.y);
}

}  // namespace ffa
