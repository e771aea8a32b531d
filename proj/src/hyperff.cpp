#include "ffappell/hyperff.hpp"

#include <stdexcept>

namespace ffa {

namespace {

void check_spec(const SumTables& t, const HypergeomSpec& spec) {
  if (spec.lower.empty() || spec.upper.size() != spec.lower.size() + 1)
    throw std::invalid_argument("hypergeometric spec needs n+1 upper and n lower characters, n >= 1");
  auto id = t.ctx().id();
  for (MultChar c : spec.upper)
    if (c.ctx != id) throw std::invalid_argument("character belongs to a different context");
  for (MultChar c : spec.lower)
    if (c.ctx != id) throw std::invalid_argument("character belongs to a different context");
  if (spec.x.ctx != id) throw std::invalid_argument("argument belongs to a different context");
}

}  // namespace

CycloNumber greene_2f1_fieldsum(const FieldContext& ctx, MultChar a, MultChar b, MultChar c,
                                FieldElement x) {
  const int m = ctx.zeta_order();
  if (x.code == 0) return CycloNumber(m);  // eps(x) = 0 prefactor
  MultChar bbar_c = char_product(ctx, char_inverse(ctx, b), c);
  MultChar abar = char_inverse(ctx, a);
  CycloAccum acc(m);
  for (uint32_t code = 0; code < ctx.q(); ++code) {
    FieldElement y = ctx.from_code(code);
    int e1 = char_exponent(ctx, b, y);
    if (e1 < 0) continue;
    int e2 = char_exponent(ctx, bbar_c, ctx.sub(ctx.one(), y));
    if (e2 < 0) continue;
    int e3 = char_exponent(ctx, abar, ctx.sub(ctx.one(), ctx.mul(x, y)));
    if (e3 < 0) continue;
    acc.add_term(static_cast<long long>(e1) + e2 + e3, Rational(1));
  }
  Rational scale(sign_at_minus_one(b) * sign_at_minus_one(c), ctx.q());
  return acc.take().scaled(scale);
}

CycloNumber greene_nfn_binomsum(const SumTables& t, const HypergeomSpec& spec) {
  check_spec(t, spec);
  const FieldContext& ctx = t.ctx();
  const int m = ctx.zeta_order();
  if (spec.x.code == 0) return CycloNumber(m);
  const long n = t.n();
  const long dx = ctx.dlog(spec.x);
  const size_t nn = spec.lower.size();
  CycloAccum acc(m);
  for (long k = 0; k < n; ++k) {
    CycloNumber term = t.binom(spec.upper[0].k + k, k);
    for (size_t i = 0; i < nn; ++i)
      term = term * t.binom(spec.upper[i + 1].k + k, spec.lower[i].k + k);
    acc.add_shifted(term, static_cast<long long>(ctx.p()) * ((k * dx) % n));
  }
  return acc.take().scaled(Rational(ctx.q(), ctx.q() - 1));
}

CycloNumber mccarthy_star(const SumTables& t, const HypergeomSpec& spec) {
  check_spec(t, spec);
  const FieldContext& ctx = t.ctx();
  const int m = ctx.zeta_order();
  if (spec.x.code == 0) return CycloNumber(m);
  const long n = t.n();
  const long dx = ctx.dlog(spec.x);
  const size_t nn = spec.lower.size();
  CycloAccum acc(m);
  for (long k = 0; k < n; ++k) {
    CycloNumber term(m);
    if (nn == 1) {
      term = t.pair(spec.upper[0].k + k, spec.upper[1].k + k) *
             t.pair(-static_cast<long>(spec.lower[0].k) - k, -k);
    } else {
      term = t.pair(spec.upper[0].k + k, spec.upper[1].k + k);
      for (size_t i = 2; i <= nn; ++i) term = term * t.gauss(spec.upper[i].k + k);
      for (size_t j = 0; j < nn; ++j)
        term = term * t.gauss(-static_cast<long>(spec.lower[j].k) - k);
      term = term * t.gauss(-k);
    }
    // chi(-1)^{n+1} chi(x)
    int sgn = (static_cast<long long>(k) * (nn + 1)) % 2 == 0 ? 1 : -1;
    acc.add_shifted_scaled(term, static_cast<long long>(ctx.p()) * ((k * dx) % n), Rational(sgn));
  }
  CycloNumber sum = acc.take();
  Rational scale(1, ctx.q() - 1);
  for (size_t i = 0; i <= nn; ++i) {
    sum = sum * t.gauss_inv_poly(spec.upper[i].k);
    scale *= t.gauss_inv_scale(spec.upper[i].k);
  }
  for (size_t j = 0; j < nn; ++j) {
    long k = -static_cast<long>(spec.lower[j].k);
    sum = sum * t.gauss_inv_poly(k);
    scale *= t.gauss_inv_scale(k);
  }
  return sum.scaled(scale);
}

// Integer-coefficient numerator of 2F1*(A,B;C|1); the true value is this
// over q^2. Both terms of the closed form clear to integers against q^2.
CycloNumber f21_at_one_numerator(const SumTables& t, long la, long lb, long lc) {
  const long n = t.n();
  const long long q = t.ctx().q();
  Rational s1 = t.gauss_inv_scale(-lc) * t.gauss_inv_scale(la + lb - lc) * Rational(q * q);
  CycloNumber out = (t.pair(la - lc, lb - lc) * t.gauss_inv_poly(-lc) *
                     t.gauss_inv_poly(la + lb - lc))
                        .scaled(s1);
  if (((la + lb - lc) % n + n) % n == 0) {
    Rational s2 = t.gauss_inv_scale(la) * t.gauss_inv_scale(lb) * t.gauss_inv_scale(-lc) *
                  Rational(q * q * q * (q - 1) * ((la + lb) % 2 == 0 ? 1 : -1));
    out += (t.pair(-la, -lb) * t.gauss_inv_poly(-lc)).scaled(s2);
  }
  return out;
}

CycloNumber f21_star_at_one(const SumTables& t, MultChar a, MultChar b, MultChar c) {
  const long long q = t.ctx().q();
  return f21_at_one_numerator(t, a.k, b.k, c.k).scaled(Rational(1, q * q));
}

CycloNumber f21_star_special(const SumTables& t, TwoF1Special which, MultChar first,
                             MultChar second, FieldElement x) {
  const FieldContext& ctx = t.ctx();
  const int m = ctx.zeta_order();
  const long long q = ctx.q();
  FieldElement one_minus_x = ctx.sub(ctx.one(), x);
  switch (which) {
    case TwoF1Special::rel1: {
      // 1 - B1bar(x) (A1|B1)^{-1} (A1bar B1)(1-x)
      MultChar a1 = first, b1 = second;
      if (a1.k == b1.k) throw std::domain_error("rel1 requires A1 != B1");
      if (x.code == 0) throw std::domain_error("rel1 requires x != 0");
      CycloNumber out = CycloNumber::from_rational(m, Rational(1));
      MultChar fac = char_product(ctx, char_inverse(ctx, a1), b1);
      int e2 = char_exponent(ctx, fac, one_minus_x);
      if (e2 >= 0) {
        int e1 = char_exponent(ctx, char_inverse(ctx, b1), x);
        out -= t.binom_inv(a1, b1).shifted(static_cast<long long>(e1) + e2);
      }
      return out;
    }
    case TwoF1Special::rel2: {
      // -A1bar(x) (A0 A1bar | A1bar) + A0bar(1-x)
      MultChar a0 = first, a1 = second;
      if (a0.k == 0) throw std::domain_error("rel2 requires A0 != eps");
      if (a1.k == 0) throw std::domain_error("rel2 requires A1 = B1 != eps");
      if (x.code == 0) throw std::domain_error("rel2 requires x != 0");
      int e1 = char_exponent(ctx, char_inverse(ctx, a1), x);
      CycloNumber out =
          -t.binom(static_cast<long>(a0.k) - a1.k, -static_cast<long>(a1.k)).shifted(e1);
      int e2 = char_exponent(ctx, char_inverse(ctx, a0), one_minus_x);
      if (e2 >= 0) out += CycloNumber::root_of_unity(m, e2);
      return out;
    }
    case TwoF1Special::rel5: {
      // eps(x) Bbar(1-x) - 1/q (B|A)^{-1} Abar(-x)
      MultChar a = first, b = second;
      if (a.k == 0) throw std::domain_error("rel5 requires A != eps");
      if (a.k == b.k) throw std::domain_error("rel5 requires A != B");
      if (x.code == 0 || x == ctx.one()) throw std::domain_error("rel5 requires x not in {0, 1}");
      int e1 = char_exponent(ctx, char_inverse(ctx, b), one_minus_x);
      CycloNumber out = CycloNumber::root_of_unity(m, e1);
      int e2 = char_exponent(ctx, char_inverse(ctx, a), ctx.neg(x));
      out -= t.binom_inv(b, a).shifted(e2).scaled(Rational(1, q));
      return out;
    }
  }
  throw std::logic_error("unknown special case");
}

TwoF1StarTable::TwoF1StarTable(const SumTables& t) : ctx_(&t.ctx()), n_(t.n()), q_(t.ctx().q()) {
  const FieldContext& ctx = t.ctx();
  const int m = ctx.zeta_order();
  values_.reserve(static_cast<size_t>(n_) * n_ * n_ * q_);
  std::vector<CycloNumber> kernel;
  kernel.reserve(n_);
  CycloAccum acc(m);
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b) {
      for (long c = 0; c < n_; ++c) {
        // integer kernels; the inverse Gauss factors close the sum once per x
        CycloNumber inv = t.pair(-a, -b) * t.gauss_inv_poly(-c);
        Rational scale = t.gauss_inv_scale(a) * t.gauss_inv_scale(b) * t.gauss_inv_scale(-c) *
                         Rational(1, q_ - 1);
        kernel.clear();
        for (long k = 0; k < n_; ++k)
          kernel.push_back(t.pair(a + k, b + k) * t.pair(-c - k, -k));
        values_.push_back(CycloNumber(m));  // x = 0
        for (long e = 0; e < n_; ++e) {
          for (long k = 0; k < n_; ++k)
            acc.add_shifted(kernel[static_cast<size_t>(k)],
                            static_cast<long long>(ctx.p()) * ((k * e) % n_));
          values_.push_back((acc.take() * inv).scaled(scale).canonical());
        }
      }
    }
  }
}

const CycloNumber& TwoF1StarTable::value(long a, long b, long c, FieldElement x) const {
  auto fix = [this](long v) {
    v %= n_;
    return v < 0 ? v + n_ : v;
  };
  size_t base = ((static_cast<size_t>(fix(a)) * n_ + fix(b)) * n_ + fix(c)) * q_;
  size_t slot = x.code == 0 ? 0 : 1 + static_cast<size_t>(ctx_->dlog(x));
  return values_[base + slot];
}

GreeneTable::GreeneTable(const SumTables& t) : ctx_(&t.ctx()), n_(t.n()), q_(t.ctx().q()) {
  const FieldContext& ctx = t.ctx();
  const int m = ctx.zeta_order();
  values_.reserve(static_cast<size_t>(n_) * n_ * n_ * q_);
  std::vector<CycloNumber> kernel;
  kernel.reserve(n_);
  CycloAccum acc(m);
  const Rational scale(q_, q_ - 1);
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b) {
      for (long c = 0; c < n_; ++c) {
        kernel.clear();
        for (long k = 0; k < n_; ++k) kernel.push_back(t.binom(a + k, k) * t.binom(b + k, c + k));
        values_.push_back(CycloNumber(m));
        for (long e = 0; e < n_; ++e) {
          for (long k = 0; k < n_; ++k)
            acc.add_shifted(kernel[static_cast<size_t>(k)],
                            static_cast<long long>(ctx.p()) * ((k * e) % n_));
          values_.push_back(acc.take().scaled(scale).canonical());
        }
      }
    }
  }
}

const CycloNumber& GreeneTable::value(long a, long b, long c, FieldElement x) const {
  auto fix = [this](long v) {
    v %= n_;
    return v < 0 ? v + n_ : v;
  };
  size_t base = ((static_cast<size_t>(fix(a)) * n_ + fix(b)) * n_ + fix(c)) * q_;
  size_t slot = x.code == 0 ? 0 : 1 + static_cast<size_t>(ctx_->dlog(x));
  return values_[base + slot];
}

F21AtOneTable::F21AtOneTable(const SumTables& t)
    : n_(t.n()), scale_(1, static_cast<long long>(t.ctx().q()) * t.ctx().q()) {
  values_.reserve(static_cast<size_t>(n_) * n_ * n_);
  for (long a = 0; a < n_; ++a)
    for (long b = 0; b < n_; ++b)
      for (long c = 0; c < n_; ++c) values_.push_back(f21_at_one_numerator(t, a, b, c).canonical());
}

const CycloNumber& F21AtOneTable::numerator(long a, long b, long c) const {
  auto fix = [this](long v) {
    v %= n_;
    return v < 0 ? v + n_ : v;
  };
  return values_[(static_cast<size_t>(fix(a)) * n_ + fix(b)) * n_ + fix(c)];
}

CycloNumber F21AtOneTable::value(long a, long b, long c) const {
  return numerator(a, b, c).scaled(scale_);
}

}  // namespace ffa
