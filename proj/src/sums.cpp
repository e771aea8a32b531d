#include "ffappell/sums.hpp"

#include <stdexcept>
#include <string>

namespace ffa {

namespace {

void verify_gauss_table(const FieldContext& ctx, const std::vector<CycloNumber>& g) {
  const int m = ctx.zeta_order();
  const long n = ctx.q() - 1;
  const long long q = ctx.q();
  if (!(g[0] + CycloNumber::from_rational(m, Rational(1))).is_zero())
    throw std::logic_error("gauss table: g(eps) != -1");
  for (long k = 0; k < n; ++k) {
    // g(chi)g(chibar) = q chi(-1) - (q-1) delta(chi)
    CycloNumber prod = g[static_cast<size_t>(k)] * g[static_cast<size_t>((n - k) % n)];
    long long expect = (k % 2 == 0 ? q : -q) - (k == 0 ? q - 1 : 0);
    if (!(prod - CycloNumber::from_rational(m, Rational(expect))).is_zero())
      throw std::logic_error("gauss table: product identity failed at k=" + std::to_string(k));
  }
}

}  // namespace

GaussTable build_gauss_table(const FieldContext& ctx, GaussStrategy strategy) {
  const int m = ctx.zeta_order();
  const long n = ctx.q() - 1;
  GaussTable table;
  table.values.reserve(n);
  if (strategy == GaussStrategy::naive) {
    for (long k = 0; k < n; ++k) table.values.push_back(gauss_sum(ctx, character(ctx, k)));
  } else {
    // All g(chi_k) at once as the transform of j -> theta(g^j) over Z_{q-1}:
    // g(chi_k) = sum_j zeta_{q-1}^{kj} * theta(g^j).
    std::vector<int> theta_exp(n);
    for (long j = 0; j < n; ++j) theta_exp[j] = theta_exponent(ctx, ctx.gen_pow(j));
    CycloAccum acc(m);
    for (long k = 0; k < n; ++k) {
      for (long j = 0; j < n; ++j)
        acc.add_term(static_cast<long long>(ctx.p()) * ((k * j) % n) + theta_exp[j], Rational(1));
      table.values.push_back(acc.take());
    }
  }
  verify_gauss_table(ctx, table.values);
  return table;
}

CycloNumber gauss_sum(const FieldContext& ctx, MultChar chi) {
  CycloAccum acc(ctx.zeta_order());
  for (uint32_t code = 1; code < ctx.q(); ++code) {
    FieldElement x = ctx.from_code(code);
    acc.add_term(char_exponent(ctx, chi, x) + theta_exponent(ctx, x), Rational(1));
  }
  return acc.take();
}

CycloNumber jacobi_sum(const FieldContext& ctx, MultChar a, MultChar b) {
  CycloAccum acc(ctx.zeta_order());
  for (uint32_t code = 0; code < ctx.q(); ++code) {
    FieldElement x = ctx.from_code(code);
    int ea = char_exponent(ctx, a, x);
    if (ea < 0) continue;
    int eb = char_exponent(ctx, b, ctx.sub(ctx.one(), x));
    if (eb < 0) continue;
    acc.add_term(ea + eb, Rational(1));
  }
  return acc.take();
}

long SumTables::check(MultChar c) const {
  if (c.ctx != ctx_->id()) throw std::invalid_argument("character belongs to a different context");
  return c.k;
}

SumTables::SumTables(const FieldContext& ctx, GaussStrategy strategy)
    : ctx_(&ctx), n_(ctx.q() - 1) {
  const int m = ctx.zeta_order();
  const long long q = ctx.q();
  gauss_ = build_gauss_table(ctx, strategy).values;

  // 1/g(chi) = chi(-1) g(chibar) / q for chi != eps, and g(eps)^{-1} = -1.
  ginv_.reserve(n_);
  for (long k = 0; k < n_; ++k) {
    if (k == 0) {
      ginv_.push_back(CycloNumber::from_rational(m, Rational(-1)));
    } else {
      Rational s = Rational(k % 2 == 0 ? 1 : -1, q);
      ginv_.push_back(gauss_[static_cast<size_t>(n_ - k)].scaled(s));
    }
  }

  pair_.reserve(static_cast<size_t>(n_) * n_);
  for (long i = 0; i < n_; ++i)
    for (long j = 0; j < n_; ++j)
      pair_.push_back(gauss_[static_cast<size_t>(i)] * gauss_[static_cast<size_t>(j)]);

  jacobi_.reserve(static_cast<size_t>(n_) * n_);
  binom_.reserve(static_cast<size_t>(n_) * n_);
  binom_inv_.reserve(static_cast<size_t>(n_) * n_);
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b) {
      CycloNumber j = jacobi_sum(ctx, character(ctx, a), character(ctx, b));
      // Build-time cross-check against the Gauss-sum decomposition:
      // J(A,B) = g(A)g(B)/g(AB) + (q-1)B(-1)delta(AB).
      CycloNumber rhs = pair(a, b) * ginv_[idx(a + b)];
      if ((a + b) % n_ == 0)
        rhs += CycloNumber::from_rational(m, Rational((b % 2 == 0 ? 1 : -1) * (q - 1)));
      if (!(j - rhs).is_zero())
        throw std::logic_error("jacobi table: Gauss-sum decomposition failed at (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
      jacobi_.push_back(std::move(j));
    }
  }
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b) {
      Rational sgn(b % 2 == 0 ? 1 : -1);
      binom_.push_back(jacobi(a, -b).scaled(sgn / Rational(q)));
      // Closed-form inverse; (A|B) never vanishes.
      CycloNumber inv(m);
      if (a == b && a == 0) {
        inv = CycloNumber::from_rational(m, Rational(q, q - 2));
      } else if (a == b) {
        inv = CycloNumber::from_rational(m, Rational(-q));
      } else {
        inv = (gauss(a - b) * ginv_[idx(a)]).scaled(sgn * Rational(q)) * ginv_[idx(-b)];
      }
      binom_inv_.push_back(std::move(inv));
    }
  }
}

}  // namespace ffa
