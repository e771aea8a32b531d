#include "ffappell/floatback.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffa {

FloatBackend::FloatBackend(const FieldContext& ctx) : ctx_(&ctx), n_(ctx.q() - 1) {
  const int m = ctx.zeta_order();
  unit_.reserve(m);
  for (int e = 0; e < m; ++e) {
    long double ang = 2.0L * std::numbers::pi_v<long double> * e / m;
    unit_.emplace_back(static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang)));
  }
  gauss_.reserve(n_);
  for (long k = 0; k < n_; ++k) {
    std::complex<double> s = 0;
    for (uint32_t code = 1; code < ctx.q(); ++code) {
      FieldElement x = ctx.from_code(code);
      s += unit_[char_exponent(ctx, {static_cast<uint32_t>(k), ctx.id()}, x)] *
           unit_[theta_exponent(ctx, x)];
    }
    gauss_.push_back(s);
  }
}

std::complex<double> FloatBackend::unit(long long e) const {
  long long m = static_cast<long long>(unit_.size());
  long long v = e % m;
  if (v < 0) v += m;
  return unit_[static_cast<size_t>(v)];
}

std::complex<double> FloatBackend::chi(long k, FieldElement x) const {
  if (x.code == 0) return 0;
  long kk = k % n_;
  if (kk < 0) kk += n_;
  return unit_[char_exponent(*ctx_, {static_cast<uint32_t>(kk), ctx_->id()}, x)];
}

std::complex<double> FloatBackend::theta(FieldElement x) const {
  return unit_[theta_exponent(*ctx_, x)];
}

std::complex<double> FloatBackend::gauss(long k) const {
  long v = k % n_;
  if (v < 0) v += n_;
  return gauss_[static_cast<size_t>(v)];
}

std::complex<double> FloatBackend::jacobi(long a, long b) const {
  std::complex<double> s = 0;
  for (uint32_t code = 0; code < ctx_->q(); ++code) {
    FieldElement x = ctx_->from_code(code);
    s += chi(a, x) * chi(b, ctx_->sub(ctx_->one(), x));
  }
  return s;
}

std::complex<double> FloatBackend::binom(long a, long b) const {
  double sgn = b % 2 == 0 ? 1.0 : -1.0;
  return sgn / static_cast<double>(ctx_->q()) * jacobi(a, -b);
}

std::complex<double> FloatBackend::greene_2f1(long a, long b, long c, FieldElement x) const {
  if (x.code == 0) return 0;
  std::complex<double> s = 0;
  for (uint32_t code = 0; code < ctx_->q(); ++code) {
    FieldElement y = ctx_->from_code(code);
    s += chi(b, y) * chi(c - b, ctx_->sub(ctx_->one(), y)) *
         chi(-a, ctx_->sub(ctx_->one(), ctx_->mul(x, y)));
  }
  double sgn = (b + c) % 2 == 0 ? 1.0 : -1.0;
  return sgn / static_cast<double>(ctx_->q()) * s;
}

std::complex<double> FloatBackend::mccarthy(std::span<const long> upper,
                                            std::span<const long> lower, FieldElement x) const {
  if (lower.empty() || upper.size() != lower.size() + 1)
    throw std::invalid_argument("hypergeometric spec needs n+1 upper and n lower characters");
  if (x.code == 0) return 0;
  size_t nn = lower.size();
  std::complex<double> s = 0;
  for (long k = 0; k < n_; ++k) {
    std::complex<double> term = 1;
    for (long a : upper) term *= gauss(a + k) / gauss(a);
    for (long b : lower) term *= gauss(-b - k) / gauss(-b);
    term *= gauss(-k);
    if ((static_cast<unsigned long long>(k) * (nn + 1)) % 2 == 1) term = -term;
    s += term * chi(k, x);
  }
  return s / static_cast<double>(n_);
}

std::complex<double> FloatBackend::appell(const AppellSpec& spec) const {
  if (spec.chars.size() != appell_char_count(spec.kind))
    throw std::invalid_argument("wrong number of characters for " + appell_kind_name(spec.kind));
  const FieldContext& ctx = *ctx_;
  const FieldElement one = ctx.one();
  const FieldElement x = spec.x, y = spec.y;
  std::vector<long> k;
  k.reserve(spec.chars.size());
  for (MultChar c : spec.chars) k.push_back(c.k);

  if (!appell_is_star(spec.kind)) {
    if (x.code == 0 || y.code == 0) return 0;
    std::complex<double> s = 0;
    switch (spec.kind) {
      case AppellKind::F1: {
        double sgn = (k[0] + k[3]) % 2 == 0 ? 1.0 : -1.0;
        for (uint32_t cu = 0; cu < ctx.q(); ++cu) {
          FieldElement u = ctx.from_code(cu);
          s += chi(k[0], u) * chi(k[3] - k[0], ctx.sub(one, u)) *
               chi(-k[1], ctx.sub(one, ctx.mul(u, x))) * chi(-k[2], ctx.sub(one, ctx.mul(u, y)));
        }
        return sgn * s;
      }
      case AppellKind::F2: {
        double sgn = (k[1] + k[2] + k[3] + k[4]) % 2 == 0 ? 1.0 : -1.0;
        for (uint32_t cu = 0; cu < ctx.q(); ++cu) {
          FieldElement u = ctx.from_code(cu);
          std::complex<double> fu = chi(k[1], u) * chi(k[3] - k[1], ctx.sub(one, u));
          if (fu == std::complex<double>(0)) continue;
          FieldElement ux = ctx.mul(u, x);
          for (uint32_t cv = 0; cv < ctx.q(); ++cv) {
            FieldElement v = ctx.from_code(cv);
            s += fu * chi(k[2], v) * chi(k[4] - k[2], ctx.sub(one, v)) *
                 chi(-k[0], ctx.sub(ctx.sub(one, ux), ctx.mul(v, y)));
          }
        }
        return sgn * s;
      }
      case AppellKind::F3: {
        double sgn = (k[2] + k[3]) % 2 == 0 ? 1.0 : -1.0;
        for (uint32_t cu = 0; cu < ctx.q(); ++cu) {
          FieldElement u = ctx.from_code(cu);
          std::complex<double> fu =
              chi(k[2], u) * chi(-k[0], ctx.sub(one, ctx.mul(u, x)));
          if (fu == std::complex<double>(0)) continue;
          for (uint32_t cv = 0; cv < ctx.q(); ++cv) {
            FieldElement v = ctx.from_code(cv);
            s += fu * chi(k[3], v) * chi(k[4] - k[2] - k[3], ctx.sub(ctx.sub(one, u), v)) *
                 chi(-k[1], ctx.sub(one, ctx.mul(v, y)));
          }
        }
        return sgn * s;
      }
      default:
        return 0;
    }
  }

  if (x.code == 0 || y.code == 0) return 0;
  std::complex<double> s = 0;
  for (long i = 0; i < n_; ++i) {
    for (long j = 0; j < n_; ++j) {
      std::complex<double> t;
      switch (spec.kind) {
        case AppellKind::F1Star:
          t = gauss(k[0] + i + j) * gauss(k[1] + i) * gauss(k[2] + j) * gauss(-k[3] - i - j) *
              gauss(-i) * gauss(-j) /
              (gauss(k[0]) * gauss(k[1]) * gauss(k[2]) * gauss(-k[3]));
          break;
        case AppellKind::F2Star:
          t = gauss(k[0] + i + j) * gauss(k[1] + i) * gauss(k[2] + j) * gauss(-k[3] - i) *
              gauss(-k[4] - j) * gauss(-i) * gauss(-j) /
              (gauss(k[0]) * gauss(k[1]) * gauss(k[2]) * gauss(-k[3]) * gauss(-k[4]));
          break;
        case AppellKind::F3Star:
          t = gauss(k[0] + i) * gauss(k[1] + j) * gauss(k[2] + i) * gauss(k[3] + j) *
              gauss(-k[4] - i - j) * gauss(-i) * gauss(-j) /
              (gauss(k[0]) * gauss(k[1]) * gauss(k[2]) * gauss(k[3]) * gauss(-k[4]));
          break;
        default:  // F4Star
          t = gauss(k[0] + i + j) * gauss(k[1] + i + j) * gauss(-k[2] - i) * gauss(-k[3] - j) *
              gauss(-i) * gauss(-j) /
              (gauss(k[0]) * gauss(k[1]) * gauss(-k[2]) * gauss(-k[3]));
          break;
      }
      s += t * chi(i, x) * chi(j, y);
    }
  }
  return s / static_cast<double>(n_ * n_);
}

}  // namespace ffa
