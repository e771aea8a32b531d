#pragma once

#include <vector>

#include "ffappell/chars.hpp"
#include "ffappell/cyclo.hpp"
#include "ffappell/field.hpp"

namespace ffa {

enum class GaussStrategy { naive, dft };

/// Table of Gauss sums g(chi_k) for k in [0, q-2]. Both build strategies give
/// entrywise identical tables; the build verifies g(eps) = -1 and the
/// g(chi)g(chibar) product identity for every entry.
struct GaussTable {
  std::vector<CycloNumber> values;
};

GaussTable build_gauss_table(const FieldContext& ctx, GaussStrategy strategy);

/// Direct definition sums, independent of any table.
CycloNumber gauss_sum(const FieldContext& ctx, MultChar chi);
CycloNumber jacobi_sum(const FieldContext& ctx, MultChar a, MultChar b);

/// Shared per-field cache: Gauss sums, their closed-form inverses, all
/// pairwise Gauss products, Jacobi sums and character binomial coefficients
/// with inverses. Immutable after construction; safe to share across threads.
class SumTables {
 public:
  explicit SumTables(const FieldContext& ctx, GaussStrategy strategy = GaussStrategy::dft);

  const FieldContext& ctx() const { return *ctx_; }
  long n() const { return n_; }  // q - 1

  const CycloNumber& gauss(long k) const { return gauss_[idx(k)]; }
  const CycloNumber& gauss_inv(long k) const { return ginv_[idx(k)]; }
  /// 1/g(chi_k) split as gauss_inv_poly(k) * gauss_inv_scale(k). The poly
  /// factor has integer coefficients, so long products can run entirely on
  /// integer fast paths with one closing rational scale.
  const CycloNumber& gauss_inv_poly(long k) const { return gauss_[idx(-k)]; }
  Rational gauss_inv_scale(long k) const {
    long v = idx(k);
    if (v == 0) return Rational(1);  // 1/g(eps) = -1 = g(eps) itself
    return Rational(v % 2 == 0 ? 1 : -1, static_cast<long long>(n_) + 1);
  }
  /// g(chi_i) * g(chi_j), cached.
  const CycloNumber& pair(long i, long j) const { return pair_[idx(i) * n_ + idx(j)]; }
  const CycloNumber& jacobi(long a, long b) const { return jacobi_[idx(a) * n_ + idx(b)]; }
  const CycloNumber& binom(long a, long b) const { return binom_[idx(a) * n_ + idx(b)]; }
  const CycloNumber& binom_inv(long a, long b) const { return binom_inv_[idx(a) * n_ + idx(b)]; }

  const CycloNumber& gauss(MultChar c) const { return gauss(check(c)); }
  const CycloNumber& gauss_inv(MultChar c) const { return gauss_inv(check(c)); }
  const CycloNumber& jacobi(MultChar a, MultChar b) const { return jacobi(check(a), check(b)); }
  const CycloNumber& binom(MultChar a, MultChar b) const { return binom(check(a), check(b)); }
  const CycloNumber& binom_inv(MultChar a, MultChar b) const {
    return binom_inv(check(a), check(b));
  }

 private:
  long idx(long k) const {
    long v = k % n_;
    return v < 0 ? v + n_ : v;
  }
  long check(MultChar c) const;

  const FieldContext* ctx_;
  long n_;
  std::vector<CycloNumber> gauss_, ginv_, pair_, jacobi_, binom_, binom_inv_;
};

}  // namespace ffa
