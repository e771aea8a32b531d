#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ffappell/appell.hpp"
#include "ffappell/hyperff.hpp"

namespace ffa {

/// Floating mirror of the exact evaluators over complex doubles, mapping
/// zeta_m to exp(2 pi i / m). Used for fast approximate evaluation and as a
/// cross-check of the exact backend; never used for identity verification.
class FloatBackend {
 public:
  explicit FloatBackend(const FieldContext& ctx);

  const FieldContext& ctx() const { return *ctx_; }
  std::complex<double> unit(long long e) const;  // zeta_m^e
  std::complex<double> chi(long k, FieldElement x) const;
  std::complex<double> theta(FieldElement x) const;
  std::complex<double> gauss(long k) const;
  std::complex<double> jacobi(long a, long b) const;
  std::complex<double> binom(long a, long b) const;
  std::complex<double> greene_2f1(long a, long b, long c, FieldElement x) const;
  std::complex<double> mccarthy(std::span<const long> upper, std::span<const long> lower,
                                FieldElement x) const;
  std::complex<double> appell(const AppellSpec& spec) const;

 private:
  const FieldContext* ctx_;
  long n_;
  std::vector<std::complex<double>> unit_;   // zeta_m^e, e in [0, m)
  std::vector<std::complex<double>> gauss_;  // g(chi_k)
};

}  // namespace ffa
