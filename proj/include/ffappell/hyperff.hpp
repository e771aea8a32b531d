#pragma once

#include <vector>

#include "ffappell/sums.hpp"

namespace ffa {

/// Parameters of an (n+1)F_n evaluation: upper characters A_0..A_n, lower
/// characters B_1..B_n (so upper.size() == lower.size() + 1, n >= 1) and the
/// field argument.
struct HypergeomSpec {
  std::vector<MultChar> upper;
  std::vector<MultChar> lower;
  FieldElement x;
};

/// Greene's 2F1 by its defining field sum:
/// eps(x) BC(-1)/q sum_y B(y) (BbarC)(1-y) Abar(1-xy).
CycloNumber greene_2f1_fieldsum(const FieldContext& ctx, MultChar a, MultChar b, MultChar c,
                                FieldElement x);

/// Greene's (n+1)F_n as the binomial-coefficient character sum
/// q/(q-1) sum_chi (A0 chi | chi) prod_i (Ai chi | Bi chi) chi(x).
CycloNumber greene_nfn_binomsum(const SumTables& t, const HypergeomSpec& spec);

/// The Gauss-sum (n+1)F_n^*:
/// 1/(q-1) sum_chi prod_i g(Ai chi)/g(Ai) prod_j g(conj(Bj chi))/g(conj(Bj))
///   g(chibar) chi(-1)^{n+1} chi(x).
CycloNumber mccarthy_star(const SumTables& t, const HypergeomSpec& spec);

/// Closed form of 2F1^*(A,B;C|1):
/// g(ACbar)g(BCbar) / (g(Cbar)g(ABCbar)) + q(q-1)AB(-1)/(g(A)g(B)g(Cbar)) delta(ABCbar).
CycloNumber f21_star_at_one(const SumTables& t, MultChar a, MultChar b, MultChar c);

/// Special closed forms of 2F1^* not covered by the binomial-inverse bridge.
enum class TwoF1Special {
  rel1,  // 2F1*(eps, A1; B1 | x), A1 != B1, x != 0
  rel2,  // 2F1*(A0, A1; A1 | x), A0 != eps, A1 != eps, x != 0
  rel5,  // 2F1*(A, B; A | x),   A != eps, A != B, x not in {0, 1}
};

/// first/second are (A1,B1) for rel1, (A0,A1) for rel2, (A,B) for rel5.
CycloNumber f21_star_special(const SumTables& t, TwoF1Special which, MultChar first,
                             MultChar second, FieldElement x);

/// Full table of 2F1^*(chi_a, chi_b; chi_c | x) over all character triples and
/// all x, stored canonically. Built once, then shared read-only; the
/// verification sweeps are quadratic-or-worse in q-1 and would otherwise
/// recompute the same values thousands of times.
class TwoF1StarTable {
 public:
  explicit TwoF1StarTable(const SumTables& t);
  const CycloNumber& value(long a, long b, long c, FieldElement x) const;

 private:
  const FieldContext* ctx_;
  long n_;
  uint32_t q_;
  std::vector<CycloNumber> values_;  // per triple: [x=0, x=g^0, ..., x=g^{q-2}]
};

/// Same layout for Greene's 2F1 via the binomial route.
class GreeneTable {
 public:
  explicit GreeneTable(const SumTables& t);
  const CycloNumber& value(long a, long b, long c, FieldElement x) const;

 private:
  const FieldContext* ctx_;
  long n_;
  uint32_t q_;
  std::vector<CycloNumber> values_;
};

/// All 2F1^*(chi_a, chi_b; chi_c | 1), by the closed form above. Entries are
/// stored as integer-coefficient numerators over the fixed denominator q^2, so
/// downstream kernel products stay in integer arithmetic.
class F21AtOneTable {
 public:
  explicit F21AtOneTable(const SumTables& t);
  const CycloNumber& numerator(long a, long b, long c) const;
  const Rational& denominator_scale() const { return scale_; }  // 1/q^2
  CycloNumber value(long a, long b, long c) const;

 private:
  long n_;
  Rational scale_;
  std::vector<CycloNumber> values_;
};

}  // namespace ffa
