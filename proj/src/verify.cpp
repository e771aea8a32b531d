#include "ffappell/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <thread>

#include "ffappell/appell.hpp"
#include "ffappell/hyperff.hpp"

namespace ffa {

namespace {

const std::vector<std::pair<SuiteId, const char*>>& suite_table() {
  static const std::vector<std::pair<SuiteId, const char*>> table = {
      {SuiteId::lemma_g1, "lemma_g1"},
      {SuiteId::lemma_gj1, "lemma_gj1"},
      {SuiteId::lemma_g2, "lemma_g2"},
      {SuiteId::lemma_g3, "lemma_g3"},
      {SuiteId::lemma_g7, "lemma_g7"},
      {SuiteId::binom_b3, "binom_b3"},
      {SuiteId::binom_thm1, "binom_thm1"},
      {SuiteId::binom_thm2, "binom_thm2"},
      {SuiteId::orthogonality, "orthogonality"},
      {SuiteId::prop25, "prop25"},
      {SuiteId::rel1, "rel1"},
      {SuiteId::rel2, "rel2"},
      {SuiteId::rel3, "rel3"},
      {SuiteId::rel4, "rel4"},
      {SuiteId::rel5, "rel5"},
      {SuiteId::greene_route_eq, "greene_route_eq"},
      {SuiteId::thm1, "thm1"},
      {SuiteId::thm2a, "thm2a"},
      {SuiteId::thm2b, "thm2b"},
      {SuiteId::thm3, "thm3"},
      {SuiteId::thm3_variant, "thm3_variant"},
  };
  return table;
}

struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t bound) {
    // top-range rejection keeps the draw uniform
    uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % bound;
  }
};

constexpr int kMaxDims = 6;

struct Dims {
  int count = 0;
  int char_dims = 0;  // leading character dimensions; the rest are elements
  std::array<uint32_t, kMaxDims> radix{};
  std::array<const char*, kMaxDims> names{};

  uint64_t total() const {
    uint64_t t = 1;
    for (int i = 0; i < count; ++i) t *= radix[i];
    return t;
  }
  uint64_t elem_block() const {
    uint64_t t = 1;
    for (int i = char_dims; i < count; ++i) t *= radix[i];
    return t;
  }
  void decode(uint64_t idx, uint32_t* out) const {
    for (int i = count - 1; i >= 0; --i) {
      out[i] = static_cast<uint32_t>(idx % radix[i]);
      idx /= radix[i];
    }
  }
};

using CheckFn = std::function<void(const uint32_t*, CycloNumber&, CycloNumber&)>;

struct SuiteDef {
  Dims dims;
  std::function<bool(const uint32_t*)> admissible;
  std::function<void()> prepare;          // builds shared tables, main thread only
  std::function<CheckFn()> make_checker;  // one checker per worker
};

// ---- shared helpers ---------------------------------------------------------

long norm_idx(long k, long n) {
  long v = k % n;
  return v < 0 ? v + n : v;
}

// Exponent of chi_k(x) as a power of zeta_m, or -1 at x = 0.
int mexp(const FieldContext& f, long k, FieldElement x) {
  if (x.code == 0) return -1;
  long n = f.q() - 1;
  long e = norm_idx(k, n) * static_cast<long>(f.dlog(x)) % n;
  return static_cast<int>(f.p() * e);
}

CycloNumber monomial_or_zero(int m, int e) {
  return e < 0 ? CycloNumber(m) : CycloNumber::root_of_unity(m, e);
}

Dims make_dims(std::initializer_list<const char*> char_names,
               std::initializer_list<const char*> elem_names, long n, uint32_t q) {
  Dims d;
  for (const char* name : char_names) {
    d.names[d.count] = name;
    d.radix[d.count++] = static_cast<uint32_t>(n);
  }
  d.char_dims = d.count;
  for (const char* name : elem_names) {
    d.names[d.count] = name;
    d.radix[d.count++] = q;
  }
  return d;
}

// ---- suite definitions ------------------------------------------------------

SuiteDef build_suite(const SumTables& t, SuiteId id, SuiteCache& cache) {
  const FieldContext& f = t.ctx();
  const int m = f.zeta_order();
  const long n = t.n();
  const long long q = f.q();
  const uint32_t one_code = f.one().code;
  auto elem = [&f](uint32_t code) { return f.from_code(code); };
  auto rat = [m](Rational v) { return CycloNumber::from_rational(m, v); };

  SuiteDef def;
  switch (id) {
    case SuiteId::lemma_g1: {
      // g(chi)g(chibar) = q chi(-1) - (q-1) delta(chi)
      def.dims = make_dims({"chi"}, {}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, rat, q]() -> CheckFn {
        return [&t, rat, q](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long k = v[0];
          lhs = t.pair(k, -k);
          rhs = rat(Rational((k % 2 == 0 ? q : -q) - (k == 0 ? q - 1 : 0)));
        };
      };
      break;
    }
    case SuiteId::lemma_gj1: {
      // J(A,B) = g(A)g(B)/g(AB) + (q-1) B(-1) delta(AB)
      def.dims = make_dims({"A", "B"}, {}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, rat, q, n]() -> CheckFn {
        return [&t, rat, q, n](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long a = v[0], b = v[1];
          lhs = t.jacobi(a, b);
          rhs = t.pair(a, b) * t.gauss_inv(a + b);
          if ((a + b) % n == 0) rhs += rat(Rational((b % 2 == 0 ? 1 : -1) * (q - 1)));
        };
      };
      break;
    }
    case SuiteId::lemma_g2: {
      // 1/(q-1) sum_chi g(A chi)g(B chi)g(C chibar)g(D chibar)
      //   = g(AC)g(AD)g(BC)g(BD)/g(ABCD) + q(q-1) AB(-1) delta(ABCD)
      def.dims = make_dims({"A", "B", "C", "D"}, {}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, rat, q, n, m]() -> CheckFn {
        auto acc = std::make_shared<CycloAccum>(m);
        return [&t, rat, q, n, acc](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long a = v[0], b = v[1], c = v[2], d = v[3];
          for (long k = 0; k < n; ++k) acc->add_product(t.pair(a + k, b + k), t.pair(c - k, d - k));
          lhs = acc->take().scaled(Rational(1, q - 1));
          rhs = t.pair(a + c, a + d) * t.pair(b + c, b + d) * t.gauss_inv(a + b + c + d);
          if ((a + b + c + d) % n == 0)
            rhs += rat(Rational(((a + b) % 2 == 0 ? 1 : -1) * q * (q - 1)));
        };
      };
      break;
    }
    case SuiteId::lemma_g3: {
      // 2F1*(A,B;C|1) against its Gauss-sum closed form
      def.dims = make_dims({"A", "B", "C"}, {}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, &f]() -> CheckFn {
        return [&t, &f](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          MultChar A = character(f, v[0]), B = character(f, v[1]), C = character(f, v[2]);
          lhs = mccarthy_star(t, {{A, B}, {C}, f.one()});
          rhs = f21_star_at_one(t, A, B, C);
        };
      };
      break;
    }
    case SuiteId::lemma_g7: {
      // Abar(1-x) = 1/(q-1) sum_chi g(A chi)g(chibar)/g(A) chi(-x), x != 0, 1
      def.dims = make_dims({"A"}, {"x"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[1] != 0 && v[1] != one_code;
      };
      def.make_checker = [&t, &f, m, n, q, elem]() -> CheckFn {
        auto acc = std::make_shared<CycloAccum>(m);
        return [&t, &f, m, n, q, elem, acc](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long a = v[0];
          FieldElement x = elem(v[1]);
          lhs = monomial_or_zero(m, mexp(f, -a, f.sub(f.one(), x)));
          FieldElement mx = f.neg(x);
          for (long k = 0; k < n; ++k) acc->add_shifted(t.pair(a + k, -k), mexp(f, k, mx));
          rhs = (acc->take() * t.gauss_inv_poly(a))
                    .scaled(t.gauss_inv_scale(a) * Rational(1, q - 1));
        };
      };
      break;
    }
    case SuiteId::binom_b3: {
      // (A|B) = B(-1) (B Abar | B)
      def.dims = make_dims({"A", "B"}, {}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t]() -> CheckFn {
        return [&t](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long a = v[0], b = v[1];
          lhs = t.binom(a, b);
          rhs = t.binom(b - a, b).scaled(Rational(b % 2 == 0 ? 1 : -1));
        };
      };
      break;
    }
    case SuiteId::binom_thm1: {
      // Abar(1-x) = delta(x) + q/(q-1) sum_chi (A chi | chi) chi(x)
      def.dims = make_dims({"A"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, &f, m, n, q, elem, rat]() -> CheckFn {
        auto acc = std::make_shared<CycloAccum>(m);
        return [&t, &f, m, n, q, elem, rat, acc](const uint32_t* v, CycloNumber& lhs,
                                                 CycloNumber& rhs) {
          long a = v[0];
          FieldElement x = elem(v[1]);
          lhs = monomial_or_zero(m, mexp(f, -a, f.sub(f.one(), x)));
          rhs = rat(Rational(x.code == 0 ? 1 : 0));
          if (x.code != 0) {
            for (long k = 0; k < n; ++k) acc->add_shifted(t.binom(a + k, k), mexp(f, k, x));
            rhs += acc->take().scaled(Rational(q, q - 1));
          }
        };
      };
      break;
    }
    case SuiteId::binom_thm2: {
      // Bbar(x) AbarB(1-x) = q/(q-1) sum_chi (A chi | B chi) chi(x)
      def.dims = make_dims({"A", "B"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&t, &f, m, n, q, elem]() -> CheckFn {
        auto acc = std::make_shared<CycloAccum>(m);
        return [&t, &f, m, n, q, elem, acc](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          long a = v[0], b = v[1];
          FieldElement x = elem(v[2]);
          int e1 = mexp(f, -b, x);
          int e2 = mexp(f, b - a, f.sub(f.one(), x));
          lhs = (e1 < 0 || e2 < 0) ? CycloNumber(m)
                                   : CycloNumber::root_of_unity(m, static_cast<long long>(e1) + e2);
          rhs = CycloNumber(m);
          if (x.code != 0) {
            for (long k = 0; k < n; ++k) acc->add_shifted(t.binom(a + k, b + k), mexp(f, k, x));
            rhs = acc->take().scaled(Rational(q, q - 1));
          }
        };
      };
      break;
    }
    case SuiteId::orthogonality: {
      // sum_chi chi(x) = (q-1) delta(1-x)
      def.dims = make_dims({}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.make_checker = [&f, m, n, q, elem, rat]() -> CheckFn {
        auto acc = std::make_shared<CycloAccum>(m);
        return [&f, m, n, q, elem, rat, acc](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          FieldElement x = elem(v[0]);
          if (x.code == 0) {
            lhs = CycloNumber(m);
          } else {
            for (long k = 0; k < n; ++k) acc->add_term(mexp(f, k, x), Rational(1));
            lhs = acc->take();
          }
          rhs = rat(Rational(x == f.one() ? q - 1 : 0));
        };
      };
      break;
    }
    case SuiteId::prop25: {
      // (n+1)Fn* = prod (Ai|Bi)^{-1} (n+1)Fn for A0 != eps, Ai != Bi, at n = 1
      def.dims = make_dims({"A0", "A1", "B1"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t* v) { return v[0] != 0 && v[1] != v[2]; };
      def.prepare = [&cache] { cache.greene(); };
      def.make_checker = [&t, &f, &cache, elem]() -> CheckFn {
        return [&t, &f, &cache, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          MultChar A0 = character(f, v[0]), A1 = character(f, v[1]), B1 = character(f, v[2]);
          FieldElement x = elem(v[3]);
          lhs = mccarthy_star(t, {{A0, A1}, {B1}, x});
          rhs = t.binom_inv(v[1], v[2]) * cache.greene().value(v[0], v[1], v[2], x);
        };
      };
      break;
    }
    case SuiteId::rel1: {
      // 2F1*(eps, A1; B1 | x) closed form, A1 != B1, x != 0
      def.dims = make_dims({"A1", "B1"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t* v) { return v[0] != v[1] && v[2] != 0; };
      def.make_checker = [&t, &f, elem]() -> CheckFn {
        return [&t, &f, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          MultChar A1 = character(f, v[0]), B1 = character(f, v[1]);
          FieldElement x = elem(v[2]);
          lhs = mccarthy_star(t, {{character(f, 0), A1}, {B1}, x});
          rhs = f21_star_special(t, TwoF1Special::rel1, A1, B1, x);
        };
      };
      break;
    }
    case SuiteId::rel2: {
      // 2F1*(A0, A1; A1 | x) closed form, A0 != eps, A1 != eps, x != 0
      def.dims = make_dims({"A0", "A1"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t* v) { return v[0] != 0 && v[1] != 0 && v[2] != 0; };
      def.make_checker = [&t, &f, elem]() -> CheckFn {
        return [&t, &f, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          MultChar A0 = character(f, v[0]), A1 = character(f, v[1]);
          FieldElement x = elem(v[2]);
          lhs = mccarthy_star(t, {{A0, A1}, {A1}, x});
          rhs = f21_star_special(t, TwoF1Special::rel2, A0, A1, x);
        };
      };
      break;
    }
    case SuiteId::rel3: {
      // 2F1*(A,B;C|x) = Abar(1-x) 2F1*(A, BbarC; C | -x/(1-x)), A,B != eps, B != C, x != 1
      def.dims = make_dims({"A", "B", "C"}, {"x"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[0] != 0 && v[1] != 0 && v[1] != v[2] && v[3] != one_code;
      };
      def.prepare = [&cache] { cache.two_f1(); };
      def.make_checker = [&f, m, &cache, elem]() -> CheckFn {
        return [&f, m, &cache, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          const TwoF1StarTable& star = cache.two_f1();
          long a = v[0], b = v[1], c = v[2];
          FieldElement x = elem(v[3]);
          lhs = star.value(a, b, c, x);
          FieldElement omx = f.sub(f.one(), x);
          FieldElement x2 = f.mul(f.neg(x), f.inv(omx));
          rhs = star.value(a, c - b, c, x2).shifted(mexp(f, -a, omx));
        };
      };
      break;
    }
    case SuiteId::rel4: {
      // 2F1*(A,B;C|x) = (AB)barC(1-x) 2F1*(C Abar, C Bbar; C | x),
      // A,B != eps, B != C, A != C, x != 1
      def.dims = make_dims({"A", "B", "C"}, {"x"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[0] != 0 && v[1] != 0 && v[1] != v[2] && v[0] != v[2] && v[3] != one_code;
      };
      def.prepare = [&cache] { cache.two_f1(); };
      def.make_checker = [&f, &cache, elem]() -> CheckFn {
        return [&f, &cache, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          const TwoF1StarTable& star = cache.two_f1();
          long a = v[0], b = v[1], c = v[2];
          FieldElement x = elem(v[3]);
          lhs = star.value(a, b, c, x);
          rhs = star.value(c - a, c - b, c, x).shifted(mexp(f, c - a - b, f.sub(f.one(), x)));
        };
      };
      break;
    }
    case SuiteId::rel5: {
      // 2F1*(A,B;A|x) closed form, A != eps, A != B, x not in {0,1}
      def.dims = make_dims({"A", "B"}, {"x"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[0] != 0 && v[0] != v[1] && v[2] != 0 && v[2] != one_code;
      };
      def.prepare = [&cache] { cache.two_f1(); };
      def.make_checker = [&t, &f, &cache, elem]() -> CheckFn {
        return [&t, &f, &cache, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          FieldElement x = elem(v[2]);
          lhs = cache.two_f1().value(v[0], v[1], v[0], x);
          rhs = f21_star_special(t, TwoF1Special::rel5, character(f, v[0]), character(f, v[1]), x);
        };
      };
      break;
    }
    case SuiteId::greene_route_eq: {
      // Greene 2F1 field sum == binomial character sum, all (A,B,C,x)
      def.dims = make_dims({"A", "B", "C"}, {"x"}, n, f.q());
      def.admissible = [](const uint32_t*) { return true; };
      def.prepare = [&cache] { cache.greene(); };
      def.make_checker = [&f, &cache, elem]() -> CheckFn {
        return [&f, &cache, elem](const uint32_t* v, CycloNumber& lhs, CycloNumber& rhs) {
          FieldElement x = elem(v[3]);
          lhs = greene_2f1_fieldsum(f, character(f, v[0]), character(f, v[1]), character(f, v[2]),
                                    x);
          rhs = cache.greene().value(v[0], v[1], v[2], x);
        };
      };
      break;
    }
    case SuiteId::thm1: {
      // Abar(1-x)Bbar(1-y) F4*(A;B;C,C'; -x/w, -y/w), w = (1-x)(1-y),
      // against the double character sum of 2F1*(...|1) products; x, y != 1.
      def.dims = make_dims({"A", "B", "C", "C'"}, {"x", "y"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[4] != one_code && v[5] != one_code;
      };
      def.prepare = [&cache] { cache.f21_at_one(); };
      def.make_checker = [&t, &f, m, n, &cache, elem]() -> CheckFn {
        struct State {
          std::array<long, 4> chars{-1, -1, -1, -1};
          std::unique_ptr<AppellStarKernel> f4;
          std::vector<CycloNumber> rhs_kernel;
          CycloNumber inv_ab{1};
          Rational scale;
          CycloAccum acc{1};
        };
        auto st = std::make_shared<State>();
        return [&t, &f, m, n, &cache, elem, st](const uint32_t* v, CycloNumber& lhs,
                                                CycloNumber& rhs) {
          long a = v[0], b = v[1], c = v[2], cp = v[3];
          if (st->chars != std::array<long, 4>{a, b, c, cp}) {
            st->chars = {a, b, c, cp};
            std::array<long, 4> idx{a, b, c, cp};
            st->f4 = std::make_unique<AppellStarKernel>(t, AppellKind::F4Star, idx);
            st->rhs_kernel.clear();
            st->rhs_kernel.reserve(static_cast<size_t>(n) * n);
            // integer kernels: 2F1*(..|1) numerators carry a fixed 1/q^2 each
            const F21AtOneTable& at_one = cache.f21_at_one();
            for (long i = 0; i < n; ++i)
              for (long j = 0; j < n; ++j)
                st->rhs_kernel.push_back(t.pair(a + i, b + j) * t.pair(-i, -j) *
                                         at_one.numerator(-j, a + i, cp) *
                                         at_one.numerator(-i, b + j, c));
            st->inv_ab = t.pair(-a, -b);
            st->scale = t.gauss_inv_scale(a) * t.gauss_inv_scale(b) *
                        at_one.denominator_scale() * at_one.denominator_scale() *
                        Rational(1, static_cast<long long>(n) * n);
            st->acc = CycloAccum(m);
          }
          FieldElement x = elem(v[4]), y = elem(v[5]);
          FieldElement omx = f.sub(f.one(), x), omy = f.sub(f.one(), y);
          FieldElement winv = f.inv(f.mul(omx, omy));
          FieldElement X = f.mul(f.neg(x), winv), Y = f.mul(f.neg(y), winv);
          int ea = mexp(f, -a, omx), eb = mexp(f, -b, omy);
          lhs = st->f4->eval(X, Y).shifted(static_cast<long long>(ea) + eb);
          if (x.code == 0 || y.code == 0) {
            rhs = CycloNumber(m);  // psi(-x) or chi(-y) annihilates
            return;
          }
          long dx = f.dlog(f.neg(x)), dy = f.dlog(f.neg(y));
          for (long i = 0; i < n; ++i) {
            long ei = i * dx % n;
            for (long j = 0; j < n; ++j)
              st->acc.add_shifted(st->rhs_kernel[static_cast<size_t>(i) * n + j],
                                  static_cast<long long>(f.p()) * ((ei + j * dy) % n));
          }
          rhs = (st->acc.take() * st->inv_ab).scaled(st->scale);
        };
      };
      break;
    }
    case SuiteId::thm2a:
    case SuiteId::thm2b: {
      // F4*(A;B;C,ABCbar; -x/w, -y/w) against the product of the two 2F1*
      // values, with the trivial-character and xy = 1 correction terms.
      // thm2a: A,B,C != eps, B != C, x,y != 1 (corrections included).
      // thm2b: additionally A != C and xy != 1 (bare product).
      const bool bare = id == SuiteId::thm2b;
      def.dims = make_dims({"A", "B", "C"}, {"x", "y"}, n, f.q());
      if (bare) {
        def.admissible = [one_code, &f](const uint32_t* v) {
          if (v[0] == 0 || v[1] == 0 || v[2] == 0 || v[1] == v[2] || v[0] == v[2]) return false;
          if (v[3] == one_code || v[4] == one_code) return false;
          FieldElement xy = f.mul(f.from_code(v[3]), f.from_code(v[4]));
          return xy != f.one();
        };
      } else {
        def.admissible = [one_code](const uint32_t* v) {
          return v[0] != 0 && v[1] != 0 && v[2] != 0 && v[1] != v[2] && v[3] != one_code &&
                 v[4] != one_code;
        };
      }
      def.prepare = [&cache] { cache.two_f1(); };
      def.make_checker = [&t, &f, m, n, q, &cache, elem, bare]() -> CheckFn {
        struct State {
          std::array<long, 3> chars{-1, -1, -1};
          std::unique_ptr<AppellStarKernel> f4;
          CycloNumber corr{1};
        };
        auto st = std::make_shared<State>();
        return [&t, &f, m, n, q, &cache, elem, bare, st](const uint32_t* v, CycloNumber& lhs,
                                                         CycloNumber& rhs) {
          long a = v[0], b = v[1], c = v[2];
          long cp = norm_idx(a + b - c, n);
          if (st->chars != std::array<long, 3>{a, b, c}) {
            st->chars = {a, b, c};
            std::array<long, 4> idx{a, b, c, cp};
            st->f4 = std::make_unique<AppellStarKernel>(t, AppellKind::F4Star, idx);
            // q^2 AC(-1) / (g(A)g(B)g(Cbar)g(AbarBbarC))
            Rational s(((a + c) % 2 == 0 ? 1 : -1) * q * q);
            st->corr = (t.gauss_inv(a) * t.gauss_inv(b) * t.gauss_inv(-c) * t.gauss_inv(c - a - b))
                           .scaled(s);
          }
          FieldElement x = elem(v[3]), y = elem(v[4]);
          FieldElement omx = f.sub(f.one(), x), omy = f.sub(f.one(), y);
          FieldElement winv = f.inv(f.mul(omx, omy));
          FieldElement X = f.mul(f.neg(x), winv), Y = f.mul(f.neg(y), winv);
          lhs = st->f4->eval(X, Y);
          FieldElement x1 = f.mul(f.neg(x), f.inv(omx));
          FieldElement y1 = f.mul(f.neg(y), f.inv(omy));
          const TwoF1StarTable& star = cache.two_f1();
          rhs = star.value(a, b, c, x1) * star.value(a, b, cp, y1);
          if (bare) return;
          if (a == c) {
            // delta(A Cbar) branch: (q-1)/q Abar(x/(x-1)) Bbar(y/(y-1))
            int e1 = mexp(f, -a, x1), e2 = mexp(f, -b, y1);
            if (e1 >= 0 && e2 >= 0)
              rhs += CycloNumber::root_of_unity(m, static_cast<long long>(e1) + e2)
                         .scaled(Rational(q - 1, q));
          }
          if (f.mul(x, y) == f.one()) {
            long long e = mexp(f, c - b, y);
            e += mexp(f, a, omx);
            e += mexp(f, b, omy);
            rhs -= st->corr.shifted(e);
          }
        };
      };
      break;
    }
    case SuiteId::thm3:
    case SuiteId::thm3_variant: {
      // F4*(A;B;C,B; -x/w, -y/w) = A(w) F1*(A; BbarC, ACbar; D; x, xy)
      //   - g(B)g(ABbar)/(q g(A)) Bbar(y) B(w),  w = (1-x)(1-y),
      // with B != eps, A != B != C != A and x, y nonzero, != 1.
      // thm3 reads the F1* lower parameter as D = Cbar, thm3_variant as D = C.
      const bool conj_reading = id == SuiteId::thm3;
      def.dims = make_dims({"A", "B", "C"}, {"x", "y"}, n, f.q());
      def.admissible = [one_code](const uint32_t* v) {
        return v[1] != 0 && v[0] != v[1] && v[1] != v[2] && v[2] != v[0] && v[3] != 0 &&
               v[3] != one_code && v[4] != 0 && v[4] != one_code;
      };
      def.make_checker = [&t, &f, n, q, elem, conj_reading]() -> CheckFn {
        struct State {
          std::array<long, 3> chars{-1, -1, -1};
          std::unique_ptr<AppellStarKernel> f4, f1;
          CycloNumber corr{1};
        };
        auto st = std::make_shared<State>();
        return [&t, &f, n, q, elem, conj_reading, st](const uint32_t* v, CycloNumber& lhs,
                                                      CycloNumber& rhs) {
          long a = v[0], b = v[1], c = v[2];
          if (st->chars != std::array<long, 3>{a, b, c}) {
            st->chars = {a, b, c};
            std::array<long, 4> f4idx{a, b, c, b};
            st->f4 = std::make_unique<AppellStarKernel>(t, AppellKind::F4Star, f4idx);
            std::array<long, 4> f1idx{a, norm_idx(c - b, n), norm_idx(a - c, n),
                                      conj_reading ? norm_idx(-c, n) : c};
            st->f1 = std::make_unique<AppellStarKernel>(t, AppellKind::F1Star, f1idx);
            st->corr = (t.pair(b, a - b) * t.gauss_inv(a)).scaled(Rational(1, q));
          }
          FieldElement x = elem(v[3]), y = elem(v[4]);
          FieldElement omx = f.sub(f.one(), x), omy = f.sub(f.one(), y);
          FieldElement w = f.mul(omx, omy);
          FieldElement winv = f.inv(w);
          lhs = st->f4->eval(f.mul(f.neg(x), winv), f.mul(f.neg(y), winv));
          rhs = st->f1->eval(x, f.mul(x, y)).shifted(mexp(f, a, w));
          rhs -= st->corr.shifted(static_cast<long long>(mexp(f, -b, y)) + mexp(f, b, w));
        };
      };
      break;
    }
  }
  return def;
}

// ---- runner -----------------------------------------------------------------

void merge_violations(std::vector<Violation>& into, std::vector<Violation>& from) {
  size_t mid = into.size();
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
  std::inplace_merge(into.begin(), into.begin() + static_cast<long>(mid), into.end(),
                     [](const Violation& a, const Violation& b) { return a.index < b.index; });
}

std::vector<std::pair<std::string, std::string>> tuple_params(const FieldContext& f,
                                                              const Dims& dims,
                                                              const uint32_t* v) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(dims.count);
  for (int i = 0; i < dims.count; ++i) {
    if (i < dims.char_dims)
      out.emplace_back(dims.names[i], "chi_" + std::to_string(v[i]));
    else
      out.emplace_back(dims.names[i], f.label(f.from_code(v[i])));
  }
  return out;
}

}  // namespace

std::string suite_name(SuiteId id) {
  for (const auto& [sid, name] : suite_table())
    if (sid == id) return name;
  return "unknown";
}

std::optional<SuiteId> suite_from_name(const std::string& name) {
  for (const auto& [sid, sname] : suite_table())
    if (name == sname) return sid;
  return std::nullopt;
}

const std::vector<SuiteId>& all_suite_ids() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> v;
    for (const auto& [sid, name] : suite_table()) v.push_back(sid);
    return v;
  }();
  return ids;
}

const TwoF1StarTable& SuiteCache::two_f1() {
  if (!two_f1_) two_f1_ = std::make_unique<TwoF1StarTable>(*t_);
  return *two_f1_;
}

const GreeneTable& SuiteCache::greene() {
  if (!greene_) greene_ = std::make_unique<GreeneTable>(*t_);
  return *greene_;
}

const F21AtOneTable& SuiteCache::f21_at_one() {
  if (!f21_at_one_) f21_at_one_ = std::make_unique<F21AtOneTable>(*t_);
  return *f21_at_one_;
}

std::string VerificationReport::status() const {
  if (tuples_tested == 0) return "vacuous";
  return violation_count == 0 ? "ok" : "fail";
}

uint64_t suite_space_size(const SumTables& tables, SuiteId id) {
  SuiteCache scratch(tables);  // prepare() is never invoked here
  SuiteDef def = build_suite(tables, id, scratch);
  uint64_t total = def.dims.total();
  uint64_t count = 0;
  std::array<uint32_t, kMaxDims> v{};
  for (uint64_t idx = 0; idx < total; ++idx) {
    def.dims.decode(idx, v.data());
    if (def.admissible(v.data())) ++count;
  }
  return count;
}

VerificationReport run_suite(const SumTables& tables, SuiteId id, const RunOptions& opts) {
  SuiteCache cache(tables);
  return run_suite(tables, id, opts, cache);
}

VerificationReport run_suite(const SumTables& tables, SuiteId id, const RunOptions& opts,
                             SuiteCache& cache) {
  auto t0 = std::chrono::steady_clock::now();
  const FieldContext& f = tables.ctx();
  SuiteDef def = build_suite(tables, id, cache);
  if (def.prepare) def.prepare();
  const int m = f.zeta_order();

  VerificationReport report;
  report.suite = id;
  report.p = f.p();
  report.r = f.r();
  report.q = f.q();
  report.mode = opts.mode;
  report.seed = opts.seed;
  report.sample_count = opts.mode == RunMode::sample ? opts.sample_count : 0;

  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  // Work items: either all admissible tuples in canonical order, or the seeded
  // sample list. Violations carry the canonical index so merged output does
  // not depend on the worker count.
  std::vector<uint64_t> sample;
  if (opts.mode == RunMode::sample) {
    if (opts.sample_count == 0) throw std::invalid_argument("sample mode requires sample_count");
    uint64_t total = def.dims.total();
    if (suite_space_size(tables, id) == 0) {
      report.tuples_tested = 0;
      report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return report;
    }
    SplitMix64 rng(opts.seed);
    std::array<uint32_t, kMaxDims> v{};
    sample.reserve(opts.sample_count);
    while (sample.size() < opts.sample_count) {
      uint64_t idx = rng.below(total);
      def.dims.decode(idx, v.data());
      if (def.admissible(v.data())) sample.push_back(idx);  // predicate re-checked on each draw
    }
  }

  struct WorkerOut {
    uint64_t tested = 0;
    uint64_t violation_count = 0;
    std::vector<Violation> violations;
  };
  std::vector<WorkerOut> outs(static_cast<size_t>(jobs));

  auto record = [&](WorkerOut& out, uint64_t ordinal, const uint32_t* v, const CycloNumber& lhs,
                    const CycloNumber& rhs) {
    ++out.violation_count;
    if (out.violations.size() >= opts.max_violations) return;
    Violation viol;
    viol.index = ordinal;
    viol.params = tuple_params(f, def.dims, v);
    viol.lhs = lhs.to_string();
    viol.rhs = rhs.to_string();
    viol.diff = (lhs - rhs).to_string();
    out.violations.push_back(std::move(viol));
  };

  auto worker = [&](int w) {
    WorkerOut& out = outs[static_cast<size_t>(w)];
    CheckFn check = def.make_checker();
    std::array<uint32_t, kMaxDims> v{};
    CycloNumber lhs(m), rhs(m);
    if (opts.mode == RunMode::sample) {
      for (size_t pos = static_cast<size_t>(w); pos < sample.size(); pos += jobs) {
        def.dims.decode(sample[pos], v.data());
        check(v.data(), lhs, rhs);
        ++out.tested;
        if (!(lhs - rhs).is_zero()) record(out, pos, v.data(), lhs, rhs);
      }
    } else {
      // char-prefix blocks stay contiguous per worker so kernel caches hit
      uint64_t blocks = 1;
      for (int i = 0; i < def.dims.char_dims; ++i) blocks *= def.dims.radix[i];
      uint64_t block_len = def.dims.elem_block();
      for (uint64_t blk = static_cast<uint64_t>(w); blk < blocks; blk += static_cast<uint64_t>(jobs)) {
        for (uint64_t off = 0; off < block_len; ++off) {
          uint64_t idx = blk * block_len + off;
          def.dims.decode(idx, v.data());
          if (!def.admissible(v.data())) continue;
          check(v.data(), lhs, rhs);
          ++out.tested;
          if (!(lhs - rhs).is_zero()) record(out, idx, v.data(), lhs, rhs);
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& th : threads) th.join();
  }

  for (WorkerOut& out : outs) {
    report.tuples_tested += out.tested;
    report.violation_count += out.violation_count;
    merge_violations(report.violations, out.violations);
  }
  if (report.violations.size() > opts.max_violations)
    report.violations.resize(opts.max_violations);
  report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<VerificationReport> run_all(const SumTables& tables, const RunOptions& opts) {
  std::vector<VerificationReport> reports;
  SuiteCache cache(tables);
  for (SuiteId id : all_suite_ids()) {
    RunOptions per = opts;
    per.mode = suite_space_size(tables, id) <= opts.budget ? RunMode::exhaustive : RunMode::sample;
    reports.push_back(run_suite(tables, id, per, cache));
  }
  return reports;
}

bool reports_pass(const std::vector<VerificationReport>& reports) {
  bool saw_thm3 = false, saw_variant = false, thm3_ok = false, variant_ok = false;
  bool ok = true;
  for (const VerificationReport& r : reports) {
    if (r.suite == SuiteId::thm3) {
      saw_thm3 = true;
      thm3_ok = r.passed() || r.tuples_tested == 0;
      continue;
    }
    if (r.suite == SuiteId::thm3_variant) {
      saw_variant = true;
      variant_ok = r.passed() || r.tuples_tested == 0;
      continue;
    }
    if (r.tuples_tested > 0 && !r.passed()) ok = false;
  }
  if (saw_thm3 && saw_variant) {
    if (!thm3_ok && !variant_ok) ok = false;  // the pair resolves a reading; one must hold
  } else {
    if (saw_thm3 && !thm3_ok) ok = false;
    if (saw_variant && !variant_ok) ok = false;
  }
  return ok;
}

}  // namespace ffa
