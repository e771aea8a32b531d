#include "ffappell/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ffa {

namespace {

// Reduction context for one cyclotomic order: Phi_m plus the fully reduced
// rows x^e mod Phi_m for e in [deg, m). Row coefficients of cyclotomic
// reductions stay tiny, so 64-bit entries are ample; guarded anyway.
struct CycloBasis {
  int m = 1;
  int deg = 1;
  std::vector<long long> phi;
  std::vector<std::vector<long long>> rows;
};

constexpr int kMaxCanonicalOrder = 1 << 16;
constexpr long long kRowCoeffGuard = 1LL << 40;
constexpr long long kMaxRowEntries = 1LL << 24;  // ~134 MB of reduction rows

// x^m - 1 divided by prod of Phi_d over proper divisors d of m, exact integer
// division by a monic divisor.
std::vector<long long> compute_phi(int m, const std::vector<std::vector<long long>>& memo) {
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long long>& div = memo[d];
    int dd = static_cast<int>(div.size()) - 1;
    int nd = static_cast<int>(num.size()) - 1;
    std::vector<long long> quot(nd - dd + 1, 0);
    for (int i = nd; i >= dd; --i) {
      long long c = num[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * div[k];
    }
    for (long long c : num)
      if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    num = std::move(quot);
  }
  return num;
}

const CycloBasis& basis_for(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloBasis>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  if (m < 1 || m > kMaxCanonicalOrder)
    throw std::invalid_argument("cyclotomic order out of supported range: " + std::to_string(m));

  std::vector<std::vector<long long>> memo(m + 1);
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    memo[d] = compute_phi(d, memo);
  }
  auto basis = std::make_unique<CycloBasis>();
  basis->m = m;
  basis->phi = std::move(memo[m]);
  basis->deg = static_cast<int>(basis->phi.size()) - 1;
  int deg = basis->deg;
  if (static_cast<long long>(m - deg) * deg > kMaxRowEntries)
    throw std::invalid_argument(
        "cyclotomic order " + std::to_string(m) +
        " is too large for exact canonicalization; use the float backend");
  basis->rows.resize(m - deg);
  if (deg == m) {  // m = 1: nothing above the basis range
    auto [pos1, ins1] = cache.emplace(m, std::move(basis));
    (void)ins1;
    return *pos1->second;
  }
  // rows[0] = x^deg mod Phi = -(low part of Phi); each next row is the
  // previous shifted by one and re-reduced.
  std::vector<long long> cur(deg, 0);
  for (int k = 0; k < deg; ++k) cur[k] = -basis->phi[k];
  basis->rows[0] = cur;
  for (int e = deg + 1; e < m; ++e) {
    long long top = cur[deg - 1];
    for (int k = deg - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (int k = 0; k < deg; ++k) cur[k] -= top * basis->phi[k];
    for (long long c : cur)
      if (std::llabs(c) > kRowCoeffGuard)
        throw std::overflow_error("cyclotomic reduction rows exceed guard");
    basis->rows[e - deg] = cur;
  }
  auto [pos, inserted] = cache.emplace(m, std::move(basis));
  (void)inserted;
  return *pos->second;
}

int norm_exp(long long e, int m) {
  long long r = e % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

thread_local std::vector<Rational> tls_scratch;

std::vector<Rational>& scratch(int m) {
  if (static_cast<int>(tls_scratch.size()) < m) tls_scratch.assign(m, Rational{});
  return tls_scratch;
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> cyclotomic_polynomial(int m) {
  const CycloBasis& b = basis_for(m);
  return b.phi;
}

CycloNumber::CycloNumber(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

CycloNumber CycloNumber::from_rational(int m, const Rational& c) {
  CycloNumber r(m);
  if (!c.is_zero()) r.terms_.push_back({0, c});
  return r;
}

CycloNumber CycloNumber::root_of_unity(int m, long long e) {
  CycloNumber r(m);
  r.terms_.push_back({norm_exp(e, m), Rational(1)});
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(m_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.e, -t.c});
  return r;
}

namespace {

void check_same_order(int a, int b) {
  if (a != b) throw std::invalid_argument("cyclotomic orders differ");
}

// Merge sorted term lists.
std::vector<CycloNumber::Term> merge_terms(const std::vector<CycloNumber::Term>& a,
                                           const std::vector<CycloNumber::Term>& b, bool subtract) {
  std::vector<CycloNumber::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].e < a[i].e) {
      out.push_back({b[j].e, subtract ? -b[j].c : b[j].c});
      ++j;
    } else {
      Rational c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].e, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same_order(m_, o.m_);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same_order(m_, o.m_);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  check_same_order(a.m_, b.m_);
  CycloAccum acc(a.m_);
  acc.add_product(a, b);
  return acc.take();
}

CycloNumber CycloNumber::scaled(const Rational& s) const {
  CycloNumber r(m_);
  if (s.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.e, t.c * s});
  return r;
}

CycloNumber CycloNumber::shifted(long long e) const {
  int s = norm_exp(e, m_);
  if (s == 0) return *this;
  CycloNumber r(m_);
  r.terms_.reserve(terms_.size());
  // exponents wrap mod m; keep the list sorted by splitting at the wrap point
  for (const Term& t : terms_) {
    int ne = t.e + s;
    if (ne >= m_) r.terms_.push_back({ne - m_, t.c});
  }
  size_t wrapped = r.terms_.size();
  for (const Term& t : terms_) {
    int ne = t.e + s;
    if (ne < m_) r.terms_.push_back({ne, t.c});
  }
  std::inplace_merge(r.terms_.begin(), r.terms_.begin() + static_cast<long>(wrapped), r.terms_.end(),
                     [](const Term& x, const Term& y) { return x.e < y.e; });
  return r;
}

CycloNumber CycloNumber::conjugate() const {
  CycloNumber r(m_);
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({it->e == 0 ? 0 : m_ - it->e, it->c});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.e < y.e; });
  return r;
}

CycloNumber CycloNumber::canonical() const {
  if (terms_.empty()) return *this;
  const CycloBasis& b = basis_for(m_);
  std::vector<Rational>& buf = scratch(m_);
  for (int i = 0; i < m_; ++i) buf[i] = Rational{};
  for (const Term& t : terms_) buf[t.e] = t.c;
  for (int e = m_ - 1; e >= b.deg; --e) {
    if (buf[e].is_zero()) continue;
    Rational c = buf[e];
    buf[e] = Rational{};
    const std::vector<long long>& row = b.rows[e - b.deg];
    for (int k = 0; k < b.deg; ++k)
      if (row[k] != 0) buf[k] += c * Rational(row[k]);
  }
  CycloNumber r(m_);
  for (int e = 0; e < b.deg; ++e)
    if (!buf[e].is_zero()) r.terms_.push_back({e, buf[e]});
  return r;
}

bool CycloNumber::is_zero() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1 && terms_[0].e == 0) return false;  // nonzero rational
  return canonical().terms_.empty();
}

bool CycloNumber::is_one() const {
  CycloNumber d = *this;
  d -= from_rational(m_, Rational(1));
  return d.is_zero();
}

bool CycloNumber::equals(const CycloNumber& o) const {
  check_same_order(m_, o.m_);
  CycloNumber d = *this;
  d -= o;
  return d.is_zero();
}

std::complex<double> CycloNumber::to_complex() const {
  long double re = 0, im = 0;
  for (const Term& t : terms_) {
    long double c = static_cast<long double>(t.c.num()) / static_cast<long double>(t.c.den());
    long double ang = 2.0L * std::numbers::pi_v<long double> * t.e / m_;
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloNumber::to_string() const {
  CycloNumber c = canonical();
  if (c.terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : c.terms_) {
    Rational coeff = t.c;
    bool neg = coeff.sign() < 0;
    if (neg) coeff = -coeff;
    std::string body;
    if (t.e == 0) {
      body = coeff.to_string();
    } else {
      std::string z = t.e == 1 ? "z" : "z^" + std::to_string(t.e);
      body = coeff.is_one() ? z : coeff.to_string() + "*" + z;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

CycloNumber CycloNumber::inverse() const {
  CycloNumber cn = canonical();
  if (cn.terms_.empty()) throw std::domain_error("cyclotomic inverse of zero");

  // 1/a = (prod of the other Galois conjugates) / Norm(a). The conjugate
  // product keeps coefficients far smaller than a rational extended gcd
  // against Phi_m would.
  CycloNumber rest = from_rational(m_, Rational(1));
  for (int k = 2; k < m_; ++k) {
    if (std::gcd(k, m_) != 1) continue;
    CycloAccum img(m_);
    for (const Term& t : cn.terms_)
      img.add_term(static_cast<long long>(k) * t.e, t.c);
    rest = (rest * img.take()).canonical();
  }
  CycloNumber norm = (rest * cn).canonical();
  if (norm.terms_.size() != 1 || norm.terms_[0].e != 0)
    throw std::logic_error("cyclotomic norm did not reduce to a rational");
  return rest.scaled(Rational(1) / norm.terms_[0].c);
}

CycloAccum::CycloAccum(int m) : m_(m), buf_(static_cast<size_t>(m)) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

void CycloAccum::clear() {
  for (Rational& c : buf_) c = Rational{};
}

void CycloAccum::add(const CycloNumber& a) {
  check_same_order(m_, a.order());
  for (const CycloNumber::Term& t : a.terms()) buf_[t.e] += t.c;
}

void CycloAccum::add_shifted(const CycloNumber& a, long long e) {
  check_same_order(m_, a.order());
  int s = norm_exp(e, m_);
  for (const CycloNumber::Term& t : a.terms()) {
    int ne = t.e + s;
    if (ne >= m_) ne -= m_;
    buf_[ne] += t.c;
  }
}

void CycloAccum::add_shifted_scaled(const CycloNumber& a, long long e, const Rational& s) {
  check_same_order(m_, a.order());
  if (s.is_zero()) return;
  int sh = norm_exp(e, m_);
  for (const CycloNumber::Term& t : a.terms()) {
    int ne = t.e + sh;
    if (ne >= m_) ne -= m_;
    buf_[ne] += t.c * s;
  }
}

void CycloAccum::add_term(long long e, const Rational& c) {
  buf_[norm_exp(e, m_)] += c;
}

void CycloAccum::add_product(const CycloNumber& a, const CycloNumber& b) {
  check_same_order(m_, a.order());
  check_same_order(m_, b.order());
  for (const CycloNumber::Term& ta : a.terms()) {
    for (const CycloNumber::Term& tb : b.terms()) {
      int e = ta.e + tb.e;
      if (e >= m_) e -= m_;
      buf_[e] += ta.c * tb.c;
    }
  }
}

CycloNumber CycloAccum::take() {
  CycloNumber r(m_);
  for (int e = 0; e < m_; ++e) {
    if (!buf_[e].is_zero()) {
      r.terms_.push_back({e, buf_[e]});
      buf_[e] = Rational{};
    }
  }
  return r;
}

}  // namespace ffa
