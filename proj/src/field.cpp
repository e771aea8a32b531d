#include "ffappell/field.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

namespace ffa {

namespace {

std::atomic<uint32_t> next_ctx_id{1};

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomial arithmetic over F_p, coefficients low-degree-first.
using Poly = std::vector<int>;

int deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  int dm = deg(mod);
  std::vector<long long> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += 1LL * a[i] * b[j];
  }
  for (auto& c : prod) c %= p;
  for (int i = static_cast<int>(prod.size()) - 1; i >= dm; --i) {
    long long c = prod[i] % p;
    if (c == 0) continue;
    prod[i] = 0;
    for (int k = 0; k < dm; ++k) prod[i - dm + k] = (prod[i - dm + k] - c * mod[k]) % p;
  }
  Poly out(dm, 0);
  for (int i = 0; i < dm; ++i) out[i] = static_cast<int>(((prod[i] % p) + p) % p);
  return out;
}

Poly poly_pow_mod(Poly base, long long e, const Poly& mod, int p) {
  Poly result(deg(mod), 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  auto inv_mod_p = [p](int v) {
    int r = 1, base = ((v % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<int>(1LL * r * base % p);
      base = static_cast<int>(1LL * base * base % p);
      e >>= 1;
    }
    return r;
  };
  while (deg(b) >= 0) {
    int db = deg(b), da = deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    int lead = inv_mod_p(b[db]);
    Poly rem = a;
    for (int i = da; i >= db; --i) {
      int c = rem[i] % p;
      if (c == 0) continue;
      long long f = 1LL * c * lead % p;
      for (int k = 0; k <= db; ++k)
        rem[i - db + k] = static_cast<int>(((rem[i - db + k] - f * b[k]) % p + p) % p);
    }
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

// f monic of degree r: irreducible iff x^{p^r} = x mod f and
// gcd(x^{p^{r/s}} - x, f) is constant for every prime s | r.
bool is_irreducible(const Poly& f, int p, int r) {
  Poly x(r, 0);
  if (r == 1) return true;
  x[1] = 1;
  Poly t = x;
  std::vector<Poly> frob(r + 1);  // frob[k] = x^{p^k} mod f
  frob[0] = x;
  for (int k = 1; k <= r; ++k) {
    t = poly_pow_mod(t, p, f, p);
    frob[k] = t;
  }
  if (frob[r] != x) return false;
  for (long long s : prime_factors(r)) {
    Poly d = frob[r / s];
    d[1] = (d[1] - 1 % p + p) % p;  // subtract x
    Poly g = poly_gcd(f, d, p);
    if (deg(g) > 0) return false;
  }
  return true;
}

}  // namespace

FieldContext::FieldContext(long long p, int r, uint32_t max_q) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (p == 2) throw std::invalid_argument("p must be an odd prime");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > static_cast<long long>(max_q))
      throw std::invalid_argument("q = p^r exceeds the configured bound " + std::to_string(max_q));
  }
  p_ = static_cast<uint32_t>(p);
  r_ = r;
  q_ = static_cast<uint32_t>(q);
  id_ = next_ctx_id.fetch_add(1);

  // Lexicographically smallest monic irreducible modulus, low-degree-first.
  if (r == 1) {
    modulus_ = {0, 1};  // x; unused by the r = 1 arithmetic
  } else {
    std::vector<int> c(r, 0);
    while (true) {
      Poly f(c.begin(), c.end());
      f.push_back(1);
      if (is_irreducible(f, static_cast<int>(p), r)) {
        modulus_ = f;
        break;
      }
      int i = r - 1;
      while (i >= 0 && c[i] == static_cast<int>(p) - 1) c[i--] = 0;
      if (i < 0) throw std::logic_error("no irreducible polynomial found");
      ++c[i];
    }
  }

  // Smallest primitive element in lexicographic coefficient order.
  auto order_is_q1 = [this](uint32_t code) {
    for (long long s : prime_factors(q_ - 1)) {
      uint32_t acc = one_code_;
      uint32_t base = code;
      long long e = (q_ - 1) / s;
      while (e > 0) {
        if (e & 1) acc = raw_mul(acc, base);
        base = raw_mul(base, base);
        e >>= 1;
      }
      if (acc == one_code_) return false;
    }
    return true;
  };
  std::vector<int> a(r, 0);
  gen_code_ = 0;
  while (true) {
    uint32_t code = 0;
    for (int i = r - 1; i >= 0; --i) code = code * p_ + static_cast<uint32_t>(a[i]);
    if (code != 0 && order_is_q1(code)) {
      gen_code_ = code;
      break;
    }
    int i = r - 1;
    while (i >= 0 && a[i] == static_cast<int>(p) - 1) a[i--] = 0;
    if (i < 0) throw std::logic_error("no generator found");
    ++a[i];
  }

  exp_.assign(q_ - 1, 0);
  dlog_.assign(q_, 0);
  uint32_t e = one_code_;
  for (uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = e;
    dlog_[e] = k;
    e = raw_mul(e, gen_code_);
  }
  if (e != one_code_) throw std::logic_error("generator order check failed");

  trace_.assign(q_, 0);
  for (uint32_t code = 0; code < q_; ++code) {
    uint32_t s = code, f = code;
    for (int i = 1; i < r_; ++i) {
      // Frobenius by repeated multiplication: f <- f^p
      uint32_t fp = one_code_;
      for (uint32_t j = 0; j < p_; ++j) fp = raw_mul(fp, f);
      f = fp;
      s = raw_add(s, f);
    }
    // the Frobenius sum must have zero coefficients above degree 0
    if (r_ > 1 && s / p_ != 0) throw std::logic_error("trace left the prime field");
    trace_[code] = static_cast<uint8_t>(s % p_);
  }
}

uint32_t FieldContext::raw_add(uint32_t a, uint32_t b) const {
  uint32_t out = 0, mult = 1;
  for (int i = 0; i < r_; ++i) {
    uint32_t s = (a % p_ + b % p_) % p_;
    out += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

uint32_t FieldContext::raw_neg(uint32_t a) const {
  uint32_t out = 0, mult = 1;
  for (int i = 0; i < r_; ++i) {
    uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a /= p_;
  }
  return out;
}

uint32_t FieldContext::raw_mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (r_ == 1) return a * b % p_;
  std::vector<long long> prod(2 * r_ - 1, 0);
  std::vector<uint32_t> ca(r_), cb(r_);
  for (int i = 0; i < r_; ++i) {
    ca[i] = a % p_;
    a /= p_;
    cb[i] = b % p_;
    b /= p_;
  }
  for (int i = 0; i < r_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < r_; ++j) prod[i + j] += 1LL * ca[i] * cb[j];
  }
  for (int d = 2 * r_ - 2; d >= r_; --d) {
    long long c = prod[d] % p_;
    if (c == 0) continue;
    prod[d] = 0;
    for (int k = 0; k < r_; ++k) prod[d - r_ + k] -= c * modulus_[k];
  }
  uint32_t out = 0;
  for (int i = r_ - 1; i >= 0; --i)
    out = out * p_ + static_cast<uint32_t>(((prod[i] % p_) + p_) % p_);
  return out;
}

void FieldContext::check(FieldElement a) const {
  if (a.ctx != id_) throw std::invalid_argument("field element belongs to a different context");
  if (a.code >= q_) throw std::invalid_argument("field element code out of range");
}

FieldElement FieldContext::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() > static_cast<size_t>(r_))
    throw std::invalid_argument("too many coefficients for this field");
  uint32_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    int c = coeffs[i] % static_cast<int>(p_);
    if (c < 0) c += static_cast<int>(p_);
    code = code * p_ + static_cast<uint32_t>(c);
  }
  return {code, id_};
}

std::vector<int> FieldContext::coeffs(FieldElement a) const {
  check(a);
  std::vector<int> out(r_);
  uint32_t c = a.code;
  for (int i = 0; i < r_; ++i) {
    out[i] = static_cast<int>(c % p_);
    c /= p_;
  }
  return out;
}

FieldElement FieldContext::from_code(uint32_t code) const {
  if (code >= q_) throw std::invalid_argument("field element code out of range");
  return {code, id_};
}

FieldElement FieldContext::from_int(long long n) const {
  long long v = n % static_cast<long long>(p_);
  if (v < 0) v += p_;
  return {static_cast<uint32_t>(v), id_};
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {raw_add(a.code, b.code), id_};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {raw_add(a.code, raw_neg(b.code)), id_};
}

FieldElement FieldContext::neg(FieldElement a) const {
  check(a);
  return {raw_neg(a.code), id_};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.code == 0 || b.code == 0) return zero();
  return {exp_[(dlog_[a.code] + dlog_[b.code]) % (q_ - 1)], id_};
}

FieldElement FieldContext::inv(FieldElement a) const {
  check(a);
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return {exp_[(q_ - 1 - dlog_[a.code]) % (q_ - 1)], id_};
}

int FieldContext::trace(FieldElement a) const {
  check(a);
  return trace_[a.code];
}

int FieldContext::dlog(FieldElement a) const {
  check(a);
  if (a.code == 0) throw std::domain_error("discrete log of zero");
  return static_cast<int>(dlog_[a.code]);
}

FieldElement FieldContext::gen_pow(long long k) const {
  long long n = q_ - 1;
  long long e = k % n;
  if (e < 0) e += n;
  return {exp_[e], id_};
}

std::string FieldContext::label(FieldElement a) const {
  check(a);
  if (a.code == 0) return "0";
  return "g^" + std::to_string(dlog_[a.code]);
}

FieldElement FieldContext::parse(const std::string& text) const {
  if (text == "0") return zero();
  if (text == "1") return one();
  if (text.rfind("g^", 0) == 0) {
    size_t pos = 2;
    long long k = 0;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("malformed element '" + text + "'");
    for (; pos < text.size(); ++pos) {
      if (text[pos] < '0' || text[pos] > '9')
        throw std::invalid_argument("malformed element '" + text + "'");
      k = k * 10 + (text[pos] - '0');
      if (k > (1LL << 40)) throw std::invalid_argument("element exponent too large in '" + text + "'");
    }
    return gen_pow(neg ? -k : k);
  }
  if (text == "g") return generator();
  throw std::invalid_argument("malformed element '" + text + "' (expected \"0\" or \"g^k\")");
}

namespace {

std::string poly_string(const std::vector<int>& coeffs, const std::string& var) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      std::string v = i == 1 ? var : var + "^" + std::to_string(i);
      term = c == 1 ? v : std::to_string(c) + "*" + v;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string FieldContext::modulus_string() const { return poly_string(modulus_, "x"); }

std::string FieldContext::generator_string() const {
  std::vector<int> c = coeffs(generator());
  return poly_string(c, "t");
}

}  // namespace ffa
