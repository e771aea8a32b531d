#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffa {

using int128 = __int128;
using uint128 = unsigned __int128;

std::string int128_to_string(int128 v);

/// Exact rational with 128-bit numerator/denominator, always reduced,
/// denominator positive. Arithmetic throws std::overflow_error instead of
/// wrapping; at the field sizes this library targets (q <= 2^16, verification
/// at q <= 13) values stay far below the 128-bit range.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  static Rational make(int128 n, int128 d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string to_string() const;
  double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

 private:
  void normalize();
  int128 num_ = 0;
  int128 den_ = 1;
};

namespace detail {

inline uint128 uabs128(int128 v) {
  return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_mul(int128 a, int128 b) {
  if (a == 0 || b == 0) return 0;
  uint128 ua = uabs128(a), ub = uabs128(b);
  constexpr uint128 kMax = ~uint128{0} >> 1;  // INT128_MAX
  if (ua > kMax / ub) throw std::overflow_error("rational: 128-bit overflow in multiply");
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow in multiply");
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow in add");
  return r;
}

}  // namespace detail

inline void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("rational: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  uint128 g = detail::gcd128(detail::uabs128(num_), static_cast<uint128>(den_));
  if (g > 1) {
    num_ /= static_cast<int128>(g);
    den_ /= static_cast<int128>(g);
  }
}

inline Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = detail::checked_add(num_, o.num_);
    return *this;
  }
  num_ = detail::checked_add(detail::checked_mul(num_, o.den_),
                             detail::checked_mul(o.num_, den_));
  den_ = detail::checked_mul(den_, o.den_);
  normalize();
  return *this;
}

inline Rational& Rational::operator*=(const Rational& o) {
  num_ = detail::checked_mul(num_, o.num_);
  if (den_ == 1 && o.den_ == 1) return *this;
  den_ = detail::checked_mul(den_, o.den_);
  normalize();
  return *this;
}

inline Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational: division by zero");
  num_ = detail::checked_mul(num_, o.den_);
  den_ = detail::checked_mul(den_, o.num_);
  normalize();
  return *this;
}

inline std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  uint128 u = detail::uabs128(v);
  char buf[48];
  int i = 48;
  while (u != 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s(buf + i, 48 - i);
  return neg ? "-" + s : s;
}

inline std::string Rational::to_string() const {
  std::string s = int128_to_string(num_);
  if (den_ != 1) s += "/" + int128_to_string(den_);
  return s;
}

}  // namespace ffa
