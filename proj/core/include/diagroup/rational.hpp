#ifndef DIAGROUP_RATIONAL_HPP
#define DIAGROUP_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace diagroup {

/// Exact rational number on 64-bit numerator/denominator, always normalised
/// with positive denominator. Intermediate products go through __int128; an
/// overflow past 64 bits throws, which at the problem sizes handled here
/// means the input was malformed rather than merely large.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalise(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  friend Rational operator+(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(Rational const& a, Rational const& b) {
    if (b.num_ == 0) {
      throw std::domain_error("Rational: division by zero");
    }
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(Rational const& o) { return *this = *this + o; }
  Rational& operator-=(Rational const& o) { return *this = *this - o; }
  Rational& operator*=(Rational const& o) { return *this = *this * o; }
  Rational& operator/=(Rational const& o) { return *this = *this / o; }

  friend bool operator==(Rational const& a, Rational const& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(Rational const& a, Rational const& b) {
    return !(a == b);
  }
  friend bool operator<(Rational const& a, Rational const& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(Rational const& a, Rational const& b) { return b < a; }
  friend bool operator<=(Rational const& a, Rational const& b) {
    return !(b < a);
  }
  friend bool operator>=(Rational const& a, Rational const& b) {
    return !(a < b);
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX || d <= 0) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalise() {
    if (den_ == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    *this = make(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace diagroup

#endif
