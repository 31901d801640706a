#ifndef STABKIT_RATIONAL_HPP
#define STABKIT_RATIONAL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stabkit {

// Domain failures (bad input, unreducible mutation, degenerate differential,
// ...) all derive from this so the CLI can map them to a single exit code.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational on int64 with __int128 intermediates. Always normalized:
// gcd(num, den) = 1 and den > 0. Values outside int64 after reduction throw.
//
// boost::rational<long long> was rejected: its reversed heterogeneous
// comparison operators recurse infinitely when compared against int literals
// with the Boost version shipped here.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat operator+(const Rat& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rat operator-(const Rat& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rat operator*(const Rat& o) const { return make(i128(num_) * o.num_, i128(den_) * o.den_); }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw domain_error("rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

 private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw domain_error("rational overflow");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline int sign(const Rat& r) { return r.sign(); }

std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q", and finite decimals like "-0.25" (parsed exactly).
Rat rat_from_string(const std::string& s);

// Complex number with exact rational components; the authoritative backend
// for phase comparisons and wall tests.
struct RatComplex {
  Rat re{0};
  Rat im{0};

  RatComplex() = default;
  RatComplex(Rat r, Rat i) : re(r), im(i) {}

  RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
  RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
  RatComplex operator-() const { return {-re, -im}; }
  RatComplex operator*(const Rat& s) const { return {re * s, im * s}; }
  bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == Rat(0) && im == Rat(0); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// re1*im2 - im1*re2; the sign decides phase order for values in the closed
// upper half-plane.
inline Rat cross(const RatComplex& a, const RatComplex& b) {
  return a.re * b.im - a.im * b.re;
}

}  // namespace stabkit

#endif  // STABKIT_RATIONAL_HPP
