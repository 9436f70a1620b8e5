#pragma once

// Closed real intervals with MPFR endpoints under directed rounding.

#include <mpfr.h>

#include <string>

#include <gmpxx.h>

namespace multiquad {

class Interval {
 public:
  explicit Interval(long bits = 128);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval point(const mpq_class& q, long bits);
  /// Enclosure of sqrt(n) for n >= 0.
  static Interval sqrt_of(const mpz_class& n, long bits);
  static Interval pi(long bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  double mid() const;
  double width() const;
  bool contains_zero() const;
  bool positive() const;

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator-() const;
  Interval operator*(const Interval& o) const;
  /// Fails with PrecisionError if the divisor contains 0.
  Interval operator/(const Interval& o) const;
  Interval scaled(const mpq_class& q) const;
  Interval square() const;
  /// Fails with PrecisionError unless strictly positive.
  Interval log() const;

  /// The unique integer inside, if the interval is narrower than 2^-32 and holds one.
  bool unique_integer(mpz_class& out) const;

  std::string to_string(int digits = 20) const;

 private:
  mpfr_t lo_, hi_;
};

/// Value of a complex embedding: real and imaginary enclosures.
struct EmbeddingValue {
  Interval re, im;
  explicit EmbeddingValue(long bits = 128) : re(bits), im(bits) {}
  /// Enclosure of log |z|.
  Interval log_abs() const;
  bool is_real() const { return im.contains_zero(); }
};

}  // namespace multiquad
