#include "multiquad/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "multiquad/errors.hpp"

namespace multiquad {

Interval::Interval(long bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : Interval(o.precision()) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.precision()) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(const mpq_class& q, long bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt_of(const mpz_class& n, long bits) {
  Interval r(bits);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi(long bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::mid() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::min(precision(), o.precision()));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::min(precision(), o.precision()));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  const long bits = std::min(precision(), o.precision());
  Interval r(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw PrecisionError("interval division by an enclosure of zero");
  Interval inv(o.precision());
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this * inv;
}

Interval Interval::scaled(const mpq_class& q) const { return *this * point(q, precision()); }

Interval Interval::square() const {
  Interval r = *this * *this;
  if (contains_zero()) mpfr_set_zero(r.lo_, 1);
  return r;
}

Interval Interval::log() const {
  if (!positive()) throw PrecisionError("logarithm of an interval touching zero");
  Interval r(precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool Interval::unique_integer(mpz_class& out) const {
  if (!(width() < std::ldexp(1.0, -32))) return false;
  mpfr_t c;
  mpfr_init2(c, precision());
  mpfr_ceil(c, lo_);
  const bool ok = mpfr_lessequal_p(c, hi_);
  if (ok) mpfr_get_z(out.get_mpz_t(), c, MPFR_RNDN);
  mpfr_clear(c);
  return ok;
}

std::string Interval::to_string(int digits) const {
  std::ostringstream out;
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, lo_);
  out << "[" << buf << ", ";
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, hi_);
  out << buf << "]";
  return out.str();
}

Interval EmbeddingValue::log_abs() const {
  Interval n2 = re.square() + im.square();
  Interval l = n2.log();
  return l.scaled(mpq_class(1, 2));
}

}  // namespace multiquad
