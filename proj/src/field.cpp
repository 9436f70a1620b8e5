#include "multiquad/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <cctype>
#include <sstream>

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

using Coords = std::vector<mpq_class>;

bool all_zero(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

Coords mul(const MultiquadField& f, const Coords& a, const Coords& b) {
  const unsigned size = static_cast<unsigned>(a.size());
  Coords r(size);
  mpq_class t;
  for (unsigned s = 0; s < size; ++s) {
    if (sgn(a[s]) == 0) continue;
    for (unsigned u = 0; u < size; ++u) {
      if (sgn(b[u]) == 0) continue;
      t = a[s] * b[u];
      t *= f.coefficient(s, u);
      r[s ^ u] += t;
    }
  }
  return r;
}

// sigma flipping the top generator of the level-k tower.
Coords flip_top(const Coords& a) {
  Coords r = a;
  const unsigned half = static_cast<unsigned>(a.size() / 2);
  for (unsigned s = half; s < a.size(); ++s) r[s] = -r[s];
  return r;
}

Coords lower_half(const Coords& a) { return Coords(a.begin(), a.begin() + static_cast<long>(a.size() / 2)); }

Coords widen(const Coords& a) {
  Coords r(a.size() * 2);
  std::copy(a.begin(), a.end(), r.begin());
  return r;
}

// x * sigma_top(x) lies in the level below.
Coords relative_norm_top(const MultiquadField& f, const Coords& a) { return lower_half(mul(f, a, flip_top(a))); }

Coords inverse_rec(const MultiquadField& f, const Coords& a) {
  if (a.size() == 1) return {1 / a[0]};
  const Coords conj = flip_top(a);
  const Coords n = lower_half(mul(f, a, conj));
  return mul(f, conj, widen(inverse_rec(f, n)));
}

mpq_class norm_rec(const MultiquadField& f, const Coords& a) {
  if (a.size() == 1) return a[0];
  return norm_rec(f, relative_norm_top(f, a));
}

bool integral_rec(const MultiquadField& f, const Coords& a) {
  if (a.size() == 1) return a[0].get_den() == 1;
  const unsigned half = static_cast<unsigned>(a.size() / 2);
  const bool in_lower = std::all_of(a.begin() + half, a.end(), [](const mpq_class& q) { return sgn(q) == 0; });
  if (in_lower) return integral_rec(f, lower_half(a));
  Coords trace = lower_half(a);
  for (auto& q : trace) q *= 2;
  return integral_rec(f, trace) && integral_rec(f, relative_norm_top(f, a));
}

std::optional<Coords> sqrt_rec(const MultiquadField& f, const Coords& x) {
  if (x.size() == 1) {
    auto r = rational_sqrt(x[0]);
    if (!r) return std::nullopt;
    return Coords{*r};
  }
  if (all_zero(x)) return x;
  const unsigned half = static_cast<unsigned>(x.size() / 2);
  const auto nrm = sqrt_rec(f, relative_norm_top(f, x));
  if (!nrm) return std::nullopt;
  const Coords u = lower_half(x);
  // x = u + v sqrt(a) with a = m_top.
  Coords v(half);
  for (unsigned s = 0; s < half; ++s) v[s] = x[s | half] / f.coefficient(s, half);
  Coords sqrt_a(x.size());
  sqrt_a[half] = 1;
  for (int sign : {1, -1}) {
    Coords s2(half);
    for (unsigned i = 0; i < half; ++i) s2[i] = (u[i] + sign * (*nrm)[i]) / 2;
    Coords y;
    if (all_zero(s2)) {
      if (!all_zero(v)) continue;
      // y = t sqrt(a) with a t^2 = u.
      Coords ua = u;
      const mpq_class a_inv = mpq_class(1) / f.member(half);
      for (auto& q : ua) q *= a_inv;
      auto t = sqrt_rec(f, ua);
      if (!t) continue;
      y = mul(f, widen(*t), sqrt_a);
    } else {
      auto s = sqrt_rec(f, s2);
      if (!s) continue;
      Coords two_s = *s;
      for (auto& q : two_s) q *= 2;
      const Coords t = mul(f, widen(v), widen(inverse_rec(f, two_s)));
      y = widen(*s);
      const Coords tv = mul(f, t, sqrt_a);
      for (unsigned i = 0; i < y.size(); ++i) y[i] += tv[i];
    }
    if (mul(f, y, y) == x) return y;
  }
  return std::nullopt;
}

std::string format_rational_coefficient(const mpq_class& q, bool leading, bool has_radical) {
  std::string out;
  mpq_class a = abs(q);
  if (sgn(q) < 0) out += leading ? "-" : " - ";
  else if (!leading) out += " + ";
  if (has_radical && a == 1) return out;
  out += a.get_str();
  if (has_radical) out += "*";
  return out;
}

}  // namespace

MultiquadField::MultiquadField(const FieldId& id) : id_(id), gens_(canonical_generators(id)) {
  const unsigned n = static_cast<unsigned>(gens_.size());
  const unsigned size = 1u << n;
  members_.assign(size, 1);
  for (unsigned s = 1; s < size; ++s) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(s));
    members_[s] = squarefree_product(members_[s & (s - 1)], gens_[low]);
  }
  for (unsigned s = 0; s < size; ++s) mask_of_[members_[s]] = s;
  coeff_.resize(std::size_t{size} * size);
  for (unsigned s = 0; s < size; ++s) {
    for (unsigned t = 0; t < size; ++t) {
      const Int a = members_[s], b = members_[t];
      Int c = gcd(a, b);
      if (a < 0 && b < 0) c = -c;
      coeff_[(s << n) | t] = c;
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    if (gens_[i] < 0) conj_ |= 1u << i;
  }
}

MultiquadField::Ptr MultiquadField::get(const FieldId& id) {
  static std::mutex mu;
  static std::map<FieldId, Ptr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  Ptr p(new MultiquadField(id));
  cache.emplace(id, p);
  return p;
}

unsigned MultiquadField::mask_of(Int m) const {
  auto it = mask_of_.find(m);
  if (it == mask_of_.end()) throw DomainError(std::to_string(m) + " is not a radicand of the field {" + id_.to_string() + "}");
  return it->second;
}

std::vector<unsigned> MultiquadField::subfield_masks(const FieldId& sub) const {
  std::vector<unsigned> out{0};
  for (Int m : sub.members()) out.push_back(mask_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> MultiquadField::fixing_group(const FieldId& sub) const {
  const auto masks = subfield_masks(sub);
  std::vector<unsigned> out;
  for (unsigned v = 0; v < degree(); ++v) {
    if (std::all_of(masks.begin(), masks.end(), [v](unsigned s) { return popcount(v & s) % 2 == 0; })) out.push_back(v);
  }
  return out;
}

MQElement::MQElement(MultiquadField::Ptr field) : field_(std::move(field)), c_(field_->degree()) {}

MQElement::MQElement(MultiquadField::Ptr field, const mpq_class& rational) : MQElement(std::move(field)) {
  c_[0] = rational;
}

MQElement MQElement::sqrt_member(MultiquadField::Ptr field, Int m) {
  MQElement x(field);
  x.c_[field->mask_of(m)] = 1;
  return x;
}

MQElement MQElement::from_coords(MultiquadField::Ptr field, const std::vector<std::pair<Int, mpq_class>>& coords) {
  MQElement x(field);
  for (const auto& [m, q] : coords) x.c_[field->mask_of(m)] += q;
  return x;
}

MQElement MQElement::parse(MultiquadField::Ptr field, const std::string& text) {
  MQElement x(field);
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw DomainError("empty element");
  std::size_t i = 0;
  auto fail = [&]() { throw DomainError("cannot parse element \"" + text + "\""); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    mpq_class coef = 1;
    if (j > i) {
      try {
        coef = mpq_class(s.substr(i, j - i));
      } catch (const std::invalid_argument&) {
        fail();
      }
      if (coef.get_den() == 0) fail();
      coef.canonicalize();
    }
    const bool had_coef = j > i;
    i = j;
    Int m = 1;
    if (had_coef && i < s.size() && s[i] == '*') ++i;
    const bool had_sqrt = s.compare(i, 5, "sqrt(") == 0;
    if (had_sqrt) {
      const std::size_t close = s.find(')', i);
      if (close == std::string::npos) fail();
      try {
        m = std::stoll(s.substr(i + 5, close - i - 5));
      } catch (const std::exception&) {
        fail();
      }
      i = close + 1;
      if (i < s.size() && s[i] == '/') {
        std::size_t k = i + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i + 1) fail();
        coef /= mpq_class(s.substr(i + 1, k - i - 1));
        i = k;
      }
    }
    if (!had_coef && !had_sqrt) fail();
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
    x.c_[field->mask_of(m)] += sign * coef;
  }
  return x;
}

const mpq_class& MQElement::coefficient_of(Int m) const { return c_[field_->mask_of(m)]; }

bool MQElement::is_zero() const { return all_zero(c_); }

bool MQElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

bool MQElement::operator==(const MQElement& o) const { return field_->id() == o.field_->id() && c_ == o.c_; }

static void require_same(const MQElement& a, const MQElement& b) {
  if (!a.field() || !b.field() || a.field()->id() != b.field()->id()) {
    throw DomainError("elements of different fields");
  }
}

MQElement MQElement::operator+(const MQElement& o) const {
  require_same(*this, o);
  MQElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

MQElement MQElement::operator-(const MQElement& o) const {
  require_same(*this, o);
  MQElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

MQElement MQElement::operator-() const {
  MQElement r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

MQElement MQElement::operator*(const MQElement& o) const {
  require_same(*this, o);
  MQElement r(field_);
  r.c_ = mul(*field_, c_, o.c_);
  return r;
}

MQElement MQElement::operator*(const mpq_class& q) const {
  MQElement r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

MQElement MQElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in {" + field_->id().to_string() + "}");
  MQElement r(field_);
  r.c_ = inverse_rec(*field_, c_);
  return r;
}

MQElement MQElement::pow(long e) const {
  MQElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  MQElement r(field_, 1);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MQElement MQElement::galois(unsigned v) const {
  MQElement r = *this;
  for (unsigned s = 0; s < c_.size(); ++s) {
    if (popcount(v & s) % 2) r.c_[s] = -r.c_[s];
  }
  return r;
}

mpq_class MQElement::norm() const { return norm_rec(*field_, c_); }

MQElement MQElement::relative_norm(const FieldId& sub) const {
  MQElement r(field_, 1);
  for (unsigned v : field_->fixing_group(sub)) r = r * galois(v);
  return r;
}

bool MQElement::is_integral() const { return integral_rec(*field_, c_); }

std::optional<MQElement> MQElement::sqrt() const {
  auto y = sqrt_rec(*field_, c_);
  if (!y) return std::nullopt;
  MQElement r(field_);
  r.c_ = std::move(*y);
  if (!(r * r == *this)) throw InconsistencyError("square root verification failed");
  return r;
}

MQElement MQElement::lift(MultiquadField::Ptr super) const {
  MQElement r(super);
  for (unsigned s = 0; s < c_.size(); ++s) {
    if (sgn(c_[s]) != 0) r.c_[super->mask_of(field_->member(s))] = c_[s];
  }
  return r;
}

MQElement MQElement::restrict_to(MultiquadField::Ptr sub) const {
  MQElement r(sub);
  for (unsigned s = 0; s < c_.size(); ++s) {
    if (sgn(c_[s]) == 0) continue;
    const Int m = field_->member(s);
    if (m != 1 && !sub->id().contains(m)) {
      throw DomainError("element is not in the subfield {" + sub->id().to_string() + "}");
    }
    r.c_[sub->mask_of(m)] = c_[s];
  }
  return r;
}

std::vector<EmbeddingValue> MQElement::embeddings(long bits) const {
  const unsigned size = static_cast<unsigned>(c_.size());
  std::vector<Interval> term;
  term.reserve(size);
  for (unsigned s = 0; s < size; ++s) {
    const Int m = field_->member(s);
    Interval root = Interval::sqrt_of(mpz_class(std::to_string(m < 0 ? -m : m)), bits);
    term.push_back(root.scaled(c_[s]));
  }
  std::vector<EmbeddingValue> out;
  out.reserve(size);
  for (unsigned v = 0; v < size; ++v) {
    EmbeddingValue e(bits);
    for (unsigned s = 0; s < size; ++s) {
      if (sgn(c_[s]) == 0) continue;
      const bool neg = popcount(v & s) % 2;
      Interval& part = field_->member(s) < 0 ? e.im : e.re;
      part = neg ? part - term[s] : part + term[s];
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string MQElement::to_string() const {
  std::vector<std::pair<Int, unsigned>> order;
  for (unsigned s = 1; s < c_.size(); ++s) order.emplace_back(field_->member(s), s);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::string out;
  for (const auto& [m, s] : order) {
    if (sgn(c_[s]) == 0) continue;
    out += format_rational_coefficient(c_[s], out.empty(), true);
    out += "sqrt(" + std::to_string(m) + ")";
  }
  if (sgn(c_[0]) != 0 || out.empty()) out += format_rational_coefficient(c_[0], out.empty(), false);
  return out;
}

TorsionGroup torsion_units(MultiquadField::Ptr field) {
  const FieldId& id = field->id();
  const bool i4 = id.contains(-1), i3 = id.contains(-3), has2 = id.contains(2);
  auto sq = [&](Int m) { return MQElement::sqrt_member(field, m); };
  TorsionGroup t;
  if (i4 && i3 && has2) {
    t.order = 24;
    t.generator = (sq(6) + sq(2) + sq(-6) - sq(-2)) * mpq_class(1, 4);
  } else if (i4 && i3) {
    t.order = 12;
    t.generator = (sq(3) + sq(-1)) * mpq_class(1, 2);
  } else if (i4 && has2) {
    t.order = 8;
    t.generator = (sq(2) + sq(-2)) * mpq_class(1, 2);
  } else if (i3) {
    t.order = 6;
    t.generator = (MQElement(field, 1) + sq(-3)) * mpq_class(1, 2);
  } else if (i4) {
    t.order = 4;
    t.generator = sq(-1);
  } else {
    t.order = 2;
    t.generator = MQElement(field, -1);
  }
  if (root_of_unity_order(t.generator) != t.order) {
    throw InconsistencyError("torsion generator of {" + id.to_string() + "} has the wrong order");
  }
  return t;
}

int root_of_unity_order(const MQElement& x) {
  const MQElement one(x.field(), 1);
  if (!(x.pow(24) == one)) return 0;
  for (int k : {1, 2, 3, 4, 6, 8, 12, 24}) {
    if (x.pow(k) == one) return k;
  }
  return 0;
}

}  // namespace multiquad
