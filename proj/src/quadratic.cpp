#include "multiquad/quadratic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

void require_radicand(Int a) {
  if (a == 0 || a == 1 || !is_squarefree(a)) {
    throw DomainError("radicand " + std::to_string(a) + " must be squarefree and not 0 or 1");
  }
}

struct Memo {
  std::mutex mu;
  std::unordered_map<Int, Int> h;
  std::filesystem::path cache_path;
};

Memo& memo() {
  static Memo m;
  return m;
}

void write_cache_locked(const Memo& m) {
  if (m.cache_path.empty()) return;
  std::map<Int, Int> sorted(m.h.begin(), m.h.end());
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto [a, h] : sorted) j[std::to_string(a)] = h;
  const auto tmp = std::filesystem::path(m.cache_path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, m.cache_path);
}

Int count_definite(Int D) {
  const Int N = -D;
  Int count = 0;
  for (Int b = N % 2; 3 * b * b <= N; b += 2) {
    const Int m = (b * b + N) / 4;
    for (Int A = std::max<Int>(b, 1); A * A <= m; ++A) {
      if (m % A != 0) continue;
      const Int C = m / A;
      if (gcd(gcd(A, b), C) != 1) continue;
      count += (b == 0 || A == b || A == C) ? 1 : 2;
    }
  }
  return count;
}

Int compute_class_number(Int a) {
  if (a < 0) return count_definite(quad_discriminant(a));
  const Int hplus = narrow_class_number(a);
  return fundamental_unit(a).norm() == -1 ? hplus : hplus / 2;
}

}  // namespace

Int quad_discriminant(Int a) {
  require_radicand(a);
  return ((a % 4) + 4) % 4 == 1 ? a : 4 * a;
}

std::vector<BQF> reduced_definite_forms(Int D) {
  if (D >= 0 || ((D % 4) + 4) % 4 > 1) throw DomainError("bad definite discriminant " + std::to_string(D));
  const Int N = -D;
  std::vector<BQF> out;
  for (Int b = N % 2; 3 * b * b <= N; b += 2) {
    const Int m = (b * b + N) / 4;
    for (Int A = std::max<Int>(b, 1); A * A <= m; ++A) {
      if (m % A != 0) continue;
      const Int C = m / A;
      if (gcd(gcd(A, b), C) != 1) continue;
      out.push_back({A, b, C});
      if (b != 0 && A != b && A != C) out.push_back({A, -b, C});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BQF> reduced_indefinite_forms(Int D) {
  if (D <= 0 || is_perfect_square(D) || ((D % 4) + 4) % 4 > 1) {
    throw DomainError("bad indefinite discriminant " + std::to_string(D));
  }
  const Int s = isqrt(D);
  std::vector<BQF> out;
  for (Int B = (D % 2 == 0) ? 2 : 1; B <= s; B += 2) {
    const Int N = (D - B * B) / 4;
    for (Int d = 1; d <= N; ++d) {
      if (N % d != 0) continue;
      // s - B < 2|A| <= s + B, with sqrt(D) irrational.
      if (2 * d + B <= s || 2 * d - B > s) continue;
      if (gcd(gcd(d, B), N / d) != 1) continue;
      out.push_back({d, B, -N / d});
      out.push_back({-d, B, N / d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BQF rho(const BQF& f, Int D) {
  const Int s = isqrt(D);
  const Int m = 2 * std::abs(f.C);
  // Largest B' <= s with B' = -B mod 2|C|.
  const Int r = ((s + f.B) % m + m) % m;
  const Int B = s - r;
  return {f.C, B, (B * B - D) / (4 * f.C)};
}

Int narrow_class_number(Int a) {
  require_radicand(a);
  if (a < 0) throw DomainError("narrow_class_number needs a > 1");
  const Int D = quad_discriminant(a);
  const auto forms = reduced_indefinite_forms(D);
  std::set<BQF> unseen(forms.begin(), forms.end());
  Int cycles = 0;
  while (!unseen.empty()) {
    BQF f = *unseen.begin();
    ++cycles;
    while (unseen.erase(f) == 1) f = rho(f, D);
  }
  return cycles;
}

int QuadUnit::norm() const {
  const mpz_class n = (x * x - mpz_class(std::to_string(a)) * y * y) / (w * w);
  return n == 1 ? 1 : n == -1 ? -1 : 0;
}

std::string QuadUnit::to_string() const {
  std::ostringstream out;
  const mpz_class ay = abs(y);
  out << x.get_str() << (y < 0 ? "-" : "+");
  if (ay != 1) out << ay.get_str() << "*";
  out << "sqrt(" << a << ")";
  const std::string body = out.str();
  if (w == 1) return body;
  return "(" + body + ")/" + std::to_string(w);
}

QuadUnit fundamental_unit(Int a) {
  require_radicand(a);
  if (a < 2) throw DomainError("fundamental_unit needs a > 1");
  const bool half = ((a % 4) + 4) % 4 == 1;
  const mpz_class d(std::to_string(a));
  const mpz_class s = sqrt(d);
  // omega = (P + sqrt d) / Q.
  mpz_class P = half ? 1 : 0, Q = half ? 2 : 1;
  mpz_class p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (;;) {
    mpz_class ak;
    mpz_fdiv_q(ak.get_mpz_t(), mpz_class(P + s).get_mpz_t(), Q.get_mpz_t());
    const mpz_class p = ak * p_prev + p_prev2;
    const mpz_class q = ak * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    // Norm of p - q*omega.
    mpz_class n = half ? mpz_class(p * p - p * q + q * q * (1 - d) / 4) : mpz_class(p * p - d * q * q);
    if (n == 1 || n == -1) {
      QuadUnit u;
      u.a = a;
      if (half) {
        u.x = 2 * p - q;
        u.y = q;
        u.w = 2;
        if (mpz_even_p(u.x.get_mpz_t()) && mpz_even_p(u.y.get_mpz_t())) {
          u.x /= 2;
          u.y /= 2;
          u.w = 1;
        }
      } else {
        u.x = p;
        u.y = q;
      }
      return u;
    }
    P = ak * Q - P;
    Q = (d - P * P) / Q;
    if (Q <= 0) throw InconsistencyError("continued fraction left the reduced range for a = " + std::to_string(a));
  }
}

Int class_number(Int a) {
  require_radicand(a);
  Memo& m = memo();
  {
    std::lock_guard lock(m.mu);
    if (auto it = m.h.find(a); it != m.h.end()) return it->second;
  }
  const Int h = compute_class_number(a);
  std::lock_guard lock(m.mu);
  if (m.h.emplace(a, h).second) write_cache_locked(m);
  return h;
}

void attach_class_number_cache(const std::filesystem::path& path) {
  Memo& m = memo();
  std::lock_guard lock(m.mu);
  m.cache_path = path;
  if (path.empty() || !std::filesystem::exists(path)) return;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError("cannot parse class number cache " + path.string() + ": " + e.what());
  }
  for (auto& [k, v] : j.items()) m.h.emplace(std::stoll(k), v.get<Int>());
}

AnalyticClassNumber class_number_analytic_check(Int a, int digits) {
  require_radicand(a);
  const Int D = quad_discriminant(a);
  AnalyticClassNumber out;
  if (a < 0) {
    const Int N = -D;
    const Int w = D == -3 ? 6 : D == -4 ? 4 : 2;
    mpz_class sum = 0;
    for (Int n = 1; n < N; ++n) sum += kronecker(D, n) * n;
    const mpq_class h = mpq_class(-w * sum, 2 * N);
    out.value = h.get_d();
    out.rounded = std::llround(out.value);
    const mpq_class dist = abs(h - mpq_class(out.rounded));
    out.margin = 0.5 - dist.get_d();
    return out;
  }
  const QuadUnit eps = fundamental_unit(a);
  for (long bits = static_cast<long>(std::ceil(digits * 3.3219280948873623)); bits <= 4096; bits *= 2) {
    mpfr_t pi, sum, t, le, y;
    mpfr_inits2(bits, pi, sum, t, le, y, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(sum, 0, MPFR_RNDN);
    // chi is even and sin(pi n / D) = sin(pi (D - n) / D): sum over n < D/2 and double.
    for (Int n = 1; 2 * n < D; ++n) {
      const int chi = kronecker(D, n);
      if (chi == 0) continue;
      mpfr_mul_si(t, pi, static_cast<long>(n), MPFR_RNDN);
      mpfr_div_si(t, t, static_cast<long>(D), MPFR_RNDN);
      mpfr_sin(t, t, MPFR_RNDN);
      mpfr_log(t, t, MPFR_RNDN);
      if (chi > 0) mpfr_add(sum, sum, t, MPFR_RNDN);
      else mpfr_sub(sum, sum, t, MPFR_RNDN);
    }
    mpfr_mul_ui(sum, sum, 2, MPFR_RNDN);
    // log eps with eps = (x + y sqrt a) / w.
    mpfr_set_si(y, static_cast<long>(a), MPFR_RNDN);
    mpfr_sqrt(y, y, MPFR_RNDN);
    mpfr_mul_z(y, y, eps.y.get_mpz_t(), MPFR_RNDN);
    mpfr_add_z(y, y, eps.x.get_mpz_t(), MPFR_RNDN);
    mpfr_div_si(y, y, eps.w, MPFR_RNDN);
    mpfr_log(le, y, MPFR_RNDN);
    mpfr_mul_si(le, le, -2, MPFR_RNDN);
    mpfr_div(sum, sum, le, MPFR_RNDN);
    const double value = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(pi, sum, t, le, y, static_cast<mpfr_ptr>(nullptr));
    // Each term carries a few ulps of an O(log D) quantity.
    const double err = static_cast<double>(D) * 256.0 * std::ldexp(1.0, -static_cast<int>(bits));
    out.value = value;
    out.rounded = std::llround(value);
    out.margin = 0.5 - std::abs(value - static_cast<double>(out.rounded)) - err;
    out.precision_bits = bits;
    if (out.margin >= 0.4) return out;
  }
  throw PrecisionError("analytic class number of " + std::to_string(a) + " did not separate at 4096 bits");
}

int legendre(Int u, Int p) {
  if (p <= 2 || !is_prime(p)) throw DomainError("legendre needs an odd prime, got " + std::to_string(p));
  return kronecker(((u % p) + p) % p, p);
}

bool mouhib_trivial_2class(Int p1, Int p2, Int p3, Int p4) {
  std::array<Int, 4> p{p1, p2, p3, p4};
  for (Int x : p) {
    if (x <= 0 || !is_prime(x)) throw DomainError("mouhib_trivial_2class needs positive primes");
  }
  std::array<Int, 4> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("mouhib_trivial_2class needs distinct primes");
  }
  p = sorted;
  do {
    if (p[0] != 2) continue;
    if (p[1] % 4 != 3 || p[2] % 4 != 3 || p[3] % 4 != 3) continue;
    const int two2 = legendre(2, p[1]), two3 = legendre(2, p[2]), two4 = legendre(2, p[3]);
    const int q23 = legendre(p[1], p[2]), q24 = legendre(p[1], p[3]);
    if (two2 == 1 && two3 == -1 && two4 == -1 && q23 * q24 == -1) return true;
    if (two2 != -1) continue;
    if (q23 == -1 && q24 == -1 && two3 * two4 == -1) return true;
    if (two3 == -1 && two4 == -1 && q23 * q24 == -1) return true;
    if (q23 * q24 == -1 && two3 * two4 == -1 && q23 != two3) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<Int> fields_with_class_number(Int h, Int bound, unsigned jobs) {
  if (h != 1 && h != 2 && h != 4 && h != 8) throw DomainError("fields_with_class_number supports h in {1,2,4,8}");
  if (bound < 1 || bound > 100000) throw DomainError("fields_with_class_number bound must be in [1, 100000]");
  jobs = std::max(1u, jobs);
  std::vector<std::vector<Int>> found(jobs);
  auto worker = [&](unsigned id) {
    for (Int a = 1 + id; a <= bound; a += jobs) {
      if (is_squarefree(a) && class_number(-a) == h) found[id].push_back(a);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  std::vector<Int> out;
  for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multiquad
