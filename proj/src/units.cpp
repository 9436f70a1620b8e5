#include "multiquad/units.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "multiquad/errors.hpp"
#include "multiquad/quadratic.hpp"

namespace multiquad {

namespace {

using Vec = std::vector<mpz_class>;

std::atomic<long> g_start_bits{128};
constexpr long kMaxBits = 4096;

MQElement quad_unit_element(MultiquadField::Ptr field, Int d) {
  const QuadUnit u = fundamental_unit(d);
  MQElement x(field);
  x.coord(0) = mpq_class(u.x, u.w);
  x.coord(field->mask_of(d)) = mpq_class(u.y, u.w);
  return x;
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InconsistencyError("unit exponent " + z.get_str() + " out of range");
  return z.get_si();
}

// Integer row reduction of unit generators, carrying the elements along.
struct Reducer {
  std::size_t r;
  std::vector<std::optional<std::pair<Vec, MQElement>>> rows;
  std::vector<MQElement> torsion;

  explicit Reducer(std::size_t rank) : r(rank), rows(rank) {}

  void insert(Vec v, MQElement u) {
    for (std::size_t j = 0; j < r; ++j) {
      if (v[j] == 0) continue;
      if (!rows[j]) {
        if (v[j] < 0) {
          for (auto& z : v) z = -z;
          u = u.inverse();
        }
        rows[j].emplace(std::move(v), std::move(u));
        return;
      }
      auto& [pv, pu] = *rows[j];
      while (v[j] != 0) {
        const mpz_class q = v[j] / pv[j];
        if (q != 0) {
          for (std::size_t k = 0; k < r; ++k) v[k] -= q * pv[k];
          u = u * pu.pow(-to_long(q));
        }
        if (v[j] != 0) {
          std::swap(v, pv);
          std::swap(u, pu);
        }
      }
      if (pv[j] < 0) {
        for (auto& z : pv) z = -z;
        pu = pu.inverse();
      }
    }
    torsion.push_back(std::move(u));
  }

  // Reduces entries above each pivot into [0, pivot).
  void normalize() {
    for (std::size_t j = 0; j < r; ++j) {
      if (!rows[j]) continue;
      const auto& [pv, pu] = *rows[j];
      for (std::size_t i = 0; i < j; ++i) {
        if (!rows[i]) continue;
        auto& [v, u] = *rows[i];
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[j].get_mpz_t(), pv[j].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] -= q * pv[k];
        u = u * pu.pow(-to_long(q));
      }
    }
  }

  std::size_t filled() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& x) { return x.has_value(); }));
  }
};

// Discrete log of a root of unity against the torsion generator.
int torsion_log(const TorsionGroup& tg, const MQElement& x) {
  MQElement p(x.field(), 1);
  for (int l = 0; l < tg.order; ++l) {
    if (p == x) return l;
    p = p * tg.generator;
  }
  throw InconsistencyError("element is not a root of unity of {" + x.field()->id().to_string() + "}: " + x.to_string());
}

mpz_class hnf_determinant(std::vector<Vec> rows, std::size_t cols) {
  mpz_class det = 1;
  std::size_t top = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    // Euclid on column j over rows top..end.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][j] != 0 && (best == rows.size() || abs(rows[i][j]) < abs(rows[best][j]))) best = i;
      }
      if (best == rows.size()) return 0;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][j] == 0) continue;
        const mpz_class q = rows[i][j] / rows[top][j];
        for (std::size_t k = j; k < cols; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][j] != 0) done = false;
      }
      if (done) break;
    }
    det *= abs(rows[top][j]);
    ++top;
  }
  return det;
}

std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Coordinates of a unit system, reused for every expression against it.
struct Frame {
  const UnitSystem* system;
  LogLattice lattice;
  std::vector<std::vector<mpq_class>> columns;  // columns[i] = e(f_i)

  explicit Frame(const UnitSystem& s)
      : system(&s), lattice(MultiquadField::get(s.field)) {
    const std::size_t r = lattice.rank();
    if (s.fundamental.size() != r) throw InconsistencyError("unit system of {" + s.field.to_string() + "} has the wrong size");
    columns.assign(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i) {
      const Vec e = lattice.coordinates(s.fundamental[i]);
      for (std::size_t k = 0; k < r; ++k) columns[k][i] = e[k];
    }
  }

  std::optional<UnitExpression> express(const MQElement& x) const {
    const std::size_t r = lattice.rank();
    UnitExpression out;
    MQElement residual = x;
    if (r > 0) {
      const Vec e = lattice.coordinates(x);
      std::vector<mpq_class> rhs(e.begin(), e.end());
      auto a = solve_rational(columns, rhs);
      if (!a) throw InconsistencyError("unit system of {" + system->field.to_string() + "} is dependent");
      for (std::size_t i = 0; i < r; ++i) {
        if ((*a)[i].get_den() != 1) return std::nullopt;
        out.a.push_back((*a)[i].get_num());
        residual = residual * system->fundamental[i].pow(-to_long(out.a.back()));
      }
    }
    out.t = torsion_log(system->torsion, residual);
    return out;
  }
};

struct Saturation {
  UnitSystem system;
  std::vector<MQElement> class_basis;
  std::vector<unsigned> square_masks;
};

// Reduces generators to (torsion subgroup order, free basis).
struct Reduced {
  std::vector<MQElement> basis;
  int torsion_order = 1;
  MQElement torsion_generator;
};

Reduced reduce_units(MultiquadField::Ptr field, const LogLattice& lattice, const std::vector<MQElement>& gens) {
  Reducer red(lattice.rank());
  for (const auto& g : gens) red.insert(lattice.coordinates(g), g);
  red.normalize();
  const TorsionGroup w = torsion_units(field);
  int g = w.order;
  for (const auto& t : red.torsion) g = std::gcd(g, torsion_log(w, t));
  Reduced out;
  out.torsion_order = w.order / g;
  out.torsion_generator = w.generator.pow(g);
  for (auto& row : red.rows) {
    if (row) out.basis.push_back(row->second);
  }
  return out;
}

Saturation saturate(MultiquadField::Ptr field, const std::vector<MQElement>& gens) {
  const LogLattice lattice(field);
  const std::size_t r = lattice.rank();
  const Reduced g = reduce_units(field, lattice, gens);
  if (g.basis.size() != r) {
    throw InconsistencyError("subfield units of {" + field->id().to_string() + "} do not have full rank");
  }
  Saturation out;
  out.class_basis.push_back(g.torsion_generator);
  for (const auto& b : g.basis) out.class_basis.push_back(b);
  const std::size_t dim = out.class_basis.size();
  std::vector<MQElement> inverses;
  for (const auto& b : out.class_basis) inverses.push_back(b.inverse());
  std::vector<MQElement> all = gens;
  all.push_back(torsion_units(field).generator);
  MQElement x(field, 1);
  unsigned gray = 0;
  for (unsigned i = 1; i < (1u << dim); ++i) {
    const unsigned next = i ^ (i >> 1);
    const unsigned bit = static_cast<unsigned>(__builtin_ctz(next ^ gray));
    x = (next >> bit & 1) ? x * out.class_basis[bit] : x * inverses[bit];
    gray = next;
    if (auto y = x.sqrt()) {
      out.square_masks.push_back(gray);
      all.push_back(*y);
    }
  }
  std::sort(out.square_masks.begin(), out.square_masks.end());
  const Reduced e = reduce_units(field, lattice, all);
  if (e.basis.size() != r) throw InconsistencyError("saturated unit group of {" + field->id().to_string() + "} lost rank");
  out.system.field = field->id();
  out.system.torsion = torsion_units(field);
  if (e.torsion_order != out.system.torsion.order) {
    throw InconsistencyError("torsion of the saturated group of {" + field->id().to_string() + "} is incomplete");
  }
  out.system.fundamental = e.basis;
  out.system.source = UnitSystem::Source::computed;
  out.system.certified = true;
  return out;
}

std::vector<MQElement> subfield_generators(MultiquadField::Ptr field, const UnitSystem& sub) {
  std::vector<MQElement> out;
  out.push_back(sub.torsion.generator.lift(field));
  for (const auto& f : sub.fundamental) out.push_back(f.lift(field));
  return out;
}

// The three intermediate fields of K over the subfield spanned by all but the first two generators.
std::array<FieldId, 3> standard_intermediates(const FieldId& id) {
  const RadicandList gens = canonical_generators(id);
  std::vector<Int> rest(gens.begin() + 2, gens.end());
  std::array<FieldId, 3> out;
  const Int firsts[3] = {gens[0], gens[1], squarefree_product(gens[0], gens[1])};
  for (int i = 0; i < 3; ++i) {
    std::vector<Int> l = rest;
    l.push_back(firsts[i]);
    out[i] = field_id(RadicandList(l));
  }
  return out;
}

UnitSystem compute_uncached(const FieldId& id) {
  auto field = MultiquadField::get(id);
  if (id.degree_exponent() == 1) {
    UnitSystem s;
    s.field = id;
    s.torsion = torsion_units(field);
    const Int a = id.members()[0];
    if (a > 0) s.fundamental.push_back(quad_unit_element(field, a));
    s.certified = true;
    return s;
  }
  std::vector<MQElement> gens;
  for (const auto& sub : standard_intermediates(id)) {
    const auto part = subfield_generators(field, compute_unit_system(sub));
    gens.insert(gens.end(), part.begin(), part.end());
  }
  return saturate(field, gens).system;
}

std::string fmt_vec(const std::vector<mpz_class>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
  return s + ")";
}

}  // namespace

void set_interval_start_precision(long bits) {
  if (bits < 64 || bits > kMaxBits) throw DomainError("precision must lie in [64, " + std::to_string(kMaxBits) + "] bits");
  g_start_bits.store(bits);
}

long interval_start_precision() { return g_start_bits.load(); }

std::size_t unit_rank(const FieldId& id) {
  const std::size_t deg = id.degree();
  return id.is_imaginary() ? deg / 2 - 1 : deg - 1;
}

bool verify_unit(const MQElement& x) {
  if (x.is_zero()) return false;
  const mpq_class n = x.norm();
  if (n != 1 && n != -1) return false;
  return x.is_integral() && x.inverse().is_integral();
}

LogLattice::LogLattice(MultiquadField::Ptr field) : field_(std::move(field)) {
  for (Int m : field_->id().members()) {
    if (m > 0) {
      members_.push_back(m);
      reference_.push_back(quad_unit_element(field_, m));
      masks_.push_back(field_->mask_of(m));
    }
  }
}

std::vector<mpz_class> LogLattice::coordinates(const MQElement& unit, bool verify) const {
  const std::size_t r = rank();
  Vec out(r);
  if (r == 0) return out;
  bool done = false;
  for (long bits = g_start_bits.load(); bits <= kMaxBits && !done; bits *= 2) {
    try {
      const auto emb = unit.embeddings(bits);
      std::vector<Interval> logs;
      for (const auto& e : emb) logs.push_back(e.log_abs());
      done = true;
      for (std::size_t i = 0; i < r && done; ++i) {
        const Interval log_eps = reference_[i].embeddings(bits)[0].log_abs();
        Interval sum(bits);
        for (unsigned v = 0; v < emb.size(); ++v) sum = (popcount(v & masks_[i]) % 2) ? sum - logs[v] : sum + logs[v];
        const Interval e = sum / log_eps.scaled(2);
        done = e.unique_integer(out[i]);
      }
    } catch (const PrecisionError&) {
      done = false;
    }
  }
  if (!done) throw PrecisionError("log-lattice coordinates of " + unit.to_string() + " not separated at " + std::to_string(kMaxBits) + " bits");
  if (verify) {
    const unsigned long power = 1ul << (field_->n() - 1);
    MQElement rhs(field_, 1);
    for (std::size_t i = 0; i < r; ++i) rhs = rhs * reference_[i].pow(to_long(out[i]));
    const MQElement quotient = unit.pow(static_cast<long>(power)) / rhs;
    if (root_of_unity_order(quotient) == 0) {
      throw InconsistencyError("log-lattice relation failed exact verification for " + unit.to_string());
    }
  }
  return out;
}

std::size_t independence_rank(std::span<const MQElement> units) {
  if (units.empty()) return 0;
  const LogLattice lattice(units.front().field());
  std::vector<std::vector<mpq_class>> m;
  for (const auto& u : units) {
    if (u.field()->id() != units.front().field()->id()) throw DomainError("independence_rank: units from different fields");
    const Vec e = lattice.coordinates(u, true);
    m.emplace_back(e.begin(), e.end());
  }
  return rational_rank(std::move(m));
}

std::optional<UnitExpression> express_unit(const UnitSystem& system, const MQElement& x) {
  return Frame(system).express(x);
}

UnitSystem compute_unit_system(const FieldId& id) {
  static std::mutex mu;
  static std::map<FieldId, std::shared_ptr<const UnitSystem>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(id); it != memo.end()) return *it->second;
  }
  auto s = std::make_shared<const UnitSystem>(compute_uncached(id));
  std::lock_guard lock(mu);
  memo.emplace(id, s);
  return *s;
}

KubotaResult kubota_real_biquadratic_units(const FieldId& k3) {
  if (k3.degree_exponent() != 2 || k3.is_imaginary()) throw DomainError("kubota_real_biquadratic_units needs a real biquadratic field");
  auto field = MultiquadField::get(k3);
  std::vector<MQElement> gens{MQElement(field, -1)};
  std::vector<std::string> names{"-1"};
  for (Int d : k3.members()) {
    gens.push_back(quad_unit_element(field, d));
    names.push_back("eps_" + std::to_string(d));
  }
  Saturation sat = saturate(field, gens);
  KubotaResult out;
  out.system = sat.system;
  // The class basis is -1 followed by eps_d (already reduced).
  for (unsigned mask : sat.square_masks) {
    std::string s;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask >> b & 1) s += (s.empty() ? "" : "*") + names[b];
    }
    out.square_classes.push_back(s);
  }
  out.q = mpz_class(1) << static_cast<unsigned>(std::bit_width(sat.square_masks.size() + 1) - 1);
  const LogLattice lattice(field);
  std::vector<Vec> sub_rows, full_rows;
  for (std::size_t i = 1; i < gens.size(); ++i) sub_rows.push_back(lattice.coordinates(gens[i]));
  for (const auto& f : out.system.fundamental) full_rows.push_back(lattice.coordinates(f));
  const mpz_class ratio = hnf_determinant(sub_rows, 3) / hnf_determinant(full_rows, 3);
  if (ratio != out.q) throw InconsistencyError("Kubota index mismatch for {" + k3.to_string() + "}");
  return out;
}

IndexResult unit_index(const UnitSystem& big, std::span<const UnitSystem* const> subs) {
  auto field = MultiquadField::get(big.field);
  const Frame frame(big);
  const std::size_t r = frame.lattice.rank();
  const int w = big.torsion.order;
  std::vector<Vec> rows, free_rows;
  IndexResult out;
  for (const UnitSystem* sub : subs) {
    if (!big.field.contains(sub->field)) {
      throw DomainError("{" + sub->field.to_string() + "} is not a subfield of {" + big.field.to_string() + "}");
    }
    const auto gens = subfield_generators(field, *sub);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto ex = frame.express(gens[i]);
      if (!ex) throw InconsistencyError("subfield unit not in the unit group of {" + big.field.to_string() + "}: " + gens[i].to_string());
      Vec row{ex->t};
      row.insert(row.end(), ex->a.begin(), ex->a.end());
      rows.push_back(row);
      free_rows.push_back(ex->a);
      std::ostringstream wl;
      wl << "{" << sub->field.to_string() << "} " << (i == 0 ? "zeta" : "f" + std::to_string(i)) << " = zeta^" << ex->t << " * f^" << fmt_vec(ex->a);
      out.witnesses.push_back(wl.str());
    }
  }
  Vec wrow(r + 1);
  wrow[0] = w;
  rows.push_back(wrow);
  out.q = hnf_determinant(rows, r + 1);
  out.free_index = r == 0 ? mpz_class(1) : hnf_determinant(free_rows, r);
  if (out.q == 0 || out.free_index == 0) throw InconsistencyError("subfield units have lower rank in {" + big.field.to_string() + "}");
  if (out.q % out.free_index != 0) throw InconsistencyError("unit index bookkeeping failed for {" + big.field.to_string() + "}");
  out.torsion_index = static_cast<int>(mpz_class(out.q / out.free_index).get_si());
  if (mpz_popcount(out.free_index.get_mpz_t()) != 1) {
    throw InconsistencyError("free unit index " + out.free_index.get_str() + " of {" + big.field.to_string() + "} is not a power of 2");
  }
  out.exponent = static_cast<unsigned>(mpz_sizeinbase(out.free_index.get_mpz_t(), 2) - 1);
  return out;
}

std::filesystem::path dataset_path(const std::filesystem::path& data_dir, const FieldId& field) {
  return data_dir / "units" / (field.file_stem() + ".json");
}

void save_unit_dataset(const UnitSystem& system, const std::filesystem::path& path, const std::string& note) {
  nlohmann::ordered_json j;
  const RadicandList gens = canonical_generators(system.field);
  j["field"] = std::vector<Int>(gens.begin(), gens.end());
  j["torsion_order"] = system.torsion.order;
  auto field = MultiquadField::get(system.field);
  nlohmann::ordered_json units = nlohmann::ordered_json::array();
  std::vector<Int> order{1};
  for (Int m : system.field.members()) order.push_back(m);
  for (const auto& u : system.fundamental) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::object();
    for (Int m : order) {
      const mpq_class& q = u.coefficient_of(m);
      if (sgn(q) != 0) coords[std::to_string(m)] = q.get_str();
    }
    units.push_back({{"coords", coords}});
  }
  j["units"] = units;
  if (!note.empty()) j["note"] = note;
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) throw DatasetError("cannot write " + path.string());
}

UnitSystem load_unit_dataset(const FieldId& field, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open unit dataset " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError("cannot parse unit dataset " + path.string() + ": " + e.what());
  }
  UnitSystem s;
  auto ctx = MultiquadField::get(field);
  try {
    const RadicandList gens(j.at("field").get<std::vector<Int>>());
    if (field_id(gens) != field) throw DatasetError(path.string() + " describes {" + field_id(gens).to_string() + "}, expected {" + field.to_string() + "}");
    s.field = field;
    s.torsion = torsion_units(ctx);
    if (j.at("torsion_order").get<int>() != s.torsion.order) {
      throw DatasetError(path.string() + ": torsion order " + std::to_string(j.at("torsion_order").get<int>()) + " but the field has " + std::to_string(s.torsion.order));
    }
    for (const auto& u : j.at("units")) {
      std::vector<std::pair<Int, mpq_class>> coords;
      for (auto& [k, v] : u.at("coords").items()) {
        mpq_class q(v.get<std::string>());
        q.canonicalize();
        coords.emplace_back(std::stoll(k), q);
      }
      s.fundamental.push_back(MQElement::from_coords(ctx, coords));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError("malformed unit dataset " + path.string() + ": " + e.what());
  } catch (const DomainError& e) {
    throw DatasetError("malformed unit dataset " + path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DatasetError("malformed unit dataset " + path.string() + ": " + e.what());
  }
  s.source = UnitSystem::Source::dataset;
  s.origin = path.string();
  for (std::size_t i = 0; i < s.fundamental.size(); ++i) {
    if (!verify_unit(s.fundamental[i])) {
      throw DatasetError(path.string() + ": element " + std::to_string(i + 1) + " is not a unit: " + s.fundamental[i].to_string());
    }
  }
  const std::size_t r = unit_rank(field);
  if (s.fundamental.size() != r || independence_rank(s.fundamental) != r) {
    throw DatasetError(path.string() + ": rank deficient (" + std::to_string(independence_rank(s.fundamental)) + " independent units, rank " + std::to_string(r) + ")");
  }
  // Full group iff it contains every eps_d (so the index is a 2-power) and is 2-saturated.
  const Frame frame(s);
  bool contains_reference = true;
  for (std::size_t i = 0; i < frame.lattice.rank(); ++i) {
    if (!frame.express(frame.lattice.reference(i))) contains_reference = false;
  }
  bool saturated = true;
  if (contains_reference) {
    std::vector<MQElement> basis{s.torsion.generator};
    basis.insert(basis.end(), s.fundamental.begin(), s.fundamental.end());
    for (unsigned mask = 1; mask < (1u << basis.size()) && saturated; ++mask) {
      MQElement x(ctx, 1);
      for (unsigned b = 0; b < basis.size(); ++b) {
        if (mask >> b & 1) x = x * basis[b];
      }
      if (x.sqrt()) saturated = false;
    }
  }
  s.certified = contains_reference && saturated;
  return s;
}

UnitProvider::UnitProvider(Options options) : options_(std::move(options)) {}

bool UnitProvider::has_dataset(const FieldId& field) const {
  return !options_.data_dir.empty() && std::filesystem::exists(dataset_path(options_.data_dir, field));
}

const UnitSystem& UnitProvider::get(const FieldId& field) {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(field); it != cache_.end()) return *it->second;
  }
  std::shared_ptr<const UnitSystem> s;
  if (field.degree() <= 4) {
    s = std::make_shared<const UnitSystem>(compute_unit_system(field));
  } else if (has_dataset(field)) {
    UnitSystem loaded = load_unit_dataset(field, dataset_path(options_.data_dir, field));
    if (!loaded.certified) throw DatasetError(loaded.origin + " is not a fundamental system of units");
    s = std::make_shared<const UnitSystem>(std::move(loaded));
  } else if (options_.compute_missing) {
    s = std::make_shared<const UnitSystem>(compute_unit_system(field));
  } else {
    throw DatasetRequired(field.to_string());
  }
  std::lock_guard lock(mu_);
  return *cache_.emplace(field, s).first->second;
}

std::vector<std::shared_ptr<const UnitSystem>> UnitProvider::systems() const {
  std::lock_guard lock(mu_);
  std::vector<std::shared_ptr<const UnitSystem>> out;
  for (const auto& [id, s] : cache_) out.push_back(s);
  return out;
}

std::vector<std::string> UnitProvider::datasets_used() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, s] : cache_) {
    if (s->source == UnitSystem::Source::dataset) out.push_back(s->origin);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multiquad
