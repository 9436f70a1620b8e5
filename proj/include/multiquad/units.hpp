#pragma once

// Unit groups of multiquadratic fields: verification, log-lattice
// coordinates, 2-saturation, unit indices and verified datasets.
//
// Every unit g of an n-quadratic field K satisfies
//   g^(2^(n-1)) = zeta * prod_d eps_d^(e_d)
// where eps_d runs over the fundamental units of the real quadratic subfields.
// The integer vector e is the log-lattice coordinate used throughout.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "multiquad/field.hpp"

namespace multiquad {

struct UnitSystem {
  enum class Source { computed, dataset };

  FieldId field;
  TorsionGroup torsion;
  std::vector<MQElement> fundamental;
  Source source = Source::computed;
  /// True once the system is known to generate the full unit group.
  bool certified = false;
  /// Dataset path, or empty when computed.
  std::string origin;
};

/// First rung of the interval precision ladder (default 128 bits, at most 4096).
void set_interval_start_precision(long bits);
long interval_start_precision();

/// Unit rank r1 + r2 - 1.
std::size_t unit_rank(const FieldId& id);

/// Norm +-1 and both x and 1/x integral.
bool verify_unit(const MQElement& x);

/// Log-lattice coordinates with respect to the real quadratic fundamental units.
class LogLattice {
 public:
  explicit LogLattice(MultiquadField::Ptr field);

  std::size_t rank() const { return reference_.size(); }
  /// Real quadratic members d, in canonical order.
  const std::vector<Int>& members() const { return members_; }
  /// eps_d as an element of the field.
  const MQElement& reference(std::size_t i) const { return reference_[i]; }

  /// e(x) for a unit x. Certified by interval rounding (precision ladder up to
  /// 4096 bits); with `verify` the relation is also checked in exact arithmetic.
  std::vector<mpz_class> coordinates(const MQElement& unit, bool verify = false) const;

 private:
  MultiquadField::Ptr field_;
  std::vector<Int> members_;
  std::vector<MQElement> reference_;
  std::vector<unsigned> masks_;
};

/// Rank of the subgroup generated by the units (exact, via log-lattice coordinates).
std::size_t independence_rank(std::span<const MQElement> units);

/// x = zeta^t * prod f_i^(a_i) relative to a unit system.
struct UnitExpression {
  int t = 0;
  std::vector<mpz_class> a;
};

/// Expresses a unit in the system; nullopt if the exponents are not integral.
std::optional<UnitExpression> express_unit(const UnitSystem& system, const MQElement& x);

/// Fundamental system by recursive 2-saturation over a V4 decomposition. Memoized.
UnitSystem compute_unit_system(const FieldId& field);

struct KubotaResult {
  UnitSystem system;
  /// [E(K) : <-1, eps_1, eps_2, eps_3>].
  mpz_class q;
  /// Products of quadratic units found to be squares, as "eps_2*eps_3" style strings.
  std::vector<std::string> square_classes;
};

/// Real biquadratic fields: square-class search over the quadratic fundamental units.
KubotaResult kubota_real_biquadratic_units(const FieldId& k3);

struct IndexResult {
  mpz_class q;
  mpz_class free_index;
  int torsion_index = 1;
  /// free_index == 2^exponent.
  unsigned exponent = 0;
  /// One line per subgroup generator: its expression in the big system.
  std::vector<std::string> witnesses;
};

/// [E(L) : E(l1) E(l2) E(l3)] for the three intermediate fields of a V4 extension inside L.
IndexResult unit_index(const UnitSystem& big, std::span<const UnitSystem* const> subs);

/// Dataset I/O. Loading verifies every unit, the rank and the torsion order
/// (DatasetError otherwise) and certifies fundamentality when it can.
UnitSystem load_unit_dataset(const FieldId& field, const std::filesystem::path& path);
void save_unit_dataset(const UnitSystem& system, const std::filesystem::path& path, const std::string& note = {});
/// data_dir/units/<file stem>.json
std::filesystem::path dataset_path(const std::filesystem::path& data_dir, const FieldId& field);

/// Supplies unit systems: degree <= 4 computed, larger fields from datasets
/// (or computed when allowed). Thread-safe.
class UnitProvider {
 public:
  struct Options {
    std::filesystem::path data_dir;
    bool compute_missing = false;
  };

  explicit UnitProvider(Options options);
  const UnitSystem& get(const FieldId& field);
  /// Dataset files consulted so far, sorted.
  std::vector<std::string> datasets_used() const;
  bool has_dataset(const FieldId& field) const;
  /// Every system handed out so far, ordered by field.
  std::vector<std::shared_ptr<const UnitSystem>> systems() const;
  const Options& options() const { return options_; }

 private:
  Options options_;
  mutable std::mutex mu_;
  std::map<FieldId, std::shared_ptr<const UnitSystem>> cache_;
};

}  // namespace multiquad
