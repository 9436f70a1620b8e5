#pragma once

// Classification of imaginary n-quadratic fields with class number 1,
// stage by stage, with the published tables as reference.

#include <optional>
#include <string>
#include <vector>

#include "multiquad/kuroda.hpp"

namespace multiquad {

struct Candidate {
  FieldId field;
  /// Display list (all-negative generators).
  RadicandList list;
  Int P = 0;
  /// Class numbers of the imaginary quadratic subfields, ascending.
  std::vector<Int> imaginary_h;
  /// "P=2", "P=4 (i)", "P=8 (iii)", ...
  std::string label;
};

struct CandidateSet {
  std::size_t n = 0;
  std::vector<Candidate> candidates;
  /// Checks run while enumerating (the empty P = 1 case, list sizes, ...).
  std::vector<std::string> audit;

  std::size_t count(const std::string& label_prefix) const;
};

struct Evaluation {
  enum class Status { class_number_one, eliminated, undecided };

  Candidate candidate;
  Status status = Status::undecided;
  std::optional<Int> h;
  /// What rules the field out (or "h = 1").
  std::string witness;
  std::optional<ClassNumberResult> trace;
};

std::string to_string(Evaluation::Status s);

struct StageReport {
  std::size_t n = 0;
  std::vector<FieldId> class_number_one;
  std::vector<Evaluation> evaluations;
  std::vector<std::string> audit;
  std::vector<std::string> discrepancies;
  /// The final list (and, for n = 4, the candidates and their h) agree with the published tables.
  bool matches_table = true;
};

struct ClassificationReport {
  std::vector<StageReport> stages;
  std::vector<std::string> discrepancies;
  bool matches_tables = true;
};

struct ClassifierOptions {
  unsigned jobs = 1;
  /// Report missing unit datasets as "undecided" instead of throwing DatasetRequired.
  bool allow_undecided = false;
  Int n1_bound = 200;
};

/// All-negative display form of a field's generators (real fields: canonical generators).
RadicandList display_list(const FieldId& field);

/// Imaginary radicands -a with h(-a) = 1 and a <= bound, descending a.
std::vector<Int> classify_n1(Int bound);
StageReport classify_n1_report(Int bound);

StageReport classify_n2(ClassNumberEngine& engine, const ClassifierOptions& options = {});

/// Imaginary triquadratic fields with P in {2, 4, 8}, labelled by the class
/// number pattern of their imaginary quadratic subfields.
CandidateSet candidates_n3();
StageReport classify_n3(ClassNumberEngine& engine, const CandidateSet& candidates, const ClassifierOptions& options = {});

struct QuarticSearch {
  /// Triquadratic fields whose imaginary quadratic subfields all have h in {1, 2, 4}.
  std::vector<FieldId> S;
  std::size_t T_size = 0;
  /// Fields of T with h_lower_bound <= 1.
  std::vector<FieldId> survivors;
};
QuarticSearch quartic_search();
StageReport classify_n4(ClassNumberEngine& engine, const ClassifierOptions& options = {});

/// n = 5 bound and n >= 6 parity gate.
std::vector<StageReport> classify_n5_and_up();

ClassificationReport full_report(ClassNumberEngine& engine, const ClassifierOptions& options = {});

}  // namespace multiquad
