#pragma once

// Published reference tables, used by the classifier and `tables-check` for comparison.
// Lists are reproduced as printed; comparisons go through FieldId.

#include <vector>

#include "multiquad/radicand.hpp"

namespace multiquad::tables {

/// a > 0 with h(-a) = 1, 2, 4.
const std::vector<Int>& class_number_1();
const std::vector<Int>& class_number_2();
const std::vector<Int>& class_number_4();

struct UnitRow {
  Int a;
  /// eps = (x + y sqrt a) / w
  Int x, y, w;
  int norm;
};
const std::vector<UnitRow>& fundamental_units();

/// Imaginary biquadratic fields of class number 1 as printed (47 entries).
const std::vector<RadicandList>& biquadratic();
/// Counts stated in the text for the biquadratic table.
inline constexpr std::size_t kBiquadraticCountSummary = 47;
inline constexpr std::size_t kBiquadraticCountStatement = 42;

/// Imaginary triquadratic fields of class number 1, in the two printed layouts (summary and statement).
const std::vector<RadicandList>& triquadratic_summary();
const std::vector<RadicandList>& triquadratic_statement();

/// Triquadratic candidates by P = product of imaginary quadratic class numbers.
const std::vector<RadicandList>& candidates_p2();
const std::vector<RadicandList>& candidates_p4();
/// a_4 values of the P = 4, h = (1,1,1,4) case.
const std::vector<Int>& candidates_p4_case_i_a4();
const std::vector<RadicandList>& candidates_p8_case_i();
/// Printed without minus signs; returned with every radicand negated.
const std::vector<RadicandList>& candidates_p8_case_ii();
const std::vector<RadicandList>& candidates_p8_case_iii();

struct QuarticCandidate {
  RadicandList list;
  Int h;
};
/// The imaginary 4-quadratic candidates surviving the P bound, with their class numbers.
const std::vector<QuarticCandidate>& candidates_n4();

}  // namespace multiquad::tables
