#include "multiquad/tables.hpp"

namespace multiquad::tables {

namespace {

std::vector<RadicandList> lists(std::initializer_list<std::vector<Int>> rows, Int sign = 1) {
  std::vector<RadicandList> out;
  for (auto row : rows) {
    for (auto& a : row) a *= sign;
    out.emplace_back(row);
  }
  return out;
}

}  // namespace

const std::vector<Int>& class_number_1() {
  static const std::vector<Int> v{1, 2, 3, 7, 11, 19, 43, 67, 163};
  return v;
}

const std::vector<Int>& class_number_2() {
  static const std::vector<Int> v{5, 6, 10, 13, 15, 22, 35, 37, 51, 58, 91, 115, 123, 187, 235, 267, 403, 427};
  return v;
}

const std::vector<Int>& class_number_4() {
  static const std::vector<Int> v{14,   17,   21,   30,   33,   34,   39,   42,   46,   55,   57,   70,   73,   78,
                                  82,   85,   93,   97,   102,  130,  133,  142,  155,  177,  190,  193,  195,  203,
                                  219,  253,  259,  291,  323,  355,  435,  483,  555,  595,  627,  667,  715,  723,
                                  763,  795,  955,  1003, 1027, 1227, 1243, 1387, 1411, 1435, 1507, 1555};
  return v;
}

const std::vector<UnitRow>& fundamental_units() {
  static const std::vector<UnitRow> v{
      {2, 1, 1, 1, -1},     {3, 2, 1, 1, 1},      {5, 1, 1, 2, -1},       {6, 5, 2, 1, 1},
      {7, 8, 3, 1, 1},      {10, 3, 1, 1, -1},    {11, 10, 3, 1, 1},      {14, 15, 4, 1, 1},
      {15, 4, 1, 1, 1},     {17, 4, 1, 1, -1},    {19, 170, 39, 1, 1},    {21, 5, 1, 2, 1},
      {22, 197, 42, 1, 1},  {30, 11, 2, 1, 1},    {33, 23, 4, 1, 1},      {35, 6, 1, 1, 1},
      {57, 151, 20, 1, 1},  {66, 65, 8, 1, 1},    {70, 251, 30, 1, 1},    {91, 1574, 165, 1, 1},
      {105, 41, 4, 1, 1},   {209, 46551, 3220, 1, 1},
  };
  return v;
}

const std::vector<RadicandList>& biquadratic() {
  static const std::vector<RadicandList> v = lists({
      {-1, 2},   {-1, 3},   {-1, 5},    {-1, 7},    {-1, 11},   {-1, 13},   {-1, 19},   {-1, 37},
      {-1, 43},  {-1, 67},  {-1, 163},  {2, -3},    {2, -11},   {-2, -3},   {-2, 5},    {-2, -7},
      {-2, -11}, {-2, -19}, {-2, 29},   {-2, -43},  {-2, -67},  {-3, 5},    {-3, -7},   {-3, -11},
      {-3, 17},  {-3, -19}, {-3, 41},   {-3, -43},  {-3, -67},  {-3, 89},   {-3, -163}, {-7, 5},
      {-7, -11}, {-7, 13},  {-7, -19},  {-7, -43},  {-7, 61},   {-7, -163}, {-11, 17},  {-11, -19},
      {-11, -67}, {-11, -163}, {-19, -67}, {-19, -163}, {-43, -67}, {-43, -163}, {-67, -163},
  });
  return v;
}

const std::vector<RadicandList>& triquadratic_summary() {
  static const std::vector<RadicandList> v = lists({
      {-1, 2, 3},  {-1, 2, 5},   {-1, 2, 11},  {-1, 3, 5},    {-1, 3, 7},    {-1, 3, 11},
      {-1, 3, 19}, {-1, 7, 5},   {-1, 7, 13},  {-1, 7, 19},   {-2, -3, -7},  {-2, -3, 5},
      {-2, -7, 5}, {-3, -7, 5},  {-3, -11, 2}, {-3, -11, -19}, {-3, -11, 17},
  });
  return v;
}

const std::vector<RadicandList>& triquadratic_statement() {
  static const std::vector<RadicandList> v = lists({
      {-1, 2, 3},    {-1, 2, 5},     {-1, 2, 11},   {-1, 3, 7},     {-1, 3, 5},     {-1, 3, 11},
      {-1, 3, 19},   {-1, 7, 5},     {-1, 7, 13},   {-1, 7, 19},    {-2, -3, -7},   {-2, -3, -10},
      {-2, -7, -10}, {-3, -7, -15},  {-3, -11, -6}, {-3, -11, -19}, {-3, -11, -51},
  });
  return v;
}

const std::vector<RadicandList>& candidates_p2() {
  static const std::vector<RadicandList> v = lists({{-1, 2, 3}, {-1, 2, 11}});
  return v;
}

const std::vector<RadicandList>& candidates_p4() {
  static const std::vector<RadicandList> v = lists({
      {-1, 2, 5},    {-1, 2, 7},    {-1, 3, 7},     {-1, 3, 5},     {-1, 3, 11},  {-1, 3, 19},
      {-1, 7, 5},    {-1, 7, 13},   {-1, 7, 19},    {-2, -3, -7},   {-2, -3, -10}, {-2, -7, -10},
      {-3, -7, -15}, {-3, -11, -6}, {-3, -11, -19}, {-3, -11, -51},
  });
  return v;
}

const std::vector<Int>& candidates_p4_case_i_a4() {
  static const std::vector<Int> v{14, 21, 33, 42, 57, 133, 627};
  return v;
}

const std::vector<RadicandList>& candidates_p8_case_i() {
  static const std::vector<RadicandList> v = lists({{-1, -6, -10}, {-2, -5, -6}, {-3, -5, -6}, {-11, -5, -10}});
  return v;
}

const std::vector<RadicandList>& candidates_p8_case_ii() {
  static const std::vector<RadicandList> v = lists(
      {
          {1, 2, 15}, {1, 2, 35}, {1, 2, 51}, {1, 3, 10}, {1, 3, 13}, {1, 7, 6},  {1, 7, 10},
          {1, 7, 37}, {1, 11, 5}, {1, 19, 10}, {2, 3, 5}, {2, 3, 13}, {2, 7, 5}, {2, 19, 5},
      },
      -1);
  return v;
}

const std::vector<RadicandList>& candidates_p8_case_iii() {
  static const std::vector<RadicandList> v = lists({
      {-2, -3, -11}, {-2, -3, -43},  {-1, -7, -11}, {-1, -7, -43},
      {-2, -3, -19}, {-2, -11, -19}, {-2, -7, -11}, {-3, -19, -43},
  });
  return v;
}

const std::vector<QuarticCandidate>& candidates_n4() {
  static const std::vector<QuarticCandidate> v{
      {RadicandList{-1, -2, -3, -7}, 4},
      {RadicandList{-1, -2, -3, -11}, 4},
      {RadicandList{-1, -2, -3, -5}, 2},
      {RadicandList{-1, -2, -5, -7}, 4},
  };
  return v;
}

}  // namespace multiquad::tables
