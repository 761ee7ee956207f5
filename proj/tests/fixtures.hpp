#pragma once

// Hand-checked worked examples used as regression oracles across the suite.
// Fillings are written one string per row in display order (top to bottom),
// characters left to right; '0','1','S','*' are entries and '.' leaves the
// box empty. Diagonal characters must agree with the labeling sets.

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptb/filling.hpp"
#include "ptb/involution.hpp"
#include "ptb/tableau.hpp"

namespace fixtures {

using namespace ptb;

inline PartialFilling make_filling(int n, std::vector<int> diag_one, std::vector<int> diag_zero,
                                   std::vector<std::string> rows) {
  LabelSets L = LabelSets::from_lists(n, diag_one, diag_zero);
  PartialFilling f(L, Entry::Empty);
  auto labels = L.row_labels();
  if (labels.size() != rows.size()) throw std::logic_error("fixture: row count mismatch");
  auto cols = L.columns();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    int row = labels[r];
    if (static_cast<int>(rows[r].size()) != L.row_box_count(row))
      throw std::logic_error("fixture: row length mismatch at row " + std::to_string(row));
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      int col = cols[k];
      Entry e;
      switch (rows[r][k]) {
        case '0': e = Entry::Zero; break;
        case '1': e = Entry::One; break;
        case 'S': e = Entry::S; break;
        case '*': e = Entry::Star; break;
        case '.': e = Entry::Empty; break;
        default: throw std::logic_error("fixture: bad cell char");
      }
      if (f.is_diagonal({row, col})) {
        if (f.at(row, col) != e) throw std::logic_error("fixture: diagonal mismatch");
      } else if (e != Entry::Empty) {
        f.set(row, col, e);
      }
    }
  }
  return f;
}

// --- the length-8 worked example (tableau, pre-tableau, full run) -----------

inline PartialFilling example8_tableau() {
  return make_filling(8, {4, 7}, {6, 8},
                      {
                          "0",     // row -8
                          "01",    // row -7
                          "000",   // row -6
                          "0001",  // row -4
                          "0S1S",  // row 1
                          "0SSS",  // row 2
                          "000S",  // row 3
                          "1SS",   // row 5
                      });
}

inline PartialFilling example8_pre() {
  return make_filling(8, {1, 3, 6}, {5, 7, 8},
                      {
                          "0",       // row -8
                          "00",      // row -7
                          "**1",     // row -6
                          "0000",    // row -5
                          "SSS*1",   // row -3
                          "S0SS01",  // row -1
                          "00010",   // row 2
                          "S01S",    // row 4
                      });
}

inline PartialFilling example8_after_drop() {  // unconstrained 1 at (4,6) dropped
  PartialFilling f = example8_pre();
  f.set(4, 6, Entry::Zero);
  return f;
}

inline PartialFilling example8_before_completion() {  // state entering phi_bullet
  return make_filling(8, {1, 3, 6}, {5, 7, 8},
                      {
                          "0",       // row -8
                          "00",      // row -7
                          "**1",     // row -6
                          "0000",    // row -5
                          "10S*1",   // row -3
                          "SSS0S1",  // row -1
                          "0001S",   // row 2
                          "00SS",    // row 4
                      });
}

inline PartialFilling example8_result() {
  return make_filling(8, {1, 3, 6}, {5, 7, 8},
                      {
                          "0",       // row -8
                          "00",      // row -7
                          "001",     // row -6
                          "0000",    // row -5
                          "11S01",   // row -3
                          "SSS0S1",  // row -1
                          "0001S",   // row 2
                          "00SS",    // row 4
                      });
}

inline std::vector<TraceStep> example8_trace() {
  return {
      {1, Rule::R1, {2, 5}, {-1, 5}},
      {2, Rule::R4, {4, 6}, {4, 8}},
      {3, Rule::R5, {2, 3}, {2, 5}},
      {4, Rule::R3, {-1, 3}, {-3, 6}},
      {5, Rule::R2, {-1, 7}, {-3, 7}},
      {6, Rule::R5, {-3, 6}, {-3, 8}},
  };
}

// Box-numbering of the pre-tableau region: number -> box.
inline std::vector<Box> example8_numbering() {
  return {{4, 5},  {4, 6},  {4, 7},  {4, 8},  {2, 3},  {2, 5},  {2, 6},  {2, 7}, {2, 8},
          {-1, 3}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 8}, {-3, 6}, {-3, 7}, {-3, 8}};
}

inline std::set<std::pair<int, int>> example8_inversions() {
  return {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {3, 6}};
}

inline std::vector<int> example8_psi_order() { return {4, 2, 5, 1, 6, 3}; }
inline std::vector<int> example8_psi_inversion_counts() { return {7, 6, 3, 1, 0}; }

inline std::vector<Box> example8_inverse_in_boxes() {
  return {{5, 8}, {2, 4}, {5, 7}, {3, 4}, {2, 6}, {1, 4}};
}
inline std::vector<Rule> example8_inverse_rules() {
  return {Rule::R1, Rule::R1, Rule::R5, Rule::R4, Rule::R2, Rule::R3};
}

// --- the pair of length-8 tableaux of types B and A -------------------------

inline PartialFilling typeB_length8_raw() {
  return make_filling(8, {2, 5, 7}, {6},
                      {
                          "1",     // row -7
                          "00",    // row -6
                          "011",   // row -5
                          "0001",  // row -2
                          "0111",  // row 1
                          "111",   // row 3
                          "011",   // row 4
                          "",      // row 8
                      });
}

inline PartialFilling typeB_length8_canonical() {
  return make_filling(8, {2, 5, 7}, {6},
                      {
                          "1",     // row -7
                          "00",    // row -6
                          "011",   // row -5
                          "0001",  // row -2
                          "0SSS",  // row 1
                          "SSS",   // row 3
                          "0SS",   // row 4
                          "",      // row 8
                      });
}

inline PartialFilling typeA_length8() {
  return make_filling(8, {}, {2, 5, 6, 7},
                      {
                          "0",     // row -7
                          "00",    // row -6
                          "000",   // row -5
                          "0000",  // row -2
                          "0111",  // row 1
                          "1SS",   // row 3
                          "0SS",   // row 4
                          "",      // row 8
                      });
}

// --- a partially filled diagram exercising the region orderings -------------

inline PartialFilling partial_region_example() {
  return make_filling(8, {1, 3, 6}, {5, 7, 8},
                      {
                          "0",       // row -8
                          "00",      // row -7
                          "**1",     // row -6
                          "0000",    // row -5
                          "..S*1",   // row -3
                          ".1...1",  // row -1
                          "S0..0",   // row 2
                          "....",    // row 4
                      });
}

// --- the length-9 type A tableau with its rectangle statistics --------------

inline PartialFilling typeA_length9() {
  return make_filling(9, {}, {2, 5, 6, 8, 9},
                      {
                          "0",      // row -9
                          "00",     // row -8
                          "000",    // row -6
                          "0000",   // row -5
                          "00000",  // row -2
                          "00111",  // row 1
                          "11SS",   // row 3
                          "0SSS",   // row 4
                          "SS",     // row 7
                      });
}

// --- the type A transform chain ----------------------------------------------

inline PartialFilling typeA_chain_in() {
  return make_filling(8, {}, {3, 5, 6, 8},
                      {
                          "0",     // row -8
                          "00",    // row -6
                          "000",   // row -5
                          "0000",  // row -3
                          "1001",  // row 1
                          "S01S",  // row 2
                          "01S",   // row 4
                          "S",     // row 7
                      });
}

inline PartialFilling typeA_chain_mid() {
  return make_filling(8, {1}, {3, 6, 8},
                      {
                          "0",     // row -8
                          "00",    // row -6
                          "000",   // row -3
                          "1011",  // row -1
                          "S0S",   // row 2
                          "01",    // row 4
                          "0S",    // row 5
                          "S",     // row 7
                      });
}

inline PartialFilling typeA_chain_out() {
  return make_filling(8, {}, {3, 6, 8},
                      {
                          "0",    // row -8
                          "00",   // row -6
                          "000",  // row -3
                          "101",  // row 1
                          "S0S",  // row 2
                          "01",   // row 4
                          "0S",   // row 5
                          "S",    // row 7
                      });
}

}  // namespace fixtures
