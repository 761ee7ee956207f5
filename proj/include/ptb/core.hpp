#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptb {

// Row and column labels live in [1, n]; label j occupies bit (j - 1).
using Mask = std::uint32_t;

constexpr int max_length = 24;

constexpr Mask label_bit(int j) { return Mask{1} << (j - 1); }
constexpr Mask labels_upto(int n) { return n <= 0 ? Mask{0} : (Mask{1} << n) - Mask{1}; }
constexpr bool has_label(Mask m, int j) { return j >= 1 && (m & label_bit(j)) != 0; }
constexpr int label_count(Mask m) { return std::popcount(m); }
// Number of labels in m strictly greater than j.
constexpr int count_above(Mask m, int j) { return std::popcount(m & ~labels_upto(j)); }

inline std::vector<int> label_list(Mask m) {
  std::vector<int> out;
  for (Mask x = m; x != 0; x &= x - 1) out.push_back(std::countr_zero(x) + 1);
  return out;
}

// Thrown when an internal invariant fails, i.e. a state the algorithms are
// proved never to reach. Never caught and repaired.
struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw StructureError(msg);
}

enum class Entry : unsigned char { Zero, One, S, Star, Empty };

constexpr bool is_nonzero(Entry e) { return e == Entry::One || e == Entry::S; }

constexpr char entry_char(Entry e) {
  switch (e) {
    case Entry::Zero: return '0';
    case Entry::One: return '1';
    case Entry::S: return 'S';
    case Entry::Star: return '*';
    default: return '.';
  }
}

// Address of a box in a shifted diagram. Rows carry signed labels (the rows
// holding diagonals are negative), columns carry positive labels. Display
// convention: rows run top to bottom by ascending signed label, columns left
// to right by descending label. "Above" therefore means a smaller row value,
// "to the left" a larger column value.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

enum class ColumnKind { Boundary, Interior };
enum class RowKind { Boundary, Interior, Redundant };

// The labeling sets of a shifted diagram of length n. Columns are the labels
// in diag_one | diag_zero; a column's diagonal holds 1 exactly when its label
// is in diag_one. The remaining labels are the positive row labels.
class LabelSets {
 public:
  LabelSets(int n, Mask diag_one, Mask diag_zero)
      : n_(n), diag_one_(diag_one), diag_zero_(diag_zero) {
    if (n < 1 || n > max_length) throw std::invalid_argument("length out of range");
    if ((diag_one | diag_zero) & ~labels_upto(n))
      throw std::invalid_argument("column label out of range");
    if (diag_one & diag_zero)
      throw std::invalid_argument("diag_one and diag_zero overlap");
  }

  static LabelSets from_lists(int n, const std::vector<int>& one,
                              const std::vector<int>& zero) {
    Mask m1 = 0, m0 = 0;
    for (int j : one) {
      if (j < 1 || j > n || has_label(m1, j)) throw std::invalid_argument("bad diag_one list");
      m1 |= label_bit(j);
    }
    for (int j : zero) {
      if (j < 1 || j > n || has_label(m0, j)) throw std::invalid_argument("bad diag_zero list");
      m0 |= label_bit(j);
    }
    return LabelSets(n, m1, m0);
  }

  int n() const { return n_; }
  Mask diag_one() const { return diag_one_; }
  Mask diag_zero() const { return diag_zero_; }
  Mask lab_minus() const { return diag_one_ | diag_zero_; }
  Mask pos() const { return labels_upto(n_) & ~lab_minus(); }

  // Every permutation tableau has label 1 as a positive row or a boundary
  // column; a diagonal 0 in column 1 would leave that column without a 1.
  bool one_placed() const { return !has_label(diag_zero_, 1); }

  bool is_column(int j) const { return has_label(lab_minus(), j); }
  bool is_row(int i) const {
    if (i > 0) return has_label(pos(), i);
    if (i < 0) return has_label(lab_minus(), -i);
    return false;
  }

  ColumnKind classify_column(int j) const {
    if (!is_column(j)) throw std::invalid_argument("not a column label: " + std::to_string(j));
    return has_label(diag_one_, j) ? ColumnKind::Boundary : ColumnKind::Interior;
  }

  RowKind classify_row(int i) const {
    if (!is_row(i)) throw std::invalid_argument("not a row label: " + std::to_string(i));
    int a = i < 0 ? -i : i;
    if (a == 1 || has_label(diag_one_, a)) return RowKind::Boundary;
    if (has_label(diag_zero_, a)) return RowKind::Redundant;
    return RowKind::Interior;
  }

  // Row i has one box per column label >= |i| (> i for positive rows, which
  // amounts to the same thing since positive row labels are not column
  // labels). Column j always has exactly j boxes.
  int row_box_count(int i) const {
    if (!is_row(i)) throw std::invalid_argument("not a row label");
    return count_above(lab_minus(), (i < 0 ? -i : i) - 1);
  }
  int column_box_count(int j) const {
    if (!is_column(j)) throw std::invalid_argument("not a column label");
    return j;
  }

  // Row labels in display order (top to bottom).
  std::vector<int> row_labels() const {
    std::vector<int> out;
    auto cols = label_list(lab_minus());
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) out.push_back(-*it);
    for (int i : label_list(pos())) out.push_back(i);
    return out;
  }

  // Column labels in display order (left to right, i.e. descending).
  std::vector<int> columns() const {
    auto cols = label_list(lab_minus());
    return {cols.rbegin(), cols.rend()};
  }

  friend bool operator==(const LabelSets&, const LabelSets&) = default;

 private:
  int n_;
  Mask diag_one_;
  Mask diag_zero_;
};

}  // namespace ptb
