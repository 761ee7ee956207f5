#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "ptb/core.hpp"

namespace ptb {

// A (0,1,*,S)-filling of some boxes of a shifted diagram; unfilled boxes hold
// Entry::Empty. The box set is fully determined by the labeling sets: row i
// meets every column j >= |i| (strictly > i when i > 0), so each row is a
// left-justified prefix of the column list. Diagonal entries are fixed by the
// labels (column j's diagonal (-j, j) holds 1 iff j is in diag_one) and are
// set at construction; they cannot be rewritten afterwards.
class PartialFilling {
 public:
  explicit PartialFilling(const LabelSets& labels, Entry fill = Entry::Empty)
      : labels_(labels), rows_(labels.row_labels()) {
    row_offset_.reserve(rows_.size() + 1);
    int off = 0;
    for (int r : rows_) {
      row_offset_.push_back(off);
      off += labels_.row_box_count(r);
    }
    row_offset_.push_back(off);
    cells_.assign(off, fill);
    for (int j : label_list(labels_.lab_minus()))
      cells_[index(-j, j)] = has_label(labels_.diag_one(), j) ? Entry::One : Entry::Zero;
  }

  const LabelSets& labels() const { return labels_; }
  int n() const { return labels_.n(); }
  int box_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<int>& row_labels() const { return rows_; }

  bool is_box(int row, int col) const {
    if (!labels_.is_column(col) || !labels_.is_row(row)) return false;
    return row < 0 ? col >= -row : col > row;
  }
  bool is_box(Box b) const { return is_box(b.row, b.col); }
  bool is_diagonal(Box b) const { return b.row < 0 && b.col == -b.row; }

  Entry at(int row, int col) const { return cells_[index(row, col)]; }
  Entry at(Box b) const { return at(b.row, b.col); }

  void set(int row, int col, Entry e) {
    if (row < 0 && col == -row)
      throw std::invalid_argument("diagonal entries are fixed by the labels");
    cells_[index(row, col)] = e;
  }
  void set(Box b, Entry e) { set(b.row, b.col, e); }

  // Visits boxes in display order: rows top to bottom, columns left to right.
  template <typename F>
  void for_each_box(F&& f) const {
    auto cols = labels_.columns();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int row = rows_[r];
      int cnt = row_offset_[r + 1] - row_offset_[r];
      for (int k = 0; k < cnt; ++k)
        f(Box{row, cols[static_cast<std::size_t>(k)]}, cells_[row_offset_[r] + k]);
    }
  }

  int count(Entry e) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), e));
  }

  friend bool operator==(const PartialFilling&, const PartialFilling&) = default;

 private:
  int row_slot(int row) const {
    // Negative rows come first, by descending |label|; then positive rows
    // ascending.
    if (row < 0) return count_above(labels_.lab_minus(), -row);
    return label_count(labels_.lab_minus()) +
           label_count(labels_.pos() & labels_upto(row - 1));
  }

  int index(int row, int col) const {
    if (!is_box(row, col))
      throw std::invalid_argument("not a box: " + to_string(Box{row, col}));
    // Column j sits at the same horizontal offset in every row it meets.
    return row_offset_[row_slot(row)] + count_above(labels_.lab_minus(), col);
  }

  LabelSets labels_;
  std::vector<int> rows_;
  std::vector<int> row_offset_;
  std::vector<Entry> cells_;
};

// Toggles label 1 between a positive row and a boundary column: attaches the
// box (-1,1) with content 1 when row 1 exists, removes it otherwise. An
// involution on fillings with 1 placed.
inline PartialFilling iota(const PartialFilling& f) {
  const LabelSets& L = f.labels();
  if (has_label(L.pos(), 1)) {
    LabelSets M(L.n(), L.diag_one() | label_bit(1), L.diag_zero());
    PartialFilling out(M, Entry::Empty);
    f.for_each_box([&](Box b, Entry e) {
      if (f.is_diagonal(b)) return;  // diagonals carry over via the labels
      if (b.row == 1)
        out.set(-1, b.col, e);
      else
        out.set(b, e);
    });
    return out;
  }
  if (has_label(L.diag_one(), 1)) {
    LabelSets M(L.n(), L.diag_one() & ~label_bit(1), L.diag_zero());
    PartialFilling out(M, Entry::Empty);
    f.for_each_box([&](Box b, Entry e) {
      if (f.is_diagonal(b)) return;  // includes (-1,1), dropped with its 1
      if (b.row == -1)
        out.set(1, b.col, e);
      else
        out.set(b, e);
    });
    return out;
  }
  throw std::domain_error("iota needs label 1 in a positive row or boundary column");
}

inline Box iota_box(Box b) {
  if (b.row == 1) return {-1, b.col};
  if (b.row == -1) return {1, b.col};
  return b;
}

// ASCII grid, one character per box, rows top to bottom with their labels in
// a left gutter and column labels in a header line.
inline std::string render(const PartialFilling& f) {
  auto cols = f.labels().columns();
  int w = 1;
  for (int r : f.row_labels()) w = std::max(w, static_cast<int>(std::to_string(r).size()));
  for (int c : cols) w = std::max(w, static_cast<int>(std::to_string(c).size()));
  std::ostringstream os;
  auto pad = [&](const std::string& s) {
    for (int k = static_cast<int>(s.size()); k < w; ++k) os << ' ';
    os << s;
  };
  pad("");
  os << "  ";
  for (int c : cols) {
    os << ' ';
    pad(std::to_string(c));
  }
  os << '\n';
  for (int r : f.row_labels()) {
    pad(std::to_string(r));
    os << " |";
    int cnt = f.labels().row_box_count(r);
    for (int k = 0; k < cnt; ++k) {
      os << ' ';
      pad(std::string(1, entry_char(f.at(r, cols[static_cast<std::size_t>(k)]))));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ptb
