#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptb/core.hpp"
#include "ptb/filling.hpp"

namespace ptb {

// The region S(F) of a shape: the boxes lying in boundary and interior rows,
// minus the topmost such box of every column. The excluded box of a boundary
// column is its diagonal; in an interior column it is the box that receives a
// star during pre-tableau construction. The region carries two orderings:
//
//  * row-numbering r_i, per row: boundary-column boxes right to left, then
//    interior-column boxes left to right;
//  * box-numbering b, global: rows bottom to top, right to left within a row.
//
// Both depend only on the labeling sets, never on the entries, so a Region is
// a derived view computed on demand.
class Region {
 public:
  explicit Region(const LabelSets& labels) : labels_(labels) {
    if (!labels.one_placed())
      throw std::domain_error("region needs label 1 in a positive row or boundary column");
    std::vector<int> region_rows;  // display order
    for (int r : labels.row_labels())
      if (labels.classify_row(r) != RowKind::Redundant) region_rows.push_back(r);

    for (int j : labels.columns()) {
      auto& col = columns_[j];
      bool excluded = false;
      for (int r : region_rows) {
        if (!(r < 0 ? j >= -r : j > r)) continue;
        if (!excluded) {
          excluded = true;  // topmost boundary/interior box of the column
          continue;
        }
        col.push_back(Box{r, j});
        by_row_[r].push_back(Box{r, j});
      }
    }

    for (auto& [r, boxes] : by_row_) {
      std::vector<Box> numbered;
      // boundary columns, ascending label = physically right to left
      for (auto it = boxes.rbegin(); it != boxes.rend(); ++it)
        if (has_label(labels.diag_one(), it->col)) numbered.push_back(*it);
      // interior columns, descending label = physically left to right
      for (const Box& b : boxes)
        if (!has_label(labels.diag_one(), b.col)) numbered.push_back(b);
      row_order_[r] = std::move(numbered);
    }

    // box-numbering: bottom row first, rightmost box (smallest column) first
    for (auto it = by_row_.rbegin(); it != by_row_.rend(); ++it)
      for (auto bit = it->second.rbegin(); bit != it->second.rend(); ++bit)
        boxes_.push_back(*bit);
    for (std::size_t i = 0; i < boxes_.size(); ++i)
      number_[boxes_[i]] = static_cast<int>(i) + 1;
  }

  const LabelSets& labels() const { return labels_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool contains(Box b) const { return number_.contains(b); }

  // Boxes in box-numbering order; box_at(k) has number k.
  const std::vector<Box>& boxes() const { return boxes_; }
  Box box_at(int number) const { return boxes_.at(static_cast<std::size_t>(number - 1)); }
  int box_number(Box b) const {
    auto it = number_.find(b);
    if (it == number_.end()) throw std::invalid_argument("box outside region: " + to_string(b));
    return it->second;
  }

  int row_size(int row) const {
    auto it = by_row_.find(row);
    return it == by_row_.end() ? 0 : static_cast<int>(it->second.size());
  }

  // Boxes of a row in row-numbering order; empty when the row misses the region.
  const std::vector<Box>& row_by_numbering(int row) const {
    static const std::vector<Box> none;
    auto it = row_order_.find(row);
    return it == row_order_.end() ? none : it->second;
  }

  int row_number(Box b) const {
    const auto& order = row_by_numbering(b.row);
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == b) return static_cast<int>(i) + 1;
    throw std::invalid_argument("box outside region: " + to_string(b));
  }

  // Region boxes of a column, top to bottom.
  const std::vector<Box>& column_boxes(int col) const {
    static const std::vector<Box> none;
    auto it = columns_.find(col);
    return it == columns_.end() ? none : it->second;
  }

  // Region boxes of a row in display order (left to right).
  const std::vector<Box>& row_boxes(int row) const {
    static const std::vector<Box> none;
    auto it = by_row_.find(row);
    return it == by_row_.end() ? none : it->second;
  }

  // Whether c1 is in a relevant position to c2: same column, c1 above, row of
  // c1 a boundary row no longer (within the region) than the row of c2.
  bool relevant(Box c1, Box c2) const {
    if (c1.col != c2.col) throw std::invalid_argument("relevant: boxes in different columns");
    if (!contains(c1) || !contains(c2)) throw std::invalid_argument("relevant: box outside region");
    if (c1.row >= c2.row) return false;
    return labels_.classify_row(c1.row) == RowKind::Boundary &&
           row_size(c1.row) <= row_size(c2.row);
  }

 private:
  LabelSets labels_;
  std::vector<Box> boxes_;
  std::map<Box, int> number_;
  std::map<int, std::vector<Box>> by_row_;     // display order within the row
  std::map<int, std::vector<Box>> row_order_;  // row-numbering order
  std::map<int, std::vector<Box>> columns_;    // top to bottom
};

inline Region region(const PartialFilling& f) { return Region(f.labels()); }

}  // namespace ptb
