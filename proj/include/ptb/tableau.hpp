#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptb/core.hpp"
#include "ptb/filling.hpp"

namespace ptb {

enum class Family { A, B, D };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    default: return "D";
  }
}

struct Violation {
  enum class Kind {
    BadEntry,        // Star or Empty present
    ColumnNeedsOne,  // a column with no nonzero entry
    Perp,            // zero with a nonzero above and a nonzero to its left
    DiagonalZero,    // nonzero to the left of a 0 diagonal
    NotCanonical,    // a One that is not the topmost nonzero of its column
    FamilyMismatch,  // diagonal pattern not allowed by the family
  };
  Kind kind;
  Box box;  // offending box; for ColumnNeedsOne only col is meaningful
  std::string message;
};

struct TableauError : std::invalid_argument {
  explicit TableauError(std::vector<Violation> v)
      : std::invalid_argument(v.empty() ? "invalid tableau" : v.front().message),
        violations(std::move(v)) {}
  std::vector<Violation> violations;
};

// Checks the permutation-tableau conditions on an S-canonical filling:
// every column's topmost nonzero entry is its unique 1; a 0 with a nonzero
// above it in its column and a nonzero to its left in its row is forbidden;
// a 0 diagonal has no nonzero to its left; plus the family constraint on the
// diagonal pattern. Returns every violation found.
inline std::vector<Violation> check(const PartialFilling& f, Family fam) {
  std::vector<Violation> out;
  const LabelSets& L = f.labels();

  if (fam == Family::A && L.diag_one() != 0)
    out.push_back({Violation::Kind::FamilyMismatch, {}, "family A requires all-zero diagonals"});
  if (fam == Family::D && label_count(L.diag_one()) % 2 != 0)
    out.push_back({Violation::Kind::FamilyMismatch, {}, "family D requires an even number of 1-diagonals"});

  f.for_each_box([&](Box b, Entry e) {
    if (e == Entry::Star || e == Entry::Empty)
      out.push_back({Violation::Kind::BadEntry, b, "entry at " + to_string(b) + " is not 0/1/S"});
  });

  auto cols = L.columns();
  for (int j : cols) {
    // walk the column top to bottom
    bool seen_nonzero = false;
    bool has_one = false;
    for (int r : f.row_labels()) {
      if (!f.is_box(r, j)) continue;
      Entry e = f.at(r, j);
      if (e == Entry::One) {
        if (seen_nonzero)
          out.push_back({Violation::Kind::NotCanonical, Box{r, j},
                         "1 at " + to_string(Box{r, j}) + " is not the topmost nonzero of its column"});
        has_one = true;
        seen_nonzero = true;
      } else if (e == Entry::S) {
        if (!seen_nonzero)
          out.push_back({Violation::Kind::NotCanonical, Box{r, j},
                         "S at " + to_string(Box{r, j}) + " is the topmost nonzero of its column"});
        seen_nonzero = true;
      }
    }
    if (!has_one)
      out.push_back({Violation::Kind::ColumnNeedsOne, Box{0, j},
                     "column " + std::to_string(j) + " has no 1"});
  }

  // left-to-right scan per row gives "nonzero to the left"; per-column scan
  // state gives "nonzero above"
  std::vector<bool> above(static_cast<std::size_t>(L.n()) + 1, false);
  int cur_row = 0;
  bool left_nonzero = false;
  f.for_each_box([&](Box b, Entry e) {
    if (b.row != cur_row) {
      cur_row = b.row;
      left_nonzero = false;
    }
    auto ja = static_cast<std::size_t>(b.col);
    if (e == Entry::Zero) {
      if (above[ja] && left_nonzero)
        out.push_back({Violation::Kind::Perp, b,
                       "0 at " + to_string(b) + " has a nonzero above and a nonzero to its left"});
      if (f.is_diagonal(b) && left_nonzero)
        out.push_back({Violation::Kind::DiagonalZero, b,
                       "0 diagonal " + to_string(b) + " has a nonzero to its left"});
    }
    if (is_nonzero(e)) {
      above[ja] = true;
      left_nonzero = true;
    }
  });
  return out;
}

// Marks every non-topmost 1 of a raw (0,1)-filling as S.
inline PartialFilling canonicalize(const PartialFilling& raw) {
  PartialFilling out = raw;
  const LabelSets& L = raw.labels();
  for (int j : L.columns()) {
    bool seen = false;
    for (int r : raw.row_labels()) {
      if (!raw.is_box(r, j)) continue;
      Entry e = raw.at(r, j);
      if (!is_nonzero(e)) continue;
      if (seen && e == Entry::One && !raw.is_diagonal(Box{r, j})) out.set(r, j, Entry::S);
      seen = true;
    }
  }
  return out;
}

// Inverse of canonicalize: every S becomes a plain 1.
inline PartialFilling decanonicalize(const PartialFilling& f) {
  PartialFilling out = f;
  f.for_each_box([&](Box b, Entry e) {
    if (e == Entry::S) out.set(b, Entry::One);
  });
  return out;
}

// A validated, S-canonical permutation tableau of one of the three families.
class PermutationTableau {
 public:
  static PermutationTableau validate(const PartialFilling& f, Family fam) {
    auto violations = check(f, fam);
    if (!violations.empty()) throw TableauError(std::move(violations));
    return PermutationTableau(f, fam);
  }

  const PartialFilling& filling() const { return filling_; }
  const LabelSets& labels() const { return filling_.labels(); }
  Family family() const { return family_; }
  int n() const { return filling_.n(); }

  int so() const { return filling_.count(Entry::S); }
  int diag() const { return label_count(labels().diag_one()); }
  int row_pos() const { return label_count(labels().pos()); }

  friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;

 private:
  PermutationTableau(PartialFilling f, Family fam) : filling_(std::move(f)), family_(fam) {}
  PartialFilling filling_;
  Family family_;
};

struct TableauStats {
  int so = 0;
  int diag = 0;
  int row_pos = 0;
  // Rectangle-representation counts, defined for family A only: the tableau's
  // positive rows sit in an r x (n-r) rectangle, cells outside the shape
  // count as 2s.
  std::optional<int> zero;
  std::optional<int> two;
};

inline TableauStats stats(const PermutationTableau& t) {
  TableauStats s;
  s.so = t.so();
  s.diag = t.diag();
  s.row_pos = t.row_pos();
  if (t.family() == Family::A) {
    const auto& f = t.filling();
    int r = s.row_pos;
    int width = label_count(f.labels().lab_minus());
    int zero = 0, cells_in_shape = 0;
    f.for_each_box([&](Box b, Entry e) {
      if (b.row <= 0) return;
      ++cells_in_shape;
      if (e == Entry::Zero) ++zero;
    });
    s.zero = zero;
    s.two = r * width - cells_in_shape;
  }
  return s;
}

// --- enumeration ------------------------------------------------------------

// One enumeration shard: a fixed split of the column set into 1-diagonals and
// 0-diagonals. Shards partition the family and may be processed in parallel;
// listing order is deterministic.
struct TableauShard {
  Mask diag_one = 0;
  Mask diag_zero = 0;
};

inline std::vector<TableauShard> tableau_shards(int n, Family fam) {
  std::vector<TableauShard> out;
  const Mask all = labels_upto(n);
  for (Mask cols = 0;; ++cols) {
    cols &= all;
    // enumerate subsets of cols as diag_one
    Mask d1 = 0;
    while (true) {
      Mask d0 = cols & ~d1;
      bool ok = !has_label(d0, 1);
      if (fam == Family::A) ok = ok && d1 == 0;
      if (fam == Family::D) ok = ok && label_count(d1) % 2 == 0;
      if (ok) out.push_back({d1, d0});
      if (d1 == cols) break;
      d1 = (d1 - cols) & cols;  // next submask
    }
    if (cols == all) break;
  }
  return out;
}

// Backtracking fill of one shard. Free boxes are the non-diagonal boxes of
// boundary and interior rows, visited row-major top to bottom, left to right;
// redundant rows are forced all-zero by the 0 on their diagonal. Pruning:
// placing a 0 under a column 1 with a 1 to its left violates the tableau
// condition, and a column whose last free box would stay 0 with no 1 dies.
template <typename F>
void for_each_tableau_in_shard(int n, Family fam, TableauShard sh, F&& fn) {
  LabelSets L(n, sh.diag_one, sh.diag_zero);

  struct FreeBox {
    Box b;
    bool row_start;
    bool last_of_column;
  };
  std::vector<FreeBox> free_boxes;
  {
    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 0);
    PartialFilling probe(L);
    probe.for_each_box([&](Box b, Entry) {
      if (L.classify_row(b.row) == RowKind::Redundant || probe.is_diagonal(b)) return;
      free_boxes.push_back({b, false, false});
      ++remaining[static_cast<std::size_t>(b.col)];
    });
    int prev_row = 0;
    for (auto& fb : free_boxes) {
      fb.row_start = fb.b.row != prev_row;
      prev_row = fb.b.row;
      fb.last_of_column = --remaining[static_cast<std::size_t>(fb.b.col)] == 0;
    }
    for (int j : label_list(L.diag_zero()))
      if (remaining[static_cast<std::size_t>(j)] > 0) return;  // interior column with no free box: no 1 possible
  }

  PartialFilling work(L, Entry::Zero);
  std::vector<bool> col_has_one(static_cast<std::size_t>(n) + 1, false);
  for (int j : label_list(L.diag_one())) col_has_one[static_cast<std::size_t>(j)] = true;

  auto emit = [&] {
    fn(PermutationTableau::validate(canonicalize(work), fam));
  };

  std::function<void(std::size_t, bool)> go = [&](std::size_t d, bool left_one) {
    if (d == free_boxes.size()) {
      emit();
      return;
    }
    const FreeBox& fb = free_boxes[d];
    if (fb.row_start) left_one = false;
    auto jc = static_cast<std::size_t>(fb.b.col);
    // place 0
    bool perp = col_has_one[jc] && left_one;
    bool starves = fb.last_of_column && !col_has_one[jc];
    if (!perp && !starves) {
      work.set(fb.b, Entry::Zero);
      go(d + 1, left_one);
    }
    // place 1
    bool saved = col_has_one[jc];
    col_has_one[jc] = true;
    work.set(fb.b, Entry::One);
    go(d + 1, true);
    work.set(fb.b, Entry::Zero);
    col_has_one[jc] = saved;
  };
  go(0, false);
}

// Streams every tableau of the family exactly once, in a fixed order.
template <typename F>
void for_each_tableau(int n, Family fam, F&& fn) {
  for (const TableauShard& sh : tableau_shards(n, fam))
    for_each_tableau_in_shard(n, fam, sh, fn);
}

}  // namespace ptb
