#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "ptb/core.hpp"
#include "ptb/filling.hpp"
#include "ptb/region.hpp"
#include "ptb/tableau.hpp"

namespace ptb {

enum class BoxType { Untyped, T0, T1, T2, T3, T4, T5 };
enum class Rule { R1, R2, R3, R4, R5 };

inline std::string to_string(Rule r) {
  return "R" + std::to_string(static_cast<int>(r) + 1);
}

struct TraceStep {
  int ordinal = 0;
  Rule rule = Rule::R1;
  Box in;
  Box out;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  std::vector<TraceStep> steps;
  // Zeros in boundary columns whose first nonzero to the left is an S having
  // only plain 1s above it stay untyped; the count surfaces how often that
  // corner shows up in exhaustive runs.
  long long untyped_one_above_sc = 0;
  int k() const { return static_cast<int>(steps.size()); }
  friend bool operator==(const Trace& a, const Trace& b) { return a.steps == b.steps; }
};

// Trace text format, one line per step.
inline std::string to_text(const Trace& t) {
  std::ostringstream os;
  for (const TraceStep& s : t.steps)
    os << "step=" << s.ordinal << " rule=" << to_string(s.rule) << " in=" << to_string(s.in)
       << " out=" << to_string(s.out) << "\n";
  return os.str();
}

// The first nonzero entry to the left of c, scanning the physically-left
// boxes of c's region row in ascending row-numbering order. When that entry
// is an S its box is returned (left(c)); a 1 or an all-zero left part yields
// nothing. Only sensible for boxes in boundary columns.
inline std::optional<Box> left_scan(const PartialFilling& f, const Region& reg, Box c) {
  if (!reg.contains(c)) throw std::invalid_argument("left_scan: box outside region");
  if (f.labels().classify_column(c.col) != ColumnKind::Boundary)
    throw std::invalid_argument("left_scan: box not in a boundary column");
  for (const Box& b : reg.row_by_numbering(c.row)) {
    if (b.col <= c.col) continue;  // keep only boxes physically left of c
    Entry e = f.at(b);
    if (e == Entry::S) return b;
    if (e == Entry::One) return std::nullopt;
  }
  return std::nullopt;
}

// When the downmost nonzero entry above c (within the region, same column) is
// an S in a relevant position, c is constrained and that box is rel(c).
inline std::optional<Box> rel_box(const PartialFilling& f, const Region& reg, Box c) {
  if (!reg.contains(c)) throw std::invalid_argument("rel_box: box outside region");
  const auto& col = reg.column_boxes(c.col);
  for (auto it = col.rbegin(); it != col.rend(); ++it) {
    if (it->row >= c.row) continue;
    Entry e = f.at(*it);
    if (e == Entry::Zero) continue;
    if (e == Entry::S && reg.relevant(*it, c)) return *it;
    return std::nullopt;
  }
  return std::nullopt;
}

// Box types drive the rewrite rules. A 1 with a nonzero above it in the
// region is T1 when constrained, T0 when not; a 1 with nothing above stays
// untyped so the opening pass leaves it as its column's topmost nonzero
// (dropping it would lose its position, breaking the involution). A 0 in an
// interior column is T2 when constrained with a nonzero to its left. A 0 in
// a boundary column looks left for S_c = the S at left(c): an S above S_c
// makes it T3/T4 by whether S_c itself is constrained; no nonzero above S_c
// makes it T5 when S_c sits in an interior column.
inline BoxType classify(const PartialFilling& f, const Region& reg, Box c,
                        long long* one_above_sc_counter = nullptr) {
  if (!reg.contains(c)) throw std::invalid_argument("classify: box outside region");
  Entry e = f.at(c);
  if (e == Entry::One) {
    bool nonzero_above = false;
    for (const Box& b : reg.column_boxes(c.col)) {
      if (b.row >= c.row) break;
      nonzero_above = nonzero_above || is_nonzero(f.at(b));
    }
    if (!nonzero_above) return BoxType::Untyped;
    return rel_box(f, reg, c) ? BoxType::T1 : BoxType::T0;
  }
  if (e != Entry::Zero) return BoxType::Untyped;

  if (f.labels().classify_column(c.col) == ColumnKind::Interior) {
    if (!rel_box(f, reg, c)) return BoxType::Untyped;
    for (const Box& b : reg.row_boxes(c.row))
      if (b.col > c.col && is_nonzero(f.at(b))) return BoxType::T2;
    return BoxType::Untyped;
  }

  auto sc = left_scan(f, reg, c);
  if (!sc) return BoxType::Untyped;
  bool saw_s_above = false, saw_nonzero_above = false;
  for (const Box& b : reg.column_boxes(sc->col)) {
    if (b.row >= sc->row) break;
    Entry eb = f.at(b);
    saw_nonzero_above = saw_nonzero_above || is_nonzero(eb);
    saw_s_above = saw_s_above || eb == Entry::S;
  }
  if (!saw_nonzero_above)
    return f.labels().classify_column(sc->col) == ColumnKind::Interior ? BoxType::T5
                                                                       : BoxType::Untyped;
  if (saw_s_above) return rel_box(f, reg, *sc) ? BoxType::T3 : BoxType::T4;
  if (one_above_sc_counter) ++*one_above_sc_counter;
  return BoxType::Untyped;
}

namespace detail {

inline void move_s(PartialFilling& f, Box from, Entry to_entry, Box in, Entry in_was) {
  require(f.at(from) == Entry::S, "rule out-box " + to_string(from) + " holds no S");
  require(f.at(in) == in_was, "rule in-box " + to_string(in) + " changed under us");
  f.set(from, to_entry);
  f.set(in, Entry::S);
}

// Applies the matching rule in place; c must be typed T1..T5.
inline TraceStep apply_rule_inplace(PartialFilling& f, const Region& reg, Box c,
                                    long long* counter = nullptr) {
  BoxType ty = classify(f, reg, c, counter);
  TraceStep step;
  step.in = c;
  switch (ty) {
    case BoxType::T1: {
      Box out = rel_box(f, reg, c).value();
      move_s(f, out, Entry::Zero, c, Entry::One);
      step.rule = Rule::R1;
      step.out = out;
      break;
    }
    case BoxType::T2: {
      Box out = rel_box(f, reg, c).value();
      move_s(f, out, Entry::Zero, c, Entry::Zero);
      step.rule = Rule::R2;
      step.out = out;
      break;
    }
    case BoxType::T3: {
      Box left = left_scan(f, reg, c).value();
      Box out = rel_box(f, reg, left).value();
      move_s(f, out, Entry::Zero, c, Entry::Zero);
      step.rule = Rule::R3;
      step.out = out;
      break;
    }
    case BoxType::T4: {
      Box out = left_scan(f, reg, c).value();
      move_s(f, out, Entry::Zero, c, Entry::Zero);
      step.rule = Rule::R4;
      step.out = out;
      break;
    }
    case BoxType::T5: {
      Box out = left_scan(f, reg, c).value();
      move_s(f, out, Entry::One, c, Entry::Zero);
      step.rule = Rule::R5;
      step.out = out;
      break;
    }
    default:
      throw std::domain_error("no rule applies at " + to_string(c));
  }
  return step;
}

inline void check_star_per_column(const PartialFilling& f) {
  std::vector<int> stars(static_cast<std::size_t>(f.n()) + 1, 0);
  f.for_each_box([&](Box b, Entry e) {
    if (e == Entry::Star) ++stars[static_cast<std::size_t>(b.col)];
  });
  for (int c : stars)
    if (c > 1) throw std::domain_error("more than one star in a column");
}

}  // namespace detail

// Applies the rule selected by c's type, returning the new filling and the
// step record.
inline std::pair<PartialFilling, TraceStep> apply_rule(const PartialFilling& f, Box c) {
  PartialFilling out = f;
  Region reg(f.labels());
  TraceStep step = detail::apply_rule_inplace(out, reg, c);
  return {std::move(out), step};
}

// Simultaneously turns every unconstrained 1 of the region (type 0 against
// the input state) into a 0.
inline PartialFilling phi_circ(const PartialFilling& f) {
  detail::check_star_per_column(f);
  Region reg(f.labels());
  std::vector<Box> flips;
  for (const Box& b : reg.boxes())
    if (classify(f, reg, b) == BoxType::T0) flips.push_back(b);
  PartialFilling out = f;
  for (const Box& b : flips) out.set(b, Entry::Zero);
  return out;
}

// Completes interior columns that lack a 1: the downmost 0 with a 1 or S to
// its left (anywhere in the row) becomes 1, otherwise the column's star does;
// all surviving stars then become 0. Decisions are taken against the input
// state for every column at once.
inline PartialFilling phi_bullet(const PartialFilling& f) {
  detail::check_star_per_column(f);
  PartialFilling out = f;
  for (int j : label_list(f.labels().diag_zero())) {
    bool has_one = false;
    std::optional<Box> downmost_zero, star;
    for (int r : f.row_labels()) {
      if (!f.is_box(r, j)) continue;
      Entry e = f.at(r, j);
      if (e == Entry::One) has_one = true;
      if (e == Entry::Star) star = Box{r, j};
      if (e == Entry::Zero) {
        for (int c : f.labels().columns()) {
          if (c <= j) break;
          if (is_nonzero(f.at(r, c))) {
            downmost_zero = Box{r, j};  // rows scan top to bottom, keep the last
            break;
          }
        }
      }
    }
    if (has_one) continue;
    if (downmost_zero)
      out.set(*downmost_zero, Entry::One);
    else if (star)
      out.set(*star, Entry::One);
    else
      throw StructureError("column " + std::to_string(j) + " cannot receive a 1");
  }
  out.for_each_box([&](Box b, Entry e) {
    if (e == Entry::Star) out.set(b, Entry::Zero);
  });
  return out;
}

// The pre-tableau of a filling with 1 placed: labels reflect through
// i -> n+2-i (with 1 joining the boundary columns), boundary-row diagonals
// get 1s, redundant rows fill with 0s, each interior column's topmost empty
// box gets a star, and the columns of the region are copied into the rows of
// the new region following the row-numbering. For fillings whose label 1 is a
// boundary column the construction is conjugated by iota.
inline PartialFilling pre_filling(const PartialFilling& f) {
  const LabelSets& L = f.labels();
  if (!L.one_placed())
    throw std::domain_error("pre_filling needs label 1 in a positive row or boundary column");
  if (has_label(L.diag_one(), 1)) return iota(pre_filling(iota(f)));

  int n = L.n();
  auto reflect = [n](Mask m) {
    Mask out = 0;
    for (int i : label_list(m)) out |= label_bit(n + 2 - i);
    return out;
  };
  LabelSets M(n, label_bit(1) | reflect(L.diag_one()), reflect(L.pos() & ~label_bit(1)));

  PartialFilling pre(M, Entry::Empty);
  for (int i : label_list(M.diag_zero()))
    for (int c : label_list(M.lab_minus()))
      if (c > i) pre.set(-i, c, Entry::Zero);
  for (int j : label_list(M.diag_zero())) {
    for (int r : pre.row_labels()) {
      if (!pre.is_box(r, j)) continue;
      if (pre.at(r, j) == Entry::Empty) {
        pre.set(r, j, Entry::Star);
        break;
      }
    }
  }

  Region src(L), dst(M);
  auto copy_column = [&](int col, int target_row) {
    const auto& boxes = src.column_boxes(col);
    const auto& slots = dst.row_by_numbering(target_row);
    require(boxes.size() == slots.size(),
            "pre-tableau row/column size mismatch at column " + std::to_string(col));
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      Entry e = f.at(boxes[k]);
      require(e == Entry::Zero || is_nonzero(e), "region entry is not 0/1/S");
      pre.set(slots[k], e);
    }
  };
  auto ds = label_list(L.diag_one());
  ds.push_back(n + 1);
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    copy_column(ds[i], -(n + 2 - ds[i + 1]));
  for (int j : label_list(L.diag_zero())) copy_column(j, n + 2 - j);

  require(pre.count(Entry::Empty) == 0, "pre-tableau left empty boxes");
  return pre;
}

struct TransformResult {
  PermutationTableau tableau;
  Trace trace;
};

namespace detail {
inline Trace relabel(Trace t) {
  for (TraceStep& s : t.steps) {
    s.in = iota_box(s.in);
    s.out = iota_box(s.out);
  }
  return t;
}
}  // namespace detail

// The involution on type-B permutation tableaux. With label 1 in a positive
// row: build the pre-tableau, drop unconstrained 1s (phi_circ), run one pass
// of R1 and one pass of R2..R5 in box-numbering order against the evolving
// state, then complete columns (phi_bullet). With 1 in a boundary column the
// whole map is conjugated by iota. Exchanges k = 2 row + diag with 2n+1-k,
// preserves the S count, and preserves diag + [1 in a positive row].
inline TransformResult transform(const PermutationTableau& t) {
  const PartialFilling& f = t.filling();
  if (has_label(t.labels().diag_one(), 1)) {
    TransformResult inner = transform(PermutationTableau::validate(iota(f), Family::B));
    return {PermutationTableau::validate(iota(inner.tableau.filling()), Family::B),
            detail::relabel(std::move(inner.trace))};
  }

  PartialFilling F = pre_filling(f);
  Region reg(F.labels());
  F = phi_circ(F);
  Trace trace;
  for (int i = 1; i <= reg.size(); ++i) {
    Box c = reg.box_at(i);
    if (classify(F, reg, c, &trace.untyped_one_above_sc) == BoxType::T1) {
      TraceStep step = detail::apply_rule_inplace(F, reg, c);
      step.ordinal = trace.k() + 1;
      trace.steps.push_back(step);
    }
  }
  for (int i = 1; i <= reg.size(); ++i) {
    Box c = reg.box_at(i);
    BoxType ty = classify(F, reg, c, &trace.untyped_one_above_sc);
    if (ty == BoxType::T2 || ty == BoxType::T3 || ty == BoxType::T4 || ty == BoxType::T5) {
      TraceStep step = detail::apply_rule_inplace(F, reg, c);
      step.ordinal = trace.k() + 1;
      trace.steps.push_back(step);
    }
  }
  F = phi_bullet(F);

  PermutationTableau out = [&] {
    try {
      return PermutationTableau::validate(F, Family::B);
    } catch (const TableauError& e) {
      throw StructureError("transform produced an invalid tableau: " + std::string(e.what()) +
                           "\n" + render(F));
    }
  }();
  require(out.so() == t.so(), "transform changed the S count");
  return {std::move(out), std::move(trace)};
}

inline PermutationTableau iota_t(const PermutationTableau& t) {
  return PermutationTableau::validate(iota(t.filling()), t.family());
}

// Restriction to type A: iota after transform; stays within type A and swaps
// the positive-row count r with n+1-r while preserving so, zero and two.
inline PermutationTableau transform_a(const PermutationTableau& t) {
  if (t.family() != Family::A || t.diag() != 0)
    throw std::domain_error("transform_a needs a type A tableau");
  PermutationTableau b = transform(PermutationTableau::validate(t.filling(), Family::B)).tableau;
  return PermutationTableau::validate(iota(b.filling()), Family::A);
}

// Restriction to type D: iota after transform; preserves diag and so.
inline PermutationTableau transform_d(const PermutationTableau& t) {
  if (t.family() != Family::D || t.diag() % 2 != 0)
    throw std::domain_error("transform_d needs a type D tableau");
  PermutationTableau b = transform(PermutationTableau::validate(t.filling(), Family::B)).tableau;
  return PermutationTableau::validate(iota(b.filling()), Family::D);
}

}  // namespace ptb
