#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ptb/involution.hpp"

namespace ptb {

// Labels of the pre-tableau shape. Applying it twice returns the original
// labels.
inline LabelSets pre_labels(const LabelSets& L) {
  if (!L.one_placed()) throw std::domain_error("pre_labels needs label 1 placed");
  int n = L.n();
  auto reflect = [n](Mask m) {
    Mask out = 0;
    for (int i : label_list(m)) out |= label_bit(n + 2 - i);
    return out;
  };
  auto toggle_one = [](const LabelSets& X) {
    return has_label(X.pos(), 1)
               ? LabelSets(X.n(), X.diag_one() | label_bit(1), X.diag_zero())
               : LabelSets(X.n(), X.diag_one() & ~label_bit(1), X.diag_zero());
  };
  if (has_label(L.diag_one(), 1)) return toggle_one(pre_labels(toggle_one(L)));
  return LabelSets(n, label_bit(1) | reflect(L.diag_one()), reflect(L.pos() & ~label_bit(1)));
}

// Shape-level box correspondence between S(F) and S(F_pr): the kth box from
// the top of a region column lands on the box with row-number k of the row
// its column fills during pre-tableau construction.
class PrMap {
 public:
  explicit PrMap(const LabelSets& labels) : labels_(labels) {
    if (has_label(labels.diag_one(), 1)) {
      auto toggled = LabelSets(labels.n(), labels.diag_one() & ~label_bit(1), labels.diag_zero());
      PrMap inner(toggled);
      for (const auto& [a, b] : inner.fwd_) fwd_[iota_box(a)] = iota_box(b);
      return;
    }
    int n = labels.n();
    Region src(labels), dst(pre_labels(labels));
    auto link = [&](int col, int target_row) {
      const auto& boxes = src.column_boxes(col);
      const auto& slots = dst.row_by_numbering(target_row);
      require(boxes.size() == slots.size(), "pr: row/column size mismatch");
      for (std::size_t k = 0; k < boxes.size(); ++k) fwd_[boxes[k]] = slots[k];
    };
    auto ds = label_list(labels.diag_one());
    ds.push_back(n + 1);
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) link(ds[i], -(n + 2 - ds[i + 1]));
    for (int j : label_list(labels.diag_zero())) link(j, n + 2 - j);
  }

  Box operator()(Box b) const {
    auto it = fwd_.find(b);
    if (it == fwd_.end()) throw std::invalid_argument("pr: box outside region " + to_string(b));
    return it->second;
  }
  const std::map<Box, Box>& forward() const { return fwd_; }

 private:
  LabelSets labels_;
  std::map<Box, Box> fwd_;
};

inline PrMap pr_map(const LabelSets& labels) { return PrMap(labels); }

// c1 <_pr c2: compares box-numbers of the pr images.
inline bool pr_less(const LabelSets& labels, Box c1, Box c2) {
  PrMap pr(labels);
  Region dst(pre_labels(labels));
  return dst.box_number(pr(c1)) < dst.box_number(pr(c2));
}

// Inversion pairs of a trace: (i, j) with i < j where out i "comes before"
// out j. The order compares type-1 status of the pr images inside the
// pre-tableau of the transformed tableau, with ties broken by <_pr.
inline std::set<std::pair<int, int>> inversion_pairs(const PermutationTableau& t,
                                                     const Trace& trace) {
  TransformResult res = transform(t);
  if (!(res.trace == trace))
    throw std::invalid_argument("inversion_pairs: trace does not belong to this tableau");

  LabelSets pre_L = pre_labels(t.labels());
  PrMap pr(pre_L);                    // S(T_pr) -> S(T shape)
  Region back(pre_labels(pre_L));     // box numbers on the T side
  require(pre_labels(pre_L) == t.labels(), "pr shape does not close up");
  PartialFilling tp_pr = pre_filling(res.tableau.filling());
  require(tp_pr.labels() == t.labels(), "transformed pre-tableau has the wrong shape");
  Region tp_reg(tp_pr.labels());

  int k = trace.k();
  std::vector<bool> t1(static_cast<std::size_t>(k));
  std::vector<int> num(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Box img = pr(trace.steps[static_cast<std::size_t>(i)].out);
    t1[static_cast<std::size_t>(i)] = classify(tp_pr, tp_reg, img) == BoxType::T1;
    num[static_cast<std::size_t>(i)] = back.box_number(img);
  }

  std::set<std::pair<int, int>> inv;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      bool before = (t1[ii] && !t1[jj]) || (t1[ii] == t1[jj] && num[ii] < num[jj]);
      if (before) inv.insert({i + 1, j + 1});
    }
  return inv;
}

struct PsiOrder {
  std::vector<int> order;       // application order alpha_1..alpha_k (ordinals)
  std::vector<int> inv_counts;  // |Inv(T, psi_s)| for s = 0..l
};

// Rearranges the rule applications until no inversion pair sits in order:
// repeatedly take the earliest position whose ordinal opens an in-order
// inversion pair, and pull the smallest matching partner in front of it.
inline PsiOrder psi_order(const PermutationTableau& t, const Trace& trace) {
  auto inv = inversion_pairs(t, trace);
  int k = trace.k();
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i + 1;

  auto count_in_order = [&] {
    int c = 0;
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y)
        if (inv.contains({std::min(order[x], order[y]), std::max(order[x], order[y])}) &&
            order[x] < order[y])
          ++c;
    return c;
  };

  PsiOrder out;
  out.inv_counts.push_back(count_in_order());
  int guard = static_cast<int>(inv.size()) + 1;
  while (out.inv_counts.back() > 0) {
    require(guard-- > 0, "psi reordering failed to terminate");
    std::size_t i = 0, j = 0;
    bool found = false;
    for (std::size_t x = 0; x < order.size() && !found; ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y)
        if (order[x] < order[y] && inv.contains({order[x], order[y]})) {
          i = x;
          j = y;
          found = true;
          break;
        }
    require(found, "inversion count positive but no pair found");
    int moved = order[j];
    order.erase(order.begin() + static_cast<std::ptrdiff_t>(j));
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(i), moved);
    out.inv_counts.push_back(count_in_order());
  }
  out.order = order;
  return out;
}

// Replays phi_bullet . phi_in ... phi_in . phi_circ on the pre-tableau with
// the rule applications taken in the given order, checking that every
// application still moves the S between the originally recorded boxes (P2)
// and that the result equals the transform output (P1).
inline PartialFilling replay(const PermutationTableau& t, const Trace& trace,
                             const std::vector<int>& order) {
  if (has_label(t.labels().diag_one(), 1))
    throw std::domain_error("replay needs label 1 in a positive row");
  PartialFilling F = phi_circ(pre_filling(t.filling()));
  Region reg(F.labels());
  for (int x : order) {
    const TraceStep& orig = trace.steps.at(static_cast<std::size_t>(x - 1));
    TraceStep step = detail::apply_rule_inplace(F, reg, orig.in);
    require(step.out == orig.out, "replay: step " + std::to_string(x) + " moved S from " +
                                      to_string(step.out) + " instead of " + to_string(orig.out));
  }
  F = phi_bullet(F);
  require(F == transform(t).tableau.filling(), "replay result differs from the transform");
  return F;
}

struct InverseCheck {
  bool round_trip = false;      // transform(transform(t)) == t
  bool in_boxes_match = false;  // second run enters at pr(out alpha) in reverse psi order
  bool rules_paired = false;    // R1<->R5, R2<->R4, R3<->R3 between matched steps
  bool pass() const { return round_trip && in_boxes_match && rules_paired; }
  std::string detail;
};

inline Rule paired_rule(Rule r) {
  switch (r) {
    case Rule::R1: return Rule::R5;
    case Rule::R2: return Rule::R4;
    case Rule::R3: return Rule::R3;
    case Rule::R4: return Rule::R2;
    default: return Rule::R1;
  }
}

// Runs the transform twice and checks the structural relation between the
// two traces.
inline InverseCheck inverse_trace_check(const PermutationTableau& t) {
  if (has_label(t.labels().diag_one(), 1))
    throw std::domain_error("inverse_trace_check needs label 1 in a positive row");
  InverseCheck out;
  TransformResult first = transform(t);
  TransformResult second = transform(first.tableau);
  out.round_trip = second.tableau.filling() == t.filling();

  PsiOrder psi = psi_order(t, first.trace);
  PrMap pr(pre_labels(t.labels()));
  int k = first.trace.k();
  out.in_boxes_match = second.trace.k() == k;
  out.rules_paired = out.in_boxes_match;
  for (int j = 1; j <= k && (out.in_boxes_match || out.rules_paired); ++j) {
    int alpha = psi.order.at(static_cast<std::size_t>(k - j));
    const TraceStep& mate = first.trace.steps.at(static_cast<std::size_t>(alpha - 1));
    const TraceStep& step = second.trace.steps.at(static_cast<std::size_t>(j - 1));
    if (step.in != pr(mate.out)) {
      out.in_boxes_match = false;
      out.detail += "step " + std::to_string(j) + ": in " + to_string(step.in) + " expected " +
                    to_string(pr(mate.out)) + "\n";
    }
    if (step.rule != paired_rule(mate.rule)) {
      out.rules_paired = false;
      out.detail += "step " + std::to_string(j) + ": rule " + to_string(step.rule) +
                    " expected " + to_string(paired_rule(mate.rule)) + "\n";
    }
  }
  if (!out.round_trip)
    out.detail += "double transform differs\nfirst trace:\n" + to_text(first.trace) +
                  "second trace:\n" + to_text(second.trace);
  return out;
}

}  // namespace ptb
