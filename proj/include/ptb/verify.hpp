#pragma once

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ptb/poly.hpp"
#include "ptb/pr.hpp"

namespace ptb {

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  explicit CheckOutcome(std::string n) : name(std::move(n)) {}

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long expected_count(int n, Family fam) {
  switch (fam) {
    case Family::A: return factorial(n);
    case Family::B: return factorial(n) << n;
    default: return factorial(n) << (n - 1);
  }
}

inline long long count_tableaux(int n, Family fam, int jobs = 1) {
  auto shards = tableau_shards(n, fam);
  std::vector<long long> partial(shards.size(), 0);
  run_sharded(static_cast<int>(shards.size()), jobs, [&](int s) {
    for_each_tableau_in_shard(n, fam, shards[static_cast<std::size_t>(s)],
                              [&](const PermutationTableau&) { ++partial[static_cast<std::size_t>(s)]; });
  });
  long long total = 0;
  for (long long c : partial) total += c;
  return total;
}

inline CheckOutcome verify_counts(int n, int jobs = 1) {
  CheckOutcome out{"counts"};
  for (Family fam : {Family::A, Family::B, Family::D}) {
    long long got = count_tableaux(n, fam, jobs);
    long long want = expected_count(n, fam);
    if (got != want)
      out.fail("family " + to_string(fam) + " n=" + std::to_string(n) + ": " +
               std::to_string(got) + " != " + std::to_string(want));
  }
  return out;
}

namespace detail {
template <typename PerTableau>
CheckOutcome sweep_type_b(const std::string& name, int n, int jobs, PerTableau&& per) {
  CheckOutcome out{name};
  auto shards = tableau_shards(n, Family::B);
  std::vector<std::vector<std::string>> problems(shards.size());
  run_sharded(static_cast<int>(shards.size()), jobs, [&](int s) {
    auto& bad = problems[static_cast<std::size_t>(s)];
    for_each_tableau_in_shard(n, Family::B, shards[static_cast<std::size_t>(s)],
                              [&](const PermutationTableau& t) {
                                try {
                                  per(t, bad);
                                } catch (const std::exception& e) {
                                  bad.push_back(std::string("transform failed: ") + e.what() +
                                                "\n" + render(t.filling()));
                                }
                              });
  });
  for (const auto& p : problems)
    for (const auto& msg : p) out.fail(msg);
  return out;
}
}  // namespace detail

// Double application returns the original tableau; output validity and S
// conservation are enforced inside transform itself.
inline CheckOutcome verify_involution(int n, int jobs = 1) {
  return detail::sweep_type_b("involution", n, jobs,
                              [](const PermutationTableau& t, std::vector<std::string>& bad) {
                                TransformResult r = transform(t);
                                if (!(transform(r.tableau).tableau.filling() == t.filling()))
                                  bad.push_back("double transform differs for " +
                                                render(t.filling()));
                              });
}

// The three statistics equalities: diag + [1 positive] preserved, so
// preserved, and the two k = 2 row + diag values summing to 2n+1.
inline CheckOutcome verify_statistics_contract(int n, int jobs = 1) {
  return detail::sweep_type_b(
      "contract", n, jobs, [n](const PermutationTableau& t, std::vector<std::string>& bad) {
        const PermutationTableau u = transform(t).tableau;
        auto chi = [](const PermutationTableau& x) {
          return has_label(x.labels().pos(), 1) ? 1 : 0;
        };
        if (u.diag() + chi(u) != t.diag() + chi(t))
          bad.push_back("diag+chi not preserved for " + render(t.filling()));
        if (u.so() != t.so()) bad.push_back("so not preserved for " + render(t.filling()));
        if ((2 * t.row_pos() + t.diag()) + (2 * u.row_pos() + u.diag()) != 2 * n + 1)
          bad.push_back("k-sum violated for " + render(t.filling()));
      });
}

// Type A restriction: row + row' = n+1 and so/zero/two preserved.
inline CheckOutcome verify_transform_a(int n) {
  CheckOutcome out{"transform_a"};
  for_each_tableau(n, Family::A, [&](const PermutationTableau& t) {
    PermutationTableau u = transform_a(t);
    TableauStats st = stats(t), su = stats(u);
    if (st.row_pos + su.row_pos != n + 1) out.fail("row+row' != n+1");
    if (st.so != su.so) out.fail("so changed");
    if (*st.zero != *su.zero) out.fail("zero changed");
    if (*st.two != *su.two) out.fail("two changed");
    // rectangle identity r(n-r) = (n-r) + so + two + zero on both sides
    int r = st.row_pos, w = n - r;
    if (r * w != w + st.so + *st.two + *st.zero) out.fail("rectangle identity violated");
  });
  return out;
}

// Type D restriction: family closure, diag and so preserved, k sums to 2n+2
// on the positive side and 2n on the boundary side.
inline CheckOutcome verify_transform_d(int n) {
  CheckOutcome out{"transform_d"};
  for_each_tableau(n, Family::D, [&](const PermutationTableau& t) {
    PermutationTableau u = transform_d(t);
    if (u.diag() % 2 != 0) out.fail("output left the family");
    if (u.diag() != t.diag()) out.fail("diag changed");
    if (u.so() != t.so()) out.fail("so changed");
    int sum = (2 * t.row_pos() + t.diag()) + (2 * u.row_pos() + u.diag());
    int want = has_label(t.labels().pos(), 1) ? 2 * n + 2 : 2 * n;
    if (sum != want) out.fail("k-sum violated");
  });
  return out;
}

inline CheckOutcome verify_bstar(int n, int jobs = 1) {
  CheckOutcome out{"bstar"};
  KPolyMap from_t = bstar(n, Source::Tableaux, jobs);
  KPolyMap from_p = bstar(n, Source::Perms, jobs);
  if (!maps_equal(from_t, from_p)) out.fail("tableau and permutation sources disagree");
  for (Source src : {Source::Tableaux, Source::Perms}) {
    SymmetryReport rep = check_symmetry(src == Source::Tableaux ? from_t : from_p, "bstar", n,
                                        [n](int k) { return 2 * n + 1 - k; });
    if (!rep.pass) out.fail("symmetry fails from " +
                            std::string(src == Source::Tableaux ? "tableaux" : "perms"));
  }
  BigInt total = 0;
  for (const auto& [k, p] : from_t) total += p.at_ones();
  if (total != BigInt(expected_count(n, Family::B))) out.fail("total != 2^n n!");
  return out;
}

inline CheckOutcome verify_ehat(int n, int jobs = 1) {
  CheckOutcome out{"ehat"};
  KPolyMap e = ehat(n, jobs);
  if (!check_symmetry(e, "ehat", n, [n](int k) { return n + 1 - k; }).pass)
    out.fail("symmetry fails");
  BigInt total = 0;
  for (const auto& [k, p] : e) total += p.at_ones();
  if (total != BigInt(factorial(n))) out.fail("total != n!");
  return out;
}

inline CheckOutcome verify_dhat(int n, int jobs = 1) {
  CheckOutcome out{"dhat"};
  KPolyMap d = dhat(n, jobs);
  if (!check_symmetry(d, "dhat", n, [n](int k) { return n + 1 - k; }).pass)
    out.fail("symmetry fails");
  // specializing p = r = 1 recovers the q-Eulerian numbers
  KPolyMap e = ehat(n, jobs);
  for (const auto& [k, p] : d)
    if (!(p.specialize_at_one(2).specialize_at_one(0) == e.at(k)))
      out.fail("p=r=1 specialization differs from ehat at k=" + std::to_string(k));
  return out;
}

inline CheckOutcome verify_eulerian_b(int n, int jobs = 1) {
  CheckOutcome out{"eB"};
  KPolyMap e = eulerian_b(n, jobs);
  if (!check_symmetry(e, "eB", n, [n](int k) { return n - k; }).pass) out.fail("symmetry fails");
  BigInt total = 0;
  for (const auto& [k, p] : e) total += p.at_ones();
  if (total != BigInt(expected_count(n, Family::B))) out.fail("total != 2^n n!");
  return out;
}

inline CheckOutcome verify_eulerian_d(int n, int jobs = 1) {
  CheckOutcome out{"eD"};
  KPolyMap from_t = eulerian_d(n, Source::Tableaux, jobs);
  KPolyMap from_p = eulerian_d(n, Source::Perms, jobs);
  if (!maps_equal(from_t, from_p)) out.fail("tableau and permutation sources disagree");
  for (int k = 2; k <= 2 * n; ++k)
    if (!(from_t.at(k) == from_t.at(2 * n + 2 - k)))
      out.fail("symmetry fails at k=" + std::to_string(k));
  if (!from_t.at(1).zero() || !from_t.at(2 * n + 1).zero())
    out.fail("extreme fibers are not empty");
  BigInt total = 0;
  for (const auto& [k, p] : from_t) total += p.at_ones();
  if (total != BigInt(expected_count(n, Family::D))) out.fail("total != 2^(n-1) n!");
  return out;
}

// Distribution-level counterpart of the tableau/permutation bijection:
// (row, diag, so, [1 positive]) over type B tableaux matches
// (wex, neg, crs, [sigma(1)>0]) over signed permutations, and the type A
// triples (row, so, zero+two) match (wex, crs, al).
inline CheckOutcome verify_phi_distribution(int n) {
  CheckOutcome out{"phi"};
  using Tup = std::tuple<int, int, int, int>;
  std::map<Tup, long long> lhs, rhs;
  for_each_tableau(n, Family::B, [&](const PermutationTableau& t) {
    ++lhs[{t.row_pos(), t.diag(), t.so(), has_label(t.labels().pos(), 1) ? 1 : 0}];
  });
  for_each_signed_perm(n, Family::B, [&](const SignedPermutation& s) {
    ++rhs[{wex(s), neg(s), crs_b(s), s(1) > 0 ? 1 : 0}];
  });
  if (lhs != rhs) out.fail("type B tuple distributions differ");

  using Tri = std::tuple<int, int, int>;
  std::map<Tri, long long> la, ra;
  for_each_tableau(n, Family::A, [&](const PermutationTableau& t) {
    TableauStats s = stats(t);
    ++la[{s.row_pos, s.so, *s.zero + *s.two}];
  });
  for_each_signed_perm(n, Family::A, [&](const SignedPermutation& s) {
    ++ra[{wex(s), crs_a(s), al_a(s)}];
  });
  if (la != ra) out.fail("type A triple distributions differ");
  return out;
}

// Shape-level pr properties over every labeling of length n: the double-pr
// round trip and the four ordering relations between neighbours.
inline CheckOutcome verify_pr_shapes(int n) {
  CheckOutcome out{"pr_shapes"};
  for (const TableauShard& sh : tableau_shards(n, Family::B)) {
    LabelSets L(n, sh.diag_one, sh.diag_zero);
    Region reg(L);
    PrMap pr(L);
    LabelSets P = pre_labels(L);
    PrMap pr2(P);
    Region preg(P);
    require(pre_labels(P) == L, "pre labels do not close up");

    // each region row lands in a single column of the pre region
    for (const auto& [r, boxes] : [&] {
      std::map<int, std::vector<Box>> rows;
      for (const Box& b : reg.boxes()) rows[b.row].push_back(b);
      return rows;
    }())
      for (std::size_t i = 1; i < boxes.size(); ++i)
        if (pr(boxes[i]).col != pr(boxes[0]).col) out.fail("row image spread over columns");

    for (const Box& b : reg.boxes())
      if (pr2(pr(b)) != b) out.fail("double pr is not the identity at " + to_string(b));

    for (const Box& c1 : reg.boxes())
      for (const Box& c2 : reg.boxes()) {
        if (c1 == c2) continue;
        if (c1.row == c2.row && c1.col < c2.col) {
          bool less = preg.box_number(pr(c1)) < preg.box_number(pr(c2));
          if (has_label(L.diag_one(), c1.col)) {
            if (less) out.fail("boundary same-row order violated");
            if (!preg.relevant(pr(c1), pr(c2))) out.fail("pr image not relevant");
          } else if (!less) {
            out.fail("interior same-row order violated");
          }
        }
        if (c1.col == c2.col && c1.row < c2.row) {
          bool less = preg.box_number(pr(c1)) < preg.box_number(pr(c2));
          bool rless = preg.row_number(pr(c1)) < preg.row_number(pr(c2));
          if (reg.relevant(c1, c2)) {
            if (!less || !rless) out.fail("relevant same-column order violated");
          } else {
            // the row-numbering comparison flips only in the box-numbering;
            // within the row the image of the upper box may still come first
            if (less) out.fail("non-relevant same-column order violated");
          }
        }
      }
  }
  return out;
}

// Trace-level pr properties over the positive half of the family: out <_pr in
// per step, psi replay (P1/P2) and the inverse-run box/rule pairing.
inline CheckOutcome verify_pr_traces(int n) {
  CheckOutcome out{"pr_traces"};
  for_each_tableau(n, Family::B, [&](const PermutationTableau& t) {
    if (has_label(t.labels().diag_one(), 1)) return;
    try {
      TransformResult r = transform(t);
      LabelSets preL = pre_labels(t.labels());
      PrMap pr(preL);
      Region back(t.labels());
      for (const TraceStep& s : r.trace.steps)
        if (!(back.box_number(pr(s.out)) < back.box_number(pr(s.in))))
          out.fail("out is not <_pr in at step " + std::to_string(s.ordinal));
      PsiOrder psi = psi_order(t, r.trace);
      replay(t, r.trace, psi.order);  // asserts P1 and P2
      for (std::size_t s = 1; s < psi.inv_counts.size(); ++s)
        if (psi.inv_counts[s] >= psi.inv_counts[s - 1])
          out.fail("psi step did not reduce the inversion count");
      InverseCheck inv = inverse_trace_check(t);
      if (!inv.pass()) out.fail("inverse trace check failed:\n" + inv.detail);
    } catch (const std::exception& e) {
      out.fail(std::string("pr machinery failed: ") + e.what());
    }
  });
  return out;
}

inline CheckOutcome verify_conjecture(int n, int jobs = 1) {
  CheckOutcome out{"conjecture"};
  ConjectureResult r = conjecture_check(n, jobs);
  if (!r.equal) out.fail("histograms differ at n=" + std::to_string(n));
  return out;
}

}  // namespace ptb
