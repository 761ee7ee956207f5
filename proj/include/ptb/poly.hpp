#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "ptb/involution.hpp"
#include "ptb/signed_perm.hpp"
#include "ptb/tableau.hpp"
#include "ptb/util.hpp"

namespace ptb {

using BigInt = boost::multiprecision::cpp_int;

// Exact sparse multivariate polynomial: exponent vector -> integer
// coefficient, zero coefficients never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  bool zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }

  void add(std::vector<int> exps, const BigInt& coeff = 1) {
    if (static_cast<int>(exps.size()) != arity_) throw std::invalid_argument("arity mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }

  BigInt at_ones() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
  }

  // Substitutes 1 for one variable, dropping it from the exponent vectors.
  MultiPoly specialize_at_one(int var) const {
    MultiPoly out(arity_ - 1);
    for (const auto& [e, c] : terms_) {
      std::vector<int> f;
      f.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != var) f.push_back(e[i]);
      out.add(std::move(f), c);
    }
    return out;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*" << vars.at(i);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int arity_;
  std::map<std::vector<int>, BigInt> terms_;
};

// k-indexed family of polynomials. Every k in the declared range is present,
// empty fibers as explicit zero polynomials, so symmetry comparisons never
// skip a k.
using KPolyMap = std::map<int, MultiPoly>;

inline KPolyMap zero_fibers(int k_min, int k_max, int arity) {
  KPolyMap m;
  for (int k = k_min; k <= k_max; ++k) m.emplace(k, MultiPoly(arity));
  return m;
}

inline void merge(KPolyMap& into, const KPolyMap& from) {
  for (const auto& [k, p] : from) {
    auto it = into.find(k);
    require(it != into.end(), "fiber " + std::to_string(k) + " outside the declared range");
    it->second += p;
  }
}

enum class Source { Tableaux, Perms };

namespace detail {

template <typename PerTableau>
KPolyMap accumulate_tableaux(int n, Family fam, int k_min, int k_max, int arity, int jobs,
                             PerTableau&& per) {
  auto shards = tableau_shards(n, fam);
  std::vector<KPolyMap> partial(shards.size(), zero_fibers(k_min, k_max, arity));
  run_sharded(static_cast<int>(shards.size()), jobs, [&](int s) {
    for_each_tableau_in_shard(n, fam, shards[static_cast<std::size_t>(s)],
                              [&](const PermutationTableau& t) {
                                per(t, partial[static_cast<std::size_t>(s)]);
                              });
  });
  KPolyMap out = zero_fibers(k_min, k_max, arity);
  for (const KPolyMap& p : partial) merge(out, p);
  return out;
}

template <typename PerPerm>
KPolyMap accumulate_perms(int n, Family fam, int k_min, int k_max, int arity, int jobs,
                          PerPerm&& per) {
  std::vector<KPolyMap> partial(static_cast<std::size_t>(n), zero_fibers(k_min, k_max, arity));
  run_sharded(n, jobs, [&](int s) {
    for_each_signed_perm_in_shard(n, fam, s + 1, [&](const SignedPermutation& sp) {
      per(sp, partial[static_cast<std::size_t>(s)]);
    });
  });
  KPolyMap out = zero_fibers(k_min, k_max, arity);
  for (const KPolyMap& p : partial) merge(out, p);
  return out;
}

}  // namespace detail

// B*_{n,k}(t,q): over tableaux, weight t^(diag + [1 positive]) q^so grouped
// by k = 2 row + diag; over signed permutations, weight
// t^(neg + [sigma(1)>0]) q^crs grouped by k = fwex. The two agree termwise.
inline KPolyMap bstar(int n, Source src, int jobs = 1) {
  if (src == Source::Tableaux)
    return detail::accumulate_tableaux(
        n, Family::B, 1, 2 * n, 2, jobs, [](const PermutationTableau& t, KPolyMap& acc) {
          int k = 2 * t.row_pos() + t.diag();
          int te = t.diag() + (has_label(t.labels().pos(), 1) ? 1 : 0);
          acc.at(k).add({te, t.so()});
        });
  return detail::accumulate_perms(
      n, Family::B, 1, 2 * n, 2, jobs, [](const SignedPermutation& s, KPolyMap& acc) {
        int k = fwex(s);
        int te = neg(s) + (s(1) > 0 ? 1 : 0);
        acc.at(k).add({te, crs_b(s)});
      });
}

// Williams' q-Eulerian numbers E-hat_{n,k}(q) = sum over wex = k of q^crs.
inline KPolyMap ehat(int n, int jobs = 1) {
  return detail::accumulate_perms(n, Family::A, 1, n, 1, jobs,
                                  [](const SignedPermutation& s, KPolyMap& acc) {
                                    acc.at(wex(s)).add({crs_a(s)});
                                  });
}

// D-hat_{k,n}(p,q,r): type A tableaux by positive-row count, weight
// p^zero q^so r^two.
inline KPolyMap dhat(int n, int jobs = 1) {
  return detail::accumulate_tableaux(n, Family::A, 1, n, 3, jobs,
                                     [](const PermutationTableau& t, KPolyMap& acc) {
                                       TableauStats s = stats(t);
                                       acc.at(s.row_pos).add({*s.zero, s.so, *s.two});
                                     });
}

// Type B q-Eulerian numbers grouped by floor(fwex / 2).
inline KPolyMap eulerian_b(int n, int jobs = 1) {
  return detail::accumulate_perms(n, Family::B, 0, n, 1, jobs,
                                  [](const SignedPermutation& s, KPolyMap& acc) {
                                    acc.at(fwex(s) / 2).add({crs_b(s)});
                                  });
}

// Type D (t,q)-Eulerian numbers: over tableaux, t^diag q^so grouped by
// k = diag + 2 row + [1 on a boundary column]; over permutations with an even
// number of negatives, t^neg q^crs grouped by k = fwex + [sigma(1) < 0].
inline KPolyMap eulerian_d(int n, Source src, int jobs = 1) {
  if (src == Source::Tableaux)
    return detail::accumulate_tableaux(
        n, Family::D, 1, 2 * n + 1, 2, jobs, [](const PermutationTableau& t, KPolyMap& acc) {
          int k = t.diag() + 2 * t.row_pos() + (has_label(t.labels().diag_one(), 1) ? 1 : 0);
          acc.at(k).add({t.diag(), t.so()});
        });
  return detail::accumulate_perms(
      n, Family::D, 1, 2 * n + 1, 2, jobs, [](const SignedPermutation& s, KPolyMap& acc) {
        acc.at(fwex_d(s)).add({neg(s), crs_b(s)});
      });
}

// --- verdicts ----------------------------------------------------------------

struct SymmetryReport {
  std::string id;
  int n = 0;
  struct Item {
    int k = 0;
    int partner = 0;
    bool equal = false;
    MultiPoly left;
    MultiPoly right;
  };
  std::vector<Item> items;
  bool pass = true;
};

// Exact per-fiber comparison of P_k against P_partner(k); every k in the map
// whose partner also lies in the map is compared once.
template <typename PartnerFn>
SymmetryReport check_symmetry(const KPolyMap& polys, const std::string& id, int n,
                              PartnerFn&& partner) {
  SymmetryReport rep;
  rep.id = id;
  rep.n = n;
  for (const auto& [k, p] : polys) {
    int k2 = partner(k);
    auto it = polys.find(k2);
    if (it == polys.end() || k2 < k) continue;
    bool eq = p == it->second;
    rep.items.push_back({k, k2, eq, p, it->second});
    rep.pass = rep.pass && eq;
  }
  return rep;
}

inline SymmetryReport check_bstar_symmetry(int n, Source src = Source::Tableaux, int jobs = 1) {
  return check_symmetry(bstar(n, src, jobs), "bstar", n, [n](int k) { return 2 * n + 1 - k; });
}

inline bool maps_equal(const KPolyMap& a, const KPolyMap& b) {
  return a == b;
}

// Histograms of fwex_D, Ddes + 2 and ddes + 2 over the even-negative signed
// permutations; the three are conjecturally equidistributed.
struct ConjectureResult {
  std::map<int, long long> fwex_d, ddes2, Ddes2;
  bool equal = false;
};

inline ConjectureResult conjecture_check(int n, int jobs = 1) {
  struct Hists {
    std::map<int, long long> a, b, c;
  };
  std::vector<Hists> partial(static_cast<std::size_t>(n));
  run_sharded(n, jobs, [&](int s) {
    Hists& h = partial[static_cast<std::size_t>(s)];
    for_each_signed_perm_in_shard(n, Family::D, s + 1, [&](const SignedPermutation& sp) {
      ++h.a[fwex_d(sp)];
      ++h.b[ddes(sp) + 2];
      ++h.c[Ddes(sp) + 2];
    });
  });
  ConjectureResult out;
  for (const Hists& h : partial) {
    for (auto [k, v] : h.a) out.fwex_d[k] += v;
    for (auto [k, v] : h.b) out.ddes2[k] += v;
    for (auto [k, v] : h.c) out.Ddes2[k] += v;
  }
  out.equal = out.fwex_d == out.ddes2 && out.fwex_d == out.Ddes2;
  return out;
}

// --- export ------------------------------------------------------------------

inline nlohmann::ordered_json poly_to_json(const std::string& which, int n,
                                           const std::vector<std::string>& vars,
                                           const KPolyMap& polys) {
  nlohmann::ordered_json j;
  j["which"] = which;
  j["n"] = n;
  j["vars"] = vars;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, p] : polys) {
    nlohmann::ordered_json pk;
    pk["k"] = k;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
      terms.push_back({{"exponents", e}, {"coeff", c.str()}});
    pk["terms"] = std::move(terms);
    arr.push_back(std::move(pk));
  }
  j["polys"] = std::move(arr);
  return j;
}

// CSV table, one row per (k, exponent vector).
inline std::string poly_to_csv(const std::vector<std::string>& vars, const KPolyMap& polys) {
  std::ostringstream os;
  os << "k";
  for (const auto& v : vars) os << "," << v;
  os << ",coeff\n";
  for (const auto& [k, p] : polys)
    for (const auto& [e, c] : p.terms()) {
      os << k;
      for (int x : e) os << "," << x;
      os << "," << c.str() << "\n";
    }
  return os.str();
}

}  // namespace ptb
