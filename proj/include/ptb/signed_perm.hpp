#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptb/core.hpp"
#include "ptb/tableau.hpp"  // Family

namespace ptb {

// A signed permutation of [n], stored as its window (sigma(1),...,sigma(n));
// sigma(-i) = -sigma(i) is implied. Type A means all window values positive,
// type D an even number of negatives.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
    int n = static_cast<int>(w_.size());
    if (n < 1) throw std::invalid_argument("empty window");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w_) {
      int a = v < 0 ? -v : v;
      if (v == 0 || a > n || seen[static_cast<std::size_t>(a)])
        throw std::invalid_argument("window is not a signed permutation");
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
  }

  int n() const { return static_cast<int>(w_.size()); }
  // sigma(i) for i in [+-n]
  int operator()(int i) const {
    return i > 0 ? w_[static_cast<std::size_t>(i - 1)] : -w_[static_cast<std::size_t>(-i - 1)];
  }
  const std::vector<int>& window() const { return w_; }
  bool all_positive() const {
    return std::all_of(w_.begin(), w_.end(), [](int v) { return v > 0; });
  }

  // Window notation: comma-separated signed values, e.g. "-2,1,3".
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
    return os.str();
  }
  static SignedPermutation parse(const std::string& text) {
    std::vector<int> w;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        w.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad window token '" + tok + "'");
      }
    }
    return SignedPermutation(std::move(w));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> w_;
};

inline int wex(const SignedPermutation& s) {
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    if (s(i) >= i) ++c;
  return c;
}

inline int neg(const SignedPermutation& s) {
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    if (s(i) < 0) ++c;
  return c;
}

inline int fwex(const SignedPermutation& s) { return 2 * wex(s) + neg(s); }

// Crossings of a signed permutation: ordered pairs (i,j) in [n]x[n] with
//   i < j <= sigma(i) < sigma(j)   or
//   -i < j <= -sigma(i) < sigma(j) or
//   i > j > sigma(i) > sigma(j).
// The three clauses are mutually exclusive; that is asserted while counting.
inline int crs_b(const SignedPermutation& s) {
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) {
      int si = s(i), sj = s(j);
      int hit = 0;
      if (i < j && j <= si && si < sj) ++hit;
      if (-i < j && j <= -si && -si < sj) ++hit;
      if (i > j && j > si && si > sj) ++hit;
      require(hit <= 1, "crossing clauses overlap");
      c += hit;
    }
  return c;
}

// Type A crossings/alignments; the window must be an ordinary permutation.
inline int crs_a(const SignedPermutation& s) {
  if (!s.all_positive()) throw std::domain_error("crs_a needs a positive window");
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) {
      int si = s(i), sj = s(j);
      if ((i < j && j <= si && si < sj) || (si < sj && sj < i && i < j)) ++c;
    }
  return c;
}

inline int al_a(const SignedPermutation& s) {
  if (!s.all_positive()) throw std::domain_error("al_a needs a positive window");
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) {
      int si = s(i), sj = s(j);
      if ((i < j && j <= sj && sj < si) || (sj < si && si < i && i < j) ||
          (i <= si && si < sj && sj < j) || (si < i && i < j && j <= sj))
        ++c;
    }
  return c;
}

inline int des(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++c;
  return c;
}
inline int des(const SignedPermutation& s) { return des(s.window()); }

// Flag descents: 2 des + (first entry negative).
inline int fdes(const std::vector<int>& w) { return 2 * des(w) + (w.front() < 0 ? 1 : 0); }
inline int fdes(const SignedPermutation& s) { return fdes(s.window()); }

// ddes (Biagioli): des + neg - (value 1 missing from the window).
inline int ddes(const SignedPermutation& s) {
  bool has_one = std::find(s.window().begin(), s.window().end(), 1) != s.window().end();
  return des(s) + neg(s) - (has_one ? 0 : 1);
}

// Ddes (Biagioli-Caselli): fdes of the window with the last value replaced by
// its absolute value.
inline int Ddes(const SignedPermutation& s) {
  std::vector<int> w = s.window();
  w.back() = w.back() < 0 ? -w.back() : w.back();
  return fdes(w);
}

// fwex_D: fwex + (first window value negative).
inline int fwex_d(const SignedPermutation& s) {
  return fwex(s) + (s(1) < 0 ? 1 : 0);
}

struct TypeDStats {
  int des = 0, fdes = 0, ddes = 0, Ddes = 0, fwex_d = 0;
};

inline TypeDStats type_d_stats(const SignedPermutation& s) {
  return {des(s), fdes(s), ddes(s), Ddes(s), fwex_d(s)};
}

struct PermStats {
  int wex = 0, neg = 0, fwex = 0, crs_b = 0;
  std::optional<int> crs_a, al_a;  // positive windows only
  TypeDStats d;
};

inline PermStats perm_stats(const SignedPermutation& s) {
  PermStats st;
  st.wex = wex(s);
  st.neg = neg(s);
  st.fwex = fwex(s);
  st.crs_b = crs_b(s);
  if (s.all_positive()) {
    st.crs_a = crs_a(s);
    st.al_a = al_a(s);
  }
  st.d = type_d_stats(s);
  return st;
}

// --- enumeration ------------------------------------------------------------

namespace detail {
template <typename F>
void for_each_signing(const std::vector<int>& base, Family fam, F&& fn) {
  int n = static_cast<int>(base.size());
  if (fam == Family::A) {
    fn(SignedPermutation(base));
    return;
  }
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (fam == Family::D && std::popcount(m) % 2 != 0) continue;
    std::vector<int> w = base;
    for (int i = 0; i < n; ++i)
      if (m & (Mask{1} << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
    fn(SignedPermutation(std::move(w)));
  }
}
}  // namespace detail

// Streams the n! / 2^n n! / 2^(n-1) n! members of the family exactly once:
// base permutations in lexicographic order, sign patterns in mask order.
template <typename F>
void for_each_signed_perm(int n, Family fam, F&& fn) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    detail::for_each_signing(base, fam, fn);
  } while (std::next_permutation(base.begin(), base.end()));
}

// Shards for parallel accumulation: one shard per absolute first value of the
// base permutation.
template <typename F>
void for_each_signed_perm_in_shard(int n, Family fam, int first, F&& fn) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> base(static_cast<std::size_t>(n));
  base[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), base.begin() + 1);
    detail::for_each_signing(base, fam, fn);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace ptb
