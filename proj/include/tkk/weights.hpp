#pragma once

// Weights of the orthogonal algebras B_m / D_m in epsilon-coordinates.
//
// Every weight occurring here is integral or half-integral, so coordinates
// are stored doubled: c2[i] == 2*lambda_i.  All entries of one weight share
// parity (all even or all odd).

#include "tkk/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

enum class Family : std::uint8_t { B, D };

struct SimpleLieType {
  Family family;
  int rank;

  bool operator==(const SimpleLieType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator!=(const SimpleLieType& o) const { return !(*this == o); }

  // so_n for n = 2m+1 (B_m) or n = 2m (D_m).
  int so_n() const { return family == Family::B ? 2 * rank + 1 : 2 * rank; }

  static SimpleLieType B(int m) {
    if (m < 1) throw std::domain_error("B_m needs rank >= 1");
    return {Family::B, m};
  }
  static SimpleLieType D(int m) {
    if (m < 3) throw std::domain_error("D_m needs rank >= 3");
    return {Family::D, m};
  }
  static SimpleLieType so(int n) {
    if (n < 3) throw std::domain_error("so_n needs n >= 3");
    if (n % 2) return B(n / 2);
    return D(n / 2);
  }
  std::string str() const {
    return (family == Family::B ? std::string("B") : std::string("D")) +
           std::to_string(rank);
  }
};

// Doubled epsilon-coordinates.
struct Weight {
  std::vector<int> c2;

  Weight() = default;
  explicit Weight(std::vector<int> doubled) : c2(std::move(doubled)) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(c2.size()); }

  bool operator==(const Weight& o) const { return c2 == o.c2; }
  bool operator!=(const Weight& o) const { return c2 != o.c2; }
  bool operator<(const Weight& o) const { return c2 < o.c2; }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c2.size(); ++i) r.c2[i] += o.c2[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c2.size(); ++i) r.c2[i] -= o.c2[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.c2) x = -x;
    return r;
  }

  bool is_zero() const {
    return std::all_of(c2.begin(), c2.end(), [](int x) { return x == 0; });
  }

  // All coordinates must share integrality class.
  bool parity_consistent() const {
    if (c2.empty()) return true;
    int par = c2[0] & 1;
    for (int x : c2)
      if ((x & 1) != par) return false;
    return true;
  }
  bool half_integral() const { return !c2.empty() && (c2[0] & 1); }

  // First epsilon-coordinate as exact rational; for a dominant weight this is
  // the h-level of L(lambda).
  Rat eps1() const { return c2.empty() ? Rat(0) : Rat(c2[0], 2); }

  std::vector<Rat> as_rationals() const {
    std::vector<Rat> out;
    out.reserve(c2.size());
    for (int x : c2) out.emplace_back(x, 2);
    return out;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c2.size(); ++i) {
      if (i) s += ",";
      if (c2[i] % 2 == 0)
        s += std::to_string(c2[i] / 2);
      else
        s += std::to_string(c2[i]) + "/2";
    }
    return s + ")";
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w.c2) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline bool is_dominant(const SimpleLieType& t, const Weight& w) {
  if (w.rank() != t.rank || !w.parity_consistent()) return false;
  const auto& c = w.c2;
  for (int i = 0; i + 1 < t.rank; ++i)
    if (c[i] < c[i + 1]) return false;
  if (t.family == Family::B) return c.empty() || c.back() >= 0;
  // D: lambda_{m-1} >= |lambda_m|
  if (t.rank >= 2 && c[t.rank - 2] < std::abs(c[t.rank - 1])) return false;
  return true;
}

inline void check_dominant(const SimpleLieType& t, const Weight& w) {
  if (!is_dominant(t, w))
    throw std::domain_error("weight " + w.str() + " is not dominant for " + t.str());
}

// rho, doubled: B_m -> (2m-1, 2m-3, ..., 1); D_m -> (2m-2, ..., 2, 0).
inline Weight rho_doubled(const SimpleLieType& t) {
  std::vector<int> c(t.rank);
  for (int i = 0; i < t.rank; ++i)
    c[i] = (t.family == Family::B) ? 2 * (t.rank - i) - 1 : 2 * (t.rank - 1 - i);
  return Weight(std::move(c));
}

// Positive roots in doubled coordinates.
inline std::vector<Weight> positive_roots(const SimpleLieType& t) {
  std::vector<Weight> roots;
  const int m = t.rank;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> a(m, 0), b(m, 0);
      a[i] = 2; a[j] = -2;
      b[i] = 2; b[j] = 2;
      roots.emplace_back(std::move(a));
      roots.emplace_back(std::move(b));
    }
  if (t.family == Family::B)
    for (int i = 0; i < m; ++i) {
      std::vector<int> a(m, 0);
      a[i] = 2;
      roots.emplace_back(std::move(a));
    }
  return roots;
}

// Simple roots: B_m: e1-e2, ..., e_{m-1}-e_m, e_m.
//               D_m: e1-e2, ..., e_{m-1}-e_m, e_{m-1}+e_m.
inline std::vector<Weight> simple_roots(const SimpleLieType& t) {
  std::vector<Weight> roots;
  const int m = t.rank;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> a(m, 0);
    a[i] = 2; a[i + 1] = -2;
    roots.emplace_back(std::move(a));
  }
  if (t.family == Family::B) {
    std::vector<int> a(m, 0);
    a[m - 1] = 2;
    roots.emplace_back(std::move(a));
  } else {
    std::vector<int> a(m, 0);
    a[m - 2] = 2; a[m - 1] = 2;
    roots.emplace_back(std::move(a));
  }
  return roots;
}

// Inner product of doubled weights: equals 4*(u,v) in the standard form.
inline long long dot2(const Weight& u, const Weight& v) {
  long long s = 0;
  for (size_t i = 0; i < u.c2.size(); ++i)
    s += static_cast<long long>(u.c2[i]) * v.c2[i];
  return s;
}

// Make xi dominant by a Weyl group element; returns det(w) in {1,-1}, or 0 if
// xi lies on a wall (has a nontrivial stabiliser).
inline int dominantize(const SimpleLieType& t, Weight& xi) {
  auto& c = xi.c2;
  const int m = t.rank;
  int sign = 1;
  int flips = 0;
  for (int i = 0; i < m; ++i) {
    if (c[i] < 0) {
      c[i] = -c[i];
      ++flips;
    }
  }
  // bubble-sort parity for the permutation part
  for (int i = 0; i < m; ++i)
    for (int j = 0; j + 1 < m - i; ++j)
      if (c[j] < c[j + 1]) {
        std::swap(c[j], c[j + 1]);
        sign = -sign;
      }
  for (int i = 0; i + 1 < m; ++i)
    if (c[i] == c[i + 1]) return 0;
  if (t.family == Family::B) {
    if (!c.empty() && c[m - 1] == 0) return 0;
    if (flips & 1) sign = -sign;
  } else {
    // D: only even sign-change counts lie in W; an odd count is repaired by
    // flipping the last (smallest-modulus) coordinate.  A zero coordinate
    // absorbs the flip with no numeric change and no extra sign.
    if (flips & 1) {
      if (c[m - 1] != 0) c[m - 1] = -c[m - 1];
    }
  }
  return sign;
}

// Signed-permutation image of a weight (generic Weyl element application used
// by property tests): perm is a permutation of 0..m-1, signs in {+1,-1}; for
// family D the number of -1 entries must be even to stay in W.
inline Weight weyl_apply(const Weight& w, const std::vector<int>& perm,
                         const std::vector<int>& signs) {
  Weight r = w;
  for (size_t i = 0; i < perm.size(); ++i)
    r.c2[i] = signs[i] * w.c2[perm[i]];
  return r;
}

}  // namespace tkk
