#pragma once

// Test-only oracles, deliberately independent of the library's Freudenthal /
// Brauer-Klimyk implementation path:
//  - weight multiplicities via Kostant's formula (partition-function DP over
//    positive roots, alternating sum over the full Weyl group),
//  - tensor decomposition via pointwise character multiplication followed by
//    highest-weight peeling, with all characters coming from the Kostant
//    route.

#include "tkk/rootsys.hpp"

#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

namespace tkk_oracle {

using tkk::Family;
using tkk::IrrDecomp;
using tkk::SimpleLieType;
using tkk::Weight;
using tkk::WeightHash;
using tkk::WeightSystem;

// Enumerate the Weyl group as (permutation, sign-pattern) pairs.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> signs;
  int det;
};

inline std::vector<WeylElement> weyl_group(const SimpleLieType& t) {
  const int m = t.rank;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::vector<WeylElement> out;
  do {
    int psign = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) psign = -psign;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int flips = __builtin_popcount(mask);
      if (t.family == Family::D && (flips % 2)) continue;
      WeylElement e;
      e.perm = perm;
      e.signs.assign(m, 1);
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) e.signs[i] = -1;
      e.det = psign * ((t.family == Family::B && (flips % 2)) ? -1 : 1);
      out.push_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Kostant partition function on doubled coordinates, memoized per type.
struct Kostant {
  SimpleLieType t;
  std::vector<Weight> pos;
  mutable std::unordered_map<Weight, long long, WeightHash> memo;

  explicit Kostant(SimpleLieType type) : t(type), pos(tkk::positive_roots(type)) {}

  long long count(const Weight& v) const { return count_from(v, 0); }

 private:
  long long count_from(const Weight& v, size_t k) const {
    bool zero = v.is_zero();
    if (zero) return 1;
    if (k >= pos.size()) return 0;
    // memo keyed on (v, k) folded into coordinates: append k as pseudo-coord
    Weight key = v;
    key.c2.push_back(static_cast<int>(k));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    Weight w = v;
    while (true) {
      total += count_from(w, k + 1);
      bool ok = true;
      for (size_t i = 0; i < w.c2.size(); ++i) w.c2[i] -= pos[k].c2[i];
      // crude positivity cutoff: the height functional must stay nonnegative
      long long height = 0;
      for (size_t i = 0; i < w.c2.size(); ++i)
        height += static_cast<long long>(w.c2[i]) * static_cast<long long>(w.c2.size() - i);
      if (height < 0) ok = false;
      if (!ok) break;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

// Kostant multiplicity formula: m_lambda(mu) = sum_w det(w) K(w(lambda+rho) - (mu+rho)).
inline long long kostant_multiplicity(const SimpleLieType& t, const Weight& lambda,
                                      const Weight& mu) {
  static std::map<std::pair<Family, int>, std::unique_ptr<Kostant>> ktab;
  static std::map<std::pair<Family, int>, std::vector<WeylElement>> wtab;
  auto key = std::make_pair(t.family, t.rank);
  if (!ktab.count(key)) {
    ktab.emplace(key, std::make_unique<Kostant>(t));
    wtab.emplace(key, weyl_group(t));
  }
  const Kostant& K = *ktab.at(key);
  const Weight rho = tkk::rho_doubled(t);
  Weight lr = lambda + rho;
  Weight mr = mu + rho;
  long long total = 0;
  for (const WeylElement& w : wtab.at(key)) {
    Weight img = tkk::weyl_apply(lr, w.perm, w.signs);
    Weight diff = img - mr;
    bool parity_ok = true;
    for (int c : diff.c2)
      if (c % 2 != 0) parity_ok = false;
    if (!parity_ok) continue;
    total += w.det * K.count(diff);
  }
  return total;
}

inline WeightSystem oracle_weight_system(const SimpleLieType& t, const Weight& lambda) {
  WeightSystem out;
  // candidates: lambda - nonneg root combos, bounded by the sup-norm box
  const int bound = lambda.c2.empty() ? 0 : lambda.c2[0];
  std::vector<Weight> stack{lambda};
  WeightSystem seen;
  seen.emplace(lambda, 1);
  auto simple = tkk::simple_roots(t);
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    long long m = kostant_multiplicity(t, lambda, w);
    if (m > 0) out[w] = m;
    if (m <= 0) continue;
    for (const Weight& a : simple) {
      Weight nxt = w - a;
      bool in_box = true;
      for (int c : nxt.c2)
        if (std::abs(c) > bound) in_box = false;
      if (!in_box || seen.count(nxt)) continue;
      seen.emplace(nxt, 1);
      stack.push_back(nxt);
    }
  }
  return out;
}

// Character product + peeling, fully on the oracle path.
inline IrrDecomp oracle_tensor(const SimpleLieType& t, const Weight& a, const Weight& b) {
  WeightSystem wa = oracle_weight_system(t, a);
  WeightSystem wb = oracle_weight_system(t, b);
  WeightSystem prod;
  for (auto& [x, mx] : wa)
    for (auto& [y, my] : wb) prod[x + y] += mx * my;
  IrrDecomp out;
  while (true) {
    const Weight* top = nullptr;
    for (auto& [w, m] : prod) {
      if (m == 0) continue;
      if (!top || top->c2 < w.c2) top = &w;
    }
    if (!top) break;
    Weight lambda = *top;
    long long mult = prod[lambda];
    if (mult < 0 || !tkk::is_dominant(t, lambda))
      throw std::logic_error("oracle_tensor: peeling failed");
    out[lambda] += mult;
    for (auto& [w, m] : oracle_weight_system(t, lambda)) {
      prod[w] -= mult * m;
      if (prod[w] == 0) prod.erase(w);
    }
  }
  return out;
}

}  // namespace tkk_oracle
