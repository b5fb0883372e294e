#pragma once

// Exact character arithmetic for B_m / D_m: Weyl dimensions, weight systems
// (Freudenthal recursion), tensor product decomposition (Brauer-Klimyk over
// the full signed-permutation Weyl group), duality and the D-type diagram
// involution tau.

#include "tkk/numeric.hpp"
#include "tkk/weights.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tkk {

// Finite multiplicity map of dominant weights.
using IrrDecomp = std::map<Weight, long long>;
// Full weight system (not necessarily dominant keys).
using WeightSystem = std::unordered_map<Weight, long long, WeightHash>;

inline void decomp_add(IrrDecomp& d, const Weight& w, long long m) {
  if (m == 0) return;
  auto it = d.find(w);
  if (it == d.end()) {
    d.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) d.erase(it);
  }
}

inline unsigned long long weyl_dim(const SimpleLieType& t, const Weight& lambda) {
  check_dominant(t, lambda);
  const Weight rho = rho_doubled(t);
  const Weight lr = lambda + rho;
  Int num = 1, den = 1;
  for (const Weight& a : positive_roots(t)) {
    num *= dot2(lr, a);
    den *= dot2(rho, a);
  }
  Int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integral quotient");
  return q.convert_to<unsigned long long>();
}

// Freudenthal's recursion.  Weights are enumerated top-down from lambda along
// negative simple-root steps; saturation guarantees the candidate set is the
// intersection of lambda - Q+ with the dominant-conjugate test m(mu) > 0.
inline WeightSystem weight_system(const SimpleLieType& t, const Weight& lambda) {
  check_dominant(t, lambda);
  const Weight rho = rho_doubled(t);
  const auto pos = positive_roots(t);
  const auto simple = simple_roots(t);
  const long long c_top = dot2(lambda + rho, lambda + rho);
  // Every weight of L(lambda) has sup-norm <= lambda_1.
  const int sup_bound = lambda.c2.empty() ? 0 : lambda.c2[0];
  auto in_box = [&](const Weight& x) {
    for (int cc : x.c2)
      if (std::abs(cc) > sup_bound) return false;
    return true;
  };

  WeightSystem mult;
  mult[lambda] = 1;
  WeightSystem seen;
  seen.emplace(lambda, 1);

  // Breadth-first top-down; a candidate's multiplicity only depends on
  // strictly higher weights, which are already final when it is probed.
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (const Weight& a : simple) {
        Weight cand = w - a;
        if (seen.count(cand)) continue;
        seen.emplace(cand, 1);
        if (!in_box(cand)) continue;
        long long denom = c_top - dot2(cand + rho, cand + rho);
        if (denom <= 0) continue;  // not a weight unless cand == lambda
        Int num = 0;
        for (const Weight& alpha : pos) {
          Weight x = cand + alpha;
          while (in_box(x)) {
            auto it = mult.find(x);
            if (it != mult.end()) num += Int(it->second) * dot2(x, alpha);
            x = x + alpha;
          }
        }
        Int m2 = 2 * num;
        Int mm = m2 / denom;
        if (mm * denom != m2)
          throw std::logic_error("weight_system: Freudenthal non-integral");
        long long mv = mm.convert_to<long long>();
        if (mv > 0) {
          mult[cand] = mv;
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  return mult;
}

inline unsigned long long weight_system_size(const WeightSystem& ws) {
  unsigned long long n = 0;
  for (auto& [w, m] : ws) n += m;
  return n;
}

// Brauer-Klimyk: decompose L(lambda) (x) L(mu).
inline IrrDecomp tensor_decompose(const SimpleLieType& t, const Weight& lambda,
                                  const Weight& mu) {
  check_dominant(t, lambda);
  check_dominant(t, mu);
  // iterate over the smaller weight system
  const Weight *big = &lambda, *small = &mu;
  if (weyl_dim(t, mu) > weyl_dim(t, lambda)) std::swap(big, small);
  const WeightSystem ws = weight_system(t, *small);
  const Weight rho = rho_doubled(t);
  IrrDecomp out;
  for (const auto& [nu, m] : ws) {
    Weight xi = *big + rho + nu;
    int sign = dominantize(t, xi);
    if (sign == 0) continue;
    Weight res = xi - rho;
    decomp_add(out, res, sign * m);
  }
  for (auto& [w, m] : out)
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
  return out;
}

// -w0: identity for B and for D with even rank; negates the last coordinate
// for D with odd rank.
inline Weight dual_weight(const SimpleLieType& t, const Weight& lambda) {
  check_dominant(t, lambda);
  if (t.family == Family::B || t.rank % 2 == 0) return lambda;
  Weight r = lambda;
  r.c2[t.rank - 1] = -r.c2[t.rank - 1];
  return r;
}

// Diagram involution of D_m.
inline Weight tau(const SimpleLieType& t, const Weight& lambda) {
  if (t.family != Family::D)
    throw std::domain_error("tau is only defined for family D");
  check_dominant(t, lambda);
  Weight r = lambda;
  r.c2[t.rank - 1] = -r.c2[t.rank - 1];
  return r;
}

// --- named modules -----------------------------------------------------
//
// Conventions (fixed throughout):
//   Lambda^r V  = L(e1+...+er),            1 <= r <= m-1 (D) or m (B);
//   Lambda^+ V  = L(1,...,1)   (D, all plus),
//   Lambda^- V  = L(1,...,1,-1),
//   Gamma       = L(1/2,...,1/2)           (B),
//   Gamma^+     = L(1/2,...,1/2)           (D, all plus),
//   Gamma^-     = L(1/2,...,1/2,-1/2).
// The +/- labels are bound by Lambda^{+-} = L(2 * hw(Gamma^{+-})); the
// Fock-space vacuum of the spinor realization lies in Gamma^+ for D.

inline Weight wt_lambda_r(const SimpleLieType& t, int r) {
  if (r == 0) return Weight::zero(t.rank);
  int rmax = t.family == Family::B ? t.rank : t.rank - 1;
  if (r < 0 || r > rmax)
    throw std::domain_error("Lambda^r out of range for " + t.str());
  std::vector<int> c(t.rank, 0);
  for (int i = 0; i < r; ++i) c[i] = 2;
  return Weight(std::move(c));
}

inline Weight wt_lambda_pm(const SimpleLieType& t, int sign) {
  if (t.family != Family::D)
    throw std::domain_error("Lambda^{+-} only exists for family D");
  std::vector<int> c(t.rank, 2);
  if (sign < 0) c[t.rank - 1] = -2;
  return Weight(std::move(c));
}

inline Weight wt_spinor(const SimpleLieType& t) {
  if (t.family != Family::B)
    throw std::domain_error("Gamma without chirality needs family B");
  return Weight(std::vector<int>(t.rank, 1));
}

inline Weight wt_spinor_pm(const SimpleLieType& t, int sign) {
  if (t.family != Family::D)
    throw std::domain_error("Gamma^{+-} needs family D");
  std::vector<int> c(t.rank, 1);
  if (sign < 0) c[t.rank - 1] = -1;
  return Weight(std::move(c));
}

inline bool is_spinor_type(const Weight& w) { return w.half_integral(); }

}  // namespace tkk
