#pragma once

// Character-level utilities built on the weight-system machinery: cached
// weight systems, character products, wedge/sym squares, and decomposition of
// an arbitrary W-stable character by highest-weight peeling.

#include "tkk/rootsys.hpp"
#include "tkk/shortgrade.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tkk {

struct TypeWeightKey {
  Family fam;
  int rank;
  std::vector<int> c2;
  bool operator<(const TypeWeightKey& o) const {
    if (fam != o.fam) return fam < o.fam;
    if (rank != o.rank) return rank < o.rank;
    return c2 < o.c2;
  }
};

inline const WeightSystem& weight_system_cached(const SimpleLieType& t,
                                                const Weight& lambda) {
  static std::map<TypeWeightKey, WeightSystem> cache;
  TypeWeightKey key{t.family, t.rank, lambda.c2};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, weight_system(t, lambda)).first->second;
}

inline const IrrDecomp& tensor_decompose_cached(const SimpleLieType& t,
                                                const Weight& a, const Weight& b) {
  static std::map<std::pair<TypeWeightKey, std::vector<int>>, IrrDecomp> cache;
  // symmetric: normalise the key order
  const Weight *x = &a, *y = &b;
  if (y->c2 < x->c2) std::swap(x, y);
  auto key = std::make_pair(TypeWeightKey{t.family, t.rank, x->c2}, y->c2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, tensor_decompose(t, *x, *y)).first->second;
}

// Lex-largest weight of a W-stable character is dominant; peel it off.
inline IrrDecomp decompose_character(const SimpleLieType& t, WeightSystem ch) {
  IrrDecomp out;
  while (true) {
    const Weight* top = nullptr;
    for (auto& [w, m] : ch) {
      if (m == 0) continue;
      if (!top || top->c2 < w.c2) top = &w;
    }
    if (!top) break;
    Weight lambda = *top;
    long long mult = ch[lambda];
    if (mult < 0 || !is_dominant(t, lambda))
      throw std::logic_error("decompose_character: not a genuine character");
    decomp_add(out, lambda, mult);
    for (auto& [w, m] : weight_system_cached(t, lambda)) {
      auto it = ch.find(w);
      if (it == ch.end()) throw std::logic_error("decompose_character: underflow");
      it->second -= mult * m;
      if (it->second == 0) ch.erase(it);
    }
  }
  return out;
}

// Expanded weight list (weights repeated by multiplicity).
inline std::vector<Weight> expand_weights(const WeightSystem& ws) {
  std::vector<Weight> out;
  for (auto& [w, m] : ws)
    for (long long i = 0; i < m; ++i) out.push_back(w);
  return out;
}

inline IrrDecomp wedge2_decompose(const SimpleLieType& t, const Weight& lambda) {
  auto ws = expand_weights(weight_system_cached(t, lambda));
  WeightSystem ch;
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j) ch[ws[i] + ws[j]]++;
  return decompose_character(t, ch);
}

inline IrrDecomp sym2_decompose(const SimpleLieType& t, const Weight& lambda) {
  auto ws = expand_weights(weight_system_cached(t, lambda));
  WeightSystem ch;
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i; j < ws.size(); ++j) ch[ws[i] + ws[j]]++;
  return decompose_character(t, ch);
}

// Lambda^2 / S^2 of an irreducible exterior product, via the two-term
// recursion Lambda^2(X (x) Y) = Lambda^2 X (x) S^2 Y + S^2 X (x) Lambda^2 Y.
inline void wedge_sym_product(const SemisimpleSpec& spec, const ProductWeight& w,
                              int from, ProductDecomp& wedge, ProductDecomp& sym);

inline void append_products(const SemisimpleSpec& spec, const ProductWeight& w,
                            int from, const IrrDecomp& head, bool head_is_first,
                            const ProductDecomp& tail, ProductDecomp& out) {
  for (auto& [hw, hm] : head)
    for (auto& [tw, tm] : tail) {
      ProductWeight full;
      full.parts.push_back(hw);
      for (auto& p : tw.parts) full.parts.push_back(p);
      (void)w;
      (void)from;
      (void)head_is_first;
      decomp_add(out, full, hm * tm);
    }
}

inline void wedge_sym_product(const SemisimpleSpec& spec, const ProductWeight& w,
                              int from, ProductDecomp& wedge, ProductDecomp& sym) {
  const SimpleLieType& t = spec.at(from);
  const Weight& head = w.parts[from];
  if (from == spec.count() - 1) {
    for (auto& [x, m] : wedge2_decompose(t, head))
      decomp_add(wedge, ProductWeight({x}), m);
    for (auto& [x, m] : sym2_decompose(t, head))
      decomp_add(sym, ProductWeight({x}), m);
    return;
  }
  SemisimpleSpec rest(std::vector<SimpleLieType>(spec.summands.begin() + from + 1,
                                                 spec.summands.end()));
  ProductWeight wrest;
  wrest.parts.assign(w.parts.begin() + from + 1, w.parts.end());
  ProductDecomp rw, rs;
  wedge_sym_product(rest, wrest, 0, rw, rs);
  IrrDecomp hw = wedge2_decompose(t, head);
  IrrDecomp hs = sym2_decompose(t, head);
  append_products(spec, w, from, hw, true, rs, wedge);
  append_products(spec, w, from, hs, true, rw, wedge);
  append_products(spec, w, from, hs, true, rs, sym);
  append_products(spec, w, from, hw, true, rw, sym);
}

inline ProductDecomp lambda2_of_product(const SemisimpleSpec& spec,
                                        const ProductWeight& w) {
  ProductDecomp wedge, sym;
  wedge_sym_product(spec, w, 0, wedge, sym);
  return wedge;
}

inline ProductDecomp sym2_of_product(const SemisimpleSpec& spec,
                                     const ProductWeight& w) {
  ProductDecomp wedge, sym;
  wedge_sym_product(spec, w, 0, wedge, sym);
  return sym;
}

// Lambda^2 of a decomposition with multiplicities:
//   Lambda^2(sum m_i L_i) = sum_i [ Lambda^2 L_i * C(m_i+?,..) ] + cross terms.
inline ProductDecomp lambda2_of_decomp(const SemisimpleSpec& spec,
                                       const ProductDecomp& d) {
  ProductDecomp out;
  std::vector<std::pair<ProductWeight, long long>> comps(d.begin(), d.end());
  for (size_t i = 0; i < comps.size(); ++i) {
    auto& [Li, mi] = comps[i];
    // Lambda^2(L^(+m)) = Lambda^2 L ^(m(m+1)/2) + S^2 L ^(m(m-1)/2)
    long long cw = mi * (mi + 1) / 2;
    long long cs = mi * (mi - 1) / 2;
    ProductDecomp w2, s2;
    wedge_sym_product(spec, Li, 0, w2, s2);
    for (auto& [x, m] : w2) decomp_add(out, x, m * cw);
    for (auto& [x, m] : s2) decomp_add(out, x, m * cs);
    for (size_t j = i + 1; j < comps.size(); ++j) {
      auto& [Lj, mj] = comps[j];
      ProductDecomp cross = product_tensor(spec, Li, Lj);
      for (auto& [x, m] : cross) decomp_add(out, x, m * mi * mj);
    }
  }
  return out;
}

// Multiplicity of the trivial module in Lambda^2 R (the obstruction to
// \hat g = g).
inline long long lambda2_invariants(const SemisimpleSpec& spec, const ProductDecomp& R) {
  ProductDecomp l2 = lambda2_of_decomp(spec, R);
  auto it = l2.find(ProductWeight::trivial(spec));
  return it == l2.end() ? 0 : it->second;
}

}  // namespace tkk
