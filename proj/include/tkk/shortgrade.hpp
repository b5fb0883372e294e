#pragma once

// Grading bookkeeping over semisimple sums of B/D summands: h-levels, the
// ^sh truncation on semisimple decompositions, enumeration of the simple
// objects of g-mod_1 and g-mod_{1/2}, and the Z/2+Z/2 double grading used in
// the two-summand analysis.

#include "tkk/rootsys.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

struct SemisimpleSpec {
  std::vector<SimpleLieType> summands;

  SemisimpleSpec() = default;
  SemisimpleSpec(std::initializer_list<SimpleLieType> ts) : summands(ts) {}
  explicit SemisimpleSpec(std::vector<SimpleLieType> ts) : summands(std::move(ts)) {}

  int count() const { return static_cast<int>(summands.size()); }
  const SimpleLieType& at(int i) const { return summands.at(i); }
  bool operator==(const SemisimpleSpec& o) const { return summands == o.summands; }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < summands.size(); ++i) {
      if (i) s += "+";
      s += "so" + std::to_string(summands[i].so_n());
    }
    return s;
  }
};

// One dominant weight per summand.
struct ProductWeight {
  std::vector<Weight> parts;

  ProductWeight() = default;
  explicit ProductWeight(std::vector<Weight> p) : parts(std::move(p)) {}

  bool operator==(const ProductWeight& o) const { return parts == o.parts; }
  bool operator<(const ProductWeight& o) const { return parts < o.parts; }

  static ProductWeight trivial(const SemisimpleSpec& spec) {
    std::vector<Weight> p;
    for (auto& t : spec.summands) p.push_back(Weight::zero(t.rank));
    return ProductWeight(std::move(p));
  }
  bool is_trivial() const {
    for (auto& w : parts)
      if (!w.is_zero()) return false;
    return true;
  }
};

using ProductDecomp = std::map<ProductWeight, long long>;

inline void decomp_add(ProductDecomp& d, const ProductWeight& w, long long m) {
  if (m == 0) return;
  auto it = d.find(w);
  if (it == d.end()) {
    d.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) d.erase(it);
  }
}

inline void check_product_weight(const SemisimpleSpec& spec, const ProductWeight& w) {
  if (static_cast<int>(w.parts.size()) != spec.count())
    throw std::domain_error("product weight has wrong number of parts");
  for (int i = 0; i < spec.count(); ++i) check_dominant(spec.at(i), w.parts[i]);
}

inline unsigned long long product_dim(const SemisimpleSpec& spec, const ProductWeight& w) {
  unsigned long long d = 1;
  for (int i = 0; i < spec.count(); ++i) d *= weyl_dim(spec.at(i), w.parts[i]);
  return d;
}

// Maximal h-eigenvalue on L(w): sum of first epsilon-coordinates.
inline Rat h_level(const SemisimpleSpec& spec, const ProductWeight& w) {
  check_product_weight(spec, w);
  Rat lvl = 0;
  for (auto& part : w.parts) lvl += part.eps1();
  return lvl;
}

// Keep exactly the summands of h-level <= 1.
inline ProductDecomp sh_truncate(const SemisimpleSpec& spec, const ProductDecomp& d) {
  ProductDecomp out;
  for (auto& [w, m] : d)
    if (h_level(spec, w) <= 1) out.emplace(w, m);
  return out;
}

// Tensor of two product weights, fully decomposed.
inline ProductDecomp product_tensor(const SemisimpleSpec& spec, const ProductWeight& a,
                                    const ProductWeight& b) {
  check_product_weight(spec, a);
  check_product_weight(spec, b);
  std::vector<IrrDecomp> per;
  per.reserve(spec.count());
  for (int i = 0; i < spec.count(); ++i)
    per.push_back(tensor_decompose(spec.at(i), a.parts[i], b.parts[i]));
  ProductDecomp out;
  std::vector<IrrDecomp::const_iterator> its;
  // cartesian product over summand decompositions
  std::vector<std::vector<std::pair<Weight, long long>>> lists;
  for (auto& d : per) lists.emplace_back(d.begin(), d.end());
  std::vector<size_t> idx(lists.size(), 0);
  while (true) {
    ProductWeight w;
    long long m = 1;
    for (size_t i = 0; i < lists.size(); ++i) {
      w.parts.push_back(lists[i][idx[i]].first);
      m *= lists[i][idx[i]].second;
    }
    decomp_add(out, w, m);
    size_t k = 0;
    while (k < lists.size() && ++idx[k] == lists[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == lists.size()) break;
  }
  return out;
}

inline ProductDecomp product_tensor(const SemisimpleSpec& spec, const ProductDecomp& a,
                                    const ProductWeight& b) {
  ProductDecomp out;
  for (auto& [w, m] : a) {
    ProductDecomp t = product_tensor(spec, w, b);
    for (auto& [v, k] : t) decomp_add(out, v, m * k);
  }
  return out;
}

inline ProductWeight product_dual(const SemisimpleSpec& spec, const ProductWeight& w) {
  ProductWeight r;
  for (int i = 0; i < spec.count(); ++i)
    r.parts.push_back(dual_weight(spec.at(i), w.parts[i]));
  return r;
}

// --- simple labels -------------------------------------------------------

// Either the distinguished trivial module or a product weight.
struct SimpleLabel {
  bool trivial = false;
  ProductWeight weight;  // valid when !trivial

  static SimpleLabel tr() {
    SimpleLabel l;
    l.trivial = true;
    return l;
  }
  static SimpleLabel of(ProductWeight w) {
    SimpleLabel l;
    l.trivial = false;
    l.weight = std::move(w);
    return l;
  }

  bool operator==(const SimpleLabel& o) const {
    if (trivial != o.trivial) return false;
    return trivial || weight == o.weight;
  }
  bool operator<(const SimpleLabel& o) const {
    if (trivial != o.trivial) return trivial > o.trivial;  // tr sorts first
    if (trivial) return false;
    return weight < o.weight;
  }
};

// Per-summand pretty name of a dominant weight, using the fixed conventions
// of rootsys.hpp; falls back to raw coordinates.
inline std::string weight_pretty(const SimpleLieType& t, const Weight& w) {
  if (w.is_zero()) return "tr";
  if (t.family == Family::B) {
    if (w == wt_spinor(t)) return "G";
    for (int r = 1; r <= t.rank; ++r)
      if (w == wt_lambda_r(t, r)) return r == 1 ? "V" : "L" + std::to_string(r);
  } else {
    if (w == wt_spinor_pm(t, +1)) return "G+";
    if (w == wt_spinor_pm(t, -1)) return "G-";
    if (w == wt_lambda_pm(t, +1)) return "L+";
    if (w == wt_lambda_pm(t, -1)) return "L-";
    for (int r = 1; r <= t.rank - 1; ++r)
      if (w == wt_lambda_r(t, r)) return r == 1 ? "V" : "L" + std::to_string(r);
  }
  return w.str();
}

inline std::string label_pretty(const SemisimpleSpec& spec, const SimpleLabel& l) {
  if (l.trivial) return "tr";
  // single summand: plain name; several: suffix indices on non-trivial parts
  if (spec.count() == 1) return weight_pretty(spec.at(0), l.weight.parts[0]);
  std::string s;
  bool all_trivial = true;
  for (int i = 0; i < spec.count(); ++i) {
    const Weight& w = l.weight.parts[i];
    if (w.is_zero()) continue;
    if (!s.empty()) s += "*";
    s += weight_pretty(spec.at(i), w) + std::to_string(i + 1);
    all_trivial = false;
  }
  return all_trivial ? "tr" : s;
}

// Parse a per-summand module name ("V", "L2", "L+", "G-", "G", "tr").
inline std::optional<Weight> weight_from_name(const SimpleLieType& t,
                                              const std::string& name) {
  if (name == "tr") return Weight::zero(t.rank);
  if (name == "V") return wt_lambda_r(t, 1);
  if (name == "G") {
    if (t.family != Family::B) return std::nullopt;
    return wt_spinor(t);
  }
  if (name == "G+" || name == "G-") {
    if (t.family != Family::D) return std::nullopt;
    return wt_spinor_pm(t, name == "G+" ? +1 : -1);
  }
  if (name == "L+" || name == "L-") {
    if (t.family != Family::D) return std::nullopt;
    return wt_lambda_pm(t, name == "L+" ? +1 : -1);
  }
  if (name.size() >= 2 && name[0] == 'L') {
    int r = std::atoi(name.c_str() + 1);
    int rmax = t.family == Family::B ? t.rank : t.rank - 1;
    if (r >= 1 && r <= rmax) return wt_lambda_r(t, r);
    return std::nullopt;
  }
  return std::nullopt;
}

// --- simple object enumeration -------------------------------------------

// Per-summand simples of h-level 1.
inline std::vector<Weight> level_one_weights(const SimpleLieType& t) {
  std::vector<Weight> out;
  if (t.family == Family::B) {
    for (int r = 1; r <= t.rank; ++r) out.push_back(wt_lambda_r(t, r));
  } else {
    for (int r = 1; r <= t.rank - 1; ++r) out.push_back(wt_lambda_r(t, r));
    out.push_back(wt_lambda_pm(t, +1));
    out.push_back(wt_lambda_pm(t, -1));
  }
  return out;
}

// Per-summand simples of h-level 1/2 (spinors).
inline std::vector<Weight> level_half_weights(const SimpleLieType& t) {
  if (t.family == Family::B) return {wt_spinor(t)};
  return {wt_spinor_pm(t, +1), wt_spinor_pm(t, -1)};
}

// Simple objects of g-mod_1: tr, level-1 on one summand, and spinor (x)
// spinor on each pair of summands.
inline std::vector<SimpleLabel> simples_mod1(const SemisimpleSpec& spec) {
  std::vector<SimpleLabel> out;
  out.push_back(SimpleLabel::tr());
  const int n = spec.count();
  for (int i = 0; i < n; ++i) {
    for (const Weight& w : level_one_weights(spec.at(i))) {
      ProductWeight pw = ProductWeight::trivial(spec);
      pw.parts[i] = w;
      out.push_back(SimpleLabel::of(pw));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const Weight& wi : level_half_weights(spec.at(i)))
        for (const Weight& wj : level_half_weights(spec.at(j))) {
          ProductWeight pw = ProductWeight::trivial(spec);
          pw.parts[i] = wi;
          pw.parts[j] = wj;
          out.push_back(SimpleLabel::of(pw));
        }
  return out;
}

// Simple objects of g-mod_{1/2}: a spinor on exactly one summand.
inline std::vector<SimpleLabel> simples_mod_half(const SemisimpleSpec& spec) {
  std::vector<SimpleLabel> out;
  for (int i = 0; i < spec.count(); ++i)
    for (const Weight& w : level_half_weights(spec.at(i))) {
      ProductWeight pw = ProductWeight::trivial(spec);
      pw.parts[i] = w;
      out.push_back(SimpleLabel::of(pw));
    }
  return out;
}

enum class DoubleGradingClass { Left1, Right1, HalfHalf, Trivial };

inline DoubleGradingClass double_grading_class(const SemisimpleSpec& spec,
                                               const ProductWeight& w) {
  if (spec.count() != 2)
    throw std::domain_error("double grading needs exactly two summands");
  check_product_weight(spec, w);
  Rat l = w.parts[0].eps1();
  Rat r = w.parts[1].eps1();
  if (l == 1 && r == 0) return DoubleGradingClass::Left1;
  if (l == 0 && r == 1) return DoubleGradingClass::Right1;
  if (l == Rat(1, 2) && r == Rat(1, 2)) return DoubleGradingClass::HalfHalf;
  if (l == 0 && r == 0) return DoubleGradingClass::Trivial;
  throw std::domain_error("weight has no double-grading class at level <= 1");
}

}  // namespace tkk
