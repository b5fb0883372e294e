#pragma once

// The input datum g = g_ss |x r: a semisimple spec, the abelianised radical
// R = r/[r,r] as a decomposition, and optionally the bracket target
// R^2 = [r,r] (nilindex-two radicals only, which is all the classification
// needs).

#include "tkk/chars.hpp"
#include "tkk/shortgrade.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

// Named equivariant surjection Lambda^2 R -> R^2.  The map itself is pinned
// down up to scalar by Schur; realization normalises the leading coefficient
// to 1.
struct BracketDescriptor {
  ProductDecomp target;  // components of R^2
  std::string name;      // human-readable tag, e.g. "wedge-pairing"
};

struct RadicalSpec {
  ProductDecomp R;
  std::optional<BracketDescriptor> R2;

  bool abelian() const { return !R2.has_value(); }
};

struct LieSpec {
  SemisimpleSpec ss;
  RadicalSpec rad;

  std::string str() const {
    std::string s = ss.str() + " |x ";
    bool first = true;
    for (auto& [w, m] : rad.R) {
      for (long long k = 0; k < m; ++k) {
        if (!first) s += "+";
        s += label_pretty(ss, SimpleLabel::of(w));
        first = false;
      }
    }
    if (rad.R2) {
      s += " (bracket -> ";
      bool f2 = true;
      for (auto& [w, m] : rad.R2->target) {
        if (!f2) s += "+";
        s += w.is_trivial() ? "tr" : label_pretty(ss, SimpleLabel::of(w));
        f2 = false;
      }
      s += ")";
    }
    return s;
  }
};

// Validates the structural invariants: R components of level <= 1, and every
// R2 component occurring in (Lambda^2 R)^sh.
inline void check_liespec(const LieSpec& g) {
  for (auto& [w, m] : g.rad.R) {
    check_product_weight(g.ss, w);
    if (m <= 0) throw std::domain_error("radical multiplicities must be positive");
    if (h_level(g.ss, w) > 1)
      throw std::domain_error("radical component of h-level > 1");
  }
  if (g.rad.R2) {
    ProductDecomp l2 = sh_truncate(g.ss, lambda2_of_decomp(g.ss, g.rad.R));
    for (auto& [w, m] : g.rad.R2->target) {
      if (w.is_trivial()) {
        // central extension target: must occur as invariant in Lambda^2 R
        auto it = l2.find(ProductWeight::trivial(g.ss));
        if (it == l2.end() || it->second < m)
          throw std::domain_error("central bracket target absent from Lambda^2 R");
      } else {
        auto it = l2.find(w);
        if (it == l2.end() || it->second < m)
          throw std::domain_error("bracket target absent from (Lambda^2 R)^sh");
      }
    }
  }
}

// Convenience builders for the algebras of the classification.
inline LieSpec make_single(SimpleLieType t, const Weight& r) {
  LieSpec g;
  g.ss = SemisimpleSpec{{t}};
  ProductWeight pw(std::vector<Weight>{r});
  g.rad.R.emplace(pw, 1);
  return g;
}

inline LieSpec make_spinor_pair(SimpleLieType t1, int chi1, SimpleLieType t2, int chi2) {
  LieSpec g;
  g.ss = SemisimpleSpec{{t1, t2}};
  Weight w1 = t1.family == Family::B ? wt_spinor(t1) : wt_spinor_pm(t1, chi1);
  Weight w2 = t2.family == Family::B ? wt_spinor(t2) : wt_spinor_pm(t2, chi2);
  ProductWeight pw(std::vector<Weight>{w1, w2});
  g.rad.R.emplace(pw, 1);
  return g;
}

}  // namespace tkk
