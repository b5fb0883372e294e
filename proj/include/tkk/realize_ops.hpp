#pragma once

// Constructions on top of the raw module classes: highest-weight vectors,
// invariant pairings and functionals, the Lambda^{+-} split of the middle
// exterior power (via the combinatorial Hodge star), and realization of an
// arbitrary simple label.

#include "tkk/linalg.hpp"
#include "tkk/realize.hpp"

#include <map>
#include <memory>
#include <set>

namespace tkk {

// Dense coordinates of a sparse vector within a weight space.
inline std::vector<Rat> densify(const Mod& M, const FW& wt, const SVec& v) {
  const auto& idx = M.weight_space(wt);
  std::unordered_map<int, int> pos;
  for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
  std::vector<Rat> out(idx.size(), Rat(0));
  for (auto& [i, c] : v) out[pos.at(i)] += c;
  return out;
}

// Basis of the space of highest-weight vectors of a given weight: the kernel
// of every raising generator on the weight space.
inline std::vector<SVec> highest_weight_vectors(const Mod& M, const FW& wt) {
  RatField f;
  const auto& idx = M.weight_space(wt);
  const int n = static_cast<int>(idx.size());
  if (n == 0) return {};
  std::vector<std::vector<Rat>> constraints;
  for (const Gen& g : gens_of(M.spec(), /*raising_only=*/true)) {
    // group images by target weight space
    std::map<FW, std::unordered_map<int, int>> tpos;
    std::map<FW, std::vector<std::vector<Rat>>> rows;
    for (int k = 0; k < n; ++k) {
      SVec img;
      M.apply(g, idx[k], img);
      for (auto& [j, c] : img) {
        const FW& tw = M.weight(j);
        auto& pm = tpos[tw];
        if (pm.empty()) {
          const auto& tidx = M.weight_space(tw);
          for (size_t p = 0; p < tidx.size(); ++p) pm[tidx[p]] = static_cast<int>(p);
          rows[tw].assign(tidx.size(), std::vector<Rat>(n, Rat(0)));
        }
        rows[tw][pm.at(j)][k] += c;
      }
    }
    for (auto& [tw, rs] : rows)
      for (auto& r : rs) constraints.push_back(r);
  }
  auto basis = nullspace(f, n, constraints);
  std::vector<SVec> out;
  for (auto& b : basis) {
    SVec v;
    for (int k = 0; k < n; ++k)
      if (b[k] != 0) v.emplace_back(idx[k], b[k]);
    out.push_back(std::move(v));
  }
  return out;
}

// Invariant bilinear pairings X x Y -> k, as matrices B[i][j] = B(x_i, y_j);
// returns a basis of the space of such pairings.
inline std::vector<std::map<std::pair<int, int>, Rat>> invariant_pairings(
    const Mod& X, const Mod& Y) {
  RatField f;
  std::vector<std::pair<int, int>> vars;
  std::map<std::pair<int, int>, int> var_id;
  for (int i = 0; i < X.dim(); ++i) {
    FW neg = X.weight(i);
    for (auto& c : neg) c = -c;
    for (int j : Y.weight_space(neg)) {
      var_id[{i, j}] = static_cast<int>(vars.size());
      vars.push_back({i, j});
    }
  }
  const int n = static_cast<int>(vars.size());
  std::vector<std::vector<Rat>> constraints;
  for (const Gen& g : gens_of(X.spec())) {
    // B(g x_i, y_j) + B(x_i, g y_j) = 0 for all i, j with matching weights
    std::map<std::pair<int, int>, std::vector<Rat>> rows;
    for (int i = 0; i < X.dim(); ++i) {
      SVec img;
      X.apply(g, i, img);
      for (auto& [l, c] : img)
        for (int j = 0; j < Y.dim(); ++j) {
          auto it = var_id.find({l, j});
          if (it == var_id.end()) continue;
          auto& row = rows[{i, j}];
          if (row.empty()) row.assign(n, Rat(0));
          row[it->second] += c;
        }
    }
    for (int j = 0; j < Y.dim(); ++j) {
      SVec img;
      Y.apply(g, j, img);
      for (auto& [l, c] : img)
        for (int i = 0; i < X.dim(); ++i) {
          auto it = var_id.find({i, l});
          if (it == var_id.end()) continue;
          auto& row = rows[{i, j}];
          if (row.empty()) row.assign(n, Rat(0));
          row[it->second] += c;
        }
    }
    for (auto& [key, row] : rows) constraints.push_back(row);
  }
  auto basis = nullspace(f, n, constraints);
  std::vector<std::map<std::pair<int, int>, Rat>> out;
  for (auto& b : basis) {
    std::map<std::pair<int, int>, Rat> mat;
    for (int k = 0; k < n; ++k)
      if (b[k] != 0) mat[vars[k]] = b[k];
    out.push_back(std::move(mat));
  }
  return out;
}

// Basis of invariant functionals on M (equivariant maps M -> tr).
inline std::vector<SVec> invariant_functionals(const Mod& M) {
  RatField f;
  FW zero(M.dim() ? M.weight(0).size() : 0, 0);
  const auto& idx = M.weight_space(zero);
  const int n = static_cast<int>(idx.size());
  if (n == 0) return {};
  std::unordered_map<int, int> pos;
  for (int k = 0; k < n; ++k) pos[idx[k]] = k;
  std::vector<std::vector<Rat>> constraints;
  // phi(g x) = 0 for every basis x and generator g
  for (const Gen& g : gens_of(M.spec()))
    for (int i = 0; i < M.dim(); ++i) {
      SVec img;
      M.apply(g, i, img);
      std::vector<Rat> row(n, Rat(0));
      bool nonzero = false;
      for (auto& [j, c] : img) {
        auto it = pos.find(j);
        if (it != pos.end()) {
          row[it->second] += c;
          nonzero = true;
        }
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  auto basis = nullspace(f, n, constraints);
  std::vector<SVec> out;
  for (auto& b : basis) {
    SVec v;
    for (int k = 0; k < n; ++k)
      if (b[k] != 0) v.emplace_back(idx[k], b[k]);
    out.push_back(std::move(v));
  }
  return out;
}

// --- Lambda^{+-} split ------------------------------------------------------

// Combinatorial Hodge star Lambda^{m+1} V -> Lambda^{m-1} V for D_m: pair a
// subset with the form-dual of its complement inside the fixed volume form.
inline SVec hodge_psi(const StandardModule& V, const ExteriorPowerModule& lm1,
                      const ExteriorPowerModule& lm_1, int basis_index) {
  const int n = V.dim();
  const auto& S = lm1.subset(basis_index);
  std::vector<int> T;
  std::set<int> in(S.begin(), S.end());
  for (int i = 0; i < n; ++i)
    if (!in.count(i)) T.push_back(i);
  // sign of the permutation sorting (S, T) relative to 0..n-1
  std::vector<int> concat = S;
  concat.insert(concat.end(), T.begin(), T.end());
  int sign = 1;
  for (size_t i = 0; i < concat.size(); ++i)
    for (size_t j = i + 1; j < concat.size(); ++j)
      if (concat[i] > concat[j]) sign = -sign;
  // form-dual of e_T: negate every label
  std::vector<int> Tdual;
  for (int i : T) Tdual.push_back(V.index_of_label(-V.label_of_index(i)));
  int s2;
  int idx = lm_1.index_of_subset_signed(Tdual, s2);
  if (idx < 0) throw std::logic_error("hodge_psi: duplicate labels");
  return {{idx, Rat(sign * s2)}};
}

struct LambdaPmSplit {
  std::shared_ptr<const ExteriorPowerModule> lambda_m;
  std::shared_ptr<SubModule> plus;
  std::shared_ptr<SubModule> minus;
};

// Split Lambda^m V = Lambda^+ V + Lambda^- V by the eigencondition
// i_v(x) = +- psi(m_v(x)); Lambda^+ is the component containing e_1^...^e_m.
inline LambdaPmSplit split_lambda_pm(std::shared_ptr<const StandardModule> V) {
  const SimpleLieType t = V->type();
  if (t.family != Family::D) throw std::domain_error("Lambda^{+-} needs even n");
  const int m = t.rank;
  auto lm = std::make_shared<ExteriorPowerModule>(V, m);
  ExteriorPowerModule lup(V, m + 1);
  ExteriorPowerModule ldn(V, m - 1);

  RatField f;
  std::vector<SVec> plus_basis, minus_basis;
  // all-plus m-form, used to orient the labels
  std::vector<int> allplus;
  for (int i = 1; i <= m; ++i) allplus.push_back(V->index_of_label(i));
  int allplus_sign;
  const int allplus_idx = lm->index_of_subset_signed(allplus, allplus_sign);

  int plus_eig = 0;  // eigenvalue sign that contains e_1^...^e_m, fixed below
  for (int eig : {+1, -1}) {
    std::vector<SVec>& dst = (eig > 0) ? plus_basis : minus_basis;
    for (const FW& wt : lm->weight_list()) {
      const auto& idx = lm->weight_space(wt);
      const int nw = static_cast<int>(idx.size());
      std::vector<std::vector<Rat>> constraints;
      for (int v = 0; v < V->dim(); ++v) {
        // rows of i_v(x) - eig * psi(m_v(x)) over the Lambda^{m-1} basis
        std::unordered_map<int, std::vector<Rat>> rows;
        for (int k = 0; k < nw; ++k) {
          SVec x{{idx[k], Rat(1)}};
          SVec a = contract(*V, *lm, ldn, v, x);
          SVec b = wedge_insert(*V, *lm, lup, v, x);
          SVec pb;
          for (auto& [j, c] : b)
            for (auto& [l, d] : hodge_psi(*V, lup, ldn, j)) svec_add(pb, l, c * d);
          SVec diff = a;
          for (auto& [j, c] : pb) svec_add(diff, j, -Rat(eig) * c);
          for (auto& [j, c] : diff) {
            auto& row = rows[j];
            if (row.empty()) row.assign(nw, Rat(0));
            row[k] += c;
          }
        }
        for (auto& [j, row] : rows) constraints.push_back(row);
      }
      for (auto& b : nullspace(f, nw, constraints)) {
        SVec v;
        for (int k = 0; k < nw; ++k)
          if (b[k] != 0) v.emplace_back(idx[k], b[k]);
        if (!v.empty()) {
          dst.push_back(v);
          for (auto& [j, c] : v)
            if (j == allplus_idx && plus_eig == 0) plus_eig = eig;
        }
      }
    }
  }
  if (plus_eig == 0) throw std::logic_error("split_lambda_pm: orientation not found");
  if (plus_eig < 0) std::swap(plus_basis, minus_basis);
  LambdaPmSplit out;
  out.lambda_m = lm;
  out.plus = std::make_shared<SubModule>(lm, std::move(plus_basis));
  out.minus = std::make_shared<SubModule>(lm, std::move(minus_basis));
  return out;
}

// --- label realization -------------------------------------------------------

inline std::shared_ptr<const Mod> realize_summand_weight(const SimpleLieType& t,
                                                         const Weight& w) {
  SemisimpleSpec single{{t}};
  if (w.is_zero()) return std::make_shared<TrivialModule>(single);
  if (t.family == Family::B) {
    if (w == wt_spinor(t)) return std::make_shared<SpinorModule>(t, 0);
    for (int r = 1; r <= t.rank; ++r)
      if (w == wt_lambda_r(t, r))
        return std::make_shared<ExteriorPowerModule>(std::make_shared<StandardModule>(t), r);
  } else {
    if (w == wt_spinor_pm(t, +1)) return std::make_shared<SpinorModule>(t, +1);
    if (w == wt_spinor_pm(t, -1)) return std::make_shared<SpinorModule>(t, -1);
    for (int r = 1; r <= t.rank - 1; ++r)
      if (w == wt_lambda_r(t, r))
        return std::make_shared<ExteriorPowerModule>(std::make_shared<StandardModule>(t), r);
    if (w == wt_lambda_pm(t, +1) || w == wt_lambda_pm(t, -1)) {
      auto split = split_lambda_pm(std::make_shared<StandardModule>(t));
      return w == wt_lambda_pm(t, +1) ? split.plus : split.minus;
    }
  }
  throw std::domain_error("no realization for weight " + w.str() + " of " + t.str());
}

inline std::shared_ptr<const Mod> realize_label(const SemisimpleSpec& spec,
                                                const SimpleLabel& l) {
  if (spec.count() == 1) {
    Weight w = l.trivial ? Weight::zero(spec.at(0).rank) : l.weight.parts[0];
    return realize_summand_weight(spec.at(0), w);
  }
  std::vector<std::shared_ptr<const Mod>> factors;
  for (int s = 0; s < spec.count(); ++s) {
    Weight w = l.trivial ? Weight::zero(spec.at(s).rank) : l.weight.parts[s];
    factors.push_back(realize_summand_weight(spec.at(s), w));
  }
  return std::make_shared<BoxModule>(spec, std::move(factors));
}

// Realize R as a direct sum of its components (with multiplicity).
inline std::shared_ptr<const Mod> realize_radical(const SemisimpleSpec& spec,
                                                  const ProductDecomp& R) {
  std::vector<std::shared_ptr<const Mod>> parts;
  for (auto& [w, m] : R)
    for (long long k = 0; k < m; ++k) parts.push_back(realize_label(spec, SimpleLabel::of(w)));
  if (parts.empty()) throw std::domain_error("empty radical");
  if (parts.size() == 1) return parts[0];
  return std::make_shared<DirectSumModule>(std::move(parts));
}

// Exact commutation check of a dense-matrix map between modules: for every
// generator g, map(g x) == g map(x) on all basis vectors.
inline bool is_equivariant(const Mod& X, const Mod& Y,
                           const std::function<SVec(int)>& map_basis) {
  std::vector<SVec> img(X.dim());
  for (int i = 0; i < X.dim(); ++i) img[i] = map_basis(i);
  for (const Gen& g : gens_of(X.spec())) {
    for (int i = 0; i < X.dim(); ++i) {
      SVec gx;
      X.apply(g, i, gx);
      SVec lhs;  // map(g x)
      for (auto& [j, c] : gx)
        for (auto& [l, d] : img[j]) svec_add(lhs, l, c * d);
      SVec rhs = Y.apply_vec(g, img[i]);
      for (auto& [l, d] : rhs) svec_add(lhs, l, -d);
      for (auto& [l, d] : lhs)
        if (d != 0) return false;
    }
  }
  return true;
}

}  // namespace tkk
