#pragma once

// The cokernel engine behind P^2(L) and the quadratic relation spans.
//
// Generic path (any spec; used for single summands and the sl2 fixture):
// materializes R (x) L and works weight space by weight space; the domain
// Lambda^2 R (x) L enters only through its highest-weight vectors at the
// handful of target weights, and the middle truncation is applied through
// per-weight-space isotypic projectors of R (x) L.
//
// Factorized path (two summands, R a boxed pair of spinors): every module in
// sight factors as X_l [x] X_r, so the linear algebra happens on small
// per-summand factor modules and columns are Kronecker products.
//
// The driver runs an engine over two (configurable) 62-bit prime fields,
// cross-checks all multiplicities and span dimensions, and reconstructs exact
// rational relation coefficients from the residues.

#include "tkk/layers.hpp"

#include <array>
#include <cassert>
#include <cstdint>

namespace tkk {

// Relation data for one (source, target) vertex pair: the ordered list of
// intermediate simple labels (all supported specs have multiplicity-one
// arrows) and the span of vanishing path combinations.
struct RelationBlock {
  ProductWeight target;
  std::vector<SimpleLabel> mids;       // path = source -> mid -> target
  std::vector<std::vector<Rat>> span;  // relation vectors over mids
  long long coker_mult = 0;            // multiplicity of target in P^2
};

struct P2Data {
  ProductDecomp coker;
  std::vector<RelationBlock> relations;
};

template <class F>
struct RawRelation {
  ProductWeight target;
  std::vector<SimpleLabel> mids;
  std::vector<std::vector<typename F::Elt>> span;  // reduced echelon rows
  long long coker_mult = 0;
};

namespace detail_p2 {

inline Rat elt_to_rat(const RatField&, const Rat& e) { return e; }
inline Rat elt_to_rat(const FpField&, const std::uint64_t& e) { return Rat(Int(e)); }

// Balanced CRT + rational reconstruction; verified against every residue.
inline bool rational_reconstruct(const std::vector<std::uint64_t>& residues,
                                 const std::vector<std::uint64_t>& primes, Rat& out) {
  Int m = 1, x = 0;
  for (size_t i = 0; i < residues.size(); ++i) {
    Int p(primes[i]);
    Int r(residues[i]);
    if (i == 0) {
      x = r;
      m = p;
      continue;
    }
    Int a = m % p, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      Int q = a / b, t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    Int minv = x0 % p;
    if (minv < 0) minv += p;
    Int diff = (r - (x % p)) % p;
    if (diff < 0) diff += p;
    x += m * ((diff * minv) % p);
    m *= p;
  }
  Int a = m, b = x % m, q0 = 0, q1 = 1;
  Int half = m / 2;
  Int bound = boost::multiprecision::sqrt(half);
  while (b > bound) {
    Int q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = q0 - q * q1;
    q0 = q1;
    q1 = t;
  }
  Int den = q1 < 0 ? Int(-q1) : q1;
  Int num = q1 < 0 ? Int(-b) : b;
  if (den == 0 || den > bound) return false;
  out = Rat(num, den);
  for (size_t i = 0; i < residues.size(); ++i) {
    Zp zp{primes[i]};
    if (zp.from_rat(out) != residues[i]) return false;
  }
  return true;
}

}  // namespace detail_p2

// Highest-weight vectors of (G (x) S)_nu, where T = G (x) X and S is a
// generated subspace of X; returned as dense vectors over T's nu weight
// space.
template <class F>
std::vector<std::vector<typename F::Elt>> hw_in_tensor_subspace(
    const F& f, const TensorModule& T, const GeneratedSpan<F>& S, const FW& nu) {
  using Elt = typename F::Elt;
  const Mod& G = T.left();
  const Mod& X = T.right();
  // subspace basis: e_a (x) s for S rows at weight nu - wt(a)
  struct BasisElt {
    int a;
    SVec xvec;  // sparse over X
  };
  std::vector<BasisElt> basis;
  for (int a = 0; a < G.dim(); ++a) {
    FW xw = nu;
    const FW& gw = G.weight(a);
    for (size_t k = 0; k < xw.size(); ++k) xw[k] -= gw[k];
    auto it = S.spans.find(xw);
    if (it == S.spans.end()) continue;
    const auto& xidx = X.weight_space(xw);
    for (auto& row : it->second.rows) {
      SVec v;
      for (size_t q = 0; q < row.size(); ++q)
        if (!f.is_zero(row[q]))
          v.emplace_back(xidx[q], detail_p2::elt_to_rat(f, row[q]));
      basis.push_back({a, std::move(v)});
    }
  }
  if (basis.empty()) return {};
  // raising constraints on coefficient space
  std::vector<std::vector<Elt>> constraints;
  std::map<std::pair<int, FW>, int> rowbase;
  std::vector<Gen> rgens = gens_of(T.spec(), /*raising_only=*/true);
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    SVec tv;
    for (auto& [xi, c] : basis[bi].xvec) tv.emplace_back(T.encode(basis[bi].a, xi), c);
    for (size_t gi = 0; gi < rgens.size(); ++gi) {
      SVec img = T.apply_vec(rgens[gi], tv);
      std::map<FW, std::vector<std::pair<int, Rat>>> by_wt;
      for (auto& [j, c] : img) by_wt[T.weight(j)].emplace_back(j, c);
      for (auto& [tw, entries] : by_wt) {
        auto key = std::make_pair(static_cast<int>(gi), tw);
        auto it = rowbase.find(key);
        const auto& tidx = T.weight_space(tw);
        if (it == rowbase.end()) {
          it = rowbase.emplace(key, static_cast<int>(constraints.size())).first;
          for (size_t p = 0; p < tidx.size(); ++p)
            constraints.emplace_back(basis.size(), f.zero());
        }
        std::unordered_map<int, int> pos;
        for (size_t p = 0; p < tidx.size(); ++p) pos[tidx[p]] = static_cast<int>(p);
        for (auto& [j, c] : entries) {
          auto& row = constraints[it->second + pos.at(j)];
          row[bi] = f.add(row[bi], f.from_rat(c));
        }
      }
    }
  }
  auto null = nullspace(f, static_cast<int>(basis.size()), constraints);
  // expand into dense T weight-space coordinates
  const auto& nidx = T.weight_space(nu);
  std::unordered_map<int, int> npos;
  for (size_t p = 0; p < nidx.size(); ++p) npos[nidx[p]] = static_cast<int>(p);
  std::vector<std::vector<Elt>> out;
  for (auto& sol : null) {
    std::vector<Elt> dense(nidx.size(), f.zero());
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      if (f.is_zero(sol[bi])) continue;
      for (auto& [xi, c] : basis[bi].xvec) {
        int j = npos.at(T.encode(basis[bi].a, xi));
        dense[j] = f.add(dense[j], f.mul(sol[bi], f.from_rat(c)));
      }
    }
    out.push_back(std::move(dense));
  }
  return out;
}

// ================================ generic engine ================================

template <class F>
class GenericP2Engine {
 public:
  using Elt = typename F::Elt;

  GenericP2Engine(const F& field, const LieSpec& g, const SimpleLabel& L)
      : f(field), g_(g), L_(L) {
    check_liespec(g);
    Rmod_ = realize_radical(g.ss, g.rad.R);
    Lmod_ = realize_label(g.ss, L);
    M1_ = std::make_shared<TensorModule>(Rmod_, Lmod_);
    W2R_ = std::make_shared<Wedge2Module>(Rmod_);
    D_ = std::make_shared<TensorModule>(W2R_, Lmod_);
    RM1_ = std::make_shared<TensorModule>(Rmod_, M1_);
    m1_char_full_ = tensor_with_R(g, label_decomp(g, L));
    kept_ = std::make_unique<KeptSplit<F>>(f, *M1_, g.ss, m1_char_full_);
    if (g_.rad.R2) build_bracket();
  }

  std::vector<RawRelation<F>> run(bool want_relations, bool jordan_paths) {
    ProductDecomp C1 = codomain_C1(g_, L_);
    ProductDecomp C2 = codomain_C2(g_, L_);
    ProductDecomp C = C1;
    for (auto& [w, m] : C2) decomp_add(C, w, m);
    std::vector<RawRelation<F>> out;
    for (auto& [nu, cmult] : C)
      out.push_back(process_target(nu, cmult, want_relations, jordan_paths));
    return out;
  }

 private:
  struct Layout {
    FW nu_fw;
    std::vector<int> seg_offset;  // per R basis index; -1 when empty
    std::vector<FW> m1_wt;
    int delta_offset = -1;
    int delta_dim = 0;
    int total = 0;
  };

  Layout make_layout(const FW& nu) const {
    Layout lay;
    lay.nu_fw = nu;
    const int dr = Rmod_->dim();
    lay.seg_offset.assign(dr, -1);
    lay.m1_wt.assign(dr, {});
    int off = 0;
    for (int a = 0; a < dr; ++a) {
      FW mw = nu;
      const FW& rw = Rmod_->weight(a);
      for (size_t k = 0; k < mw.size(); ++k) mw[k] -= rw[k];
      int d = static_cast<int>(M1_->weight_space(mw).size());
      if (d == 0) continue;
      lay.seg_offset[a] = off;
      lay.m1_wt[a] = mw;
      off += d;
    }
    if (R2L_) {
      lay.delta_offset = off;
      lay.delta_dim = static_cast<int>(R2L_->weight_space(nu).size());
      off += lay.delta_dim;
    }
    lay.total = off;
    return lay;
  }

  void project_column(const Layout& lay, std::vector<Elt>& col) const {
    for (size_t a = 0; a < lay.seg_offset.size(); ++a) {
      if (lay.seg_offset[a] < 0) continue;
      int d = static_cast<int>(M1_->weight_space(lay.m1_wt[a]).size());
      std::vector<Elt> seg(col.begin() + lay.seg_offset[a],
                           col.begin() + lay.seg_offset[a] + d);
      kept_->apply_inplace(lay.m1_wt[a], seg);
      std::copy(seg.begin(), seg.end(), col.begin() + lay.seg_offset[a]);
    }
  }

  std::vector<Elt> column_from_sparse(const Layout& lay, const SVec& rm1_part,
                                      const SVec& r2l_part) const {
    std::vector<Elt> col(lay.total, f.zero());
    const auto& RM1T = static_cast<const TensorModule&>(*RM1_);
    std::unordered_map<FW, std::unordered_map<int, int>, FWHash> m1pos;
    for (auto& [x, c] : rm1_part) {
      auto [a, m1i] = RM1T.decode(x);
      if (lay.seg_offset[a] < 0) throw std::logic_error("column outside layout");
      auto& pm = m1pos[lay.m1_wt[a]];
      if (pm.empty()) {
        const auto& idx = M1_->weight_space(lay.m1_wt[a]);
        for (size_t p = 0; p < idx.size(); ++p) pm[idx[p]] = static_cast<int>(p);
      }
      int p = lay.seg_offset[a] + pm.at(m1i);
      col[p] = f.add(col[p], f.from_rat(c));
    }
    if (!r2l_part.empty()) {
      std::unordered_map<int, int> pm;
      const auto& idx = R2L_->weight_space(lay.nu_fw);
      for (size_t p = 0; p < idx.size(); ++p) pm[idx[p]] = static_cast<int>(p);
      for (auto& [x, c] : r2l_part) {
        int p = lay.delta_offset + pm.at(x);
        col[p] = f.add(col[p], f.from_rat(c));
      }
    }
    return col;
  }

  RawRelation<F> process_target(const ProductWeight& nu, long long cmult,
                                bool want_relations, bool jordan_paths) {
    FW nufw = fw_of(nu);
    Layout lay = make_layout(nufw);
    ModField<F> dmf(f, *D_);
    const auto& didx = D_->weight_space(nufw);
    auto hw = dmf.hw_kernel(nufw);
    const auto& W2 = static_cast<const Wedge2Module&>(*W2R_);
    const auto& DT = static_cast<const TensorModule&>(*D_);
    const auto& RM1T = static_cast<const TensorModule&>(*RM1_);
    const auto& M1T = static_cast<const TensorModule&>(*M1_);

    std::vector<std::vector<Elt>> image;
    for (auto& h : hw) {
      SVec rm1, r2l;
      for (size_t k = 0; k < didx.size(); ++k) {
        if (f.is_zero(h[k])) continue;
        Rat hc = detail_p2::elt_to_rat(f, h[k]);
        auto [p, l] = DT.decode(didx[k]);
        auto [a, b] = W2.pair(p);
        svec_add(rm1, RM1T.encode(a, M1T.encode(b, l)), hc);
        svec_add(rm1, RM1T.encode(b, M1T.encode(a, l)), -hc);
        if (R2L_) {
          auto itd = delta_cols_.find(p);
          if (itd != delta_cols_.end()) {
            const auto& R2LT = static_cast<const TensorModule&>(*R2L_);
            for (auto& [q, dcoef] : itd->second)
              svec_add(r2l, R2LT.encode(q, l), hc * dcoef);
          }
        }
      }
      auto col = column_from_sparse(lay, rm1, r2l);
      project_column(lay, col);
      image.push_back(std::move(col));
    }

    Span<F> image_span(f, lay.total);
    for (auto& c : image) image_span.insert(c);
    if (image_span.dim() > cmult)
      throw std::logic_error("P2: image rank exceeds codomain multiplicity");
    RawRelation<F> rel;
    rel.target = nu;
    rel.coker_mult = cmult - image_span.dim();
    if (!want_relations) return rel;

    ProductDecomp p1 = compute_P1(g_, L_);
    std::vector<std::vector<Elt>> path_cols;
    for (auto& [kappa, kmult] : p1) {
      if (jordan_paths && kappa.is_trivial()) continue;
      long long arrows_out = 0;
      {
        ProductDecomp t = tensor_with_R(g_, ProductDecomp{{kappa, 1}});
        auto it = t.find(nu);
        arrows_out = it == t.end() ? 0 : it->second;
      }
      if (arrows_out == 0) continue;
      if (kmult != 1 || arrows_out != 1)
        throw std::logic_error("relation extraction needs multiplicity-one arrows");
      rel.mids.push_back(kappa.is_trivial() ? SimpleLabel::tr()
                                            : SimpleLabel::of(kappa));
      path_cols.push_back(path_vector(lay, kappa));
    }
    const int np = static_cast<int>(path_cols.size());
    std::vector<std::vector<Elt>> joint = path_cols;
    for (auto& c : image) joint.push_back(c);
    std::vector<std::vector<Elt>> rows(lay.total,
                                       std::vector<Elt>(joint.size(), f.zero()));
    for (size_t j = 0; j < joint.size(); ++j)
      for (int i = 0; i < lay.total; ++i) rows[i][j] = joint[j][i];
    auto null = nullspace(f, static_cast<int>(joint.size()), rows);
    Span<F> relspan(f, np);
    for (auto& v : null)
      relspan.insert(std::vector<Elt>(v.begin(), v.begin() + np));
    rel.span = relspan.rows;
    return rel;
  }

  std::vector<Elt> path_vector(const Layout& lay, const ProductWeight& kappa) {
    FW kfw = fw_of(kappa);
    ModField<F> m1f(f, *M1_);
    auto seeds = m1f.hw_kernel(kfw);
    if (seeds.size() != 1) throw std::logic_error("path_vector: ambiguous arrow");
    GeneratedSpan<F> S(f, *M1_);
    S.generate({{kfw, seeds[0]}}, /*lowering_only=*/true);
    auto hw = hw_in_tensor_subspace(f, static_cast<const TensorModule&>(*RM1_), S,
                                    lay.nu_fw);
    if (hw.size() != 1) throw std::logic_error("path_vector: expected one arrow");
    // re-arrange dense RM1 coordinates into the layout
    const auto& nidx = RM1_->weight_space(lay.nu_fw);
    const auto& RM1T = static_cast<const TensorModule&>(*RM1_);
    std::vector<Elt> col(lay.total, f.zero());
    std::unordered_map<FW, std::unordered_map<int, int>, FWHash> m1pos;
    for (size_t p = 0; p < nidx.size(); ++p) {
      if (f.is_zero(hw[0][p])) continue;
      auto [a, m1i] = RM1T.decode(nidx[p]);
      auto& pm = m1pos[lay.m1_wt[a]];
      if (pm.empty()) {
        const auto& idx = M1_->weight_space(lay.m1_wt[a]);
        for (size_t q = 0; q < idx.size(); ++q) pm[idx[q]] = static_cast<int>(q);
      }
      col[lay.seg_offset[a] + pm.at(m1i)] = hw[0][p];
    }
    project_column(lay, col);  // no-op safeguard: S_kappa lies in the kept part
    return col;
  }

  void build_bracket() {
    ProductDecomp w2char = lambda2_of_decomp(g_.ss, g_.rad.R);
    const ProductDecomp& target = g_.rad.R2->target;
    auto is_target = [&target](const ProductWeight& pw) {
      return target.find(pw) != target.end();
    };
    RatField rf;
    KeptSplit<RatField> comp(rf, *W2R_, g_.ss, w2char, is_target);
    GeneratedSpan<RatField> span(rf, *W2R_);
    {
      ModField<RatField> wf(rf, *W2R_);
      std::vector<std::pair<FW, std::vector<Rat>>> seeds;
      for (auto& [pw, mult] : w2char) {
        if (!is_target(pw)) continue;
        FW fw = fw_of(pw);
        for (auto& v : wf.hw_kernel(fw)) seeds.emplace_back(fw, v);
      }
      span.generate(std::move(seeds), true);
    }
    std::vector<SVec> basis;
    for (auto& [wt, sp] : span.spans) {
      const auto& idx = W2R_->weight_space(wt);
      for (auto& row : sp.rows) {
        SVec v;
        for (size_t q = 0; q < row.size(); ++q)
          if (row[q] != 0) v.emplace_back(idx[q], row[q]);
        basis.push_back(std::move(v));
      }
    }
    auto sub = std::make_shared<SubModule>(W2R_, basis);
    R2sub_ = sub;
    R2L_ = std::make_shared<TensorModule>(R2sub_, Lmod_);
    for (int p = 0; p < W2R_->dim(); ++p) {
      const FW& wt = W2R_->weight(p);
      const auto& idx = W2R_->weight_space(wt);
      std::vector<Rat> unit(idx.size(), Rat(0));
      for (size_t q = 0; q < idx.size(); ++q)
        if (idx[q] == p) unit[q] = 1;
      comp.apply_inplace(wt, unit);
      SVec projected;
      for (size_t q = 0; q < idx.size(); ++q)
        if (unit[q] != 0) projected.emplace_back(idx[q], unit[q]);
      if (projected.empty()) continue;
      SVec coords = sub->express(projected);
      if (!coords.empty()) delta_cols_[p] = coords;
    }
  }

  const F f;
  LieSpec g_;
  SimpleLabel L_;
  std::shared_ptr<const Mod> Rmod_, Lmod_;
  std::shared_ptr<const Mod> M1_, W2R_, D_, RM1_;
  std::shared_ptr<const Mod> R2sub_, R2L_;
  ProductDecomp m1_char_full_;
  std::unique_ptr<KeptSplit<F>> kept_;
  std::map<int, SVec> delta_cols_;
};

// ================================ factorized engine =============================

// Two-summand specs with R = Gamma_l [x] Gamma_r.  Modules factor per
// summand; columns are Kronecker products of factor weight-space vectors.
template <class F>
class FactorP2Engine {
 public:
  using Elt = typename F::Elt;

  FactorP2Engine(const F& field, const LieSpec& g, const SimpleLabel& L)
      : f(field), g_(g), L_(L) {
    check_liespec(g);
    if (g.ss.count() != 2 || g.rad.R.size() != 1 || g.rad.R.begin()->second != 1)
      throw std::domain_error("factor engine needs two summands and simple R");
    const ProductWeight& rw = g.rad.R.begin()->first;
    for (int s = 0; s < 2; ++s) {
      if (!is_spinor_type(rw.parts[s]))
        throw std::domain_error("factor engine needs a spinor pair radical");
      single_[s] = SemisimpleSpec{{g.ss.at(s)}};
      Gam_[s] = std::shared_ptr<const Mod>(realize_spinor_factor(g.ss.at(s), rw.parts[s]));
      Weight lw = L.trivial ? Weight::zero(g.ss.at(s).rank) : L.weight.parts[s];
      A_[s] = realize_summand_weight(g.ss.at(s), lw);
      X_[s] = std::make_shared<TensorModule>(Gam_[s], A_[s]);
      T3_[s] = std::make_shared<TensorModule>(Gam_[s], X_[s]);
      DW_[s] = std::make_shared<TensorModule>(
          std::make_shared<Wedge2Module>(Gam_[s]), A_[s]);
      DS_[s] = std::make_shared<TensorModule>(
          std::make_shared<Sym2Module>(Gam_[s]), A_[s]);
      // per-level projectors of X_s
      IrrDecomp xc = tensor_decompose_cached(g.ss.at(s), rw.parts[s],
                                             lw);
      ProductDecomp xchar;
      for (auto& [wt, m] : xc) xchar.emplace(ProductWeight({wt}), m);
      for (auto& [wt, m] : xc) levels_[s].insert(wt.c2[0]);
      for (int lvl : levels_[s]) {
        auto pred = [lvl](const ProductWeight& pw) { return pw.parts[0].c2[0] == lvl; };
        lvlproj_[s].emplace(lvl, std::make_unique<KeptSplit<F>>(
                                     f, *X_[s], single_[s], xchar, pred));
      }
    }
    if (g_.rad.R2) build_bracket();
  }

  std::vector<RawRelation<F>> run(bool want_relations, bool jordan_paths) {
    ProductDecomp C1 = codomain_C1(g_, L_);
    ProductDecomp C2 = codomain_C2(g_, L_);
    ProductDecomp C = C1;
    for (auto& [w, m] : C2) decomp_add(C, w, m);
    std::vector<RawRelation<F>> out;
    for (auto& [nu, cmult] : C)
      out.push_back(process_target(nu, cmult, want_relations, jordan_paths));
    return out;
  }

 private:
  static Mod* realize_spinor_factor(const SimpleLieType& t, const Weight& w) {
    if (t.family == Family::B) return new SpinorModule(t, 0);
    if (w == wt_spinor_pm(t, +1)) return new SpinorModule(t, +1);
    return new SpinorModule(t, -1);
  }

  // sum over kept level pairs of proj_a (x) proj_b, applied to a pure product
  std::vector<Elt> kept_kron(const std::array<FW, 2>& nuw,
                             const std::array<std::vector<Elt>, 2>& uv) const {
    const int dl = static_cast<int>(uv[0].size());
    const int dr = static_cast<int>(uv[1].size());
    std::vector<Elt> acc(static_cast<size_t>(dl) * dr, f.zero());
    for (int la : levels_[0])
      for (int lb : levels_[1]) {
        if (la + lb > 2) continue;
        std::vector<Elt> pu = uv[0];
        t3_level_project(0, la, nuw[0], pu);
        std::vector<Elt> pv = uv[1];
        t3_level_project(1, lb, nuw[1], pv);
        for (int i = 0; i < dl; ++i) {
          if (f.is_zero(pu[i])) continue;
          for (int j = 0; j < dr; ++j)
            if (!f.is_zero(pv[j]))
              acc[static_cast<size_t>(i) * dr + j] =
                  f.add(acc[static_cast<size_t>(i) * dr + j], f.mul(pu[i], pv[j]));
        }
      }
    return acc;
  }

  // apply id_Gamma (x) proj_level to a dense T3 weight-space vector
  void t3_level_project(int s, int lvl, const FW& nuw, std::vector<Elt>& v) const {
    const auto& T3 = static_cast<const TensorModule&>(*T3_[s]);
    const auto& nidx = T3_[s]->weight_space(nuw);
    // group positions by Gamma index
    std::map<int, std::vector<int>> by_a;  // gamma index -> positions
    for (size_t p = 0; p < nidx.size(); ++p) by_a[T3.decode(nidx[p]).first].push_back(p);
    std::vector<Elt> out(v.size(), f.zero());
    for (auto& [a, positions] : by_a) {
      FW xw = nuw;
      const FW& gw = Gam_[s]->weight(a);
      for (size_t k = 0; k < xw.size(); ++k) xw[k] -= gw[k];
      const auto& xidx = X_[s]->weight_space(xw);
      std::unordered_map<int, int> xpos;
      for (size_t q = 0; q < xidx.size(); ++q) xpos[xidx[q]] = static_cast<int>(q);
      std::vector<Elt> seg(xidx.size(), f.zero());
      for (int p : positions) seg[xpos.at(T3.decode(nidx[p]).second)] = v[p];
      lvlproj_[s].at(lvl)->apply_inplace(xw, seg);
      for (int p : positions) out[p] = seg[xpos.at(T3.decode(nidx[p]).second)];
    }
    v = std::move(out);
  }

  // factor images of the two D pieces into T3, dense at the factor weight
  std::vector<Elt> alt_factor(int s, bool wedge_piece, const FW& nuw,
                              const std::vector<Elt>& h) const {
    const Mod& piece = wedge_piece ? *DW_[s] : *DS_[s];
    const auto& PT = static_cast<const TensorModule&>(piece);
    const auto& pidx = piece.weight_space(nuw);
    const auto& T3 = static_cast<const TensorModule&>(*T3_[s]);
    const auto& X = static_cast<const TensorModule&>(*X_[s]);
    const auto& nidx = T3_[s]->weight_space(nuw);
    std::unordered_map<int, int> npos;
    for (size_t p = 0; p < nidx.size(); ++p) npos[nidx[p]] = static_cast<int>(p);
    std::vector<Elt> out(nidx.size(), f.zero());
    for (size_t k = 0; k < pidx.size(); ++k) {
      if (f.is_zero(h[k])) continue;
      auto [pp, ai] = PT.decode(pidx[k]);
      int g1, g2;
      if (wedge_piece) {
        auto pr = static_cast<const Wedge2Module&>(PT.left()).pair(pp);
        g1 = pr.first;
        g2 = pr.second;
      } else {
        auto pr = static_cast<const Sym2Module&>(PT.left()).pair(pp);
        g1 = pr.first;
        g2 = pr.second;
      }
      // x1 (x) (x2 (x) a) -+ x2 (x) (x1 (x) a)
      int j1 = npos.at(T3.encode(g1, X.encode(g2, ai)));
      int j2 = npos.at(T3.encode(g2, X.encode(g1, ai)));
      out[j1] = f.add(out[j1], h[k]);
      if (wedge_piece)
        out[j2] = f.sub(out[j2], h[k]);
      else
        out[j2] = f.add(out[j2], h[k]);
    }
    return out;
  }

  struct Layout {
    std::array<FW, 2> nu;
    int t3l = 0, t3r = 0;
    int d2l = 0, d2r = 0;  // delta block factor dims
    int total = 0;
  };

  Layout make_layout(const ProductWeight& nu) const {
    Layout lay;
    for (int s = 0; s < 2; ++s) lay.nu[s] = FW(nu.parts[s].c2);
    lay.t3l = static_cast<int>(T3_[0]->weight_space(lay.nu[0]).size());
    lay.t3r = static_cast<int>(T3_[1]->weight_space(lay.nu[1]).size());
    lay.total = lay.t3l * lay.t3r;
    if (bracket_side_ >= 0) {
      const Mod& dl = *delta_block_[0];
      const Mod& dr = *delta_block_[1];
      lay.d2l = static_cast<int>(dl.weight_space(lay.nu[0]).size());
      lay.d2r = static_cast<int>(dr.weight_space(lay.nu[1]).size());
      lay.total += lay.d2l * lay.d2r;
    }
    return lay;
  }

  RawRelation<F> process_target(const ProductWeight& nu, long long cmult,
                                bool want_relations, bool jordan_paths) {
    Layout lay = make_layout(nu);
    std::vector<std::vector<Elt>> image;
    // two domain pieces: (wedge (x) sym) and (sym (x) wedge)
    for (int piece = 0; piece < 2; ++piece) {
      bool wedge_left = piece == 0;
      const Mod& Pl = wedge_left ? *DW_[0] : *DS_[0];
      const Mod& Pr = wedge_left ? *DS_[1] : *DW_[1];
      ModField<F> lf(f, Pl), rf(f, Pr);
      auto hwl = lf.hw_kernel(lay.nu[0]);
      auto hwr = rf.hw_kernel(lay.nu[1]);
      for (auto& u : hwl)
        for (auto& v : hwr) {
          std::vector<Elt> col(lay.total, f.zero());
          std::array<std::vector<Elt>, 2> uv{
              alt_factor(0, wedge_left, lay.nu[0], u),
              alt_factor(1, !wedge_left, lay.nu[1], v)};
          // one half from the embedding of the piece into Lambda^2 R (x) L
          auto kron = kept_kron(lay.nu, uv);
          Rat half(1, 2);
          for (int i = 0; i < lay.t3l * lay.t3r; ++i)
            col[i] = f.mul(kron[i], f.from_rat(half));
          // delta part: only the piece whose wedge sits on the bracket side
          if (bracket_side_ >= 0 && wedge_left == (bracket_side_ == 0)) {
            auto dcol = delta_factor_columns(lay, wedge_left, u, v);
            for (int i = 0; i < lay.d2l * lay.d2r; ++i)
              col[lay.t3l * lay.t3r + i] = dcol[i];
          }
          image.push_back(std::move(col));
        }
    }
    Span<F> image_span(f, lay.total);
    for (auto& c : image) image_span.insert(c);
    if (image_span.dim() > cmult)
      throw std::logic_error("P2(factor): image rank exceeds codomain");
    RawRelation<F> rel;
    rel.target = nu;
    rel.coker_mult = cmult - image_span.dim();
    if (!want_relations) return rel;

    ProductDecomp p1 = compute_P1(g_, L_);
    std::vector<std::vector<Elt>> path_cols;
    for (auto& [kappa, kmult] : p1) {
      if (jordan_paths && kappa.is_trivial()) continue;
      long long arrows_out = 0;
      {
        ProductDecomp t = tensor_with_R(g_, ProductDecomp{{kappa, 1}});
        auto it = t.find(nu);
        arrows_out = it == t.end() ? 0 : it->second;
      }
      if (arrows_out == 0) continue;
      if (kmult != 1 || arrows_out != 1)
        throw std::logic_error("relation extraction needs multiplicity-one arrows");
      rel.mids.push_back(kappa.is_trivial() ? SimpleLabel::tr()
                                            : SimpleLabel::of(kappa));
      path_cols.push_back(path_vector(lay, kappa));
    }
    const int np = static_cast<int>(path_cols.size());
    std::vector<std::vector<Elt>> joint = path_cols;
    for (auto& c : image) joint.push_back(c);
    std::vector<std::vector<Elt>> rows(lay.total,
                                       std::vector<Elt>(joint.size(), f.zero()));
    for (size_t j = 0; j < joint.size(); ++j)
      for (int i = 0; i < lay.total; ++i) rows[i][j] = joint[j][i];
    auto null = nullspace(f, static_cast<int>(joint.size()), rows);
    Span<F> relspan(f, np);
    for (auto& v : null)
      relspan.insert(std::vector<Elt>(v.begin(), v.begin() + np));
    rel.span = relspan.rows;
    return rel;
  }

  std::vector<Elt> delta_factor_columns(const Layout& lay, bool wedge_left,
                                        const std::vector<Elt>& u,
                                        const std::vector<Elt>& v) const {
    // pairing side contracts Sym2(Gamma) (x) A -> A; wedge side is identity
    const int ps = bracket_side_ == 0 ? 1 : 0;  // pairing summand
    const std::vector<Elt>& hp = (ps == 0) ? u : v;
    const std::vector<Elt>& hw = (ps == 0) ? v : u;
    (void)wedge_left;
    // contract the Sym2 factor with the invariant pairing
    const Mod& DSp = *DS_[ps];
    const auto& DST = static_cast<const TensorModule&>(DSp);
    const auto& pidx = DSp.weight_space(lay.nu[ps]);
    const Mod& Ap = *A_[ps];
    const auto& aidx = Ap.weight_space(lay.nu[ps]);
    std::unordered_map<int, int> apos;
    for (size_t q = 0; q < aidx.size(); ++q) apos[aidx[q]] = static_cast<int>(q);
    std::vector<Elt> contracted(aidx.size(), f.zero());
    for (size_t k = 0; k < pidx.size(); ++k) {
      if (f.is_zero(hp[k])) continue;
      auto [pp, ai] = DST.decode(pidx[k]);
      auto pr = static_cast<const Sym2Module&>(DST.left()).pair(pp);
      // delta on the embedded piece contracts to (y_i, y_j), once
      auto it = pairing_.find(pr);
      Rat coef = it == pairing_.end() ? Rat(0) : it->second;
      if (coef == 0) continue;
      auto itp = apos.find(ai);
      if (itp == apos.end()) throw std::logic_error("delta: weight mismatch");
      contracted[itp->second] =
          f.add(contracted[itp->second], f.mul(hp[k], f.from_rat(coef)));
    }
    // kron with the wedge-side vector (identity block)
    const int dl = lay.d2l, dr = lay.d2r;
    std::vector<Elt> out(static_cast<size_t>(dl) * dr, f.zero());
    const std::vector<Elt>& left = (ps == 0) ? contracted : hw;
    const std::vector<Elt>& right = (ps == 0) ? hw : contracted;
    for (int i = 0; i < dl; ++i) {
      if (f.is_zero(left[i])) continue;
      for (int j = 0; j < dr; ++j)
        if (!f.is_zero(right[j]))
          out[static_cast<size_t>(i) * dr + j] = f.mul(left[i], right[j]);
    }
    return out;
  }

  std::vector<Elt> path_vector(const Layout& lay, const ProductWeight& kappa) {
    std::array<std::vector<Elt>, 2> w;
    for (int s = 0; s < 2; ++s) {
      FW kfw(kappa.parts[s].c2);
      ModField<F> xf(f, *X_[s]);
      auto seeds = xf.hw_kernel(kfw);
      if (seeds.size() != 1) throw std::logic_error("path_vector: ambiguous arrow");
      GeneratedSpan<F> S(f, *X_[s]);
      S.generate({{kfw, seeds[0]}}, true);
      auto hw = hw_in_tensor_subspace(f, static_cast<const TensorModule&>(*T3_[s]),
                                      S, lay.nu[s]);
      if (hw.size() != 1) throw std::logic_error("path_vector: expected one arrow");
      w[s] = std::move(hw[0]);
    }
    std::vector<Elt> col(lay.total, f.zero());
    auto kron = kept_kron(lay.nu, w);
    for (int i = 0; i < lay.t3l * lay.t3r; ++i) col[i] = kron[i];
    return col;
  }

  void build_bracket() {
    // bracket target sits on one summand as Lambda^2 Gamma; the other factor
    // carries the invariant symmetric pairing
    const ProductDecomp& target = g_.rad.R2->target;
    if (target.size() != 1 || target.begin()->second != 1)
      throw std::domain_error("factor engine: bracket target must be simple");
    const ProductWeight& tw = target.begin()->first;
    bracket_side_ = tw.parts[0].is_zero() ? 1 : 0;
    const int ps = bracket_side_ == 0 ? 1 : 0;
    auto pairings = invariant_pairings(*Gam_[ps], *Gam_[ps]);
    if (pairings.size() != 1)
      throw std::logic_error("bracket: pairing not unique");
    pairing_.clear();
    for (auto& [key, val] : pairings[0]) pairing_[key] = val;
    // symmetry check
    for (auto& [key, val] : pairing_) {
      auto it = pairing_.find({key.second, key.first});
      if (it == pairing_.end() || it->second != val)
        throw std::logic_error("bracket: pairing is not symmetric");
    }
    // delta blocks: wedge side Wedge2(Gamma) (x) A, pairing side A alone
    for (int s = 0; s < 2; ++s) {
      if (s == bracket_side_)
        delta_block_[s] = std::make_shared<TensorModule>(
            std::make_shared<Wedge2Module>(Gam_[s]), A_[s]);
      else
        delta_block_[s] = A_[s];
    }
    // sanity: the wedge-side block at the bracket weight must exist
    IrrDecomp w2 = wedge2_decompose(g_.ss.at(bracket_side_),
                                    g_.rad.R.begin()->first.parts[bracket_side_]);
    if (!w2.count(tw.parts[bracket_side_]))
      throw std::domain_error("bracket target not a constituent of Lambda^2 Gamma");
  }

  const F f;
  LieSpec g_;
  SimpleLabel L_;
  std::array<SemisimpleSpec, 2> single_;
  std::array<std::shared_ptr<const Mod>, 2> Gam_, A_, X_, T3_, DW_, DS_;
  std::array<std::set<int>, 2> levels_;
  mutable std::array<std::map<int, std::unique_ptr<KeptSplit<F>>>, 2> lvlproj_;
  int bracket_side_ = -1;
  std::map<std::pair<int, int>, Rat> pairing_;
  std::array<std::shared_ptr<const Mod>, 2> delta_block_;
};

// ================================ driver =======================================

namespace detail_p2 {

template <class F, class Engine>
std::vector<RawRelation<F>> run_engine(const F& f, const LieSpec& g,
                                       const SimpleLabel& L, bool want_relations,
                                       bool jordan_paths) {
  Engine e(f, g, L);
  return e.run(want_relations, jordan_paths);
}

inline bool use_factor_engine(const LieSpec& g) {
  if (g.ss.count() != 2) return false;
  if (g.rad.R.size() != 1 || g.rad.R.begin()->second != 1) return false;
  const ProductWeight& rw = g.rad.R.begin()->first;
  return is_spinor_type(rw.parts[0]) && is_spinor_type(rw.parts[1]);
}

template <class F>
std::vector<RawRelation<F>> run_any(const F& f, const LieSpec& g,
                                    const SimpleLabel& L, bool want_relations,
                                    bool jordan_paths) {
  if (use_factor_engine(g))
    return run_engine<F, FactorP2Engine<F>>(f, g, L, want_relations, jordan_paths);
  return run_engine<F, GenericP2Engine<F>>(f, g, L, want_relations, jordan_paths);
}

}  // namespace detail_p2

// Full P^2 computation with cross-checked prime runs and exact reconstruction
// of relation coefficients.  `jordan_paths` drops the paths through tr (the
// A(J) = (1-e_tr) A (1-e_tr) corner).
inline P2Data compute_P2_full(const LieSpec& g, const SimpleLabel& L,
                              bool want_relations = false,
                              bool jordan_paths = true) {
  const int nprimes = verify_prime_count();
  std::vector<std::vector<RawRelation<FpField>>> runs;
  std::vector<std::uint64_t> primes;
  for (int i = 0; i < nprimes; ++i) {
    FpField f{Zp{kVerifyPrimes[i]}};
    primes.push_back(kVerifyPrimes[i]);
    runs.push_back(detail_p2::run_any(f, g, L, want_relations, jordan_paths));
  }
  // cross-check shapes
  bool agree = true;
  for (int i = 1; i < nprimes && agree; ++i) {
    if (runs[i].size() != runs[0].size()) {
      agree = false;
      break;
    }
    for (size_t k = 0; k < runs[0].size(); ++k) {
      if (!(runs[i][k].target == runs[0][k].target) ||
          runs[i][k].coker_mult != runs[0][k].coker_mult ||
          runs[i][k].span.size() != runs[0][k].span.size() ||
          !(runs[i][k].mids == runs[0][k].mids)) {
        agree = false;
        break;
      }
    }
  }
  if (!agree) {
    // exact arbiter
    RatField rf;
    auto exact = detail_p2::run_any(rf, g, L, want_relations, jordan_paths);
    P2Data out;
    for (auto& r : exact) {
      if (r.coker_mult > 0) decomp_add(out.coker, r.target, r.coker_mult);
      if (want_relations && !r.mids.empty()) {
        RelationBlock b;
        b.target = r.target;
        b.mids = r.mids;
        b.span = r.span;
        b.coker_mult = r.coker_mult;
        out.relations.push_back(std::move(b));
      }
    }
    return out;
  }
  P2Data out;
  for (size_t k = 0; k < runs[0].size(); ++k) {
    auto& r0 = runs[0][k];
    if (r0.coker_mult > 0) decomp_add(out.coker, r0.target, r0.coker_mult);
    if (!want_relations || r0.mids.empty()) continue;
    RelationBlock b;
    b.target = r0.target;
    b.mids = r0.mids;
    b.coker_mult = r0.coker_mult;
    for (size_t row = 0; row < r0.span.size(); ++row) {
      std::vector<Rat> rv(r0.mids.size());
      for (size_t col = 0; col < r0.mids.size(); ++col) {
        std::vector<std::uint64_t> residues;
        for (int i = 0; i < nprimes; ++i) residues.push_back(runs[i][k].span[row][col]);
        Rat val;
        if (nprimes == 1) {
          // single-prime mode: small integers reconstruct from one residue
          std::vector<std::uint64_t> rr = residues, pp = {primes[0]};
          if (!detail_p2::rational_reconstruct(rr, pp, val))
            throw std::logic_error("relation reconstruction failed");
        } else if (!detail_p2::rational_reconstruct(residues, primes, val)) {
          throw std::logic_error("relation reconstruction failed");
        }
        rv[col] = val;
      }
      b.span.push_back(std::move(rv));
    }
    out.relations.push_back(std::move(b));
  }
  return out;
}

inline ProductDecomp compute_P2(const LieSpec& g, const SimpleLabel& L) {
  return compute_P2_full(g, L, false, true).coker;
}

}  // namespace tkk
