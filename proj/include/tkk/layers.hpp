#pragma once

// Radical layers of indecomposable projectives: P^1 by characters, P^2 as the
// cokernel of mu + lambda computed equivariantly on highest-weight vectors.
// The domain Lambda^2 R (x) L is never materialized beyond single weight
// spaces; the middle truncation is applied through per-weight-space isotypic
// projectors of R (x) L.
//
// All field arithmetic is templated: the driver runs the engine over two
// 62-bit prime fields and cross-checks, reconstructing exact rational
// relation coefficients from the residues (exact rational evaluation remains
// available as the arbiter).

#include "tkk/chars.hpp"
#include "tkk/linalg.hpp"
#include "tkk/liespec.hpp"
#include "tkk/realize_ops.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace tkk {

// --- character-level layers ---------------------------------------------------

inline ProductDecomp label_decomp(const LieSpec& g, const SimpleLabel& L) {
  ProductDecomp d;
  d.emplace(L.trivial ? ProductWeight::trivial(g.ss) : L.weight, 1);
  return d;
}

inline ProductDecomp tensor_with_R(const LieSpec& g, const ProductDecomp& d) {
  ProductDecomp out;
  for (auto& [w, m] : d)
    for (auto& [rw, rm] : g.rad.R) {
      ProductDecomp t = product_tensor(g.ss, w, rw);
      for (auto& [v, k] : t) decomp_add(out, v, m * k * rm);
    }
  return out;
}

// P^1(L) = (R (x) L)^sh.
inline ProductDecomp compute_P1(const LieSpec& g, const SimpleLabel& L) {
  return sh_truncate(g.ss, tensor_with_R(g, label_decomp(g, L)));
}

// (R (x) (R (x) L)^sh)^sh -- the codomain of mu.
inline ProductDecomp codomain_C1(const LieSpec& g, const SimpleLabel& L) {
  return sh_truncate(g.ss, tensor_with_R(g, compute_P1(g, L)));
}

// (R^2 (x) L)^sh -- the codomain of lambda (empty when the radical is abelian).
inline ProductDecomp codomain_C2(const LieSpec& g, const SimpleLabel& L) {
  ProductDecomp out;
  if (!g.rad.R2) return out;
  ProductDecomp base = label_decomp(g, L);
  for (auto& [rw, rm] : g.rad.R2->target)
    for (auto& [w, m] : base) {
      ProductDecomp t = product_tensor(g.ss, w, rw);
      for (auto& [v, k] : t) decomp_add(out, v, m * k * rm);
    }
  return sh_truncate(g.ss, out);
}

inline bool central_extension_trivial(const LieSpec& g) {
  return lambda2_invariants(g.ss, g.rad.R) == 0;
}

inline FW fw_of(const ProductWeight& pw) {
  FW fw;
  for (auto& part : pw.parts) fw.insert(fw.end(), part.c2.begin(), part.c2.end());
  return fw;
}

inline ProductWeight pw_of(const SemisimpleSpec& spec, const FW& fw) {
  ProductWeight pw;
  int off = 0;
  for (int s = 0; s < spec.count(); ++s) {
    int r = spec.at(s).rank;
    pw.parts.push_back(Weight(std::vector<int>(fw.begin() + off, fw.begin() + off + r)));
    off += r;
  }
  return pw;
}

// --- field-side module helpers -------------------------------------------------

template <class F>
struct ModField {
  using Elt = typename F::Elt;
  const F f;
  const Mod& M;

  ModField(const F& field, const Mod& mod) : f(field), M(mod) {}

  const std::vector<int>& ws(const FW& wt) const { return M.weight_space(wt); }

  std::unordered_map<int, int> pos_map(const FW& wt) const {
    std::unordered_map<int, int> pos;
    const auto& idx = ws(wt);
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    return pos;
  }

  std::vector<Elt> dense(const FW& wt, const SVec& v) const {
    auto pos = pos_map(wt);
    std::vector<Elt> out(ws(wt).size(), f.zero());
    for (auto& [i, c] : v) out[pos.at(i)] = f.add(out[pos.at(i)], f.from_rat(c));
    return out;
  }

  // apply a generator to a dense weight-space vector, split by target weight
  std::map<FW, std::vector<Elt>> apply_dense(const Gen& g, const FW& wt,
                                             const std::vector<Elt>& v) const {
    std::map<FW, std::vector<Elt>> out;
    std::map<FW, std::unordered_map<int, int>> tpos;
    const auto& idx = ws(wt);
    for (size_t k = 0; k < idx.size(); ++k) {
      if (f.is_zero(v[k])) continue;
      SVec img;
      M.apply(g, idx[k], img);
      for (auto& [j, c] : img) {
        const FW& tw = M.weight(j);
        auto& pm = tpos[tw];
        if (pm.empty()) {
          const auto& tidx = ws(tw);
          for (size_t p = 0; p < tidx.size(); ++p) pm[tidx[p]] = static_cast<int>(p);
          out[tw].assign(tidx.size(), f.zero());
        }
        auto& vec = out[tw];
        vec[pm.at(j)] = f.add(vec[pm.at(j)], f.mul(v[k], f.from_rat(c)));
      }
    }
    return out;
  }

  // basis of the joint kernel of all raising generators on one weight space
  std::vector<std::vector<Elt>> hw_kernel(const FW& wt) const {
    const auto& idx = ws(wt);
    const int n = static_cast<int>(idx.size());
    if (n == 0) return {};
    std::vector<std::vector<Elt>> constraints;
    for (const Gen& g : gens_of(M.spec(), /*raising_only=*/true)) {
      std::map<FW, std::unordered_map<int, int>> tpos;
      std::map<FW, std::vector<std::vector<Elt>>> rows;
      for (int k = 0; k < n; ++k) {
        SVec img;
        M.apply(g, idx[k], img);
        for (auto& [j, c] : img) {
          const FW& tw = M.weight(j);
          auto& pm = tpos[tw];
          if (pm.empty()) {
            const auto& tidx = ws(tw);
            for (size_t p = 0; p < tidx.size(); ++p) pm[tidx[p]] = static_cast<int>(p);
            rows[tw].assign(tidx.size(), std::vector<Elt>(n, f.zero()));
          }
          auto& row = rows[tw][pm.at(j)];
          row[k] = f.add(row[k], f.from_rat(c));
        }
      }
      for (auto& [tw, rs] : rows)
        for (auto& r : rs) constraints.push_back(std::move(r));
    }
    return nullspace(f, n, constraints);
  }
};

// BFS-generated submodule span: per-weight-space row spans grown by lowering
// (and optionally raising) generators from seed vectors.
template <class F>
struct GeneratedSpan {
  using Elt = typename F::Elt;
  const F f;
  const Mod* M;
  std::map<FW, Span<F>> spans;

  GeneratedSpan(const F& field, const Mod& mod) : f(field), M(&mod) {}

  int dim_at(const FW& wt) const {
    auto it = spans.find(wt);
    return it == spans.end() ? 0 : it->second.dim();
  }
  int total_dim() const {
    int d = 0;
    for (auto& [w, s] : spans) d += s.dim();
    return d;
  }

  void generate(std::vector<std::pair<FW, std::vector<Elt>>> seeds, bool lowering_only) {
    ModField<F> mf(f, *M);
    std::vector<Gen> gens;
    for (const Gen& g : gens_of(M->spec()))
      if (!lowering_only || !g.raising) gens.push_back(g);
    std::vector<std::pair<FW, std::vector<Elt>>> queue;
    for (auto& [wt, v] : seeds) {
      auto it = spans.find(wt);
      if (it == spans.end())
        it = spans.emplace(wt, Span<F>(f, static_cast<int>(M->weight_space(wt).size()))).first;
      std::vector<Elt> copy = v;
      if (it->second.insert(std::move(copy))) queue.emplace_back(wt, std::move(v));
    }
    while (!queue.empty()) {
      auto [wt, v] = std::move(queue.back());
      queue.pop_back();
      for (const Gen& g : gens) {
        for (auto& [tw, tv] : mf.apply_dense(g, wt, v)) {
          auto it = spans.find(tw);
          if (it == spans.end())
            it = spans.emplace(tw, Span<F>(f, static_cast<int>(M->weight_space(tw).size()))).first;
          std::vector<Elt> copy = tv;
          if (it->second.insert(std::move(copy))) queue.emplace_back(tw, std::move(tv));
        }
      }
    }
  }
};

// Split of a module into an isotypic part (selected by a predicate on
// dominant constituents; by default h-level <= 1, i.e. the ^sh-kept part) and
// its complement, with per-weight-space projectors onto the selected part.
template <class F>
struct KeptSplit {
  using Elt = typename F::Elt;
  const F f;
  const Mod* M;
  std::map<FW, std::vector<std::vector<Elt>>> proj;  // dense d x d, row-major

  KeptSplit(const F& field, const Mod& mod, const SemisimpleSpec& spec,
            const ProductDecomp& character,
            std::function<bool(const ProductWeight&)> keep_pred = nullptr)
      : f(field), M(&mod) {
    if (!keep_pred)
      keep_pred = [&spec](const ProductWeight& pw) { return h_level(spec, pw) <= 1; };
    ModField<F> mf(f, mod);
    GeneratedSpan<F> kept(f, mod), high(f, mod);
    std::vector<std::pair<FW, std::vector<Elt>>> kept_seeds, high_seeds;
    for (auto& [pw, mult] : character) {
      FW fw = fw_of(pw);
      auto hw = mf.hw_kernel(fw);
      if (static_cast<long long>(hw.size()) != mult)
        throw std::logic_error("KeptSplit: highest-weight space size mismatch");
      bool is_kept = keep_pred(pw);
      for (auto& v : hw)
        (is_kept ? kept_seeds : high_seeds).emplace_back(fw, std::move(v));
    }
    kept.generate(std::move(kept_seeds), /*lowering_only=*/true);
    high.generate(std::move(high_seeds), /*lowering_only=*/true);
    // assemble projectors
    for (const FW& wt : mod.weight_list()) {
      const int d = static_cast<int>(mod.weight_space(wt).size());
      const int dk = kept.dim_at(wt), dh = high.dim_at(wt);
      if (dk + dh != d) throw std::logic_error("KeptSplit: dimension mismatch");
      std::vector<std::vector<Elt>> cols;  // columns of [K | H]
      if (dk > 0)
        for (auto& row : kept.spans.at(wt).rows) cols.push_back(row);
      if (dh > 0)
        for (auto& row : high.spans.at(wt).rows) cols.push_back(row);
      // invert A = [K|H] (columns) and keep P = K * (A^{-1} upper rows)
      std::vector<std::vector<Elt>> a(d, std::vector<Elt>(2 * d, f.zero()));
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) a[i][j] = cols[j][i];
      for (int i = 0; i < d; ++i) a[i][d + i] = f.one();
      // gauss-jordan
      int r = 0;
      for (int c = 0; c < d && r < d; ++c) {
        int sel = r;
        while (sel < d && f.is_zero(a[sel][c])) ++sel;
        if (sel == d) continue;
        std::swap(a[r], a[sel]);
        Elt ip = f.inv(a[r][c]);
        for (int j = 0; j < 2 * d; ++j) a[r][j] = f.mul(a[r][j], ip);
        for (int i = 0; i < d; ++i) {
          if (i == r || f.is_zero(a[i][c])) continue;
          Elt cc = a[i][c];
          for (int j = 0; j < 2 * d; ++j) a[i][j] = f.sub(a[i][j], f.mul(cc, a[r][j]));
        }
        ++r;
      }
      if (r != d) throw std::logic_error("KeptSplit: singular basis matrix");
      // P = sum_{k < dk} col_k * (A^{-1})_{k,:}
      std::vector<std::vector<Elt>> P(d, std::vector<Elt>(d, f.zero()));
      for (int k = 0; k < dk; ++k)
        for (int i = 0; i < d; ++i) {
          if (f.is_zero(cols[k][i])) continue;
          for (int j = 0; j < d; ++j)
            P[i][j] = f.add(P[i][j], f.mul(cols[k][i], a[k][d + j]));
        }
      proj.emplace(wt, std::move(P));
    }
  }

  void apply_inplace(const FW& wt, std::vector<Elt>& v) const {
    auto it = proj.find(wt);
    if (it == proj.end()) {
      for (auto& x : v) x = f.zero();
      return;
    }
    const auto& P = it->second;
    const int d = static_cast<int>(v.size());
    std::vector<Elt> out(d, f.zero());
    for (int i = 0; i < d; ++i) {
      Elt acc = f.zero();
      for (int j = 0; j < d; ++j)
        if (!f.is_zero(v[j])) acc = f.add(acc, f.mul(P[i][j], v[j]));
      out[i] = acc;
    }
    v = std::move(out);
  }
};

}  // namespace tkk
