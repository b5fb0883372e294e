#pragma once

// Explicit exact realizations of the modules the classification touches:
// standard modules with hyperbolic bases, exterior powers with the m_v / i_v
// calculus, spinor modules on a fermionic Fock space, the Lambda^{+-} split,
// boxed products across summands, and span-submodules.
//
// Chevalley conventions (single summand, 1-based epsilon indices):
//   e_i = F_{i,i+1}, f_i = F_{i+1,i}                    (i < m)
//   B:  e_m = F_{m,0},      f_m = 2 F_{0,m}
//   D:  e_m = F_{m-1,-m},   f_m = F_{-m,m-1}
// where F_{a,b} = E_{a,b} - E_{-b,-a} on the basis {e_{+-i}, e_0} with
// bilinear form (e_a, e_b) = delta_{a,-b}.  With these choices [e_i, f_i] is
// diagonal with eigenvalue <mu, alpha_i^vee> on the mu weight space.

#include "tkk/rootsys.hpp"
#include "tkk/shortgrade.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tkk {

using FW = std::vector<int>;  // concatenated doubled weight coordinates

struct FWHash {
  size_t operator()(const FW& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct Gen {
  int summand;
  int idx;  // 0-based simple root index within the summand
  bool raising;
};

inline std::vector<Gen> gens_of(const SemisimpleSpec& spec, bool raising_only = false) {
  std::vector<Gen> out;
  for (int s = 0; s < spec.count(); ++s)
    for (int i = 0; i < spec.at(s).rank; ++i) {
      out.push_back({s, i, true});
      if (!raising_only) out.push_back({s, i, false});
    }
  return out;
}

// Sparse vector over a module basis.
using SVec = std::vector<std::pair<int, Rat>>;

inline void svec_add(SVec& v, int idx, const Rat& c) {
  if (c == 0) return;
  for (auto& [i, x] : v)
    if (i == idx) {
      x += c;
      return;
    }
  v.emplace_back(idx, c);
}

inline void svec_prune(SVec& v) {
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](const std::pair<int, Rat>& e) { return e.second == 0; }),
          v.end());
}

class Mod {
 public:
  explicit Mod(SemisimpleSpec spec) : spec_(std::move(spec)) {}
  virtual ~Mod() = default;

  const SemisimpleSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  const FW& weight(int i) const { return weights_[i]; }
  virtual std::string basis_name(int i) const { return "b" + std::to_string(i); }

  // Accumulates the action of a Chevalley generator on basis vector i.
  virtual void apply(const Gen& g, int i, SVec& out) const = 0;

  SVec apply_vec(const Gen& g, const SVec& v) const {
    SVec out;
    for (auto& [i, c] : v) {
      SVec t;
      apply(g, i, t);
      for (auto& [j, d] : t) svec_add(out, j, c * d);
    }
    svec_prune(out);
    return out;
  }

  static const std::vector<int>& empty_list() {
    static const std::vector<int> e;
    return e;
  }
  const std::vector<int>& weight_space(const FW& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? empty_list() : it->second;
  }
  std::vector<FW> weight_list() const {
    std::vector<FW> out;
    out.reserve(index_.size());
    for (auto& [w, v] : index_) out.push_back(w);
    return out;
  }

  // h-degree of a full weight, doubled: sum of first coordinates.
  int hdeg2(const FW& w) const {
    int d = 0, off = 0;
    for (int s = 0; s < spec_.count(); ++s) {
      d += w[off];
      off += spec_.at(s).rank;
    }
    return d;
  }

 protected:
  void set_weights(std::vector<FW> w) {
    weights_ = std::move(w);
    index_.clear();
    for (int i = 0; i < dim(); ++i) index_[weights_[i]].push_back(i);
  }

  SemisimpleSpec spec_;
  std::vector<FW> weights_;
  std::unordered_map<FW, std::vector<int>, FWHash> index_;
};

// --- standard module -------------------------------------------------------

// Basis order: e_1..e_m, e_{-1}..e_{-m} [, e_0 for odd n].
class StandardModule : public Mod {
 public:
  explicit StandardModule(SimpleLieType t)
      : Mod(SemisimpleSpec{{t}}), t_(t) {
    const int m = t.rank;
    std::vector<FW> w;
    for (int i = 0; i < m; ++i) {
      FW x(m, 0);
      x[i] = 2;
      w.push_back(x);
    }
    for (int i = 0; i < m; ++i) {
      FW x(m, 0);
      x[i] = -2;
      w.push_back(x);
    }
    if (t.family == Family::B) w.push_back(FW(m, 0));
    set_weights(std::move(w));
  }

  const SimpleLieType& type() const { return t_; }
  int m() const { return t_.rank; }

  // index <-> signed label a in {1..m, -1..-m, 0}
  int index_of_label(int a) const {
    const int m = t_.rank;
    if (a > 0) return a - 1;
    if (a < 0) return m + (-a) - 1;
    return 2 * m;
  }
  int label_of_index(int i) const {
    const int m = t_.rank;
    if (i < m) return i + 1;
    if (i < 2 * m) return -(i - m + 1);
    return 0;
  }
  // (e_a, e_b) = delta_{a,-b}
  Rat form(int i, int j) const {
    return label_of_index(i) == -label_of_index(j) ? Rat(1) : Rat(0);
  }

  std::string basis_name(int i) const override {
    int a = label_of_index(i);
    return "e" + std::string(a < 0 ? "-" : "") + std::to_string(std::abs(a));
  }

  void apply(const Gen& g, int i, SVec& out) const override {
    // F_{a,b} e_c = delta_{b,c} e_a - delta_{-a,c} e_{-b}
    auto Fab = [&](int a, int b, const Rat& coeff) {
      int c = label_of_index(i);
      if (c == b) svec_add(out, index_of_label(a), coeff);
      if (c == -a) svec_add(out, index_of_label(-b), -coeff);
    };
    const int m = t_.rank;
    const int k = g.idx + 1;  // 1-based
    if (k < m) {
      if (g.raising)
        Fab(k, k + 1, 1);
      else
        Fab(k + 1, k, 1);
      return;
    }
    if (t_.family == Family::B) {
      if (g.raising)
        Fab(m, 0, 1);
      else
        Fab(0, m, 2);
    } else {
      if (g.raising)
        Fab(m - 1, -m, 1);
      else
        Fab(-m, m - 1, 1);
    }
  }

 private:
  SimpleLieType t_;
};

// --- exterior powers --------------------------------------------------------

class ExteriorPowerModule : public Mod {
 public:
  ExteriorPowerModule(std::shared_ptr<const Mod> base, int r)
      : Mod(base->spec()), base_(std::move(base)), r_(r) {
    if (r < 0 || r > base_->dim())
      throw std::domain_error("exterior power degree out of range");
    std::vector<int> subset(r);
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<FW> w;
    while (true) {
      subsets_.push_back(subset);
      FW x(base_->dim() ? base_->weight(0).size() : 0, 0);
      if (r == 0) x = FW(total_rank(), 0);
      for (int i : subset) {
        const FW& wi = base_->weight(i);
        if (x.empty()) x = FW(wi.size(), 0);
        for (size_t k = 0; k < wi.size(); ++k) x[k] += wi[k];
      }
      if (x.empty()) x = FW(total_rank(), 0);
      w.push_back(x);
      // next subset
      int k = r - 1;
      while (k >= 0 && subset[k] == base_->dim() - r + k) --k;
      if (k < 0) break;
      ++subset[k];
      for (int j = k + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
    }
    for (int i = 0; i < static_cast<int>(subsets_.size()); ++i)
      lookup_[subsets_[i]] = i;
    set_weights(std::move(w));
  }

  int degree() const { return r_; }
  const Mod& base() const { return *base_; }
  const std::vector<int>& subset(int i) const { return subsets_[i]; }

  int index_of_subset_signed(std::vector<int> s, int& sign) const {
    sign = 1;
    for (size_t i = 1; i < s.size(); ++i)
      for (size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
        std::swap(s[j], s[j - 1]);
        sign = -sign;
      }
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) return -1;
    auto it = lookup_.find(s);
    if (it == lookup_.end()) return -1;
    return it->second;
  }

  std::string basis_name(int i) const override {
    if (subsets_[i].empty()) return "1";
    std::string s;
    for (int k : subsets_[i]) {
      if (!s.empty()) s += "^";
      s += base_->basis_name(k);
    }
    return s;
  }

  void apply(const Gen& g, int i, SVec& out) const override {
    const auto& sub = subsets_[i];
    for (size_t k = 0; k < sub.size(); ++k) {
      SVec t;
      base_->apply(g, sub[k], t);
      for (auto& [j, c] : t) {
        std::vector<int> ns = sub;
        ns[k] = j;
        int sign;
        int idx = index_of_subset_signed(ns, sign);
        if (idx >= 0) svec_add(out, idx, c * sign);
      }
    }
  }

 private:
  int total_rank() const {
    int r = 0;
    for (auto& t : spec_.summands) r += t.rank;
    return r;
  }
  std::shared_ptr<const Mod> base_;
  int r_;
  std::vector<std::vector<int>> subsets_;
  std::map<std::vector<int>, int> lookup_;
};

// wedge-insert and contraction on exterior powers of a standard module;
// identities: i_v i_w + i_w i_v = 0, m_v m_w + m_w m_v = 0,
//             i_v m_w + m_w i_v = (v,w).
inline SVec wedge_insert(const StandardModule& V, const ExteriorPowerModule& from,
                         const ExteriorPowerModule& to, int v, const SVec& x) {
  if (to.degree() != from.degree() + 1)
    throw std::domain_error("wedge_insert: degree mismatch");
  SVec out;
  for (auto& [i, c] : x) {
    std::vector<int> s = from.subset(i);
    s.insert(s.begin(), v);
    int sign;
    int idx = to.index_of_subset_signed(s, sign);
    if (idx >= 0) svec_add(out, idx, c * sign);
  }
  (void)V;
  return out;
}

inline SVec contract(const StandardModule& V, const ExteriorPowerModule& from,
                     const ExteriorPowerModule& to, int v, const SVec& x) {
  if (to.degree() != from.degree() - 1)
    throw std::domain_error("contract: degree mismatch");
  SVec out;
  for (auto& [i, c] : x) {
    const auto& s = from.subset(i);
    for (size_t k = 0; k < s.size(); ++k) {
      Rat pair = V.form(v, s[k]);
      if (pair == 0) continue;
      std::vector<int> ns;
      for (size_t j = 0; j < s.size(); ++j)
        if (j != k) ns.push_back(s[j]);
      int sign;
      int idx = to.index_of_subset_signed(ns, sign);
      if (idx >= 0) svec_add(out, idx, c * pair * (k % 2 == 0 ? 1 : -1) * sign);
    }
  }
  return out;
}

// T_{v^w} = m_v i_w - m_w i_v acting on Lambda^r.
inline std::vector<SVec> so_action_on_exterior(const StandardModule& V,
                                               const ExteriorPowerModule& lr,
                                               int v, int w) {
  ExteriorPowerModule down(std::make_shared<StandardModule>(V), lr.degree() - 1);
  std::vector<SVec> cols(lr.dim());
  for (int i = 0; i < lr.dim(); ++i) {
    SVec x{{i, Rat(1)}};
    SVec a = wedge_insert(V, down, lr, v, contract(V, lr, down, w, x));
    SVec b = wedge_insert(V, down, lr, w, contract(V, lr, down, v, x));
    SVec r = a;
    for (auto& [j, c] : b) svec_add(r, j, -c);
    cols[i] = r;
  }
  return cols;
}

// --- spinor modules ----------------------------------------------------------

// Fock model on subsets of {0..m-1}; weight coordinate i is +1/2 when i is
// occupied.  For D only one parity of the minus-count is kept:
// Gamma^+ = even number of minus signs (contains the Fock vacuum iff m even).
class SpinorModule : public Mod {
 public:
  SpinorModule(SimpleLieType t, int chirality /* 0 for B, +-1 for D */)
      : Mod(SemisimpleSpec{{t}}), t_(t), chi_(chirality) {
    const int m = t.rank;
    if (t.family == Family::B && chi_ != 0)
      throw std::domain_error("chirality given for odd n");
    if (t.family == Family::D && chi_ == 0)
      throw std::domain_error("family D needs a chirality");
    std::vector<FW> w;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int minus = m - __builtin_popcount(mask);
      if (t.family == Family::D) {
        bool even = (minus % 2 == 0);
        if (even != (chi_ > 0)) continue;
      }
      masks_.push_back(mask);
      FW x(m);
      for (int i = 0; i < m; ++i) x[i] = (mask >> i) & 1 ? 1 : -1;
      w.push_back(x);
    }
    for (int i = 0; i < static_cast<int>(masks_.size()); ++i) pos_[masks_[i]] = i;
    set_weights(std::move(w));
  }

  std::string basis_name(int i) const override {
    std::string s = "|";
    for (int k = 0; k < t_.rank; ++k) s += ((masks_[i] >> k) & 1) ? '+' : '-';
    return s + ">";
  }

  void apply(const Gen& g, int i, SVec& out) const override {
    const int m = t_.rank;
    const unsigned mask = masks_[i];
    auto count_below = [&](unsigned msk, int k) {
      return __builtin_popcount(msk & ((1u << k) - 1));
    };
    auto emit = [&](unsigned nm, int sign) {
      auto it = pos_.find(nm);
      if (it != pos_.end()) svec_add(out, it->second, Rat(sign));
    };
    const int k = g.idx;  // 0-based
    if (k < m - 1) {
      // e_k = psi_k^+ psi_{k+1}; f_k = psi_{k+1}^+ psi_k
      int from = g.raising ? k + 1 : k;
      int to = g.raising ? k : k + 1;
      if (!((mask >> from) & 1) || ((mask >> to) & 1)) return;
      unsigned m1 = mask & ~(1u << from);
      int s1 = count_below(mask, from) % 2 ? -1 : 1;
      int s2 = count_below(m1, to) % 2 ? -1 : 1;
      emit(m1 | (1u << to), s1 * s2);
      return;
    }
    if (t_.family == Family::B) {
      // e_m = psi_{m-1}^+ Theta, f_m = Theta psi_{m-1}
      int occ = (mask >> (m - 1)) & 1;
      int sz = __builtin_popcount(mask);
      if (g.raising) {
        if (occ) return;
        int s = (sz % 2 ? -1 : 1) * (count_below(mask, m - 1) % 2 ? -1 : 1);
        emit(mask | (1u << (m - 1)), s);
      } else {
        if (!occ) return;
        int s1 = count_below(mask, m - 1) % 2 ? -1 : 1;
        int s2 = (sz - 1) % 2 ? -1 : 1;
        emit(mask & ~(1u << (m - 1)), s1 * s2);
      }
      return;
    }
    // D: e_m = psi_{m-2}^+ psi_{m-1}^+, f_m = psi_{m-1} psi_{m-2}
    int a = m - 2, b = m - 1;
    if (g.raising) {
      if (((mask >> a) & 1) || ((mask >> b) & 1)) return;
      int s1 = count_below(mask, b) % 2 ? -1 : 1;
      unsigned m1 = mask | (1u << b);
      int s2 = count_below(m1, a) % 2 ? -1 : 1;
      emit(m1 | (1u << a), s1 * s2);
    } else {
      if (!((mask >> a) & 1) || !((mask >> b) & 1)) return;
      int s1 = count_below(mask, a) % 2 ? -1 : 1;
      unsigned m1 = mask & ~(1u << a);
      int s2 = count_below(m1, b) % 2 ? -1 : 1;
      emit(m1 & ~(1u << b), s1 * s2);
    }
  }

 private:
  SimpleLieType t_;
  int chi_;
  std::vector<unsigned> masks_;
  std::unordered_map<unsigned, int> pos_;
};

// --- structural combinators ---------------------------------------------------

class TrivialModule : public Mod {
 public:
  explicit TrivialModule(const SemisimpleSpec& spec) : Mod(spec) {
    int r = 0;
    for (auto& t : spec.summands) r += t.rank;
    set_weights({FW(r, 0)});
  }
  std::string basis_name(int) const override { return "1"; }
  void apply(const Gen&, int, SVec&) const override {}
};

class DirectSumModule : public Mod {
 public:
  explicit DirectSumModule(std::vector<std::shared_ptr<const Mod>> parts)
      : Mod(parts.at(0)->spec()), parts_(std::move(parts)) {
    std::vector<FW> w;
    for (auto& p : parts_) {
      if (!(p->spec() == spec_))
        throw std::domain_error("direct sum over mismatched specs");
      offsets_.push_back(static_cast<int>(w.size()));
      for (int i = 0; i < p->dim(); ++i) w.push_back(p->weight(i));
    }
    set_weights(std::move(w));
  }
  std::string basis_name(int i) const override {
    auto [k, j] = locate(i);
    return parts_[k]->basis_name(j) + "@" + std::to_string(k);
  }
  void apply(const Gen& g, int i, SVec& out) const override {
    auto [k, j] = locate(i);
    SVec t;
    parts_[k]->apply(g, j, t);
    for (auto& [l, c] : t) svec_add(out, offsets_[k] + l, c);
  }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int offset(int k) const { return offsets_[k]; }
  const Mod& part(int k) const { return *parts_[k]; }

 private:
  std::pair<int, int> locate(int i) const {
    int k = static_cast<int>(offsets_.size()) - 1;
    while (offsets_[k] > i) --k;
    return {k, i - offsets_[k]};
  }
  std::vector<std::shared_ptr<const Mod>> parts_;
  std::vector<int> offsets_;
};

// Tensor product over the same spec (both factors full g_ss-modules).
class TensorModule : public Mod {
 public:
  TensorModule(std::shared_ptr<const Mod> a, std::shared_ptr<const Mod> b)
      : Mod(a->spec()), a_(std::move(a)), b_(std::move(b)) {
    if (!(a_->spec() == b_->spec()))
      throw std::domain_error("tensor over mismatched specs");
    std::vector<FW> w;
    w.reserve(static_cast<size_t>(a_->dim()) * b_->dim());
    for (int i = 0; i < a_->dim(); ++i)
      for (int j = 0; j < b_->dim(); ++j) {
        FW x = a_->weight(i);
        const FW& y = b_->weight(j);
        for (size_t k = 0; k < x.size(); ++k) x[k] += y[k];
        w.push_back(std::move(x));
      }
    set_weights(std::move(w));
  }
  int encode(int i, int j) const { return i * b_->dim() + j; }
  std::pair<int, int> decode(int x) const { return {x / b_->dim(), x % b_->dim()}; }
  const Mod& left() const { return *a_; }
  const Mod& right() const { return *b_; }
  std::string basis_name(int x) const override {
    auto [i, j] = decode(x);
    return a_->basis_name(i) + "(x)" + b_->basis_name(j);
  }
  void apply(const Gen& g, int x, SVec& out) const override {
    auto [i, j] = decode(x);
    SVec t;
    a_->apply(g, i, t);
    for (auto& [l, c] : t) svec_add(out, encode(l, j), c);
    t.clear();
    b_->apply(g, j, t);
    for (auto& [l, c] : t) svec_add(out, encode(i, l), c);
  }

 private:
  std::shared_ptr<const Mod> a_, b_;
};

// Lambda^2 of a module, basis pairs (i < j).
class Wedge2Module : public Mod {
 public:
  explicit Wedge2Module(std::shared_ptr<const Mod> base)
      : Mod(base->spec()), base_(std::move(base)) {
    std::vector<FW> w;
    for (int i = 0; i < base_->dim(); ++i)
      for (int j = i + 1; j < base_->dim(); ++j) {
        pairs_.emplace_back(i, j);
        FW x = base_->weight(i);
        const FW& y = base_->weight(j);
        for (size_t k = 0; k < x.size(); ++k) x[k] += y[k];
        w.push_back(std::move(x));
      }
    for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) pos_[pairs_[p]] = p;
    set_weights(std::move(w));
  }
  const Mod& base() const { return *base_; }
  const std::pair<int, int>& pair(int p) const { return pairs_[p]; }
  // signed lookup of (i, j); -1 when i == j
  int index_of_pair_signed(int i, int j, int& sign) const {
    sign = 1;
    if (i == j) return -1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    auto it = pos_.find({i, j});
    return it == pos_.end() ? -1 : it->second;
  }
  std::string basis_name(int p) const override {
    return base_->basis_name(pairs_[p].first) + "^" + base_->basis_name(pairs_[p].second);
  }
  void apply(const Gen& g, int p, SVec& out) const override {
    auto [i, j] = pairs_[p];
    SVec t;
    base_->apply(g, i, t);
    for (auto& [l, c] : t) {
      int sign, idx = index_of_pair_signed(l, j, sign);
      if (idx >= 0) svec_add(out, idx, c * sign);
    }
    t.clear();
    base_->apply(g, j, t);
    for (auto& [l, c] : t) {
      int sign, idx = index_of_pair_signed(i, l, sign);
      if (idx >= 0) svec_add(out, idx, c * sign);
    }
  }

 private:
  std::shared_ptr<const Mod> base_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> pos_;
};

// S^2 of a module, basis pairs (i <= j).
class Sym2Module : public Mod {
 public:
  explicit Sym2Module(std::shared_ptr<const Mod> base)
      : Mod(base->spec()), base_(std::move(base)) {
    std::vector<FW> w;
    for (int i = 0; i < base_->dim(); ++i)
      for (int j = i; j < base_->dim(); ++j) {
        pairs_.emplace_back(i, j);
        FW x = base_->weight(i);
        const FW& y = base_->weight(j);
        for (size_t k = 0; k < x.size(); ++k) x[k] += y[k];
        w.push_back(std::move(x));
      }
    for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) pos_[pairs_[p]] = p;
    set_weights(std::move(w));
  }
  const Mod& base() const { return *base_; }
  const std::pair<int, int>& pair(int p) const { return pairs_[p]; }
  int index_of_pair(int i, int j) const {
    if (i > j) std::swap(i, j);
    return pos_.at({i, j});
  }
  std::string basis_name(int p) const override {
    return base_->basis_name(pairs_[p].first) + "." + base_->basis_name(pairs_[p].second);
  }
  void apply(const Gen& g, int p, SVec& out) const override {
    auto [i, j] = pairs_[p];
    SVec t;
    base_->apply(g, i, t);
    for (auto& [l, c] : t) svec_add(out, index_of_pair(l, j), c);
    t.clear();
    base_->apply(g, j, t);
    for (auto& [l, c] : t) svec_add(out, index_of_pair(i, l), c);
  }

 private:
  std::shared_ptr<const Mod> base_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> pos_;
};

// External product across summands: factor s is a module over summand s alone.
class BoxModule : public Mod {
 public:
  BoxModule(SemisimpleSpec spec, std::vector<std::shared_ptr<const Mod>> factors)
      : Mod(std::move(spec)), factors_(std::move(factors)) {
    if (static_cast<int>(factors_.size()) != spec_.count())
      throw std::domain_error("box product arity mismatch");
    std::vector<FW> w;
    std::vector<int> idx(factors_.size(), 0);
    strides_.assign(factors_.size(), 1);
    for (int s = static_cast<int>(factors_.size()) - 2; s >= 0; --s)
      strides_[s] = strides_[s + 1] * factors_[s + 1]->dim();
    int total = strides_[0] * factors_[0]->dim();
    for (int x = 0; x < total; ++x) {
      FW full;
      int rem = x;
      for (size_t s = 0; s < factors_.size(); ++s) {
        int i = rem / strides_[s];
        rem %= strides_[s];
        const FW& ws = factors_[s]->weight(i);
        full.insert(full.end(), ws.begin(), ws.end());
      }
      w.push_back(std::move(full));
    }
    set_weights(std::move(w));
  }
  int factor_index(int x, int s) const { return (x / strides_[s]) % wrap(s); }
  const Mod& factor(int s) const { return *factors_[s]; }
  std::string basis_name(int x) const override {
    std::string out;
    for (size_t s = 0; s < factors_.size(); ++s) {
      if (s) out += "[x]";
      out += factors_[s]->basis_name(factor_index(x, static_cast<int>(s)));
    }
    return out;
  }
  void apply(const Gen& g, int x, SVec& out) const override {
    int s = g.summand;
    int i = factor_index(x, s);
    SVec t;
    Gen local{0, g.idx, g.raising};
    factors_[s]->apply(local, i, t);
    for (auto& [l, c] : t) svec_add(out, x + (l - i) * strides_[s], c);
  }

 private:
  int wrap(int s) const { return factors_[s]->dim(); }
  std::vector<std::shared_ptr<const Mod>> factors_;
  std::vector<int> strides_;
};

// Span-submodule: an explicit invariant subspace of a parent module, with its
// own basis (weight-homogeneous vectors).  Generator action re-expresses
// parent images in the span basis.
class SubModule : public Mod {
 public:
  SubModule(std::shared_ptr<const Mod> parent, std::vector<SVec> basis)
      : Mod(parent->spec()), parent_(std::move(parent)), basis_(std::move(basis)) {
    std::vector<FW> w;
    for (auto& v : basis_) {
      if (v.empty()) throw std::domain_error("SubModule: zero basis vector");
      w.push_back(parent_->weight(v[0].first));
    }
    set_weights(std::move(w));
    std::map<FW, std::vector<int>> members;
    for (int i = 0; i < dim(); ++i) members[weights_[i]].push_back(i);
    for (auto& [wt, ids] : members) {
      Ech& e = ech_[wt];
      const auto& pidx = parent_->weight_space(wt);
      e.dim = static_cast<int>(pidx.size());
      for (size_t k = 0; k < pidx.size(); ++k) e.pos[pidx[k]] = static_cast<int>(k);
      e.row_ids = ids;
      std::vector<std::vector<Rat>> rows;
      for (int i : ids) {
        std::vector<Rat> dense(e.dim, Rat(0));
        for (auto& [pi, c] : basis_[i]) dense[e.pos.at(pi)] = c;
        rows.push_back(std::move(dense));
      }
      e.build(std::move(rows));
    }
  }

  const Mod& parent() const { return *parent_; }
  const SVec& basis_vector(int i) const { return basis_[i]; }

  // Express a weight-homogeneous parent vector in the submodule basis.
  SVec express(const SVec& img) const {
    SVec out;
    if (img.empty()) return out;
    const FW& wt = parent_->weight(img[0].first);
    auto it = ech_.find(wt);
    if (it == ech_.end())
      throw std::logic_error("SubModule: vector outside the submodule");
    std::vector<Rat> coords = it->second.solve(img);
    for (size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) svec_add(out, it->second.row_ids[k], coords[k]);
    return out;
  }

  void apply(const Gen& g, int i, SVec& out) const override {
    SVec img = parent_->apply_vec(g, basis_[i]);
    if (img.empty()) return;
    for (auto& [j, c] : express(img)) svec_add(out, j, c);
  }

 private:
  struct Ech {
    int dim = 0;
    std::unordered_map<int, int> pos;  // parent basis index -> dense position
    std::vector<std::vector<Rat>> ech; // echelonized rows: ech = T * original
    std::vector<std::vector<Rat>> T;
    std::vector<int> row_ids;          // original row order -> submodule index
    std::vector<int> pivots;

    void build(std::vector<std::vector<Rat>> rows) {
      const size_t k = rows.size();
      T.assign(k, std::vector<Rat>(k, Rat(0)));
      for (size_t i = 0; i < k; ++i) T[i][i] = 1;
      ech = std::move(rows);
      size_t r = 0;
      for (int c = 0; c < dim && r < k; ++c) {
        size_t sel = r;
        while (sel < k && ech[sel][c] == 0) ++sel;
        if (sel == k) continue;
        std::swap(ech[r], ech[sel]);
        std::swap(T[r], T[sel]);
        for (size_t i = 0; i < k; ++i) {
          if (i == r || ech[i][c] == 0) continue;
          Rat f = ech[i][c] / ech[r][c];
          for (int j = 0; j < dim; ++j) ech[i][j] -= f * ech[r][j];
          for (size_t j = 0; j < k; ++j) T[i][j] -= f * T[r][j];
        }
        pivots.push_back(c);
        ++r;
      }
      if (r != k) throw std::logic_error("SubModule: dependent basis");
    }

    std::vector<Rat> solve(const SVec& sparse_target) const {
      std::vector<Rat> t(dim, Rat(0));
      for (auto& [pi, c] : sparse_target) t[pos.at(pi)] = c;
      const size_t k = ech.size();
      std::vector<Rat> y(k, Rat(0));
      for (size_t r = 0; r < k; ++r) {
        int c = pivots[r];
        if (t[c] == 0) continue;
        Rat f = t[c] / ech[r][c];
        y[r] = f;
        for (int j = 0; j < dim; ++j) t[j] -= f * ech[r][j];
      }
      for (int j = 0; j < dim; ++j)
        if (t[j] != 0) throw std::logic_error("SubModule: not in span");
      std::vector<Rat> x(k, Rat(0));
      for (size_t r = 0; r < k; ++r)
        if (y[r] != 0)
          for (size_t j = 0; j < k; ++j) x[j] += y[r] * T[r][j];
      return x;
    }
  };

  std::shared_ptr<const Mod> parent_;
  std::vector<SVec> basis_;
  std::map<FW, Ech> ech_;
};

}  // namespace tkk
