#pragma once

// Tits forms of presentations, exhaustive weak-non-negativity checks over a
// bounded box, and exact verification of sum-of-squares rewriting
// certificates (which upgrade a bounded verdict to an unconditional one).

#include "tkk/numeric.hpp"

#include <string>
#include <vector>

namespace tkk {

// q(x) = sum x_i^2 - sum_{i->j arrow} x_i x_j + sum g(i,j) x_i x_j,
// stored as a symmetric rational matrix M with q(x) = x^T M x.
struct TitsForm {
  std::vector<std::string> vertex_names;
  std::vector<std::vector<Rat>> m;

  int size() const { return static_cast<int>(m.size()); }

  Rat eval(const std::vector<long long>& x) const {
    Rat q = 0;
    for (int i = 0; i < size(); ++i) {
      if (x[i] == 0) continue;
      q += m[i][i] * x[i] * x[i];
      for (int j = i + 1; j < size(); ++j)
        if (x[j] != 0) q += 2 * m[i][j] * x[i] * x[j];
    }
    return q;
  }
};

inline TitsForm tits_form_from_data(std::vector<std::string> names,
                                    const std::vector<std::vector<long long>>& arrows,
                                    const std::vector<std::vector<long long>>& g) {
  TitsForm f;
  f.vertex_names = std::move(names);
  const int n = static_cast<int>(f.vertex_names.size());
  f.m.assign(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) f.m[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = Rat(-arrows[i][j]) + Rat(g[i][j]);
      if (i == j) {
        f.m[i][i] += c;  // loops and self-relations land on the diagonal
      } else {
        f.m[i][j] += c / 2;
        f.m[j][i] += c / 2;
      }
    }
  return f;
}

struct WeakNonNegVerdict {
  bool holds;
  long long bound;
  std::vector<long long> witness;  // nonempty iff !holds
  Rat witness_value;
};

// Exhaustive check of q(x) >= 0 over 0 <= x_i <= bound (x != 0).
inline WeakNonNegVerdict weakly_nonnegative(const TitsForm& f, long long bound) {
  if (bound < 1) throw std::domain_error("weakly_nonnegative: bound must be >= 1");
  const int n = f.size();
  std::vector<long long> x(n, 0);
  WeakNonNegVerdict v{true, bound, {}, Rat(0)};
  while (true) {
    int k = 0;
    while (k < n && x[k] == bound) x[k++] = 0;
    if (k == n) break;
    ++x[k];
    Rat q = f.eval(x);
    if (q < 0) {
      v.holds = false;
      v.witness = x;
      v.witness_value = q;
      return v;
    }
  }
  return v;
}

// A certificate that q is non-negative on the non-negative orthant:
//   q(x) = sum_k c_k * (l_k . x)^2 + sum_t d_t * x_{a_t} x_{b_t}
// with all c_k >= 0 and d_t >= 0.  Verification is an exact polynomial
// identity check; validity implies weak non-negativity outright.
struct SosCertificate {
  struct Square {
    Rat coeff;
    std::vector<Rat> linear;  // length = number of vertices
  };
  struct CrossTerm {
    Rat coeff;
    int a, b;
  };
  std::vector<Square> squares;
  std::vector<CrossTerm> cross;
};

inline bool verify_certificate(const TitsForm& f, const SosCertificate& cert,
                               std::string* why = nullptr) {
  const int n = f.size();
  std::vector<std::vector<Rat>> acc(n, std::vector<Rat>(n, 0));
  for (const auto& s : cert.squares) {
    if (s.coeff < 0) {
      if (why) *why = "negative square coefficient";
      return false;
    }
    if (static_cast<int>(s.linear.size()) != n) {
      if (why) *why = "square with wrong arity";
      return false;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc[i][j] += s.coeff * s.linear[i] * s.linear[j];
  }
  for (const auto& c : cert.cross) {
    if (c.coeff < 0) {
      if (why) *why = "negative cross-term coefficient";
      return false;
    }
    if (c.a == c.b) {
      if (why) *why = "cross term must join distinct variables";
      return false;
    }
    acc[c.a][c.b] += c.coeff / 2;
    acc[c.b][c.a] += c.coeff / 2;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (acc[i][j] != f.m[i][j]) {
        if (why)
          *why = "identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
  return true;
}

}  // namespace tkk
