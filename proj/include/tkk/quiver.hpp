#pragma once

// Ext quivers of g-mod_1 and g-mod_{1/2}, quiver surgery (trivial-vertex
// deletion, quiver double), recognition of simply-laced Dynkin and extended
// Dynkin shapes, and the admissibility test.
//
// Arrow convention: mult(L' -> L) is the multiplicity of L in (L' (x) R)^sh.
// The figures in the source material draw some quivers with the opposite
// (Ext^1(L_j, L_i)) orientation; underlying graphs and all verdicts agree.

#include "tkk/chars.hpp"
#include "tkk/liespec.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tkk {

struct Quiver {
  std::vector<SimpleLabel> vertices;
  std::vector<std::string> names;              // pretty vertex names
  std::vector<std::vector<long long>> arrows;  // arrows[i][j] = mult of i -> j
  std::optional<int> tr_index;                 // position of tr, if present

  int size() const { return static_cast<int>(vertices.size()); }

  long long arrow_count() const {
    long long n = 0;
    for (auto& row : arrows)
      for (long long a : row) n += a;
    return n;
  }

  int index_of(const SimpleLabel& l) const {
    for (int i = 0; i < size(); ++i)
      if (vertices[i] == l) return i;
    return -1;
  }
  int index_of_name(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == n) return i;
    return -1;
  }
};

enum class QuiverCategory { Mod1, ModHalf };

inline Quiver ext_quiver(const LieSpec& g, QuiverCategory cat) {
  check_liespec(g);
  if (g.rad.R.empty()) throw std::domain_error("ext_quiver needs a nonzero radical");
  Quiver q;
  q.vertices = cat == QuiverCategory::Mod1 ? simples_mod1(g.ss) : simples_mod_half(g.ss);
  for (auto& v : q.vertices) {
    q.names.push_back(label_pretty(g.ss, v));
    if (v.trivial) q.tr_index = q.index_of(v);
  }
  const int n = q.size();
  q.arrows.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    const SimpleLabel& src = q.vertices[i];
    ProductDecomp total;
    for (auto& [rw, rm] : g.rad.R) {
      ProductWeight base =
          src.trivial ? ProductWeight::trivial(g.ss) : src.weight;
      ProductDecomp t = product_tensor(g.ss, base, rw);
      for (auto& [w, m] : t) decomp_add(total, w, m * rm);
    }
    total = sh_truncate(g.ss, total);
    for (int j = 0; j < n; ++j) {
      const SimpleLabel& dst = q.vertices[j];
      ProductWeight key = dst.trivial ? ProductWeight::trivial(g.ss) : dst.weight;
      auto it = total.find(key);
      if (it != total.end()) q.arrows[i][j] = it->second;
    }
  }
  return q;
}

struct RemoveTrivialResult {
  Quiver quiver;
  bool removed;
};

inline RemoveTrivialResult remove_trivial(const Quiver& q) {
  if (!q.tr_index) return {q, false};
  int t = *q.tr_index;
  Quiver out;
  for (int i = 0; i < q.size(); ++i) {
    if (i == t) continue;
    out.vertices.push_back(q.vertices[i]);
    out.names.push_back(q.names[i]);
  }
  const int n = out.size();
  out.arrows.assign(n, std::vector<long long>(n, 0));
  for (int i = 0, io = 0; i < q.size(); ++i) {
    if (i == t) continue;
    for (int j = 0, jo = 0; j < q.size(); ++j) {
      if (j == t) continue;
      out.arrows[io][jo] = q.arrows[i][j];
      ++jo;
    }
    ++io;
  }
  return {out, true};
}

// Quiver double: vertices X+, X-; an arrow X -> Y becomes X- -> Y+.
inline Quiver double_quiver(const Quiver& q) {
  Quiver d;
  const int n = q.size();
  for (int i = 0; i < n; ++i) {
    d.vertices.push_back(q.vertices[i]);
    d.names.push_back(q.names[i] + "+");
  }
  for (int i = 0; i < n; ++i) {
    d.vertices.push_back(q.vertices[i]);
    d.names.push_back(q.names[i] + "-");
  }
  d.arrows.assign(2 * n, std::vector<long long>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d.arrows[n + i][j] = q.arrows[i][j];  // X- -> Y+
  return d;
}

// --- Dynkin / extended Dynkin recognition --------------------------------

enum class DiagramClass { Dynkin, ExtendedDynkin, Neither };

struct ComponentVerdict {
  DiagramClass cls;
  std::string name;            // "A4", "D~5", ...
  std::vector<int> vertices;   // indices into the classified quiver
};

namespace detail {

struct UGraph {
  int n;
  std::vector<std::vector<long long>> adj;  // symmetric, loops on diagonal
};

inline UGraph underlying_graph(const Quiver& q) {
  UGraph g;
  g.n = q.size();
  g.adj.assign(g.n, std::vector<long long>(g.n, 0));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j)
        g.adj[i][i] += q.arrows[i][i];
      else
        g.adj[i][j] += q.arrows[i][j] + q.arrows[j][i];
    }
  return g;
}

// Classify one connected component given by vertex list `comp`.
inline ComponentVerdict classify_component(const UGraph& g, std::vector<int> comp) {
  ComponentVerdict v;
  v.vertices = comp;
  const int k = static_cast<int>(comp.size());
  long long loops = 0, edges = 0;
  bool multi = false;
  for (int a = 0; a < k; ++a) {
    loops += g.adj[comp[a]][comp[a]];
    for (int b = a + 1; b < k; ++b) {
      long long e = g.adj[comp[a]][comp[b]];
      edges += e;
      if (e > 1) multi = true;
    }
  }
  // A single vertex with one loop is the affine A~0 diagram.
  if (loops > 0) {
    if (k == 1 && loops == 1 && edges == 0) {
      v.cls = DiagramClass::ExtendedDynkin;
      v.name = "A~0";
    } else {
      v.cls = DiagramClass::Neither;
      v.name = "loops";
    }
    return v;
  }
  if (multi) {
    if (k == 2 && edges == 2) {
      v.cls = DiagramClass::ExtendedDynkin;
      v.name = "A~1";
    } else {
      v.cls = DiagramClass::Neither;
      v.name = "multi-edge";
    }
    return v;
  }
  if (k == 1) {
    v.cls = DiagramClass::Dynkin;
    v.name = "A1";
    return v;
  }
  std::vector<int> deg(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && g.adj[comp[a]][comp[b]] > 0) deg[a]++;
  int maxdeg = *std::max_element(deg.begin(), deg.end());

  if (edges == k) {
    // unique cycle: affine A~{k-1} iff the whole component is the cycle
    if (maxdeg == 2) {
      v.cls = DiagramClass::ExtendedDynkin;
      v.name = "A~" + std::to_string(k - 1);
    } else {
      v.cls = DiagramClass::Neither;
      v.name = "cycle-with-branches";
    }
    return v;
  }
  if (edges != k - 1) {
    v.cls = DiagramClass::Neither;
    v.name = "not-a-tree";
    return v;
  }

  // Tree shapes.
  if (maxdeg <= 2) {
    v.cls = DiagramClass::Dynkin;
    v.name = "A" + std::to_string(k);
    return v;
  }
  if (maxdeg >= 5) {
    v.cls = DiagramClass::Neither;
    v.name = "degree>=5";
    return v;
  }
  std::vector<int> hubs;
  for (int a = 0; a < k; ++a)
    if (deg[a] >= 3) hubs.push_back(a);

  auto branch_lengths = [&](int hub) {
    // walk away from hub along each neighbour until a leaf or another hub
    std::vector<int> lens;
    for (int b = 0; b < k; ++b) {
      if (b == hub || g.adj[comp[hub]][comp[b]] == 0) continue;
      int prev = hub, cur = b, len = 1;
      while (deg[cur] == 2) {
        for (int c = 0; c < k; ++c) {
          if (c != prev && g.adj[comp[cur]][comp[c]] > 0) {
            prev = cur;
            cur = c;
            ++len;
            break;
          }
        }
      }
      lens.push_back(deg[cur] == 1 ? len : -1);  // -1: reached another hub
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  };

  if (hubs.size() == 1) {
    int hub = hubs[0];
    auto lens = branch_lengths(hub);
    if (deg[hub] == 4) {
      if (lens == std::vector<int>{1, 1, 1, 1}) {
        v.cls = DiagramClass::ExtendedDynkin;
        v.name = "D~4";
      } else {
        v.cls = DiagramClass::Neither;
        v.name = "degree-4";
      }
      return v;
    }
    // degree 3: (a<=b<=c)
    int a = lens[0], b = lens[1], c = lens[2];
    auto done = [&](DiagramClass cls, std::string name) {
      v.cls = cls;
      v.name = std::move(name);
      return v;
    };
    if (a == 1 && b == 1) return done(DiagramClass::Dynkin, "D" + std::to_string(k));
    if (a == 1 && b == 2 && c == 2) return done(DiagramClass::Dynkin, "E6");
    if (a == 1 && b == 2 && c == 3) return done(DiagramClass::Dynkin, "E7");
    if (a == 1 && b == 2 && c == 4) return done(DiagramClass::Dynkin, "E8");
    if (a == 2 && b == 2 && c == 2) return done(DiagramClass::ExtendedDynkin, "E~6");
    if (a == 1 && b == 3 && c == 3) return done(DiagramClass::ExtendedDynkin, "E~7");
    if (a == 1 && b == 2 && c == 5) return done(DiagramClass::ExtendedDynkin, "E~8");
    return done(DiagramClass::Neither, "tree");
  }
  if (hubs.size() == 2 && deg[hubs[0]] == 3 && deg[hubs[1]] == 3) {
    // D~n: both hubs carry two pendant leaves and are joined by a path
    auto l0 = branch_lengths(hubs[0]);
    auto l1 = branch_lengths(hubs[1]);
    auto two_leaves = [](const std::vector<int>& l) {
      int leaves1 = 0;
      for (int x : l)
        if (x == 1) leaves1++;
      return leaves1 >= 2;
    };
    if (two_leaves(l0) && two_leaves(l1)) {
      v.cls = DiagramClass::ExtendedDynkin;
      v.name = "D~" + std::to_string(k - 1);
      return v;
    }
  }
  v.cls = DiagramClass::Neither;
  v.name = "tree";
  return v;
}

}  // namespace detail

inline std::vector<ComponentVerdict> dynkin_classify(const Quiver& q) {
  detail::UGraph g = detail::underlying_graph(q);
  std::vector<int> comp_id(g.n, -1);
  std::vector<ComponentVerdict> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp_id[s] >= 0) continue;
    std::vector<int> comp{s};
    comp_id[s] = s;
    for (size_t head = 0; head < comp.size(); ++head) {
      int u = comp[head];
      for (int vtx = 0; vtx < g.n; ++vtx)
        if (comp_id[vtx] < 0 && vtx != u && g.adj[u][vtx] > 0) {
          comp_id[vtx] = s;
          comp.push_back(vtx);
        }
    }
    out.push_back(detail::classify_component(g, comp));
  }
  return out;
}

struct AdmissibleResult {
  bool admissible;
  // when false: names of the vertices of the offending double-quiver
  // component together with its shape tag
  std::vector<std::string> witness_vertices;
  std::string witness_shape;
};

inline AdmissibleResult admissible(const LieSpec& g) {
  Quiver q = ext_quiver(g, QuiverCategory::Mod1);
  Quiver qp = remove_trivial(q).quiver;
  Quiver d = double_quiver(qp);
  for (const ComponentVerdict& cv : dynkin_classify(d)) {
    if (cv.cls == DiagramClass::Neither) {
      AdmissibleResult r;
      r.admissible = false;
      for (int v : cv.vertices) r.witness_vertices.push_back(d.names[v]);
      r.witness_shape = cv.name;
      return r;
    }
  }
  return {true, {}, ""};
}

// --- output ----------------------------------------------------------------

inline std::string quiver_dot(const Quiver& q, const std::string& graph_name = "Q") {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (int i = 0; i < q.size(); ++i) {
    os << "  v" << i << " [label=\"" << q.names[i] << "\"";
    if (q.tr_index && *q.tr_index == i) os << ", style=dashed";
    os << "];\n";
  }
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      if (q.arrows[i][j] == 0) continue;
      bool dashed = q.tr_index && (*q.tr_index == i || *q.tr_index == j);
      os << "  v" << i << " -> v" << j;
      os << " [";
      if (q.arrows[i][j] > 1) os << "label=\"" << q.arrows[i][j] << "\"";
      if (dashed) os << (q.arrows[i][j] > 1 ? ", " : "") << "style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace tkk
