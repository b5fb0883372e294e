#include "tkk/quiver.hpp"

#include "golden.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tkk;
using namespace tkk_golden;

TEST_CASE("ext quivers of the standard-radical algebras") {
  for (int m : {3, 4, 5}) {
    Quiver q = ext_quiver(spec_so_odd_V(m), QuiverCategory::Mod1);
    std::string why;
    INFO("so" << 2 * m + 1 << " |x V: " << why);
    CHECK(quiver_matches(q, q1_odd(m), &why));
  }
  for (int m : {4, 5, 6}) {
    Quiver q = ext_quiver(spec_so_even_V(m), QuiverCategory::Mod1);
    std::string why;
    INFO("so" << 2 * m << " |x V: " << why);
    CHECK(quiver_matches(q, q1_even(m), &why));
  }
}

TEST_CASE("ext quiver of so8 |x Lambda+ and its tau twin") {
  Quiver q = ext_quiver(spec_so8_lambda(+1), QuiverCategory::Mod1);
  std::string why;
  CHECK(quiver_matches(q, q2(), &why));
  INFO(why);
  // the Lambda^- algebra gives the tau-relabelled quiver
  Quiver qm = ext_quiver(spec_so8_lambda(-1), QuiverCategory::Mod1);
  auto swap_pm = [](std::string s) {
    for (auto& c : s)
      ;
    if (s == "L+") return std::string("L-");
    if (s == "L-") return std::string("L+");
    if (s == "G+") return std::string("G-");
    if (s == "G-") return std::string("G+");
    return s;
  };
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      int it = qm.index_of_name(swap_pm(q.names[i]));
      int jt = qm.index_of_name(swap_pm(q.names[j]));
      REQUIRE(it >= 0);
      REQUIRE(jt >= 0);
      CHECK(q.arrows[i][j] == qm.arrows[it][jt]);
    }
}

TEST_CASE("ext quivers of the mixed List A algebras") {
  std::string why;
  SECTION("so8+so8") {
    Quiver q = ext_quiver(spec_pair(8, +1, 8, +1), QuiverCategory::Mod1);
    CHECK(quiver_matches(q, q3(), &why));
    INFO(why);
  }
  SECTION("so8+so10") {
    Quiver q = ext_quiver(spec_pair(8, +1, 10, +1), QuiverCategory::Mod1);
    CHECK(quiver_matches(q, q4(), &why));
    INFO(why);
  }
  SECTION("so10+so10") {
    Quiver q = ext_quiver(spec_pair(10, +1, 10, +1), QuiverCategory::Mod1);
    CHECK(quiver_matches(q, q5(), &why));
    INFO(why);
  }
}

TEST_CASE("mod-half quivers") {
  SECTION("so9 |x V: one vertex with a loop") {
    Quiver q = ext_quiver(spec_so_odd_V(4), QuiverCategory::ModHalf);
    REQUIRE(q.size() == 1);
    CHECK(q.arrows[0][0] == 1);
  }
  SECTION("so10 |x V: two vertices swapped by the radical") {
    Quiver q = ext_quiver(spec_so_even_V(5), QuiverCategory::ModHalf);
    REQUIRE(q.size() == 2);
    int p = q.index_of_name("G+");
    int mn = q.index_of_name("G-");
    CHECK(q.arrows[p][mn] == 1);
    CHECK(q.arrows[mn][p] == 1);
    CHECK(q.arrows[p][p] == 0);
  }
  SECTION("so8 |x Lambda+: loop at G+ and isolated G-") {
    Quiver q = ext_quiver(spec_so8_lambda(+1), QuiverCategory::ModHalf);
    REQUIRE(q.size() == 2);
    int p = q.index_of_name("G+");
    int mn = q.index_of_name("G-");
    CHECK(q.arrows[p][p] == 1);
    CHECK(q.arrows[mn][mn] == 0);
    CHECK(q.arrows[p][mn] == 0);
    CHECK(q.arrows[mn][p] == 0);
  }
  SECTION("(so8+so10) |x G+[x]G+ matches the Q^{1/2} display") {
    Quiver q = ext_quiver(spec_pair(8, +1, 10, +1), QuiverCategory::ModHalf);
    REQUIRE(q.size() == 4);
    // (G1+ (x) tr): P1 = sh((G+G+) [x] G+) = 0 unless a level-0 appears left
    int g1p = q.index_of_name("G+1");
    int g1m = q.index_of_name("G-1");
    int g2p = q.index_of_name("G+2");
    int g2m = q.index_of_name("G-2");
    REQUIRE((g1p >= 0 && g1m >= 0 && g2p >= 0 && g2m >= 0));
    // arrows: G1+ -> G2+ and G2- -> G1+; everything else empty
    long long total = 0;
    for (auto& row : q.arrows)
      for (auto a : row) total += a;
    CHECK(q.arrows[g1p][g2p] == 1);
    CHECK(q.arrows[g2m][g1p] == 1);
    CHECK(total == 2);
  }
}

TEST_CASE("double quiver counts") {
  Quiver q = ext_quiver(spec_so_odd_V(3), QuiverCategory::Mod1);
  Quiver qp = remove_trivial(q).quiver;
  Quiver d = double_quiver(qp);
  CHECK(d.size() == 2 * qp.size());
  CHECK(d.arrow_count() == qp.arrow_count());
  // loops become honest edges
  for (int i = 0; i < d.size(); ++i) CHECK(d.arrows[i][i] == 0);
}

TEST_CASE("remove_trivial flags") {
  Quiver q = ext_quiver(spec_so_odd_V(3), QuiverCategory::Mod1);
  auto r1 = remove_trivial(q);
  CHECK(r1.removed);
  CHECK(r1.quiver.size() == q.size() - 1);
  auto r2 = remove_trivial(r1.quiver);
  CHECK_FALSE(r2.removed);
  CHECK(r2.quiver.size() == r1.quiver.size());
}

namespace {

Quiver path_quiver(int n) {
  Quiver q;
  for (int i = 0; i < n; ++i) {
    q.vertices.push_back(SimpleLabel::tr());
    q.names.push_back("v" + std::to_string(i));
  }
  q.arrows.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i + 1 < n; ++i) q.arrows[i][i + 1] = 1;
  return q;
}

}  // namespace

TEST_CASE("Dynkin and extended Dynkin recognition") {
  SECTION("paths and cycles") {
    auto v = dynkin_classify(path_quiver(4));
    REQUIRE(v.size() == 1);
    CHECK(v[0].cls == DiagramClass::Dynkin);
    CHECK(v[0].name == "A4");
    Quiver c = path_quiver(5);
    c.arrows[4][0] = 1;
    v = dynkin_classify(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].cls == DiagramClass::ExtendedDynkin);
    CHECK(v[0].name == "A~4");
  }
  SECTION("loop and double edge") {
    Quiver l = path_quiver(1);
    l.arrows[0][0] = 1;
    auto v = dynkin_classify(l);
    CHECK(v[0].name == "A~0");
    CHECK(v[0].cls == DiagramClass::ExtendedDynkin);
    Quiver d = path_quiver(2);
    d.arrows[0][1] = 2;
    v = dynkin_classify(d);
    CHECK(v[0].name == "A~1");
    CHECK(v[0].cls == DiagramClass::ExtendedDynkin);
  }
  SECTION("D, E and their affine shapes") {
    auto star = [](std::initializer_list<int> legs) {
      Quiver q;
      int total = 1;
      for (int l : legs) total += l;
      for (int i = 0; i < total; ++i) {
        q.vertices.push_back(SimpleLabel::tr());
        q.names.push_back("v" + std::to_string(i));
      }
      q.arrows.assign(total, std::vector<long long>(total, 0));
      int next = 1;
      for (int l : legs) {
        int prev = 0;
        for (int k = 0; k < l; ++k) {
          q.arrows[prev][next] = 1;
          prev = next++;
        }
      }
      return q;
    };
    CHECK(dynkin_classify(star({1, 1, 2}))[0].name == "D5");
    CHECK(dynkin_classify(star({1, 2, 2}))[0].name == "E6");
    CHECK(dynkin_classify(star({1, 2, 3}))[0].name == "E7");
    CHECK(dynkin_classify(star({1, 2, 4}))[0].name == "E8");
    CHECK(dynkin_classify(star({2, 2, 2}))[0].name == "E~6");
    CHECK(dynkin_classify(star({1, 3, 3}))[0].name == "E~7");
    CHECK(dynkin_classify(star({1, 2, 5}))[0].name == "E~8");
    CHECK(dynkin_classify(star({1, 1, 1, 1}))[0].name == "D~4");
    CHECK(dynkin_classify(star({1, 2, 4}))[0].cls == DiagramClass::Dynkin);
    CHECK(dynkin_classify(star({2, 2, 2}))[0].cls == DiagramClass::ExtendedDynkin);
    CHECK(dynkin_classify(star({1, 2, 6}))[0].cls == DiagramClass::Neither);
    CHECK(dynkin_classify(star({1, 1, 1, 1, 1}))[0].cls == DiagramClass::Neither);
    // two-hub affine D
    Quiver dd = path_quiver(4);  // 0-1-2-3 path
    for (int extra = 0; extra < 2; ++extra) {
      dd.vertices.push_back(SimpleLabel::tr());
      dd.names.push_back("w" + std::to_string(extra));
    }
    dd.arrows.assign(6, std::vector<long long>(6, 0));
    dd.arrows[0][1] = dd.arrows[1][2] = dd.arrows[2][3] = 1;
    dd.arrows[4][1] = 1;  // extra leaf at vertex 1
    dd.arrows[2][5] = 1;  // extra leaf at vertex 2
    auto v = dynkin_classify(dd);
    REQUIRE(v.size() == 1);
    CHECK(v[0].name == "D~5");
    CHECK(v[0].cls == DiagramClass::ExtendedDynkin);
  }
  SECTION("the rejected shape from the proof: star with four short rays and one long") {
    auto star5 = [](void) {
      Quiver q;
      for (int i = 0; i < 7; ++i) {
        q.vertices.push_back(SimpleLabel::tr());
        q.names.push_back("v" + std::to_string(i));
      }
      q.arrows.assign(7, std::vector<long long>(7, 0));
      q.arrows[0][1] = q.arrows[0][2] = q.arrows[0][3] = q.arrows[0][4] = 1;
      q.arrows[0][5] = 1;
      q.arrows[5][6] = 1;
      return q;
    }();
    auto v = dynkin_classify(star5);
    REQUIRE(v.size() == 1);
    CHECK(v[0].cls == DiagramClass::Neither);
  }
}

TEST_CASE("admissibility of List A and the rejected families") {
  SECTION("List A specs are admissible") {
    CHECK(admissible(spec_so_odd_V(3)).admissible);
    CHECK(admissible(spec_so_odd_V(4)).admissible);
    CHECK(admissible(spec_so_even_V(4)).admissible);
    CHECK(admissible(spec_so8_lambda(+1)).admissible);
    CHECK(admissible(spec_so8_lambda(-1)).admissible);
    CHECK(admissible(spec_pair(8, +1, 8, +1)).admissible);
    CHECK(admissible(spec_pair(8, +1, 10, -1)).admissible);
    CHECK(admissible(spec_pair(10, +1, 10, +1)).admissible);
  }
  SECTION("rejected families at their smallest instances") {
    auto B3 = SimpleLieType::B(3);
    auto rej1 = make_single(B3, wt_lambda_r(B3, 2));  // so7 |x Lambda^2
    auto r = admissible(rej1);
    CHECK_FALSE(r.admissible);
    CHECK_FALSE(r.witness_vertices.empty());
    auto D4 = SimpleLieType::D(4);
    CHECK_FALSE(admissible(make_single(D4, wt_lambda_r(D4, 3))).admissible);
    auto D5 = SimpleLieType::D(5);
    CHECK_FALSE(admissible(make_single(D5, wt_lambda_pm(D5, +1))).admissible);
    auto D6 = SimpleLieType::D(6);
    CHECK_FALSE(admissible(make_single(D6, wt_lambda_pm(D6, +1))).admissible);
    CHECK_FALSE(admissible(make_single(D6, wt_lambda_pm(D6, -1))).admissible);
    CHECK_FALSE(admissible(spec_pair(7, 0, 7, 0)).admissible);
    CHECK_FALSE(admissible(spec_pair(9, 0, 8, +1)).admissible);
    CHECK_FALSE(admissible(spec_pair(8, +1, 12, +1)).admissible);
  }
  SECTION("adding a component to R of a List A spec breaks admissibility") {
    LieSpec g = spec_so_odd_V(3);
    ProductWeight extra = g.rad.R.begin()->first;
    decomp_add(g.rad.R, extra, 1);  // R = V + V
    CHECK_FALSE(admissible(g).admissible);
  }
  SECTION("admissible is invariant under vertex relabeling") {
    // relabeling is internal; check by comparing the +/- chirality twins,
    // whose quivers are tau-relabelings of each other
    CHECK(admissible(spec_pair(8, -1, 10, +1)).admissible ==
          admissible(spec_pair(8, +1, 10, +1)).admissible);
  }
}
