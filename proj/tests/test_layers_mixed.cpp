// Radical layers of the two-summand algebras, checked against the structural
// description of the mixed case: for R = Gamma_l [x] Gamma_r,
//   L in S^2(Gamma_l^*):  P1 = Gamma_l^* [x] Gamma_r,  P2 = S^2 Gamma_r,
//   L in L^2(Gamma_l^*):  P1 = Gamma_l^* [x] Gamma_r,  P2 = L^2 Gamma_r,
//   (mirror on the right), and
//   L = Gamma_l^* [x] Gamma_r^*: P1 = (Gamma_l (x) Gamma_l^* + Gamma_r (x)
//   Gamma_r^*)/tr with a single trivial summand, P2 = Gamma_l [x] Gamma_r;
// every other simple has Loewy length <= 2.

#include "tkk/layers.hpp"
#include "tkk/p2engine.hpp"

#include "golden.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tkk;
using namespace tkk_golden;

namespace {

ProductWeight pw2(const SemisimpleSpec& s, const char* a, const char* b) {
  ProductWeight p;
  p.parts.push_back(*weight_from_name(s.at(0), a));
  p.parts.push_back(*weight_from_name(s.at(1), b));
  return p;
}

ProductDecomp decomp2(const SemisimpleSpec& s,
                      std::initializer_list<std::pair<std::pair<const char*, const char*>,
                                                      long long>> parts) {
  ProductDecomp d;
  for (auto& [names, m] : parts) decomp_add(d, pw2(s, names.first, names.second), m);
  return d;
}

}  // namespace

TEST_CASE("radical layers of (so8+so8) |x G+ [x] G+") {
  LieSpec g = spec_pair(8, +1, 8, +1);
  const auto& s = g.ss;
  auto L = [&](const char* a, const char* b) { return SimpleLabel::of(pw2(s, a, b)); };

  SECTION("the five Loewy-length-three projectives") {
    CHECK(compute_P1(g, L("L+", "tr")) == decomp2(s, {{{"G+", "G+"}, 1}}));
    CHECK(compute_P2(g, L("L+", "tr")) ==
          decomp2(s, {{{"tr", "L+"}, 1}, {{"tr", "tr"}, 1}}));
    CHECK(compute_P2(g, L("tr", "L+")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"tr", "tr"}, 1}}));
    CHECK(compute_P2(g, L("L2", "tr")) == decomp2(s, {{{"tr", "L2"}, 1}}));
    CHECK(compute_P2(g, L("tr", "L2")) == decomp2(s, {{{"L2", "tr"}, 1}}));
    CHECK(compute_P1(g, L("G+", "G+")) ==
          decomp2(s, {{{"tr", "tr"}, 1},
                      {{"L2", "tr"}, 1},
                      {{"L+", "tr"}, 1},
                      {{"tr", "L2"}, 1},
                      {{"tr", "L+"}, 1}}));
    CHECK(compute_P2(g, L("G+", "G+")) == decomp2(s, {{{"G+", "G+"}, 1}}));
  }
  SECTION("Loewy length at most two elsewhere") {
    CHECK(compute_P1(g, L("V", "tr")) == decomp2(s, {{{"G-", "G+"}, 1}}));
    CHECK(compute_P2(g, L("V", "tr")).empty());
    CHECK(compute_P2(g, L("L3", "tr")).empty());
    CHECK(compute_P1(g, L("L-", "tr")).empty());
    CHECK(compute_P1(g, L("G-", "G+")) ==
          decomp2(s, {{{"V", "tr"}, 1}, {{"L3", "tr"}, 1}}));
    CHECK(compute_P2(g, L("G-", "G+")).empty());
    CHECK(compute_P1(g, L("G-", "G-")).empty());
  }
  SECTION("mod-half projectives are flat (abelian radical)") {
    for (auto& l : simples_mod_half(s)) {
      INFO(label_pretty(s, l));
      CHECK(compute_P2(g, l).empty());
    }
  }
}

TEST_CASE("radical layers of (so8+so10) |x G+ [x] G+") {
  LieSpec g = spec_pair(8, +1, 10, +1);
  const auto& s = g.ss;
  auto L = [&](const char* a, const char* b) { return SimpleLabel::of(pw2(s, a, b)); };

  SECTION("left-side sources") {
    CHECK(compute_P1(g, L("L+", "tr")) == decomp2(s, {{{"G+", "G+"}, 1}}));
    CHECK(compute_P2(g, L("L+", "tr")) ==
          decomp2(s, {{{"tr", "L+"}, 1}, {{"tr", "V"}, 1}}));
    CHECK(compute_P2(g, L("L2", "tr")) == decomp2(s, {{{"tr", "L3"}, 1}}));
  }
  SECTION("right-side sources") {
    CHECK(compute_P1(g, L("tr", "L-")) == decomp2(s, {{{"G+", "G-"}, 1}}));
    CHECK(compute_P2(g, L("tr", "L-")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"tr", "tr"}, 1}}));
    CHECK(compute_P2(g, L("tr", "V")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"tr", "tr"}, 1}}));
    CHECK(compute_P2(g, L("tr", "L3")) == decomp2(s, {{{"L2", "tr"}, 1}}));
  }
  SECTION("the spinor-pair vertices") {
    CHECK(compute_P1(g, L("G+", "G-")) ==
          decomp2(s, {{{"tr", "tr"}, 1},
                      {{"L2", "tr"}, 1},
                      {{"L+", "tr"}, 1},
                      {{"tr", "L2"}, 1},
                      {{"tr", "L4"}, 1}}));
    CHECK(compute_P2(g, L("G+", "G-")) == decomp2(s, {{{"G+", "G+"}, 1}}));
    CHECK(compute_P1(g, L("G+", "G+")) ==
          decomp2(s, {{{"tr", "L+"}, 1}, {{"tr", "V"}, 1}, {{"tr", "L3"}, 1}}));
    CHECK(compute_P2(g, L("G+", "G+")).empty());
    CHECK(compute_P1(g, L("G-", "G+")).empty());
    CHECK(compute_P1(g, L("G-", "G-")) ==
          decomp2(s, {{{"V", "tr"}, 1}, {{"L3", "tr"}, 1}}));
    CHECK(compute_P2(g, L("G-", "G-")).empty());
  }
  SECTION("Loewy length at most two elsewhere") {
    CHECK(compute_P2(g, L("tr", "L2")).empty());
    CHECK(compute_P2(g, L("tr", "L4")).empty());
    CHECK(compute_P1(g, L("tr", "L+")).empty());
    CHECK(compute_P2(g, L("V", "tr")).empty());
    CHECK(compute_P2(g, L("L3", "tr")).empty());
    CHECK(compute_P1(g, L("L-", "tr")).empty());
  }
}

TEST_CASE("radical layers of (so10+so10) |x G+ [x] G+", "[long]") {
  LieSpec g = spec_pair(10, +1, 10, +1);
  const auto& s = g.ss;
  auto L = [&](const char* a, const char* b) { return SimpleLabel::of(pw2(s, a, b)); };

  SECTION("left-side sources") {
    CHECK(compute_P1(g, L("L-", "tr")) == decomp2(s, {{{"G-", "G+"}, 1}}));
    CHECK(compute_P2(g, L("L-", "tr")) ==
          decomp2(s, {{{"tr", "L+"}, 1}, {{"tr", "V"}, 1}}));
    CHECK(compute_P2(g, L("V", "tr")) ==
          decomp2(s, {{{"tr", "L+"}, 1}, {{"tr", "V"}, 1}}));
    CHECK(compute_P2(g, L("L3", "tr")) == decomp2(s, {{{"tr", "L3"}, 1}}));
  }
  SECTION("right-side sources") {
    CHECK(compute_P2(g, L("tr", "L-")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"V", "tr"}, 1}}));
    CHECK(compute_P2(g, L("tr", "V")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"V", "tr"}, 1}}));
    CHECK(compute_P2(g, L("tr", "L3")) == decomp2(s, {{{"L3", "tr"}, 1}}));
  }
  SECTION("the spinor-pair vertices") {
    CHECK(compute_P1(g, L("G-", "G-")) ==
          decomp2(s, {{{"tr", "tr"}, 1},
                      {{"L2", "tr"}, 1},
                      {{"L4", "tr"}, 1},
                      {{"tr", "L2"}, 1},
                      {{"tr", "L4"}, 1}}));
    CHECK(compute_P2(g, L("G-", "G-")) == decomp2(s, {{{"G+", "G+"}, 1}}));
    CHECK(compute_P1(g, L("G+", "G+")).empty());
    CHECK(compute_P2(g, L("G+", "G-")).empty());
    CHECK(compute_P1(g, L("G+", "G-")) ==
          decomp2(s, {{{"L+", "tr"}, 1}, {{"L3", "tr"}, 1}, {{"V", "tr"}, 1}}));
  }
  SECTION("Loewy length at most two elsewhere") {
    CHECK(compute_P2(g, L("L2", "tr")).empty());
    CHECK(compute_P2(g, L("L4", "tr")).empty());
    CHECK(compute_P1(g, L("L+", "tr")).empty());
  }
}
