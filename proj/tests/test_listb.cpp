// P^2 in the presence of a nonzero radical bracket (the List B algebras):
// the lambda component fills parts of the codomain that the abelian mu map
// would have killed.

#include "tkk/layers.hpp"
#include "tkk/p2engine.hpp"

#include "golden.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tkk;
using namespace tkk_golden;

namespace {

LieSpec with_wedge_bracket(LieSpec g) {
  // [r, r] = Lambda^2 V for R = V (the full (Lambda^2 R)^sh)
  auto t = g.ss.at(0);
  BracketDescriptor br;
  decomp_add(br.target, ProductWeight({wt_lambda_r(t, 2)}), 1);
  br.name = "wedge";
  g.rad.R2 = br;
  return g;
}

long long mult_of(const ProductDecomp& d, const ProductWeight& w) {
  auto it = d.find(w);
  return it == d.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("so7 |x (V |x Lambda^2 V): every quadratic relation disappears") {
  LieSpec g = with_wedge_bracket(spec_so_odd_V(3));
  check_liespec(g);
  // P^2(L) equals the whole codomain (R (x) (R (x) L)^sh)^sh for every
  // simple L, so the presentation has no degree-two relations at all.
  for (auto& L : simples_mod1(g.ss)) {
    ProductDecomp expect = codomain_C1(g, L);
    for (auto& [w, m] : codomain_C2(g, L)) decomp_add(expect, w, m);
    // the full codomain of mu + lambda collapses: coker = C1 exactly
    INFO(label_pretty(g.ss, L));
    CHECK(compute_P2(g, L) == codomain_C1(g, L));
  }
}

TEST_CASE("so8 |x (V |x Lambda^2 V): three independent loops at Lambda^{m-1}") {
  LieSpec g = with_wedge_bracket(spec_so_even_V(4));
  auto D4 = g.ss.at(0);
  ProductWeight lm1({wt_lambda_r(D4, 3)});
  ProductDecomp p2 = compute_P2(g, SimpleLabel::of(lm1));
  CHECK(mult_of(p2, lm1) == 3);
}

TEST_CASE("so8 |x (Lambda+ |x Lambda^2 V): the two quadratic blocks") {
  LieSpec g = spec_so8_lambda(+1);
  auto D4 = g.ss.at(0);
  BracketDescriptor br;
  decomp_add(br.target, ProductWeight({wt_lambda_r(D4, 2)}), 1);
  br.name = "wedge";
  g.rad.R2 = br;
  check_liespec(g);

  ProductWeight l2({wt_lambda_r(D4, 2)});
  ProductWeight lp({wt_lambda_pm(D4, +1)});
  ProductWeight trw = ProductWeight::trivial(g.ss);

  SECTION("P2(Lambda+) = Lambda^2 V + tr + 2 Lambda+") {
    ProductDecomp p2 = compute_P2(g, SimpleLabel::of(lp));
    ProductDecomp expect;
    decomp_add(expect, l2, 1);
    decomp_add(expect, trw, 1);
    decomp_add(expect, lp, 2);
    CHECK(p2 == expect);
  }
  SECTION("P2(Lambda^2) = 2 Lambda^2 V + Lambda+ + tr") {
    ProductDecomp p2 = compute_P2(g, SimpleLabel::of(l2));
    ProductDecomp expect;
    decomp_add(expect, l2, 2);
    decomp_add(expect, lp, 1);
    decomp_add(expect, trw, 1);
    CHECK(p2 == expect);
  }
}

TEST_CASE("(so8+so8) with [r,r] = Lambda^2 W: the five independent paths") {
  LieSpec g = spec_pair(8, +1, 8, +1);
  const auto& s = g.ss;
  auto D4 = s.at(0);
  BracketDescriptor br;
  ProductWeight target(std::vector<Weight>{Weight::zero(4), wt_lambda_r(D4, 2)});
  decomp_add(br.target, target, 1);
  br.name = "spinor-wedge";
  g.rad.R2 = br;
  check_liespec(g);

  auto pw = [&](const char* a, const char* b) {
    ProductWeight p;
    p.parts.push_back(*weight_from_name(s.at(0), a));
    p.parts.push_back(*weight_from_name(s.at(1), b));
    return p;
  };
  ProductDecomp p2_l2w = compute_P2(g, SimpleLabel::of(pw("tr", "L2")));
  ProductDecomp p2_lpw = compute_P2(g, SimpleLabel::of(pw("tr", "L+")));
  // loop paths at Lambda^2 W and Lambda^+ W
  CHECK(mult_of(p2_l2w, pw("tr", "L2")) >= 1);
  CHECK(mult_of(p2_lpw, pw("tr", "L+")) >= 1);
  // cross paths between them
  CHECK(mult_of(p2_l2w, pw("tr", "L+")) >= 1);
  CHECK(mult_of(p2_lpw, pw("tr", "L2")) >= 1);
  // the abelian socle path into Lambda^2 V survives
  CHECK(mult_of(p2_l2w, pw("L2", "tr")) >= 1);
}

TEST_CASE("(so8+so10) with [r,r] = Lambda^3 W: the six independent paths") {
  LieSpec g = spec_pair(8, +1, 10, +1);
  const auto& s = g.ss;
  auto D5 = s.at(1);
  BracketDescriptor br;
  ProductWeight target(std::vector<Weight>{Weight::zero(4), wt_lambda_r(D5, 3)});
  decomp_add(br.target, target, 1);
  br.name = "spinor-wedge";
  g.rad.R2 = br;
  check_liespec(g);

  auto pw = [&](const char* a, const char* b) {
    ProductWeight p;
    p.parts.push_back(*weight_from_name(s.at(0), a));
    p.parts.push_back(*weight_from_name(s.at(1), b));
    return p;
  };
  ProductDecomp p2_w = compute_P2(g, SimpleLabel::of(pw("tr", "V")));
  ProductDecomp p2_lmw = compute_P2(g, SimpleLabel::of(pw("tr", "L-")));
  for (auto* p2 : {&p2_w, &p2_lmw}) {
    CHECK(mult_of(*p2, pw("tr", "L2")) >= 1);
    CHECK(mult_of(*p2, pw("tr", "L4")) >= 1);
    CHECK(mult_of(*p2, pw("L+", "tr")) >= 1);
  }
}
