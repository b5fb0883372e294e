#include "tkk/rootsys.hpp"
#include "tkk/chars.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tkk;

namespace {

Weight W(std::initializer_list<int> doubled) { return Weight(std::vector<int>(doubled)); }

unsigned long long decomp_dim(const SimpleLieType& t, const IrrDecomp& d) {
  unsigned long long total = 0;
  for (auto& [w, m] : d) total += m * weyl_dim(t, w);
  return total;
}

}  // namespace

TEST_CASE("weyl dimensions of the named modules") {
  auto B3 = SimpleLieType::B(3);
  auto D4 = SimpleLieType::D(4);
  CHECK(weyl_dim(B3, wt_lambda_r(B3, 1)) == 7);
  CHECK(weyl_dim(B3, wt_spinor(B3)) == 8);
  CHECK(weyl_dim(D4, wt_spinor_pm(D4, +1)) == 8);
  CHECK(weyl_dim(D4, wt_spinor_pm(D4, -1)) == 8);
  CHECK(weyl_dim(D4, wt_lambda_pm(D4, +1)) == 35);
  CHECK(weyl_dim(B3, wt_lambda_r(B3, 2)) == 21);
  CHECK(weyl_dim(B3, wt_lambda_r(B3, 3)) == 35);
  CHECK(weyl_dim(SimpleLieType::D(5), wt_spinor_pm(SimpleLieType::D(5), +1)) == 16);
  CHECK_THROWS_AS(weyl_dim(B3, W({2, 4, 0})), std::domain_error);
}

TEST_CASE("weight systems of small modules") {
  auto B2 = SimpleLieType::B(2);
  SECTION("standard module of so5") {
    auto ws = weight_system(B2, wt_lambda_r(B2, 1));
    REQUIRE(ws.size() == 5);
    CHECK(ws.at(W({2, 0})) == 1);
    CHECK(ws.at(W({-2, 0})) == 1);
    CHECK(ws.at(W({0, 2})) == 1);
    CHECK(ws.at(W({0, -2})) == 1);
    CHECK(ws.at(W({0, 0})) == 1);
  }
  SECTION("Lambda^2 of so5: ten weights with a double zero") {
    auto ws = weight_system(B2, W({2, 2}));
    CHECK(weight_system_size(ws) == 10);
    CHECK(ws.at(W({0, 0})) == 2);
    CHECK(ws.at(W({2, 2})) == 1);
    CHECK(ws.at(W({2, -2})) == 1);
    CHECK(ws.at(W({2, 0})) == 1);
  }
  SECTION("spinor weights of so8 are even-sign half vectors") {
    auto D4 = SimpleLieType::D(4);
    auto ws = weight_system(D4, wt_spinor_pm(D4, +1));
    REQUIRE(weight_system_size(ws) == 8);
    for (auto& [w, m] : ws) {
      CHECK(m == 1);
      int minus = 0;
      for (int c : w.c2) {
        CHECK(std::abs(c) == 1);
        if (c < 0) ++minus;
      }
      CHECK(minus % 2 == 0);
    }
  }
}

TEST_CASE("tensor decompositions match the fixed examples") {
  auto B3 = SimpleLieType::B(3);
  SECTION("V (x) V for so7") {
    auto d = tensor_decompose(B3, wt_lambda_r(B3, 1), wt_lambda_r(B3, 1));
    REQUIRE(d.size() == 3);
    CHECK(d.at(W({4, 0, 0})) == 1);   // L(2 eps1), dim 27
    CHECK(d.at(W({2, 2, 0})) == 1);   // Lambda^2, dim 21
    CHECK(d.at(W({0, 0, 0})) == 1);   // trivial
    CHECK(decomp_dim(B3, d) == 49);
  }
  SECTION("Gamma (x) Gamma for so7 is the full exterior algebra slice") {
    auto d = tensor_decompose(B3, wt_spinor(B3), wt_spinor(B3));
    REQUIRE(d.size() == 4);
    for (int r = 0; r <= 3; ++r) CHECK(d.at(wt_lambda_r(B3, r)) == 1);
    CHECK(decomp_dim(B3, d) == 64);
  }
  SECTION("tensoring with the trivial weight") {
    auto d = tensor_decompose(B3, wt_lambda_r(B3, 2), Weight::zero(3));
    REQUIRE(d.size() == 1);
    CHECK(d.at(wt_lambda_r(B3, 2)) == 1);
  }
}

TEST_CASE("duality and tau") {
  auto B4 = SimpleLieType::B(4);
  auto D4 = SimpleLieType::D(4);
  auto D5 = SimpleLieType::D(5);
  CHECK(dual_weight(B4, wt_spinor(B4)) == wt_spinor(B4));
  CHECK(dual_weight(B4, wt_lambda_r(B4, 3)) == wt_lambda_r(B4, 3));
  // odd rank D flips the chirality classes
  CHECK(dual_weight(D5, wt_spinor_pm(D5, +1)) == wt_spinor_pm(D5, -1));
  CHECK(dual_weight(D5, wt_lambda_pm(D5, +1)) == wt_lambda_pm(D5, -1));
  // even rank D is self-dual
  CHECK(dual_weight(D4, wt_lambda_pm(D4, +1)) == wt_lambda_pm(D4, +1));
  CHECK(dual_weight(D4, wt_spinor_pm(D4, -1)) == wt_spinor_pm(D4, -1));
  // tau always swaps the chirality classes and fixes Lambda^r
  CHECK(tau(D4, wt_spinor_pm(D4, +1)) == wt_spinor_pm(D4, -1));
  CHECK(tau(D4, wt_lambda_r(D4, 2)) == wt_lambda_r(D4, 2));
  CHECK(tau(D5, wt_lambda_pm(D5, +1)) == wt_lambda_pm(D5, -1));
  CHECK_THROWS_AS(tau(B4, wt_spinor(B4)), std::domain_error);
}

namespace {

std::vector<Weight> random_dominant_corpus(const SimpleLieType& t, int count,
                                           std::mt19937& rng) {
  std::vector<Weight> out;
  std::uniform_int_distribution<int> coord(0, 4);  // doubled, <= 2
  std::uniform_int_distribution<int> par(0, 1);
  while (static_cast<int>(out.size()) < count) {
    bool half = par(rng) == 1;
    std::vector<int> c(t.rank);
    for (int i = 0; i < t.rank; ++i) {
      int x = coord(rng);
      c[i] = half ? (x | 1) : (x & ~1);
    }
    std::sort(c.begin(), c.end(), std::greater<int>());
    if (t.family == Family::D && par(rng) == 1) c[t.rank - 1] = -c[t.rank - 1];
    Weight w(std::move(c));
    if (is_dominant(t, w)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("property: dimension balance and symmetry on a random corpus") {
  std::mt19937 rng(20240817);
  std::vector<SimpleLieType> types = {SimpleLieType::B(2), SimpleLieType::B(3),
                                      SimpleLieType::B(5), SimpleLieType::D(4),
                                      SimpleLieType::D(5)};
  int cases = 0;
  for (auto& t : types) {
    auto corpus = random_dominant_corpus(t, 10, rng);
    for (size_t i = 0; i < corpus.size(); i += 2) {
      const Weight& a = corpus[i];
      const Weight& b = corpus[(i + 1) % corpus.size()];
      auto d = tensor_decompose(t, a, b);
      CHECK(decomp_dim(t, d) == static_cast<unsigned long long>(weyl_dim(t, a)) *
                                    weyl_dim(t, b));
      auto d2 = tensor_decompose(t, b, a);
      CHECK(d == d2);
      ++cases;
    }
  }
  CHECK(cases >= 25);
}

TEST_CASE("property: weight systems are Weyl stable with simple top") {
  std::mt19937 rng(7);
  for (auto& t : {SimpleLieType::B(3), SimpleLieType::D(4)}) {
    auto corpus = random_dominant_corpus(t, 6, rng);
    for (auto& lambda : corpus) {
      auto ws = weight_system(t, lambda);
      CHECK(ws.at(lambda) == 1);
      // total equals the Weyl dimension
      CHECK(weight_system_size(ws) == weyl_dim(t, lambda));
      // random signed permutations fix the multiset
      std::vector<int> perm(t.rank);
      for (int i = 0; i < t.rank; ++i) perm[i] = i;
      for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> signs(t.rank, 1);
        int flips = 0;
        for (int i = 0; i < t.rank; ++i)
          if (rng() % 2) {
            signs[i] = -1;
            ++flips;
          }
        if (t.family == Family::D && flips % 2) signs[0] = -signs[0];
        for (auto& [w, m] : ws) CHECK(ws.at(weyl_apply(w, perm, signs)) == m);
      }
      // every weight lies below lambda in the dominance order; the top is
      // strictly highest among dominant weights of the system
      for (auto& [w, m] : ws) {
        if (w == lambda) continue;
        if (is_dominant(t, w)) {
          Weight diff = lambda - w;
          long long pref = 0;
          bool below = true;
          for (int c : diff.c2) {
            pref += c;
            if (pref < 0) below = false;
          }
          CHECK(below);
        }
      }
    }
  }
}

TEST_CASE("property: duality and tau are involutions and commute") {
  std::mt19937 rng(99);
  for (auto& t : {SimpleLieType::B(4), SimpleLieType::D(4), SimpleLieType::D(5)}) {
    for (auto& w : random_dominant_corpus(t, 8, rng)) {
      CHECK(dual_weight(t, dual_weight(t, w)) == w);
      if (t.family == Family::D) {
        CHECK(tau(t, tau(t, w)) == w);
        CHECK(tau(t, dual_weight(t, w)) == dual_weight(t, tau(t, w)));
      }
    }
  }
}

TEST_CASE("tensor decomposition agrees with the Kostant oracle") {
  auto pairs_of = [](const SimpleLieType& t) {
    std::vector<Weight> funds;
    if (t.family == Family::B) {
      for (int r = 1; r < t.rank; ++r) funds.push_back(wt_lambda_r(t, r));
      funds.push_back(wt_spinor(t));
    } else {
      for (int r = 1; r <= t.rank - 2; ++r) funds.push_back(wt_lambda_r(t, r));
      funds.push_back(wt_spinor_pm(t, +1));
      funds.push_back(wt_spinor_pm(t, -1));
    }
    return funds;
  };
  std::vector<SimpleLieType> types = {SimpleLieType::B(2), SimpleLieType::B(3),
                                      SimpleLieType::D(4)};
  for (auto& t : types) {
    auto funds = pairs_of(t);
    for (size_t i = 0; i < funds.size(); ++i)
      for (size_t j = i; j < funds.size(); ++j) {
        IrrDecomp mine = tensor_decompose(t, funds[i], funds[j]);
        IrrDecomp oracle = tkk_oracle::oracle_tensor(t, funds[i], funds[j]);
        INFO(t.str() << " " << funds[i].str() << " (x) " << funds[j].str());
        CHECK(mine == oracle);
      }
  }
}

TEST_CASE("tensor decomposition agrees with the Kostant oracle at rank 4-5",
          "[oracle-full]") {
  for (auto& t : {SimpleLieType::B(4), SimpleLieType::D(5)}) {
    std::vector<Weight> funds;
    if (t.family == Family::B) {
      funds = {wt_lambda_r(t, 1), wt_lambda_r(t, 2), wt_lambda_r(t, 3),
               wt_lambda_r(t, 4), wt_spinor(t)};
    } else {
      funds = {wt_lambda_r(t, 1), wt_lambda_r(t, 2), wt_lambda_r(t, 3),
               wt_spinor_pm(t, +1), wt_spinor_pm(t, -1)};
    }
    for (size_t i = 0; i < funds.size(); ++i)
      for (size_t j = i; j < funds.size(); ++j) {
        IrrDecomp mine = tensor_decompose(t, funds[i], funds[j]);
        IrrDecomp oracle = tkk_oracle::oracle_tensor(t, funds[i], funds[j]);
        INFO(t.str() << " " << funds[i].str() << " (x) " << funds[j].str());
        CHECK(mine == oracle);
      }
  }
}
