#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "spweyl/rootsys.hpp"

using namespace spweyl;
using V = std::vector<std::int64_t>;

TEST_CASE("omega and lambda coordinates") {
  CHECK(omegas_to_lambda(V{1, 1}) == V{2, 1});
  CHECK(omegas_to_lambda(V{0, 0, 0}) == V{0, 0, 0});
  CHECK(omegas_to_lambda(V{2, 0, 1}) == V{3, 1, 1});
  CHECK(lambda_to_omegas(V{2, 1}) == V{1, 1});
  CHECK(lambda_to_omegas(V{0, 0}) == V{0, 0});
  CHECK(lambda_to_omegas(V{3, 1, 1}) == V{2, 0, 1});
  CHECK_THROWS_AS(lambda_to_omegas(V{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_to_omegas(V{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(DominantWeight::from_omegas({1, -1}), std::invalid_argument);
}

TEST_CASE("coordinate round trip for entries up to 5, rank up to 4") {
  for (int r = 1; r <= 4; ++r) {
    V m(r, 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == r) {
        const auto lam = omegas_to_lambda(m);
        for (int i = 0; i + 1 < r; ++i) REQUIRE(lam[i] >= lam[i + 1]);
        REQUIRE(lambda_to_omegas(lam) == m);
        const auto w = DominantWeight::from_lambdas(lam);
        REQUIRE(w.omegas() == m);
        return;
      }
      for (std::int64_t v = 0; v <= 5; ++v) {
        m[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("root vectors") {
  CHECK(root_vector(RootLabel{1, 1, true}, 1).coords == V{2});
  CHECK(root_vector(RootLabel{1, 1, false}, 2).coords == V{1, -1});
  CHECK(root_vector(RootLabel{1, 2, true}, 3).coords == V{1, 1, 0});
  CHECK_THROWS_AS(root_vector(RootLabel{2, 1, true}, 3), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(RootLabel{1, 3, false}, 3), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(RootLabel{1, 4, true}, 3), std::invalid_argument);
}

TEST_CASE("closed forms match telescoped simple-root sums") {
  for (int r = 1; r <= 5; ++r)
    for (const auto& lab : positive_root_labels(r))
      CHECK(root_vector(lab, r).coords == oracle::telescoped_root(lab.i, lab.j, lab.barred, r));
}

TEST_CASE("alpha_{i,r} is identified with alpha_{i,rbar}") {
  for (int r = 1; r <= 4; ++r)
    for (int i = 1; i <= r; ++i) {
      const auto folded = RootLabel::make(i, r, false, r);
      CHECK(folded.barred);
      CHECK(folded == RootLabel{i, r, true});
      // literal path alpha_i + ... + alpha_r
      CHECK(oracle::telescoped_root(i, r, false, r) == oracle::telescoped_root(i, r, true, r));
    }
}

TEST_CASE("positive roots") {
  CHECK(positive_roots(1) == std::vector<WeightVector>{WeightVector(V{2})});
  const auto r2 = positive_roots(2);
  CHECK(r2.size() == 4);
  std::set<WeightVector> want{WeightVector(V{1, -1}), WeightVector(V{1, 1}), WeightVector(V{2, 0}),
                              WeightVector(V{0, 2})};
  CHECK(std::set<WeightVector>(r2.begin(), r2.end()) == want);
  for (int r = 1; r <= 6; ++r) {
    const auto roots = positive_roots(r);
    CHECK(roots.size() == static_cast<std::size_t>(r * r));
    CHECK(std::set<WeightVector>(roots.begin(), roots.end()).size() == roots.size());
    // {e_i - e_j, e_i + e_j (i<j), 2 e_i}
    std::set<WeightVector> expected;
    for (int i = 0; i < r; ++i) {
      V d(r, 0);
      d[i] = 2;
      expected.insert(WeightVector(d));
      for (int j = i + 1; j < r; ++j) {
        V a(r, 0), b(r, 0);
        a[i] = 1, a[j] = -1, b[i] = 1, b[j] = 1;
        expected.insert(WeightVector(a));
        expected.insert(WeightVector(b));
      }
    }
    CHECK(std::set<WeightVector>(roots.begin(), roots.end()) == expected);
  }
}

TEST_CASE("inner product") {
  CHECK(inner(WeightVector(V{1, 0}), WeightVector(V{1, 0})) == 1);
  CHECK(inner(WeightVector(V{1, 1}), WeightVector(V{1, -1})) == 0);
  CHECK(inner(WeightVector(V{2, 1}), WeightVector(V{4, 2})) == 10);
  CHECK_THROWS_AS(inner(WeightVector(V{1}), WeightVector(V{1, 0})), std::invalid_argument);
  const WeightVector a(V{3, -1, 2}), b(V{0, 5, -4}), c(V{1, 1, 1});
  CHECK(inner(a, b) == inner(b, a));
  CHECK(inner(a + b, c) == inner(a, c) + inner(b, c));
  CHECK(inner(3 * a, c) == 3 * inner(a, c));
}

TEST_CASE("rho, simple roots and simple-root coordinates") {
  CHECK(rho(3).coords == V{3, 2, 1});
  CHECK(simple_root(3, 3).coords == V{0, 0, 2});
  // omega_2 - omega_1 = e_2 is not in the root lattice span with integer c
  CHECK_FALSE(simple_root_coordinates(WeightVector(V{0, 1})).has_value());
  const auto c = simple_root_coordinates(WeightVector(V{2, 0}));
  REQUIRE(c.has_value());
  CHECK(*c == V{2, 1});  // 2e_1 = 2 alpha_1 + alpha_2
  CHECK(dominant_representative(WeightVector(V{-1, 3, 0})).coords == V{3, 1, 0});
}

TEST_CASE("weight text") {
  CHECK(weight_to_text(WeightVector(V{0, 0})) == "0");
  CHECK(weight_to_text(WeightVector(V{2, -1})) == "2ε₁−ε₂");
}
