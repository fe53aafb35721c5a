#include "doctest.h"
#include "oracles.hpp"
#include "spweyl/oracle.hpp"
#include "spweyl/pops.hpp"

using namespace spweyl;
using V = std::vector<std::int64_t>;

TEST_CASE("Weyl dimension examples") {
  CHECK(weyl_dim(DominantWeight::zero(3)) == 1);
  CHECK(weyl_dim(DominantWeight::fundamental(1, 2)) == 4);
  CHECK(weyl_dim(DominantWeight::fundamental(2, 2)) == 5);
  CHECK(weyl_dim(DominantWeight::from_omegas({1, 1})) == 16);
  CHECK(weyl_dim(DominantWeight::fundamental(3, 3)) == 14);
}

TEST_CASE("Weyl dimension against the closed form") {
  for (int r = 1; r <= 4; ++r)
    for (const auto& lam : oracle::sweep(r, 4)) CHECK(weyl_dim(lam) == oracle::weyl_dim_closed_form(lam.lambdas()));
}

TEST_CASE("fundamental dimensions are the product-formula bases") {
  for (int r = 1; r <= 4; ++r)
    for (int i = 1; i <= r; ++i)
      CHECK(weyl_dim(DominantWeight::fundamental(i, r)) == binomial(2 * r, i) - binomial(2 * r, i - 2));
}

TEST_CASE("dominant weights below") {
  CHECK(dominant_weights_below(DominantWeight::zero(2)) == std::vector<WeightVector>{WeightVector::zero(2)});
  CHECK(dominant_weights_below(DominantWeight::fundamental(2, 2)) ==
        std::vector<WeightVector>{WeightVector(V{1, 1}), WeightVector(V{0, 0})});
  CHECK(dominant_weights_below(DominantWeight::from_omegas({2, 0})) ==
        std::vector<WeightVector>{WeightVector(V{2, 0}), WeightVector(V{1, 1}), WeightVector(V{0, 0})});
}

TEST_CASE("Freudenthal examples") {
  const auto z = freudenthal_character(DominantWeight::zero(2));
  CHECK(z.mults == std::map<WeightVector, BigInt>{{WeightVector::zero(2), 1}});
  const auto w1 = freudenthal_character(DominantWeight::fundamental(1, 2));
  CHECK(w1.mults == std::map<WeightVector, BigInt>{{WeightVector(V{1, 0}), 1},
                                                   {WeightVector(V{-1, 0}), 1},
                                                   {WeightVector(V{0, 1}), 1},
                                                   {WeightVector(V{0, -1}), 1}});
  const auto w2 = freudenthal_character(DominantWeight::fundamental(2, 2));
  CHECK(w2.dimension() == 5);
  CHECK(w2.mult(WeightVector::zero(2)) == 1);
  CHECK(w2.mult(WeightVector(V{1, -1})) == 1);
  // sp_6 adjoint: zero weight has multiplicity 3
  CHECK(freudenthal_character(DominantWeight::from_omegas({2, 0, 0})).mult(WeightVector::zero(3)) == 3);
}

TEST_CASE("Freudenthal tables sum to the Weyl dimension and are Weyl-invariant") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lam : oracle::sweep(r, 3)) {
      const auto t = freudenthal_character(lam);
      CHECK(t.dimension() == weyl_dim(lam));
      for (const auto& [w, m] : t.mults) {
        CHECK(m > 0);
        for (const auto& u : weyl_orbit(w)) CHECK(t.mult(u) == m);
      }
    }
}

TEST_CASE("Weyl orbit") {
  CHECK(weyl_orbit(WeightVector(V{1, 0})).size() == 4);
  CHECK(weyl_orbit(WeightVector(V{2, 1, 0})).size() == 24);
  CHECK(weyl_orbit(WeightVector(V{1, 1, 1})).size() == 8);
  CHECK(apply_signed_permutation(WeightVector(V{1, 2, 3}), {2, 0, 1}, 0b010).coords == V{3, -1, 2});
}
