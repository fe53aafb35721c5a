#pragma once

// Classical oracles for sp_{2r}: the Weyl dimension formula and Freudenthal's
// multiplicity recursion. They share nothing with the pattern combinatorics
// beyond the root system itself.

#include <map>
#include <vector>

#include "spweyl/rootsys.hpp"

namespace spweyl {

/// Weight multiplicities of the irreducible module V(lambda).
struct CharacterTable {
  int rank = 0;
  std::map<WeightVector, BigInt> mults;

  BigInt dimension() const;
  BigInt mult(const WeightVector& w) const;
  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// prod over positive roots of (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dim(const DominantWeight& lam);

/// Dominant mu with lambda - mu in Q+, ordered by the height of lambda - mu
/// (ties broken lexicographically descending), so every mu appears after all
/// dominant weights above it.
std::vector<WeightVector> dominant_weights_below(const DominantWeight& lam);

/// Freudenthal recursion on dominant weights, then closure under the
/// signed-permutation Weyl group.
CharacterTable freudenthal_character(const DominantWeight& lam);

/// All 2^r r! signed permutations of w's coordinates, deduplicated.
std::vector<WeightVector> weyl_orbit(const WeightVector& w);

/// Applies coordinate permutation perm (new[k] = old[perm[k]]) and then flips
/// the sign of coordinate k when bit k of sign_mask is set.
WeightVector apply_signed_permutation(const WeightVector& w, const std::vector<int>& perm, unsigned sign_mask);

}  // namespace spweyl
