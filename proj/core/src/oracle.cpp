#include "spweyl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spweyl {

BigInt CharacterTable::dimension() const {
  BigInt s = 0;
  for (const auto& [w, m] : mults) s += m;
  return s;
}

BigInt CharacterTable::mult(const WeightVector& w) const {
  auto it = mults.find(w);
  return it == mults.end() ? BigInt(0) : it->second;
}

BigInt weyl_dim(const DominantWeight& lam) {
  const int r = lam.rank();
  const WeightVector rh = rho(r);
  const WeightVector shifted = lam.weight() + rh;
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& a : positive_roots(r)) {
    num *= inner(shifted, a);
    den *= inner(rh, a);
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: non-integral quotient (internal error)");
  return num / den;
}

std::vector<WeightVector> dominant_weights_below(const DominantWeight& lam) {
  const int r = lam.rank();
  const std::int64_t top = lam.lambda(1);
  struct Entry {
    std::int64_t height;
    WeightVector mu;
  };
  std::vector<Entry> found;
  // every weight of V(lambda) has |mu_k| <= lambda_1
  WeightVector mu = WeightVector::zero(r);
  auto rec = [&](auto&& self, int k, std::int64_t cap) -> void {
    if (k == r) {
      const auto c = simple_root_coordinates(lam.weight() - mu);
      if (!c) return;
      if (std::any_of(c->begin(), c->end(), [](std::int64_t v) { return v < 0; })) return;
      found.push_back({std::accumulate(c->begin(), c->end(), std::int64_t{0}), mu});
      return;
    }
    for (std::int64_t v = cap; v >= 0; --v) {
      mu[k] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, top);
  std::stable_sort(found.begin(), found.end(),
                   [](const Entry& a, const Entry& b) { return a.height < b.height; });
  std::vector<WeightVector> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.mu));
  return out;
}

WeightVector apply_signed_permutation(const WeightVector& w, const std::vector<int>& perm, unsigned sign_mask) {
  WeightVector out = WeightVector::zero(w.rank());
  for (int k = 0; k < w.rank(); ++k) {
    out[k] = w[perm[k]];
    if (sign_mask & (1u << k)) out[k] = -out[k];
  }
  return out;
}

std::vector<WeightVector> weyl_orbit(const WeightVector& w) {
  const int r = w.rank();
  std::set<WeightVector> seen;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) seen.insert(apply_signed_permutation(w, perm, mask));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

CharacterTable freudenthal_character(const DominantWeight& lam) {
  const int r = lam.rank();
  const auto roots = positive_roots(r);
  const WeightVector rh = rho(r);
  const WeightVector lam_rho = lam.weight() + rh;
  const std::int64_t norm_top = inner(lam_rho, lam_rho);
  const std::int64_t bound = lam.lambda(1);

  std::map<WeightVector, BigInt> dominant;
  auto lookup = [&](const WeightVector& w) -> BigInt {
    auto it = dominant.find(dominant_representative(w));
    return it == dominant.end() ? BigInt(0) : it->second;
  };
  auto in_range = [&](const WeightVector& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [&](std::int64_t c) { return c <= bound && c >= -bound; });
  };

  for (const auto& mu : dominant_weights_below(lam)) {
    if (mu == lam.weight()) {
      dominant[mu] = 1;
      continue;
    }
    BigInt numerator = 0;
    for (const auto& a : roots) {
      WeightVector nu = mu + a;
      while (in_range(nu)) {
        numerator += lookup(nu) * inner(nu, a);
        nu += a;
      }
    }
    numerator *= 2;
    const WeightVector mu_rho = mu + rh;
    const std::int64_t denominator = norm_top - inner(mu_rho, mu_rho);
    if (denominator <= 0 || numerator % denominator != 0)
      throw std::logic_error("freudenthal: non-exact division (internal error)");
    const BigInt m = numerator / denominator;
    if (m != 0) dominant[mu] = m;
  }

  CharacterTable table;
  table.rank = r;
  for (const auto& [mu, m] : dominant)
    for (const auto& w : weyl_orbit(mu)) table.mults[w] = m;
  return table;
}

}  // namespace spweyl
