#pragma once

// Slow, independent reference computations for the tests. None of these call
// the library routine they are used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "spweyl/characters.hpp"
#include "spweyl/patterns.hpp"
#include "spweyl/rootsys.hpp"

namespace oracle {

using spweyl::BigInt;
using Poly = std::vector<BigInt>;  // coefficient of q^k at index k

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trim(c);
}

// Exact division by 1 - q^k; throws if the remainder is non-zero.
inline Poly div_one_minus_qk(const Poly& p, std::size_t k) {
  if (p.empty()) return {};
  if (p.size() <= k) throw std::logic_error("inexact division by 1 - q^k");
  Poly quot(p.size() - k, 0);
  for (std::size_t n = 0; n < quot.size(); ++n) quot[n] = p[n] + (n >= k ? quot[n - k] : BigInt(0));
  Poly f(k + 1, 0);
  f[0] = 1;
  f[k] = -1;
  if (mul(quot, f) != trim(p)) throw std::logic_error("inexact division by 1 - q^k");
  return quot;
}

/// [n]_q! / ([s]_q! [n-s]_q!) by literal products and exact divisions;
/// zero when s > n, s < 0 or n < 0.
inline Poly q_binomial_by_division(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 0 || s > n) return {};
  Poly num{1};
  for (std::int64_t k = n - s + 1; k <= n; ++k) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(k)] = -1;
    num = mul(num, f);
  }
  for (std::int64_t k = 1; k <= s; ++k) num = div_one_minus_qk(num, static_cast<std::size_t>(k));
  return num;
}

inline spweyl::QPolynomial to_q(const Poly& p) {
  spweyl::QPolynomial out;
  for (std::size_t k = 0; k < p.size(); ++k) out.add_term(static_cast<std::int64_t>(k), p[k]);
  return out;
}

/// Simple roots alpha_k = e_k - e_{k+1} (k < r), alpha_r = 2 e_r.
inline std::vector<std::int64_t> simple(int k, int r) {
  std::vector<std::int64_t> v(r, 0);
  if (k < r) {
    v[k - 1] = 1;
    v[k] = -1;
  } else {
    v[r - 1] = 2;
  }
  return v;
}

/// alpha_{i,j} = alpha_i + ... + alpha_j, and
/// alpha_{i,jbar} = alpha_i + ... + alpha_r + alpha_{r-1} + ... + alpha_j.
inline std::vector<std::int64_t> telescoped_root(int i, int j, bool barred, int r) {
  std::vector<int> path;
  if (!barred) {
    for (int k = i; k <= j; ++k) path.push_back(k);
  } else {
    for (int k = i; k <= r; ++k) path.push_back(k);
    for (int k = r - 1; k >= j; --k) path.push_back(k);
  }
  std::vector<std::int64_t> v(r, 0);
  for (int k : path) {
    const auto a = simple(k, r);
    for (int c = 0; c < r; ++c) v[c] += a[c];
  }
  return v;
}

/// Classical closed form prod_{i<j}(l_i^2 - l_j^2)/(p_i^2 - p_j^2) * prod_i l_i/p_i
/// with l = lambda + rho, p = rho = (r, ..., 1).
inline BigInt weyl_dim_closed_form(const std::vector<std::int64_t>& lambdas) {
  const int r = static_cast<int>(lambdas.size());
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < r; ++i) {
    const std::int64_t li = lambdas[i] + (r - i);
    const std::int64_t pi = r - i;
    num *= li;
    den *= pi;
    for (int j = i + 1; j < r; ++j) {
      const std::int64_t lj = lambdas[j] + (r - j);
      const std::int64_t pj = r - j;
      num *= li * li - lj * lj;
      den *= pi * pi - pj * pj;
    }
  }
  if (num % den != 0) throw std::logic_error("closed form not integral");
  return num / den;
}

/// Every array with rows of lengths 1..r filled from [0, top], kept when the
/// interlacing inequalities hold. Exponential; small inputs only.
inline std::vector<spweyl::PatternC> brute_patterns(const std::vector<std::int64_t>& lambdas) {
  const int r = static_cast<int>(lambdas.size());
  const std::int64_t top = lambdas.empty() ? 0 : lambdas[0];
  auto p = spweyl::PatternC::zero_shape(r);
  p.lambda[r - 1] = lambdas;
  std::vector<std::int64_t*> cells;
  for (int j = 1; j <= r; ++j) {
    for (auto& v : p.eta[j - 1]) cells.push_back(&v);
    if (j < r)
      for (auto& v : p.lambda[j - 1]) cells.push_back(&v);
  }
  auto ok = [&] {
    for (int j = 1; j <= r; ++j)
      for (int i = 1; i <= j; ++i) {
        const auto lam_next = i + 1 <= j ? p.lambda[j - 1][i] : 0;
        if (!(p.lambda[j - 1][i - 1] >= p.eta[j - 1][i - 1] && p.eta[j - 1][i - 1] >= lam_next)) return false;
        if (j < r && !(p.eta[j][i - 1] >= p.lambda[j - 1][i - 1] && p.lambda[j - 1][i - 1] >= p.eta[j][i])) return false;
      }
    return true;
  };
  std::vector<spweyl::PatternC> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (ok()) out.push_back(p);
      return;
    }
    for (std::int64_t v = 0; v <= top; ++v) {
      *cells[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Same for restricted patterns (no lambda^r; eta^r is the bounding row).
inline std::vector<spweyl::RestrictedPattern> brute_restricted_patterns(const std::vector<std::int64_t>& eta) {
  const int r = static_cast<int>(eta.size());
  const std::int64_t top = eta.empty() ? 0 : eta[0];
  auto p = spweyl::RestrictedPattern::zero_shape(r);
  p.eta[r - 1] = eta;
  std::vector<std::int64_t*> cells;
  for (int j = 1; j < r; ++j) {
    for (auto& v : p.eta[j - 1]) cells.push_back(&v);
    for (auto& v : p.lambda[j - 1]) cells.push_back(&v);
  }
  auto ok = [&] {
    for (int j = 1; j < r; ++j)
      for (int i = 1; i <= j; ++i) {
        const auto lam_next = i + 1 <= j ? p.lambda[j - 1][i] : 0;
        if (!(p.lambda[j - 1][i - 1] >= p.eta[j - 1][i - 1] && p.eta[j - 1][i - 1] >= lam_next)) return false;
        if (!(p.eta[j][i - 1] >= p.lambda[j - 1][i - 1] && p.lambda[j - 1][i - 1] >= p.eta[j][i])) return false;
      }
    return true;
  };
  std::vector<spweyl::RestrictedPattern> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (ok()) out.push_back(p);
      return;
    }
    for (std::int64_t v = 0; v <= top; ++v) {
      *cells[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// The fermionic double sum read literally: every array in [0, lambda_1]^N,
/// top arguments written out from the displayed formula, q-binomials from
/// q_binomial_by_division, weights from telescoped roots.
inline spweyl::GradedCharacter fermionic_box(const spweyl::DominantWeight& lam) {
  const int r = lam.rank();
  const std::int64_t box = lam.lambda(1);
  struct Slot {
    int i, j;
    bool barred;
  };
  std::vector<Slot> slots;
  for (int j = 1; j < r; ++j)
    for (int i = 1; i <= j; ++i) slots.push_back({i, j, false});
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= j; ++i) slots.push_back({i, j, true});
  std::map<std::pair<int, int>, std::int64_t> L, Lb;
  auto l = [&](int i, int k) { auto it = L.find({i, k}); return it == L.end() ? std::int64_t{0} : it->second; };
  auto lb = [&](int i, int k) { auto it = Lb.find({i, k}); return it == Lb.end() ? std::int64_t{0} : it->second; };

  spweyl::GradedCharacter ch(r);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < slots.size()) {
      for (std::int64_t v = 0; v <= box; ++v) {
        (slots[k].barred ? Lb : L)[{slots[k].i, slots[k].j}] = v;
        rec(k + 1);
      }
      return;
    }
    Poly coeff{1};
    for (int i = 1; i < r; ++i)
      for (int j = i; j < r; ++j) {
        std::int64_t n = lam.omega(i);
        for (int kk = j + 1; kk <= r - 1; ++kk) n += l(i + 1, kk) - l(i, kk);
        for (int kk = j + 1; kk <= r; ++kk) n += lb(i + 1, kk) - lb(i, kk);
        coeff = mul(coeff, q_binomial_by_division(n, l(i, j)));
      }
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        std::int64_t n = lam.omega(i);
        for (int kk = j; kk <= r - 1; ++kk) n += l(i + 1, kk) - l(i, kk);
        for (int kk = j + 1; kk <= r; ++kk) n += lb(i + 1, kk) - lb(i, kk);
        coeff = mul(coeff, q_binomial_by_division(n, lb(i, j)));
      }
    for (int i = 1; i <= r; ++i) {
      std::int64_t n = lam.lambda(i);
      for (int kk = i; kk <= r - 1; ++kk) n -= l(i, kk);
      for (int kk = i + 1; kk <= r; ++kk) n -= lb(i, kk);
      coeff = mul(coeff, q_binomial_by_division(n, lb(i, i)));
    }
    if (coeff.empty()) return;
    std::vector<std::int64_t> w = lam.lambdas();
    for (const auto& s : slots) {
      const auto a = telescoped_root(s.i, s.j, s.barred, r);
      const auto e = s.barred ? lb(s.i, s.j) : l(s.i, s.j);
      for (int c = 0; c < r; ++c) w[c] -= e * a[c];
    }
    for (std::size_t g = 0; g < coeff.size(); ++g) ch.add(static_cast<std::int64_t>(g), spweyl::WeightVector(w), coeff[g]);
  };
  rec(0);
  return ch;
}

/// All omega vectors of rank r with total <= max_total.
inline std::vector<spweyl::DominantWeight> sweep(int r, std::int64_t max_total) {
  std::vector<spweyl::DominantWeight> out;
  std::vector<std::int64_t> m(r, 0);
  std::function<void(int, std::int64_t)> rec = [&](int k, std::int64_t left) {
    if (k == r) {
      out.push_back(spweyl::DominantWeight::from_omegas(m));
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      m[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, max_total);
  return out;
}

}  // namespace oracle
