#pragma once

// Graded characters of local Weyl modules, computed two ways: by summing
// e^{weight} q^{boxes} over POPs, and by the fermionic q-binomial sum over
// integer difference arrays.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spweyl/pops.hpp"
#include "spweyl/qseries.hpp"
#include "spweyl/rootsys.hpp"

namespace spweyl {

struct TermKey {
  std::int64_t grade = 0;
  WeightVector weight;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical term order: ascending grade, then lexicographically descending weight.
struct CanonicalTermOrder {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (a.grade != b.grade) return a.grade < b.grade;
    return a.weight > b.weight;
  }
};

class GradedCharacter {
 public:
  using TermMap = std::map<TermKey, BigInt, CanonicalTermOrder>;

  GradedCharacter() = default;
  explicit GradedCharacter(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add(std::int64_t grade, const WeightVector& weight, const BigInt& mult);
  void merge(const GradedCharacter& other);
  GradedCharacter scaled(const BigInt& k) const;
  BigInt mult(std::int64_t grade, const WeightVector& weight) const;
  std::int64_t max_grade() const;

  /// Per-weight q-polynomials, weights in descending lexicographic order.
  std::map<WeightVector, QPolynomial, std::greater<>> by_weight() const;

  /// "e^{2ε₁} + (1+q)·1 + e^{−2ε₁}": one summand per weight.
  std::string to_text() const;
  /// "q^{s} e^{a_1\varepsilon_{1}+...}" per term, canonical order.
  std::string to_latex() const;
  /// Header "grade,a1,...,ar,mult" followed by one row per term.
  std::string to_csv() const;

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  int rank_ = 0;
  TermMap terms_;
};

struct ParallelOptions {
  unsigned threads = 1;
};

/// Sum of e^{pop_weight} q^{pop_boxes} over all POPs with bounding sequence lam.
/// Work is split by the eta^r row of the underlying pattern.
GradedCharacter character_direct(const DominantWeight& lam, ParallelOptions opts = {});

/// Independent integer array (ell_{i,j}) for j < r and (ell_{i,jbar}) for j <= r.
struct ExponentArray {
  int rank = 0;
  std::vector<std::int64_t> unbarred;  // tri_index(i, j), j < r
  std::vector<std::int64_t> barred;    // tri_index(i, j), j <= r

  explicit ExponentArray(int r = 0) : rank(r), unbarred(tri_size(r - 1), 0), barred(tri_size(r), 0) {}
  static ExponentArray from_differences(const DiffArray& d);

  std::int64_t at(const Position& p) const {
    return p.barred ? barred[tri_index(p.i, p.j)] : unbarred[tri_index(p.i, p.j)];
  }
  std::int64_t& at(const Position& p) {
    return p.barred ? barred[tri_index(p.i, p.j)] : unbarred[tri_index(p.i, p.j)];
  }
};

/// Top argument of the q-binomial attached to position p in the fermionic sum:
///   unbarred (i,j):  m_i + sum_{k=j+1}^{r-1}(l_{i+1,k} - l_{i,k}) + sum_{k=j+1}^{r}(l_{i+1,kbar} - l_{i,kbar})
///   barred (i,j), i < j: m_i + sum_{k=j}^{r-1}(...) + sum_{k=j+1}^{r}(...)
///   barred (i,i): lambda_i - sum_{k=i}^{r-1} l_{i,k} - sum_{k=i+1}^{r} l_{i,kbar}
/// Only entries placed earlier in fermionic_order() are read.
std::int64_t top_argument(const DominantWeight& lam, const ExponentArray& a, const Position& p);

/// Summand of a single array: weight lambda - sum l alpha, coefficient the
/// product of q-binomials (zero when any bottom exceeds its top).
QPolynomial fermionic_coefficient(const DominantWeight& lam, const ExponentArray& a);
WeightVector fermionic_weight(const DominantWeight& lam, const ExponentArray& a);

/// Assignment order in which every top argument is determined by earlier
/// entries: rbar, r-1, (r-1)bar, ..., 1, 1bar (reverse monomial block order).
std::vector<Position> fermionic_order(int rank);

/// Fermionic sum over arrays with entries in [0, lambda_1]. Branches whose
/// q-binomial already vanishes are cut, which drops only zero summands.
/// Work is split on the first entry of fermionic_order().
GradedCharacter character_fermionic(const DominantWeight& lam, ParallelOptions opts = {});

GradedCharacter zeroth_piece(const GradedCharacter& ch);
/// Collapses every grade onto grade 0.
GradedCharacter specialize_q1(const GradedCharacter& ch);
BigInt total_dim(const GradedCharacter& ch);
/// Deletes the last epsilon coordinate. Throws std::invalid_argument on rank 1.
GradedCharacter restrict_drop_last(const GradedCharacter& ch);

}  // namespace spweyl
