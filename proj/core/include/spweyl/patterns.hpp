#pragma once

// Generalized Gelfand-Tsetlin patterns of type C and their restricted
// variant. A pattern of rank r is the row sequence
//
//   eta^1, lambda^1, eta^2, ..., lambda^{r-1}, eta^r, lambda^r
//
// with row j of length j, interlacing as
//
//   lambda^j_i   >= eta^j_i     >= lambda^j_{i+1}   (lambda^j_{j+1} = 0)
//   eta^{j+1}_i  >= lambda^j_i  >= eta^{j+1}_{i+1}
//
// A restricted pattern stops at eta^r. Indices in the accessors are 1-based.

#include <cstdint>
#include <string>
#include <vector>

#include "spweyl/rootsys.hpp"

namespace spweyl {

using Row = std::vector<std::int64_t>;

/// Position of (i, j), 1 <= i <= j, in a row-major upper triangle.
constexpr std::size_t tri_index(int i, int j) {
  return static_cast<std::size_t>((j - 1) * j / 2 + (i - 1));
}
constexpr std::size_t tri_size(int n) { return n <= 0 ? 0 : static_cast<std::size_t>(n * (n + 1) / 2); }

template <bool Restricted>
struct BasicPattern {
  static constexpr bool restricted = Restricted;

  int rank = 0;
  std::vector<Row> eta;     // r rows
  std::vector<Row> lambda;  // r rows, or r - 1 when restricted

  static BasicPattern zero_shape(int r) {
    BasicPattern p;
    p.rank = r;
    for (int j = 1; j <= r; ++j) p.eta.emplace_back(j, 0);
    for (int j = 1; j <= (Restricted ? r - 1 : r); ++j) p.lambda.emplace_back(j, 0);
    return p;
  }

  std::int64_t eta_at(int j, int i) const { return eta[j - 1][i - 1]; }
  /// lambda^j_{j+1} reads as 0.
  std::int64_t lambda_at(int j, int i) const { return i > j ? 0 : lambda[j - 1][i - 1]; }
  int lambda_rows() const { return Restricted ? rank - 1 : rank; }

  /// lambda^r for a pattern, eta^r for a restricted pattern.
  const Row& bounding() const { return Restricted ? eta.back() : lambda.back(); }

  friend bool operator==(const BasicPattern&, const BasicPattern&) = default;
  friend auto operator<=>(const BasicPattern&, const BasicPattern&) = default;
};

using PatternC = BasicPattern<false>;
using RestrictedPattern = BasicPattern<true>;

// ---------------------------------------------------------------------------
// Validation

enum class Constraint {
  LambdaOverEta,      // lambda^j_i >= eta^j_i
  EtaOverLambdaNext,  // eta^j_i >= lambda^j_{i+1}
  EtaUpOverLambda,    // eta^{j+1}_i >= lambda^j_i
  LambdaOverEtaUp,    // lambda^j_i >= eta^{j+1}_{i+1}
  NonNegative,        // entry of row (kind, j) at i is negative
};

struct Violation {
  Constraint constraint;
  int j = 0;
  int i = 0;
  /// For NonNegative: whether the offending entry sits in an eta row.
  bool eta_row = false;

  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PatternCheck {
  std::vector<std::string> shape_errors;
  std::vector<Violation> violations;

  bool ok() const { return shape_errors.empty() && violations.empty(); }
};

PatternCheck validate_pattern(const PatternC& p);
PatternCheck validate_pattern(const RestrictedPattern& p);

// ---------------------------------------------------------------------------
// Differences

struct Gap {
  std::int64_t ell = 0;
  std::int64_t ellp = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

/// The gaps ell/ell' at every barred (i, jbar) and unbarred (i, j) position.
/// Barred positions run over j <= r (j < r for a restricted pattern); unbarred
/// positions over j < r.
class DiffArray {
 public:
  DiffArray() = default;
  DiffArray(int rank, bool restricted);

  int rank() const { return rank_; }
  bool restricted() const { return restricted_; }
  int barred_extent() const { return restricted_ ? rank_ - 1 : rank_; }
  int unbarred_extent() const { return rank_ - 1; }

  const Gap& barred(int i, int j) const { return barred_[tri_index(i, j)]; }
  Gap& barred(int i, int j) { return barred_[tri_index(i, j)]; }
  const Gap& unbarred(int i, int j) const { return unbarred_[tri_index(i, j)]; }
  Gap& unbarred(int i, int j) { return unbarred_[tri_index(i, j)]; }

  friend bool operator==(const DiffArray&, const DiffArray&) = default;

 private:
  int rank_ = 0;
  bool restricted_ = false;
  std::vector<Gap> barred_;
  std::vector<Gap> unbarred_;
};

DiffArray differences(const PatternC& p);
DiffArray differences(const RestrictedPattern& p);

/// Rebuilds the pattern from its bounding sequence and the ell entries of d
/// (ell' is implied). Inverse of differences() for a fixed bounding sequence.
PatternC pattern_from_differences(const DominantWeight& bounding, const DiffArray& d);

/// Weight (a_1, ..., a_r) with a_j = 2 sum eta^j - sum lambda^j - sum lambda^{j-1}.
WeightVector pattern_weight(const PatternC& p);

// ---------------------------------------------------------------------------
// Enumeration
//
// Rows are generated upward from the fixed bounding row: eta^r, lambda^{r-1},
// eta^{r-1}, ..., lambda^1, eta^1. Given the row below, each entry of the next
// row ranges over an independent interval, so the generator walks every row
// lexicographically. The resulting order is lexicographic in
// (eta^r, lambda^{r-1}, ..., eta^1).

namespace detail {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

// Stage s of a rank-r pattern: even stages fill eta rows, odd stages lambda rows.
template <bool R, class Visit>
void fill_stage(BasicPattern<R>& p, int stage, int last_stage, Visit& visit);

template <bool R, class Visit>
void fill_entry(BasicPattern<R>& p, int stage, int last_stage, int i, Visit& visit) {
  const int r = p.rank;
  // stage 2k fills eta^{r-k}; stage 2k+1 fills lambda^{r-k-1}
  const bool is_eta = stage % 2 == 0;
  const int j = is_eta ? r - stage / 2 : r - stage / 2 - 1;
  if (i > j) {
    fill_stage(p, stage + 1, last_stage, visit);
    return;
  }
  std::int64_t lo, hi;
  if (is_eta) {
    hi = p.lambda_at(j, i);
    lo = p.lambda_at(j, i + 1);
  } else {
    hi = p.eta_at(j + 1, i);
    lo = p.eta_at(j + 1, i + 1);
  }
  auto& row = is_eta ? p.eta[j - 1] : p.lambda[j - 1];
  for (std::int64_t v = lo; v <= hi; ++v) {
    row[i - 1] = v;
    fill_entry(p, stage, last_stage, i + 1, visit);
  }
}

template <bool R, class Visit>
void fill_stage(BasicPattern<R>& p, int stage, int last_stage, Visit& visit) {
  if (stage > last_stage) {
    visit(static_cast<const BasicPattern<R>&>(p));
    return;
  }
  fill_entry(p, stage, last_stage, 1, visit);
}

void check_bounding(std::span<const std::int64_t> bounding);

}  // namespace detail

/// Every admissible eta^r under lambda^r, lexicographically.
std::vector<Row> top_eta_rows(const DominantWeight& bounding);

/// Visits every pattern whose eta^r row equals eta_r, in generation order.
template <class Visit>
void for_each_pattern_with_top(const DominantWeight& bounding, const Row& eta_r, Visit&& visit) {
  auto p = PatternC::zero_shape(bounding.rank());
  p.lambda.back() = bounding.lambdas();
  p.eta.back() = eta_r;
  // stage 0 is eta^r; the last stage (eta^1) is 2r - 2.
  detail::fill_stage(p, 1, 2 * p.rank - 2, visit);
}

template <class Visit>
void for_each_pattern(const DominantWeight& bounding, Visit&& visit) {
  auto p = PatternC::zero_shape(bounding.rank());
  p.lambda.back() = bounding.lambdas();
  detail::fill_stage(p, 0, 2 * p.rank - 2, visit);
}

/// Throws std::invalid_argument unless bounding is weakly decreasing and >= 0.
template <class Visit>
void for_each_restricted_pattern(std::span<const std::int64_t> bounding, Visit&& visit) {
  detail::check_bounding(bounding);
  auto p = RestrictedPattern::zero_shape(static_cast<int>(bounding.size()));
  p.eta.back().assign(bounding.begin(), bounding.end());
  detail::fill_stage(p, 1, 2 * p.rank - 2, visit);
}

std::vector<PatternC> enumerate_patterns(const DominantWeight& bounding);
std::vector<RestrictedPattern> enumerate_restricted_patterns(std::span<const std::int64_t> bounding);

/// Counting without materializing.
std::uint64_t count_patterns(const DominantWeight& bounding);
std::uint64_t count_restricted_patterns(std::span<const std::int64_t> bounding);

/// Drops lambda^r: the restricted pattern underneath a pattern.
RestrictedPattern truncate(const PatternC& p);
/// Drops eta^r: the rank r - 1 pattern underneath a restricted pattern (r >= 2).
PatternC truncate(const RestrictedPattern& p);

}  // namespace spweyl
