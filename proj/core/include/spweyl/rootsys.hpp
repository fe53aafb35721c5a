#pragma once

// Type C root system of rank r: weight coordinates, positive roots and the
// standard pairing (e_i, e_j) = delta_ij.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spweyl {

using BigInt = boost::multiprecision::cpp_int;

/// Weight in epsilon coordinates: coords[k] is the coefficient of e_{k+1}.
struct WeightVector {
  std::vector<std::int64_t> coords;

  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static WeightVector zero(int rank) { return WeightVector(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  std::int64_t operator[](std::size_t k) const { return coords[k]; }
  std::int64_t& operator[](std::size_t k) { return coords[k]; }

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(std::int64_t k, WeightVector a);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Dominant integral weight, held in both omega and lambda-tuple coordinates.
class DominantWeight {
 public:
  /// Throws std::invalid_argument on an empty or negative input.
  static DominantWeight from_omegas(std::vector<std::int64_t> m);
  /// Throws std::invalid_argument unless the tuple is weakly decreasing and >= 0.
  static DominantWeight from_lambdas(std::vector<std::int64_t> lam);
  static DominantWeight zero(int rank);
  static DominantWeight fundamental(int i, int rank);

  int rank() const { return static_cast<int>(omegas_.size()); }
  const std::vector<std::int64_t>& omegas() const { return omegas_; }
  const std::vector<std::int64_t>& lambdas() const { return lambdas_; }
  std::int64_t omega(int i) const { return omegas_[i - 1]; }
  std::int64_t lambda(int i) const { return i > rank() ? 0 : lambdas_[i - 1]; }
  /// Sum of the omega coordinates.
  std::int64_t total() const;
  WeightVector weight() const { return WeightVector(lambdas_); }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  DominantWeight(std::vector<std::int64_t> m, std::vector<std::int64_t> l)
      : omegas_(std::move(m)), lambdas_(std::move(l)) {}
  std::vector<std::int64_t> omegas_;
  std::vector<std::int64_t> lambdas_;
};

std::vector<std::int64_t> omegas_to_lambda(std::span<const std::int64_t> m);
std::vector<std::int64_t> lambda_to_omegas(std::span<const std::int64_t> lam);

/// Positive root alpha_{i,j} (barred == false, j < r) or alpha_{i,jbar}.
/// The unbarred alpha_{i,r} coincides with alpha_{i,rbar}; make() folds it.
struct RootLabel {
  int i = 1;
  int j = 1;
  bool barred = true;

  static RootLabel make(int i, int j, bool barred, int rank);
  bool valid_for(int rank) const;
  /// "i,j" or "i,j~" for barred labels.
  std::string to_string() const;

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

/// Closed-form epsilon expansion of a positive root. Throws on a bad label.
WeightVector root_vector(const RootLabel& label, int rank);

/// All r^2 positive root labels: unbarred alpha_{i,j} ordered by (i, j), then
/// barred alpha_{i,jbar} ordered by (i, j).
std::vector<RootLabel> positive_root_labels(int rank);
/// root_vector applied to positive_root_labels(rank), same order.
std::vector<WeightVector> positive_roots(int rank);

/// Simple root alpha_k, 1 <= k <= r.
WeightVector simple_root(int k, int rank);

/// Rho = (r, r-1, ..., 1).
WeightVector rho(int rank);

std::int64_t inner(const WeightVector& u, const WeightVector& v);

/// Coefficients c with lambda - mu = sum c_k alpha_k, or nothing if lambda - mu is
/// not in the root lattice.
std::optional<std::vector<std::int64_t>> simple_root_coordinates(const WeightVector& diff);

/// Dominant representative under signed permutations: |coords| sorted descending.
WeightVector dominant_representative(const WeightVector& w);

/// "2ε₁−ε₂" style rendering; "0" for the zero weight.
std::string weight_to_text(const WeightVector& w);

}  // namespace spweyl
