#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>

#include "spweyl/rootsys.hpp"

namespace spweyl {

/// Polynomial in q with exact integer coefficients. Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  /// Constant polynomial.
  QPolynomial(BigInt c);  // NOLINT(google-explicit-constructor)
  QPolynomial(int c) : QPolynomial(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients listed from q^0 upward.
  static QPolynomial from_coeffs(std::initializer_list<long long> coeffs);
  static QPolynomial monomial(std::int64_t degree, BigInt c = 1);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  BigInt coeff(std::int64_t degree) const;
  BigInt at_one() const;
  const std::map<std::int64_t, BigInt>& terms() const { return terms_; }

  void add_term(std::int64_t degree, const BigInt& c);
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  /// Multiplies by q^k.
  QPolynomial shifted(std::int64_t k) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1+q+2q^2"; "0" for zero.
  std::string to_string() const;

 private:
  std::map<std::int64_t, BigInt> terms_;
};

/// Gaussian binomial [n choose s]_q for 0 <= s <= n; zero when s > n, s < 0 or n < 0.
QPolynomial q_binomial(std::int64_t n, std::int64_t s);

/// Sum of q^{|s|} over partitions fitting the rectangle (ell, ellp), by enumeration.
QPolynomial box_generating_function(std::int64_t ell, std::int64_t ellp);

}  // namespace spweyl
