#include "spweyl/qseries.hpp"

#include <mutex>
#include <vector>

#include "spweyl/pops.hpp"

namespace spweyl {

QPolynomial::QPolynomial(BigInt c) {
  if (c != 0) terms_.emplace(0, std::move(c));
}

QPolynomial QPolynomial::from_coeffs(std::initializer_list<long long> coeffs) {
  QPolynomial p;
  std::int64_t d = 0;
  for (auto c : coeffs) p.add_term(d++, c);
  return p;
}

QPolynomial QPolynomial::monomial(std::int64_t degree, BigInt c) {
  QPolynomial p;
  p.add_term(degree, c);
  return p;
}

BigInt QPolynomial::coeff(std::int64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

void QPolynomial::add_term(std::int64_t degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial QPolynomial::shifted(std::int64_t k) const {
  QPolynomial out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + k, c);
  return out;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    const bool unit = mag == 1;
    if (d == 0 || !unit) s += mag.str();
    if (d >= 1) s += "q";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

namespace {

// Pascal rows: [n choose s] = [n-1 choose s-1] + q^s [n-1 choose s].
class QBinomialTable {
 public:
  QPolynomial get(std::int64_t n, std::int64_t s) {
    std::lock_guard lock(mu_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      const auto m = static_cast<std::int64_t>(rows_.size());
      std::vector<QPolynomial> row(static_cast<std::size_t>(m + 1));
      row[0] = 1;
      row[m] = 1;
      for (std::int64_t k = 1; k < m; ++k)
        row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k].shifted(k);
      rows_.push_back(std::move(row));
    }
    return rows_[n][s];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<QPolynomial>> rows_;
};

}  // namespace

QPolynomial q_binomial(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 0 || s > n) return {};
  static QBinomialTable table;
  return table.get(n, s);
}

QPolynomial box_generating_function(std::int64_t ell, std::int64_t ellp) {
  QPolynomial out;
  for (const auto& p : partitions_in_box(ell, ellp)) out.add_term(p.size(), 1);
  return out;
}

}  // namespace spweyl
