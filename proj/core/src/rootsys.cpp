#include "spweyl/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace spweyl {

bool WeightVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

WeightVector operator*(std::int64_t k, WeightVector a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

std::vector<std::int64_t> omegas_to_lambda(std::span<const std::int64_t> m) {
  std::vector<std::int64_t> lam(m.size(), 0);
  std::int64_t acc = 0;
  for (std::size_t k = m.size(); k-- > 0;) {
    acc += m[k];
    lam[k] = acc;
  }
  return lam;
}

std::vector<std::int64_t> lambda_to_omegas(std::span<const std::int64_t> lam) {
  std::vector<std::int64_t> m(lam.size(), 0);
  for (std::size_t k = 0; k < lam.size(); ++k) {
    const std::int64_t next = k + 1 < lam.size() ? lam[k + 1] : 0;
    if (lam[k] < 0) throw std::invalid_argument("lambda tuple has a negative entry");
    if (lam[k] < next) throw std::invalid_argument("lambda tuple is not weakly decreasing");
    m[k] = lam[k] - next;
  }
  return m;
}

DominantWeight DominantWeight::from_omegas(std::vector<std::int64_t> m) {
  if (m.empty()) throw std::invalid_argument("rank must be positive");
  for (auto v : m)
    if (v < 0) throw std::invalid_argument("omega coordinates must be non-negative");
  auto lam = omegas_to_lambda(m);
  return DominantWeight(std::move(m), std::move(lam));
}

DominantWeight DominantWeight::from_lambdas(std::vector<std::int64_t> lam) {
  if (lam.empty()) throw std::invalid_argument("rank must be positive");
  auto m = lambda_to_omegas(lam);
  return DominantWeight(std::move(m), std::move(lam));
}

DominantWeight DominantWeight::zero(int rank) {
  return from_omegas(std::vector<std::int64_t>(rank, 0));
}

DominantWeight DominantWeight::fundamental(int i, int rank) {
  if (i < 1 || i > rank) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<std::int64_t> m(rank, 0);
  m[i - 1] = 1;
  return from_omegas(std::move(m));
}

std::int64_t DominantWeight::total() const {
  std::int64_t s = 0;
  for (auto v : omegas_) s += v;
  return s;
}

RootLabel RootLabel::make(int i, int j, bool barred, int rank) {
  RootLabel l{i, j, barred || j == rank};
  if (!l.valid_for(rank)) throw std::invalid_argument("invalid root label " + l.to_string());
  return l;
}

bool RootLabel::valid_for(int rank) const {
  if (i < 1 || i > j || j > rank) return false;
  return barred || j < rank;
}

std::string RootLabel::to_string() const {
  return std::to_string(i) + "," + std::to_string(j) + (barred ? "~" : "");
}

WeightVector root_vector(const RootLabel& label, int rank) {
  if (!label.valid_for(rank)) throw std::invalid_argument("invalid root label " + label.to_string());
  auto w = WeightVector::zero(rank);
  const int i = label.i - 1;
  const int j = label.j - 1;
  if (!label.barred) {
    w[i] += 1;
    w[j + 1] -= 1;
  } else {
    w[i] += 1;
    w[j] += 1;
  }
  return w;
}

std::vector<RootLabel> positive_root_labels(int rank) {
  std::vector<RootLabel> out;
  out.reserve(static_cast<std::size_t>(rank) * rank);
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j < rank; ++j) out.push_back({i, j, false});
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) out.push_back({i, j, true});
  return out;
}

std::vector<WeightVector> positive_roots(int rank) {
  std::vector<WeightVector> out;
  for (const auto& l : positive_root_labels(rank)) out.push_back(root_vector(l, rank));
  return out;
}

WeightVector simple_root(int k, int rank) {
  if (k < 1 || k > rank) throw std::invalid_argument("simple root index out of range");
  auto w = WeightVector::zero(rank);
  if (k < rank) {
    w[k - 1] = 1;
    w[k] = -1;
  } else {
    w[k - 1] = 2;
  }
  return w;
}

WeightVector rho(int rank) {
  auto w = WeightVector::zero(rank);
  for (int k = 0; k < rank; ++k) w[k] = rank - k;
  return w;
}

std::int64_t inner(const WeightVector& u, const WeightVector& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("inner: rank mismatch");
  std::int64_t s = 0;
  for (int k = 0; k < u.rank(); ++k) s += u[k] * v[k];
  return s;
}

std::optional<std::vector<std::int64_t>> simple_root_coordinates(const WeightVector& diff) {
  const int r = diff.rank();
  std::vector<std::int64_t> c(r, 0);
  std::int64_t prefix = 0;
  for (int k = 0; k < r; ++k) {
    prefix += diff[k];
    if (k + 1 < r) c[k] = prefix;
  }
  // e_r coefficient is 2 c_r - c_{r-1}, so c_r is half the total sum.
  if (prefix % 2 != 0) return std::nullopt;
  c[r - 1] = prefix / 2;
  return c;
}

WeightVector dominant_representative(const WeightVector& w) {
  WeightVector d = w;
  for (auto& c : d.coords) c = std::abs(c);
  std::sort(d.coords.begin(), d.coords.end(), std::greater<>());
  return d;
}

namespace {

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char ch : std::to_string(n)) s += digits[ch - '0'];
  return s;
}

}  // namespace

std::string weight_to_text(const WeightVector& w) {
  std::string s;
  for (int k = 0; k < w.rank(); ++k) {
    const std::int64_t c = w[k];
    if (c == 0) continue;
    if (c < 0)
      s += "−";
    else if (!s.empty())
      s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "ε" + subscript(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace spweyl
