#include "spweyl/pops.hpp"

#include <cassert>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace spweyl {

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (auto v : parts) s += v;
  return s;
}

bool Partition::fits(std::int64_t ell, std::int64_t ellp) const {
  if (static_cast<std::int64_t>(parts.size()) != ell) return false;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0 || parts[k] > ellp) return false;
    if (k > 0 && parts[k - 1] > parts[k]) return false;
  }
  return true;
}

std::vector<Partition> partitions_in_box(std::int64_t ell, std::int64_t ellp) {
  std::vector<Partition> out;
  if (ell < 0 || ellp < 0) return out;
  Partition cur;
  cur.parts.assign(static_cast<std::size_t>(ell), 0);
  auto rec = [&](auto&& self, std::size_t k, std::int64_t lo) -> void {
    if (k == cur.parts.size()) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = lo; v <= ellp; ++v) {
      cur.parts[k] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<FPair> enumerate_f(std::int64_t m) {
  std::vector<FPair> out;
  for (std::int64_t ell = 0; ell <= m; ++ell)
    for (auto& s : partitions_in_box(ell, m - ell)) out.push_back({ell, std::move(s)});
  return out;
}

bool in_f(const FPair& f, std::int64_t m) {
  return f.ell >= 0 && f.ell <= m && f.partition.fits(f.ell, m - f.ell);
}

std::vector<Position> overlay_positions(int rank, bool restricted) {
  std::vector<Position> out;
  for (int j = 1; j <= rank; ++j) {
    if (j < rank || !restricted)
      for (int i = 1; i <= j; ++i) out.push_back({i, j, true});
    if (j < rank)
      for (int i = 1; i <= j; ++i) out.push_back({i, j, false});
  }
  return out;
}

namespace {

template <bool R>
bool valid_impl(const BasicPop<R>& p) {
  if (!validate_pattern(p.pattern).ok()) return false;
  const DiffArray d = differences(p.pattern);
  if (p.barred.size() != tri_size(d.barred_extent()) || p.unbarred.size() != tri_size(d.unbarred_extent()))
    return false;
  for (const auto& pos : overlay_positions(p.rank(), R)) {
    const Gap g = pos.barred ? d.barred(pos.i, pos.j) : d.unbarred(pos.i, pos.j);
    if (!p.overlay(pos).fits(g.ell, g.ellp)) return false;
  }
  return true;
}

template <bool R>
std::int64_t boxes_impl(const BasicPop<R>& p) {
  std::int64_t n = 0;
  for (const auto& s : p.barred) n += s.size();
  for (const auto& s : p.unbarred) n += s.size();
  return n;
}

template <bool R>
PbwMonomial monomial_impl(const BasicPop<R>& p) {
  PbwMonomial w;
  const int r = p.rank();
  for (const auto& pos : overlay_positions(r, R)) {
    const RootLabel label{pos.i, pos.j, pos.barred};
    for (auto t : p.overlay(pos).parts) w.factors.push_back({label, t});
  }
  return w;
}

}  // namespace

bool is_valid(const Pop& p) { return valid_impl(p); }
bool is_valid(const RestrictedPop& p) { return valid_impl(p); }

const std::vector<Partition>& detail::BoxTable::get(std::int64_t ell, std::int64_t ellp) {
  auto [it, inserted] = table_.try_emplace({ell, ellp});
  if (inserted) it->second = partitions_in_box(ell, ellp);
  return it->second;
}

std::vector<Pop> enumerate_pops(const DominantWeight& bounding) {
  std::vector<Pop> out;
  for_each_pop(bounding, [&](const Pop& p) { out.push_back(p); });
  return out;
}

std::vector<RestrictedPop> enumerate_restricted_pops(std::span<const std::int64_t> bounding) {
  std::vector<RestrictedPop> out;
  for_each_restricted_pop(bounding, [&](const RestrictedPop& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_pops(const DominantWeight& bounding) {
  std::uint64_t n = 0;
  for_each_pop(bounding, [&](const Pop&) { ++n; });
  return n;
}

std::uint64_t count_restricted_pops(std::span<const std::int64_t> bounding) {
  std::uint64_t n = 0;
  for_each_restricted_pop(bounding, [&](const RestrictedPop&) { ++n; });
  return n;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    c *= n - k + t;
    c /= t;
  }
  return c;
}

namespace {

BigInt product_formula(std::int64_t n, std::span<const std::int64_t> exponents) {
  BigInt total = 1;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const auto i = static_cast<std::int64_t>(k + 1);
    const BigInt base = binomial(n, i) - binomial(n, i - 2);
    for (std::int64_t e = 0; e < exponents[k]; ++e) total *= base;
  }
  return total;
}

}  // namespace

BigInt pop_count_formula(const DominantWeight& lam) {
  return product_formula(2 * lam.rank(), lam.omegas());
}

BigInt restricted_pop_count_formula(std::span<const std::int64_t> eta) {
  const auto n = lambda_to_omegas(eta);
  return product_formula(2 * static_cast<std::int64_t>(eta.size()) - 1, n);
}

WeightVector lowered_weight(const DominantWeight& lam, const DiffArray& d) {
  const int r = lam.rank();
  WeightVector w = lam.weight();
  for (int j = 1; j <= d.unbarred_extent(); ++j)
    for (int i = 1; i <= j; ++i) w -= d.unbarred(i, j).ell * root_vector({i, j, false}, r);
  for (int j = 1; j <= d.barred_extent(); ++j)
    for (int i = 1; i <= j; ++i) w -= d.barred(i, j).ell * root_vector({i, j, true}, r);
  return w;
}

WeightVector pop_weight(const Pop& p) {
  WeightVector w = pattern_weight(p.pattern);
#ifndef NDEBUG
  const auto lam = DominantWeight::from_lambdas(p.pattern.bounding());
  assert(w == lowered_weight(lam, differences(p.pattern)));
#endif
  return w;
}

std::int64_t pop_boxes(const Pop& p) { return boxes_impl(p); }
std::int64_t pop_boxes(const RestrictedPop& p) { return boxes_impl(p); }

std::int64_t PbwMonomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors) d += f.t_exp;
  return d;
}

std::string PbwMonomial::to_text() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += ' ';
    s += "x-(" + f.label.to_string() + ")@t^" + std::to_string(f.t_exp);
  }
  return s;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view token) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad monomial factor '" + std::string(token) + "'");
  return v;
}

}  // namespace

PbwMonomial PbwMonomial::parse(std::string_view text) {
  PbwMonomial w;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_one = false;
  while (in >> tok) {
    if (tok == "1") {
      saw_one = true;
      continue;
    }
    // x-(i,j~)@t^s
    const auto open = tok.find("x-(");
    const auto close = tok.find(")@t^");
    const auto comma = tok.find(',');
    if (open != 0 || close == std::string::npos || comma == std::string::npos || comma > close)
      throw std::invalid_argument("bad monomial factor '" + tok + "'");
    std::string_view sv(tok);
    PbwFactor f;
    f.label.i = static_cast<int>(parse_int(sv.substr(3, comma - 3), tok));
    auto jpart = sv.substr(comma + 1, close - comma - 1);
    f.label.barred = !jpart.empty() && jpart.back() == '~';
    if (f.label.barred) jpart.remove_suffix(1);
    f.label.j = static_cast<int>(parse_int(jpart, tok));
    f.t_exp = parse_int(sv.substr(close + 4), tok);
    w.factors.push_back(f);
  }
  if (saw_one && !w.factors.empty()) throw std::invalid_argument("'1' may only stand alone");
  return w;
}

PbwMonomial pop_monomial(const Pop& p) { return monomial_impl(p); }
PbwMonomial pop_monomial(const RestrictedPop& p) { return monomial_impl(p); }

RestrictedPop truncate(const Pop& p) {
  RestrictedPop q;
  q.pattern = truncate(p.pattern);
  q.barred.assign(p.barred.begin(), p.barred.begin() + static_cast<std::ptrdiff_t>(tri_size(p.rank() - 1)));
  q.unbarred = p.unbarred;
  return q;
}

Pop truncate(const RestrictedPop& p) {
  Pop q;
  q.pattern = truncate(p.pattern);
  q.barred = p.barred;
  q.unbarred.assign(p.unbarred.begin(),
                    p.unbarred.begin() + static_cast<std::ptrdiff_t>(tri_size(p.rank() - 2)));
  return q;
}

}  // namespace spweyl
