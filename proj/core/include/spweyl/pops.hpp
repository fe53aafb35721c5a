#pragma once

// Partition overlaid patterns (POPs): a pattern together with one partition
// per difference position, each fitting the rectangle (ell, ell') at that
// position. Partitions are stored weakly INCREASING, s(1) <= ... <= s(ell).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spweyl/patterns.hpp"
#include "spweyl/rootsys.hpp"

namespace spweyl {

struct Partition {
  std::vector<std::int64_t> parts;  // weakly increasing

  std::size_t length() const { return parts.size(); }
  std::int64_t size() const;
  bool fits(std::int64_t ell, std::int64_t ellp) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Weakly increasing length-ell sequences with parts <= ellp, lexicographically.
/// There are C(ell + ellp, ell) of them.
std::vector<Partition> partitions_in_box(std::int64_t ell, std::int64_t ellp);

/// Element (ell, s) of F(m): s fits the rectangle (ell, m - ell).
struct FPair {
  std::int64_t ell = 0;
  Partition partition;
  friend bool operator==(const FPair&, const FPair&) = default;
  friend auto operator<=>(const FPair&, const FPair&) = default;
};

/// F(m), ordered by ell and then lexicographically; 2^m elements.
std::vector<FPair> enumerate_f(std::int64_t m);
bool in_f(const FPair& f, std::int64_t m);

/// Overlay slot: barred (i, jbar) or unbarred (i, j).
struct Position {
  int i = 1;
  int j = 1;
  bool barred = true;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Slots in monomial block order: 1bar, 1, 2bar, 2, ..., (r-1)bar, r-1, rbar,
/// with i ascending inside each block. Restricted shapes stop before rbar.
std::vector<Position> overlay_positions(int rank, bool restricted);

template <bool Restricted>
struct BasicPop {
  BasicPattern<Restricted> pattern;
  std::vector<Partition> barred;    // tri_index(i, j), j over the barred extent
  std::vector<Partition> unbarred;  // tri_index(i, j), j < r

  int rank() const { return pattern.rank; }
  const Partition& overlay(const Position& pos) const {
    return pos.barred ? barred[tri_index(pos.i, pos.j)] : unbarred[tri_index(pos.i, pos.j)];
  }
  Partition& overlay(const Position& pos) {
    return pos.barred ? barred[tri_index(pos.i, pos.j)] : unbarred[tri_index(pos.i, pos.j)];
  }

  friend bool operator==(const BasicPop&, const BasicPop&) = default;
};

using Pop = BasicPop<false>;
using RestrictedPop = BasicPop<true>;

/// Every overlay fits its rectangle and the pattern is valid.
bool is_valid(const Pop& p);
bool is_valid(const RestrictedPop& p);

// ---------------------------------------------------------------------------
// Enumeration: for each pattern in pattern order, the Cartesian product of the
// rectangle partitions over overlay_positions(), first slot most significant.

namespace detail {

template <bool R, class Visit>
void overlay_product(BasicPop<R>& pop, const std::vector<Position>& slots,
                     const std::vector<const std::vector<Partition>*>& choices, std::size_t k,
                     Visit& visit) {
  if (k == slots.size()) {
    visit(static_cast<const BasicPop<R>&>(pop));
    return;
  }
  auto& slot = pop.overlay(slots[k]);
  for (const auto& part : *choices[k]) {
    slot = part;
    overlay_product(pop, slots, choices, k + 1, visit);
  }
}

class BoxTable {
 public:
  const std::vector<Partition>& get(std::int64_t ell, std::int64_t ellp);

 private:
  // node-based, so references stay valid while the table grows
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Partition>> table_;
};

template <bool R, class Visit>
void overlays_of(const BasicPattern<R>& pattern, BoxTable& boxes, Visit& visit) {
  const auto slots = overlay_positions(pattern.rank, R);
  const DiffArray d = differences(pattern);
  BasicPop<R> pop;
  pop.pattern = pattern;
  pop.barred.resize(tri_size(d.barred_extent()));
  pop.unbarred.resize(tri_size(d.unbarred_extent()));
  std::vector<const std::vector<Partition>*> choices;
  choices.reserve(slots.size());
  for (const auto& s : slots) {
    const Gap g = s.barred ? d.barred(s.i, s.j) : d.unbarred(s.i, s.j);
    choices.push_back(&boxes.get(g.ell, g.ellp));
  }
  overlay_product(pop, slots, choices, 0, visit);
}

}  // namespace detail

template <class Visit>
void for_each_pop_over(const PatternC& pattern, Visit&& visit) {
  detail::BoxTable boxes;
  detail::overlays_of(pattern, boxes, visit);
}

template <class Visit>
void for_each_pop_with_top(const DominantWeight& bounding, const Row& eta_r, Visit&& visit) {
  detail::BoxTable boxes;
  for_each_pattern_with_top(bounding, eta_r,
                            [&](const PatternC& pat) { detail::overlays_of(pat, boxes, visit); });
}

template <class Visit>
void for_each_pop(const DominantWeight& bounding, Visit&& visit) {
  detail::BoxTable boxes;
  for_each_pattern(bounding, [&](const PatternC& pat) { detail::overlays_of(pat, boxes, visit); });
}

template <class Visit>
void for_each_restricted_pop(std::span<const std::int64_t> bounding, Visit&& visit) {
  detail::BoxTable boxes;
  for_each_restricted_pattern(bounding,
                              [&](const RestrictedPattern& pat) { detail::overlays_of(pat, boxes, visit); });
}

std::vector<Pop> enumerate_pops(const DominantWeight& bounding);
std::vector<RestrictedPop> enumerate_restricted_pops(std::span<const std::int64_t> bounding);
std::uint64_t count_pops(const DominantWeight& bounding);
std::uint64_t count_restricted_pops(std::span<const std::int64_t> bounding);

// ---------------------------------------------------------------------------
// Counting formulas

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// prod_i (C(2r, i) - C(2r, i-2))^{m_i}.
BigInt pop_count_formula(const DominantWeight& lam);
/// prod_i (C(2r-1, i) - C(2r-1, i-2))^{n_i}, n_i = eta_i - eta_{i+1}.
BigInt restricted_pop_count_formula(std::span<const std::int64_t> eta);

// ---------------------------------------------------------------------------
// Weights, boxes, monomials

/// Weight of the underlying pattern. Debug builds also check it against
/// lambda - sum ell * alpha over the difference array.
WeightVector pop_weight(const Pop& p);

/// lambda - sum_{unbarred} ell_{i,j} alpha_{i,j} - sum_{barred} ell_{i,jbar} alpha_{i,jbar}.
WeightVector lowered_weight(const DominantWeight& lam, const DiffArray& d);

std::int64_t pop_boxes(const Pop& p);
std::int64_t pop_boxes(const RestrictedPop& p);

struct PbwFactor {
  RootLabel label;
  std::int64_t t_exp = 0;
  friend bool operator==(const PbwFactor&, const PbwFactor&) = default;
  friend auto operator<=>(const PbwFactor&, const PbwFactor&) = default;
};

/// Word of factors (x^-_label tensor t^t_exp).
struct PbwMonomial {
  std::vector<PbwFactor> factors;

  std::int64_t degree() const;
  /// Space-separated "x-(i,j)@t^s" / "x-(i,j~)@t^s"; the empty word is "1".
  std::string to_text() const;
  static PbwMonomial parse(std::string_view text);

  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

PbwMonomial pop_monomial(const Pop& p);
PbwMonomial pop_monomial(const RestrictedPop& p);

/// Restricted POP under a POP: drops lambda^r and the rbar overlays.
RestrictedPop truncate(const Pop& p);
/// Rank r - 1 POP under a restricted POP: drops eta^r and the block r-1 overlays.
Pop truncate(const RestrictedPop& p);

}  // namespace spweyl
