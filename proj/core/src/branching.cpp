#include "spweyl/branching.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "spweyl/oracle.hpp"
#include "spweyl/patterns.hpp"
#include "spweyl/pops.hpp"

namespace spweyl {

namespace {

std::string tuple_str(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// Odometer over prod [lo_k, hi_k], first coordinate most significant.
template <class Visit>
void for_each_box_point(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, Visit&& visit) {
  std::vector<std::int64_t> cur(lo.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == lo.size()) {
      visit(static_cast<const std::vector<std::int64_t>&>(cur));
      return;
    }
    for (std::int64_t v = lo[k]; v <= hi[k]; ++v) {
      cur[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

std::uint64_t pattern_count_rank_aware(std::span<const std::int64_t> lambdas) {
  if (lambdas.empty()) return 1;  // the trivial sp_0 module
  return count_patterns(DominantWeight::from_lambdas({lambdas.begin(), lambdas.end()}));
}

}  // namespace

std::vector<FiltrationTerm> weyl_filtration(const DominantWeight& lam) {
  const int r = lam.rank();
  if (r < 2) throw std::invalid_argument("weyl_filtration needs rank >= 2");
  std::vector<FiltrationTerm> out;
  const auto& m = lam.omegas();
  for_each_box_point(std::vector<std::int64_t>(r, 0), m, [&](const std::vector<std::int64_t>& ell) {
    std::vector<std::int64_t> n(r - 1);
    for (int i = 0; i < r - 1; ++i) n[i] = m[i] - ell[i] + ell[i + 1];
    BigInt base = 1;
    for (int i = 0; i < r; ++i) base *= binomial(m[i], ell[i]);
    for_each_box_point(std::vector<std::int64_t>(r - 1, 0), n, [&](const std::vector<std::int64_t>& ellp) {
      FiltrationTerm t;
      t.ell = ell;
      t.ellp = ellp;
      t.mult = base;
      for (int i = 0; i < r - 1; ++i) t.mult *= binomial(n[i], ellp[i]);
      for (int i = 0; i < r - 1; ++i) t.target.push_back(lam.lambda(i + 1) - ell[i] - ellp[i]);
      out.push_back(std::move(t));
    });
  });
  return out;
}

std::vector<std::vector<std::int64_t>> shtepin_branch_V(const DominantWeight& lam) {
  const int r = lam.rank();
  std::vector<std::int64_t> lo(r), hi(r);
  for (int i = 1; i <= r; ++i) {
    lo[i - 1] = lam.lambda(i + 1);
    hi[i - 1] = lam.lambda(i);
  }
  std::vector<std::vector<std::int64_t>> out;
  for_each_box_point(lo, hi, [&](const std::vector<std::int64_t>& eta) { out.push_back(eta); });
  return out;
}

std::vector<std::vector<std::int64_t>> shtepin_branch_L(std::span<const std::int64_t> eta) {
  detail::check_bounding(eta);
  const std::size_t r = eta.size();
  std::vector<std::int64_t> lo(r - 1), hi(r - 1);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    lo[i] = eta[i + 1];
    hi[i] = eta[i];
  }
  std::vector<std::vector<std::int64_t>> out;
  for_each_box_point(lo, hi, [&](const std::vector<std::int64_t>& nu) { out.push_back(nu); });
  return out;
}

std::vector<DominantWeight> weights_up_to(int rank, std::int64_t max_total) {
  std::vector<DominantWeight> out;
  for (std::int64_t total = 0; total <= max_total; ++total)
    for_each_box_point(std::vector<std::int64_t>(rank, 0), std::vector<std::int64_t>(rank, total),
                       [&](const std::vector<std::int64_t>& m) {
                         if (std::accumulate(m.begin(), m.end(), std::int64_t{0}) == total) out.push_back(DominantWeight::from_omegas(m));
                       });
  // odometer order is ascending; flip to descending within each total
  auto first = out.begin();
  while (first != out.end()) {
    auto last = first;
    while (last != out.end() && last->total() == first->total()) ++last;
    std::reverse(first, last);
    first = last;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "lambda omegas=" << tuple_str(omegas) << (all_passed() ? "  ALL PASS" : "  FAILURES") << '\n';
  for (const auto& c : checks) {
    out << "  [" << status_name(c.status) << "] " << c.check << ": " << c.lhs << " vs " << c.rhs;
    if (c.witness) out << "  (" << *c.witness << ")";
    out << '\n';
  }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["omegas"] = omegas;
  j["all_passed"] = all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"check", c.check}, {"status", status_name(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (c.witness) e["witness"] = *c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

CheckResult compare(std::string name, const std::string& lhs, const std::string& rhs,
                    std::optional<std::string> witness = std::nullopt) {
  CheckResult c{std::move(name), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail, lhs, rhs, std::nullopt};
  if (c.status == CheckStatus::Fail) c.witness = std::move(witness);
  return c;
}

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::Skip, "-", "-", std::move(why)};
}

std::string first_difference(const GradedCharacter& a, const GradedCharacter& b) {
  for (const auto& [k, v] : a.terms())
    if (b.mult(k.grade, k.weight) != v)
      return "grade " + std::to_string(k.grade) + " weight " + tuple_str(k.weight.coords) + ": " + v.str() +
             " vs " + b.mult(k.grade, k.weight).str();
  for (const auto& [k, v] : b.terms())
    if (a.mult(k.grade, k.weight) != v)
      return "grade " + std::to_string(k.grade) + " weight " + tuple_str(k.weight.coords) + ": " +
             a.mult(k.grade, k.weight).str() + " vs " + v.str();
  return "";
}

GradedCharacter table_as_character(const CharacterTable& t) {
  GradedCharacter ch(t.rank);
  for (const auto& [w, m] : t.mults) ch.add(0, w, m);
  return ch;
}

using FKey = std::vector<FPair>;

// One level of the POP recursions: every element splits as (inner, key) with
// key in F^k(bound) and inner an element of the next smaller family. Checks
// that the split is a bijection onto the disjoint union over keys.
template <class Outer, class Split, class InnerCount>
std::optional<std::string> check_recursion(const std::vector<Outer>& elements, std::span<const std::int64_t> m,
                                           Split split, InnerCount inner_count) {
  std::map<FKey, std::set<PbwMonomial>> classes;
  std::map<FKey, std::vector<std::int64_t>> targets;
  for (const auto& e : elements) {
    auto [key, inner_word, inner_bounding, ok] = split(e);
    if (!ok) return "element " + pop_monomial(e).to_text() + " does not split into a valid inner element";
    for (std::size_t i = 0; i < key.size(); ++i)
      if (!in_f(key[i], m[i])) return "key entry " + std::to_string(i + 1) + " not in F(m_i)";
    if (!classes[key].insert(inner_word).second) return "two elements share inner word " + inner_word.to_text();
    targets[key] = inner_bounding;
  }
  // every key of F^k(bound) must occur
  std::uint64_t expected_keys = 1;
  for (auto mi : m) expected_keys <<= mi;
  if (classes.size() != expected_keys)
    return "saw " + std::to_string(classes.size()) + " keys, expected " + std::to_string(expected_keys);
  for (const auto& [key, words] : classes) {
    const std::uint64_t n = inner_count(targets[key]);
    if (n != words.size())
      return "class " + tuple_str(targets[key]) + " has " + std::to_string(words.size()) + " elements, expected " +
             std::to_string(n);
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_identities(const DominantWeight& lam, VerifyOptions opts) {
  VerifyReport rep;
  rep.omegas = lam.omegas();
  auto& out = rep.checks;
  const int r = lam.rank();
  const ParallelOptions par{opts.threads};

  const auto pops = enumerate_pops(lam);
  const std::uint64_t n_patterns = count_patterns(lam);
  const BigInt dim_v = weyl_dim(lam);
  const BigInt formula = pop_count_formula(lam);

  out.push_back(compare("pattern_count_vs_weyl_dim", std::to_string(n_patterns), dim_v.str()));
  out.push_back(compare("pop_count_vs_product_formula", std::to_string(pops.size()), formula.str()));

  BigInt fundamental_product = 1;
  for (int i = 1; i <= r; ++i)
    for (std::int64_t e = 0; e < lam.omega(i); ++e) fundamental_product *= weyl_dim(DominantWeight::fundamental(i, r));

  const GradedCharacter direct = character_direct(lam, par);
  const GradedCharacter fermionic = character_fermionic(lam, par);
  out.push_back(compare("dimension_product", total_dim(direct).str(), fundamental_product.str()));
  out.push_back(compare("direct_vs_fermionic", std::to_string(direct.size()) + " terms",
                        std::to_string(fermionic.size()) + " terms", first_difference(direct, fermionic)));
  if (direct != fermionic) out.back().status = CheckStatus::Fail;

  const GradedCharacter freud = table_as_character(freudenthal_character(lam));
  const GradedCharacter zeroth = zeroth_piece(direct);
  out.push_back(compare("zeroth_piece_vs_freudenthal", total_dim(zeroth).str(), total_dim(freud).str(),
                        first_difference(zeroth, freud)));
  if (zeroth != freud) out.back().status = CheckStatus::Fail;

  {
    GradedCharacter pattern_weights(r);
    for_each_pattern(lam, [&](const PatternC& p) { pattern_weights.add(0, pattern_weight(p), 1); });
    out.push_back(compare("pattern_weights_vs_freudenthal", total_dim(pattern_weights).str(), total_dim(freud).str(),
                          first_difference(pattern_weights, freud)));
    if (pattern_weights != freud) out.back().status = CheckStatus::Fail;
  }

  {
    std::optional<std::string> bad;
    std::set<PbwMonomial> words;
    for (const auto& p : pops) {
      const auto d = differences(p.pattern);
      if (pattern_weight(p.pattern) != lowered_weight(lam, d)) {
        bad = "pattern weight differs from root expansion at " + pop_monomial(p).to_text();
        break;
      }
    }
    out.push_back(compare("pop_weight_two_formulas", bad ? "mismatch" : "agree", "agree", bad));
    bad.reset();
    for (const auto& p : pops) {
      const auto w = pop_monomial(p);
      if (w.degree() != pop_boxes(p)) {
        bad = "degree/boxes mismatch at " + w.to_text();
        break;
      }
      words.insert(w);
    }
    if (!bad && words.size() != pops.size()) bad = "distinct POPs share a monomial";
    out.push_back(compare("monomials_degree_and_injective", std::to_string(words.size()), std::to_string(pops.size()), bad));
    if (bad) out.back().status = CheckStatus::Fail;
  }

  // recursion through restricted POPs: B^r(lambda) = U B^{r-1/2}(lambda - ell) x_rbar(ell, s)
  {
    auto split = [&](const Pop& p) {
      FKey key;
      std::vector<std::int64_t> inner_bound(r);
      for (int i = 1; i <= r; ++i) {
        const Partition& s = p.barred[tri_index(i, r)];
        key.push_back({static_cast<std::int64_t>(s.length()), s});
        inner_bound[i - 1] = lam.lambda(i) - static_cast<std::int64_t>(s.length());
      }
      const RestrictedPop inner = truncate(p);
      PbwMonomial word = pop_monomial(inner);
      bool ok = is_valid(inner) && inner.pattern.bounding() == inner_bound;
      // the full word is the inner word followed by the rbar block
      PbwMonomial tail;
      for (int i = 1; i <= r; ++i)
        for (auto t : p.barred[tri_index(i, r)].parts) tail.factors.push_back({RootLabel{i, r, true}, t});
      PbwMonomial joined = word;
      joined.factors.insert(joined.factors.end(), tail.factors.begin(), tail.factors.end());
      ok = ok && joined == pop_monomial(p);
      return std::tuple{key, word, inner_bound, ok};
    };
    auto inner_count = [](const std::vector<std::int64_t>& eta) { return count_restricted_pops(eta); };
    const auto bad = check_recursion(pops, lam.omegas(), split, inner_count);
    out.push_back(compare("recursion_through_restricted_pops", bad ? "broken" : "bijective", "bijective", bad));
  }

  // restricted POP counts and the rank-lowering recursion for every lambda - ell
  std::set<std::vector<std::int64_t>> etas;
  for_each_box_point(std::vector<std::int64_t>(r, 0), lam.omegas(), [&](const std::vector<std::int64_t>& ell) {
    std::vector<std::int64_t> eta(r);
    for (int i = 0; i < r; ++i) eta[i] = lam.lambdas()[i] - ell[i];
    etas.insert(eta);
  });
  {
    std::optional<std::string> bad;
    for (const auto& eta : etas) {
      const auto n = count_restricted_pops(eta);
      const auto f = restricted_pop_count_formula(eta);
      if (BigInt(n) != f) {
        bad = "eta=" + tuple_str(eta) + ": " + std::to_string(n) + " vs " + f.str();
        break;
      }
    }
    out.push_back(compare("restricted_pop_count_vs_formula", bad ? "mismatch" : "agree", "agree", bad));
  }
  if (r >= 2) {
    std::optional<std::string> bad;
    for (const auto& eta : etas) {
      const auto n = lambda_to_omegas(eta);
      auto split = [&](const RestrictedPop& p) {
        FKey key;
        std::vector<std::int64_t> inner_bound(r - 1);
        for (int i = 1; i <= r - 1; ++i) {
          const Partition& s = p.unbarred[tri_index(i, r - 1)];
          key.push_back({static_cast<std::int64_t>(s.length()), s});
          inner_bound[i - 1] = eta[i - 1] - static_cast<std::int64_t>(s.length());
        }
        const Pop inner = truncate(p);
        const bool ok = is_valid(inner) && inner.pattern.bounding() == inner_bound;
        return std::tuple{key, pop_monomial(inner), inner_bound, ok};
      };
      auto inner_count = [](const std::vector<std::int64_t>& nu) {
        return count_pops(DominantWeight::from_lambdas(nu));
      };
      bad = check_recursion(enumerate_restricted_pops(eta), std::span(n).first(r - 1), split, inner_count);
      if (bad) {
        *bad = "eta=" + tuple_str(eta) + ": " + *bad;
        break;
      }
    }
    out.push_back(compare("recursion_to_lower_rank", bad ? "broken" : "bijective", "bijective", bad));
  } else {
    out.push_back(skipped("recursion_to_lower_rank", "rank 1"));
  }

  // two-step interlacing branching at the level of dimensions
  {
    const auto etas_v = shtepin_branch_V(lam);
    std::uint64_t expected = 1;
    for (int i = 1; i <= r; ++i) expected *= static_cast<std::uint64_t>(lam.lambda(i) - lam.lambda(i + 1) + 1);
    std::uint64_t sum = 0;
    for (const auto& eta : etas_v) sum += count_restricted_patterns(eta);
    out.push_back(compare("shtepin_V_dimension", std::to_string(sum) + " over " + std::to_string(etas_v.size()) + " eta",
                          std::to_string(n_patterns) + " over " + std::to_string(expected) + " eta"));
    std::optional<std::string> bad;
    for (const auto& eta : etas_v) {
      std::uint64_t s = 0;
      for (const auto& nu : shtepin_branch_L(eta)) s += pattern_count_rank_aware(nu);
      const auto d = count_restricted_patterns(eta);
      if (s != d) {
        bad = "eta=" + tuple_str(eta) + ": " + std::to_string(s) + " vs " + std::to_string(d);
        break;
      }
    }
    out.push_back(compare("shtepin_L_dimension", bad ? "mismatch" : "agree", "agree", bad));
  }

  if (r >= 2) {
    const auto terms = weyl_filtration(lam);
    BigInt by_formula = 0;
    BigInt by_enumeration = 0;
    GradedCharacter rhs(r - 1);
    for (const auto& t : terms) {
      const auto target = DominantWeight::from_lambdas(t.target);
      by_formula += t.mult * pop_count_formula(target);
      by_enumeration += t.mult * BigInt(count_pops(target));
      rhs.merge(specialize_q1(character_direct(target, par)).scaled(t.mult));
    }
    out.push_back(compare("weyl_filtration_dimension", by_formula.str(), formula.str()));
    out.push_back(compare("weyl_filtration_dimension_enumerated", by_enumeration.str(), BigInt(pops.size()).str()));
    const GradedCharacter lhs = restrict_drop_last(specialize_q1(direct));
    out.push_back(compare("ungraded_restriction_identity", total_dim(lhs).str(), total_dim(rhs).str(),
                          first_difference(lhs, rhs)));
    if (lhs != rhs) out.back().status = CheckStatus::Fail;
  } else {
    out.push_back(skipped("weyl_filtration_dimension", "rank 1"));
    out.push_back(skipped("ungraded_restriction_identity", "rank 1"));
  }

  {
    std::optional<std::string> bad;
    for (const auto& [k, v] : direct.terms()) {
      for (const auto& w : weyl_orbit(k.weight))
        if (direct.mult(k.grade, w) != v) {
          bad = "grade " + std::to_string(k.grade) + ": " + tuple_str(k.weight.coords) + " vs " + tuple_str(w.coords);
          break;
        }
      if (bad) break;
    }
    out.push_back(compare("signed_permutation_symmetry", bad ? "broken" : "invariant", "invariant", bad));
  }
  return rep;
}

}  // namespace spweyl
