#pragma once

// Branching bookkeeping: the two-step sp_{2r} > sp_{2r-1} > sp_{2r-2}
// interlacing rules, the rank-lowering filtration of W(lambda), and an
// identity checker that cross-validates every computation in this library.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spweyl/characters.hpp"
#include "spweyl/rootsys.hpp"

namespace spweyl {

struct FiltrationTerm {
  std::vector<std::int64_t> ell;   // length r, ell_i <= m_i
  std::vector<std::int64_t> ellp;  // length r - 1, ell'_i <= m_i - ell_i + ell_{i+1}
  BigInt mult;                     // prod C(m_i, ell_i) * prod C(m_i - ell_i + ell_{i+1}, ell'_i)
  std::vector<std::int64_t> target;  // first r - 1 entries of lambda - ell - (ell', 0)

  friend bool operator==(const FiltrationTerm&, const FiltrationTerm&) = default;
};

/// Summands W(target) of the associated graded of W(lambda) as a rank r - 1
/// current-algebra module, with multiplicities. Ordered lexicographically in
/// (ell, ell'). Throws std::invalid_argument for rank 1.
std::vector<FiltrationTerm> weyl_filtration(const DominantWeight& lam);

/// All eta with lambda_i >= eta_i >= lambda_{i+1}, lexicographically.
std::vector<std::vector<std::int64_t>> shtepin_branch_V(const DominantWeight& lam);

/// All nu (length r - 1) with eta_i >= nu_i >= eta_{i+1}, lexicographically.
/// For r = 1 the single empty tuple.
std::vector<std::vector<std::int64_t>> shtepin_branch_L(std::span<const std::int64_t> eta);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> witness;
};

struct VerifyReport {
  std::vector<std::int64_t> omegas;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  unsigned threads = 1;
};

/// Runs every identity for one lambda. Failures are report entries.
VerifyReport verify_identities(const DominantWeight& lam, VerifyOptions opts = {});

/// Every omega vector of the given rank with total at most max_total,
/// ascending by total and then lexicographically descending.
std::vector<DominantWeight> weights_up_to(int rank, std::int64_t max_total);

}  // namespace spweyl
