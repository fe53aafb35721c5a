#include "spweyl/patterns.hpp"

#include <stdexcept>

namespace spweyl {

std::string Violation::to_string() const {
  const auto js = std::to_string(j);
  const auto j1 = std::to_string(j + 1);
  const auto is = std::to_string(i);
  const auto i1 = std::to_string(i + 1);
  switch (constraint) {
    case Constraint::LambdaOverEta:
      return "lambda^" + js + "_" + is + " >= eta^" + js + "_" + is;
    case Constraint::EtaOverLambdaNext:
      return "eta^" + js + "_" + is + " >= lambda^" + js + "_" + i1;
    case Constraint::EtaUpOverLambda:
      return "eta^" + j1 + "_" + is + " >= lambda^" + js + "_" + is;
    case Constraint::LambdaOverEtaUp:
      return "lambda^" + js + "_" + is + " >= eta^" + j1 + "_" + i1;
    case Constraint::NonNegative:
      return std::string(eta_row ? "eta^" : "lambda^") + js + "_" + is + " >= 0";
  }
  return "?";
}

namespace {

template <bool R>
PatternCheck validate_impl(const BasicPattern<R>& p) {
  PatternCheck out;
  const int r = p.rank;
  if (r < 1) {
    out.shape_errors.push_back("rank must be positive");
    return out;
  }
  const int lambda_rows = R ? r - 1 : r;
  if (static_cast<int>(p.eta.size()) != r)
    out.shape_errors.push_back("expected " + std::to_string(r) + " eta rows");
  if (static_cast<int>(p.lambda.size()) != lambda_rows)
    out.shape_errors.push_back("expected " + std::to_string(lambda_rows) + " lambda rows");
  if (!out.shape_errors.empty()) return out;
  for (int j = 1; j <= r; ++j) {
    if (static_cast<int>(p.eta[j - 1].size()) != j)
      out.shape_errors.push_back("eta row " + std::to_string(j) + " must have length " + std::to_string(j));
    if (j <= lambda_rows && static_cast<int>(p.lambda[j - 1].size()) != j)
      out.shape_errors.push_back("lambda row " + std::to_string(j) + " must have length " +
                                 std::to_string(j));
  }
  if (!out.shape_errors.empty()) return out;

  auto& v = out.violations;
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= j; ++i) {
      if (p.eta_at(j, i) < 0) v.push_back({Constraint::NonNegative, j, i, true});
      if (j <= lambda_rows && p.lambda_at(j, i) < 0) v.push_back({Constraint::NonNegative, j, i, false});
    }
  // Pattern: the eta/lambda conditions run over j <= r; restricted: j < r.
  for (int j = 1; j <= lambda_rows; ++j)
    for (int i = 1; i <= j; ++i) {
      if (!(p.lambda_at(j, i) >= p.eta_at(j, i))) v.push_back({Constraint::LambdaOverEta, j, i});
      if (!(p.eta_at(j, i) >= p.lambda_at(j, i + 1))) v.push_back({Constraint::EtaOverLambdaNext, j, i});
    }
  for (int j = 1; j < r; ++j)
    for (int i = 1; i <= j; ++i) {
      if (!(p.eta_at(j + 1, i) >= p.lambda_at(j, i))) v.push_back({Constraint::EtaUpOverLambda, j, i});
      if (!(p.lambda_at(j, i) >= p.eta_at(j + 1, i + 1))) v.push_back({Constraint::LambdaOverEtaUp, j, i});
    }
  return out;
}

template <bool R>
DiffArray differences_impl(const BasicPattern<R>& p) {
  DiffArray d(p.rank, R);
  for (int j = 1; j <= d.barred_extent(); ++j)
    for (int i = 1; i <= j; ++i)
      d.barred(i, j) = {p.lambda_at(j, i) - p.eta_at(j, i), p.eta_at(j, i) - p.lambda_at(j, i + 1)};
  for (int j = 1; j <= d.unbarred_extent(); ++j)
    for (int i = 1; i <= j; ++i)
      d.unbarred(i, j) = {p.eta_at(j + 1, i) - p.lambda_at(j, i), p.lambda_at(j, i) - p.eta_at(j + 1, i + 1)};
  return d;
}

}  // namespace

PatternCheck validate_pattern(const PatternC& p) { return validate_impl(p); }
PatternCheck validate_pattern(const RestrictedPattern& p) { return validate_impl(p); }

DiffArray::DiffArray(int rank, bool restricted)
    : rank_(rank),
      restricted_(restricted),
      barred_(tri_size(restricted ? rank - 1 : rank)),
      unbarred_(tri_size(rank - 1)) {}

DiffArray differences(const PatternC& p) { return differences_impl(p); }
DiffArray differences(const RestrictedPattern& p) { return differences_impl(p); }

PatternC pattern_from_differences(const DominantWeight& bounding, const DiffArray& d) {
  const int r = bounding.rank();
  if (d.rank() != r || d.restricted())
    throw std::invalid_argument("pattern_from_differences: shape mismatch");
  auto p = PatternC::zero_shape(r);
  p.lambda.back() = bounding.lambdas();
  for (int j = r; j >= 1; --j) {
    for (int i = 1; i <= j; ++i) p.eta[j - 1][i - 1] = p.lambda_at(j, i) - d.barred(i, j).ell;
    if (j > 1)
      for (int i = 1; i < j; ++i) p.lambda[j - 2][i - 1] = p.eta_at(j, i) - d.unbarred(i, j - 1).ell;
  }
  return p;
}

WeightVector pattern_weight(const PatternC& p) {
  auto w = WeightVector::zero(p.rank);
  for (int j = 1; j <= p.rank; ++j) {
    std::int64_t a = 0;
    for (int i = 1; i <= j; ++i) a += 2 * p.eta_at(j, i) - p.lambda_at(j, i);
    for (int i = 1; i < j; ++i) a -= p.lambda_at(j - 1, i);
    w[j - 1] = a;
  }
  return w;
}

void detail::check_bounding(std::span<const std::int64_t> bounding) {
  if (bounding.empty()) throw std::invalid_argument("bounding sequence must be non-empty");
  for (std::size_t k = 0; k < bounding.size(); ++k) {
    if (bounding[k] < 0) throw std::invalid_argument("bounding sequence has a negative entry");
    if (k + 1 < bounding.size() && bounding[k] < bounding[k + 1])
      throw std::invalid_argument("bounding sequence is not weakly decreasing");
  }
}

std::vector<Row> top_eta_rows(const DominantWeight& bounding) {
  const int r = bounding.rank();
  std::vector<Row> out;
  Row row(r, 0);
  // odometer over lambda_i >= eta_i >= lambda_{i+1}, first entry most significant
  auto rec = [&](auto&& self, int i) -> void {
    if (i > r) {
      out.push_back(row);
      return;
    }
    for (std::int64_t v = bounding.lambda(i + 1); v <= bounding.lambda(i); ++v) {
      row[i - 1] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<PatternC> enumerate_patterns(const DominantWeight& bounding) {
  std::vector<PatternC> out;
  for_each_pattern(bounding, [&](const PatternC& p) { out.push_back(p); });
  return out;
}

std::vector<RestrictedPattern> enumerate_restricted_patterns(std::span<const std::int64_t> bounding) {
  std::vector<RestrictedPattern> out;
  for_each_restricted_pattern(bounding, [&](const RestrictedPattern& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_patterns(const DominantWeight& bounding) {
  std::uint64_t n = 0;
  for_each_pattern(bounding, [&](const PatternC&) { ++n; });
  return n;
}

std::uint64_t count_restricted_patterns(std::span<const std::int64_t> bounding) {
  std::uint64_t n = 0;
  for_each_restricted_pattern(bounding, [&](const RestrictedPattern&) { ++n; });
  return n;
}

RestrictedPattern truncate(const PatternC& p) {
  RestrictedPattern q;
  q.rank = p.rank;
  q.eta = p.eta;
  q.lambda.assign(p.lambda.begin(), p.lambda.end() - 1);
  return q;
}

PatternC truncate(const RestrictedPattern& p) {
  if (p.rank < 2) throw std::invalid_argument("truncate: rank 1 restricted pattern has no sub-pattern");
  PatternC q;
  q.rank = p.rank - 1;
  q.eta.assign(p.eta.begin(), p.eta.end() - 1);
  q.lambda = p.lambda;
  return q;
}

}  // namespace spweyl
