#include "spweyl_cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "spweyl/branching.hpp"
#include "spweyl/characters.hpp"
#include "spweyl/oracle.hpp"
#include "spweyl/patterns.hpp"
#include "spweyl/pops.hpp"
#include "spweyl/serialize.hpp"
#include "spweyl_cli/cache.hpp"

namespace spweyl::cli {

namespace {

constexpr const char* kFooter = R"(Weights: --omegas m1,...,mr (fundamental-weight coefficients) or
--lambdas l1,...,lr (epsilon coordinates, weakly decreasing), never both.
--rank is optional and must match the list length when given.

Monomial grammar (output of `monomials`):
  word    := "1" | factor (" " factor)*
  factor  := "x-(" i "," j ["~"] ")@t^" s
A factor is x^-_{alpha} tensor t^s with alpha = alpha_{i,j} or, with "~",
alpha_{i,jbar}. Factors appear in block order 1~, 1, 2~, 2, ..., r~ with i
ascending inside each block; "1" is the empty word.

Exit status: 0 success, 1 failed check or method mismatch, 2 usage error.
Cache directory: --cache-dir, else $SPWEYL_CACHE_DIR, else no cache.)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> rank;
  std::vector<std::int64_t> omegas;
  std::vector<std::int64_t> lambdas;
  unsigned threads = 1;
  bool verbose = false;
  std::string cache_dir;
  std::string format;
  std::string method = "direct";
  std::string kind = "filtration";
  bool check = false;
  bool restricted = false;
  std::int64_t max_total = -1;
};

std::string tuple_text(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::optional<DominantWeight> weight_of(const Options& o) {
  if (!o.omegas.empty() && !o.lambdas.empty()) throw UsageError("give either --omegas or --lambdas, not both");
  const auto& v = o.omegas.empty() ? o.lambdas : o.omegas;
  if (v.empty()) return std::nullopt;
  if (o.rank && *o.rank != static_cast<int>(v.size()))
    throw UsageError("--rank " + std::to_string(*o.rank) + " does not match a weight of length " +
                     std::to_string(v.size()));
  try {
    return o.omegas.empty() ? DominantWeight::from_lambdas(v) : DominantWeight::from_omegas(v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

DominantWeight require_weight(const Options& o) {
  auto w = weight_of(o);
  if (!w) throw UsageError("a weight is required (--omegas or --lambdas)");
  return *w;
}

template <bool R>
std::string pattern_text(const BasicPattern<R>& p) {
  // interleave eta^1 lambda^1 eta^2 ... as the rows are read
  std::string s;
  for (int j = 1; j <= p.rank; ++j) {
    if (j > 1) s += ' ';
    s += "eta" + std::to_string(j) + "=" + tuple_text(p.eta[j - 1]);
    if (j <= p.lambda_rows()) s += " lambda" + std::to_string(j) + "=" + tuple_text(p.lambda[j - 1]);
  }
  return s;
}

std::string render(const GradedCharacter& ch, const std::string& format) {
  if (format == "json") return to_json(ch) + "\n";
  if (format == "csv") return ch.to_csv();
  if (format == "latex") return ch.to_latex() + "\n";
  return ch.to_text() + "\n";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {
    std::string dir = o.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("SPWEYL_CACHE_DIR")) dir = env;
    if (!dir.empty()) cache_.emplace(dir);
  }

  int dim() {
    const auto lam = require_weight(o_);
    const BigInt d = pop_count_formula(lam);
    out_ << d.str() << '\n';
    if (!o_.check) return kOk;
    const auto n = count_pops(lam);
    out_ << "enumerated " << n << '\n';
    if (BigInt(n) != d) {
      err_ << "error: product formula gives " << d.str() << " but enumeration finds " << n << '\n';
      return kCheckFailed;
    }
    return kOk;
  }

  int count() {
    const auto lam = require_weight(o_);
    std::uint64_t patterns = 0;
    std::uint64_t pops = 0;
    if (o_.restricted) {
      patterns = count_restricted_patterns(lam.lambdas());
      pops = count_restricted_pops(lam.lambdas());
    } else {
      patterns = count_patterns(lam);
      pops = count_pops(lam);
    }
    if (o_.format == "json") {
      nlohmann::ordered_json j{{"rank", lam.rank()}, {"lambda", lam.lambdas()}, {"restricted", o_.restricted},
                               {"patterns", patterns}, {"pops", pops}};
      out_ << j.dump() << '\n';
    } else {
      out_ << "patterns " << patterns << "\npops " << pops << '\n';
    }
    return kOk;
  }

  int patterns() {
    const auto lam = require_weight(o_);
    const bool json = o_.format == "json";
    if (o_.restricted)
      for_each_restricted_pattern(lam.lambdas(), [&](const RestrictedPattern& p) {
        out_ << (json ? to_json(p) : pattern_text(p)) << '\n';
      });
    else
      for_each_pattern(lam, [&](const PatternC& p) { out_ << (json ? to_json(p) : pattern_text(p)) << '\n'; });
    return kOk;
  }

  int pops() {
    const auto lam = require_weight(o_);
    const bool json = o_.format == "json";
    auto emit = [&](const auto& p) {
      if (json)
        out_ << to_json(p) << '\n';
      else
        out_ << pattern_text(p.pattern) << " | " << pop_monomial(p).to_text() << '\n';
    };
    if (o_.restricted)
      for_each_restricted_pop(lam.lambdas(), [&](const RestrictedPop& p) { emit(p); });
    else
      for_each_pop(lam, [&](const Pop& p) { emit(p); });
    return kOk;
  }

  int monomials() {
    const auto lam = require_weight(o_);
    if (o_.restricted)
      for_each_restricted_pop(lam.lambdas(), [&](const RestrictedPop& p) { out_ << pop_monomial(p).to_text() << '\n'; });
    else
      for_each_pop(lam, [&](const Pop& p) { out_ << pop_monomial(p).to_text() << '\n'; });
    return kOk;
  }

  int character() {
    const auto lam = require_weight(o_);
    if (o_.method == "both") {
      const auto a = compute(lam, "direct");
      const auto b = compute(lam, "fermionic");
      out_ << render(a, o_.format);
      if (a != b) {
        err_ << "error: direct and fermionic characters differ\n";
        return kCheckFailed;
      }
      return kOk;
    }
    out_ << render(compute(lam, o_.method), o_.format);
    return kOk;
  }

  int branch() {
    const auto lam = require_weight(o_);
    const bool json = o_.format == "json";
    if (o_.kind == "filtration") {
      if (lam.rank() < 2) throw UsageError("the Weyl filtration needs rank >= 2");
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& t : weyl_filtration(lam)) {
        if (json)
          arr.push_back({{"ell", t.ell}, {"ellp", t.ellp}, {"mult", t.mult.str()}, {"target", t.target}});
        else
          out_ << "ell=" << tuple_text(t.ell) << " ellp=" << tuple_text(t.ellp) << " mult=" << t.mult.str()
               << " target=" << tuple_text(t.target) << '\n';
      }
      if (json) out_ << arr.dump() << '\n';
      return kOk;
    }
    const auto tuples = o_.kind == "shtepin-v" ? shtepin_branch_V(lam) : shtepin_branch_L(lam.lambdas());
    if (json)
      out_ << nlohmann::json(tuples).dump() << '\n';
    else
      for (const auto& t : tuples) out_ << tuple_text(t) << '\n';
    return kOk;
  }

  int verify() {
    std::vector<DominantWeight> weights;
    if (auto w = weight_of(o_)) {
      weights.push_back(*w);
    } else {
      if (!o_.rank) throw UsageError("verify needs --rank with --max-total, or a weight");
      if (o_.max_total < 0) throw UsageError("verify needs --max-total or a weight");
      weights = weights_up_to(*o_.rank, o_.max_total);
    }
    bool ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& lam : weights) {
      const auto rep = verify_identities(lam, {o_.threads});
      ok = ok && rep.all_passed();
      if (o_.format == "json")
        arr.push_back(nlohmann::json::parse(rep.to_json()));
      else
        out_ << rep.to_text();
    }
    if (o_.format == "json")
      out_ << arr.dump() << '\n';
    else
      out_ << weights.size() << " weight(s): " << (ok ? "all checks passed" : "FAILURES") << '\n';
    return ok ? kOk : kCheckFailed;
  }

 private:
  GradedCharacter compute(const DominantWeight& lam, const std::string& method) {
    const CacheKey key{lam.rank(), lam.lambdas(), method, kCacheFormat};
    if (cache_) {
      if (auto hit = cache_->lookup(key, err_)) {
        if (o_.verbose) err_ << "cache hit " << cache_->path_for(key).string() << '\n';
        return *hit;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    const ParallelOptions par{o_.threads};
    GradedCharacter ch = method == "direct" ? character_direct(lam, par) : character_fermionic(lam, par);
    if (o_.verbose) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err_ << method << " character: " << ch.size() << " terms in " << ms.count() << " ms\n";
    }
    if (cache_) cache_->store(key, ch, err_);
    return ch;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<CharacterCache> cache_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Weyl modules of sp_2r[t]: patterns, POPs, graded characters.", "spweyl"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--rank", o.rank, "rank r (inferred from the weight when omitted)")->check(CLI::Range(1, 64));
  auto* om = app.add_option("--omegas", o.omegas, "weight as m1,...,mr")->delimiter(',');
  auto* la = app.add_option("--lambdas", o.lambdas, "weight as l1,...,lr")->delimiter(',');
  om->excludes(la);
  app.add_option("--threads", o.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--cache-dir", o.cache_dir, "character cache directory");
  app.add_flag("-v,--verbose", o.verbose, "timings and cache activity on stderr");

  auto* dim = app.add_subcommand("dim", "dimension of W(lambda) from the product formula");
  dim->add_flag("--check", o.check, "also count POPs and compare");

  auto* count = app.add_subcommand("count", "number of patterns and POPs");
  auto* patterns = app.add_subcommand("patterns", "list patterns with the given bounding sequence");
  auto* pops = app.add_subcommand("pops", "list POPs with the given bounding sequence");
  auto* monomials = app.add_subcommand("monomials", "list the monomials v_P, one per line");
  for (auto* sub : {count, patterns, pops, monomials}) {
    sub->add_flag("--restricted", o.restricted, "use restricted patterns (the weight is the last eta row)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  }

  auto* ch = app.add_subcommand("char", "graded character of W(lambda)");
  ch->add_option("--method", o.method, "direct, fermionic or both")
      ->check(CLI::IsMember({"direct", "fermionic", "both"}));
  ch->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "latex", "text"}));

  auto* br = app.add_subcommand("branch", "branching and filtration listings");
  br->add_option("--kind", o.kind, "filtration, shtepin-v or shtepin-l (weight read as eta)")
      ->check(CLI::IsMember({"filtration", "shtepin-v", "shtepin-l"}));
  br->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "identity checks for one weight or a sweep");
  ver->add_option("--max-total", o.max_total, "sweep all weights with m1+...+mr <= N")->check(CLI::NonNegativeNumber);
  ver->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Runner runner(o, out, err);
  try {
    if (dim->parsed()) return runner.dim();
    if (count->parsed()) return runner.count();
    if (patterns->parsed()) return runner.patterns();
    if (pops->parsed()) return runner.pops();
    if (monomials->parsed()) return runner.monomials();
    if (ch->parsed()) return runner.character();
    if (br->parsed()) return runner.branch();
    return runner.verify();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace spweyl::cli
