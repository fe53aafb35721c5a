#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "spweyl_cli/cache.hpp"
#include "spweyl_cli/cli.hpp"
#include "spweyl/characters.hpp"
#include "spweyl/serialize.hpp"

namespace fs = std::filesystem;
using namespace spweyl;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("spweyl-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("char example") {
  const auto r = run({"char", "--rank", "1", "--omegas", "2", "--method", "both", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "e^{2ε₁} + (1+q)·1 + e^{−2ε₁}\n");
}

TEST_CASE("dim example") {
  auto r = run({"dim", "--rank", "3", "--omegas", "0,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "14\n");
  r = run({"dim", "--lambdas", "2,1", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "20\nenumerated 20\n");
}

TEST_CASE("verify sweep") {
  const auto r = run({"verify", "--rank", "2", "--max-total", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 weight(s): all checks passed") != std::string::npos);
  CHECK(r.out.find("[fail]") == std::string::npos);
  const auto j = run({"verify", "--omegas", "1,1", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.front() == '[');
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dim", "--omegas", "1", "--lambdas", "1"}).code == 2);
  CHECK(run({"dim", "--rank", "2", "--omegas", "1"}).code == 2);
  CHECK(run({"dim"}).code == 2);
  CHECK(run({"dim", "--lambdas", "1,2"}).code == 2);
  CHECK(run({"dim", "--omegas", "1,-1"}).code == 2);
  CHECK(run({"char", "--omegas", "1", "--method", "guess"}).code == 2);
  CHECK(run({"char", "--omegas", "1", "--bogus"}).code == 2);
  CHECK(run({"branch", "--omegas", "1"}).code == 2);
  CHECK(run({"verify", "--rank", "2"}).code == 2);
  const auto e = run({"dim", "--rank", "2", "--omegas", "1"});
  CHECK(e.err.find("does not match") != std::string::npos);
}

TEST_CASE("help exits 0 and documents the monomial grammar") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x-(") != std::string::npos);
}

TEST_CASE("count and listings") {
  auto r = run({"count", "--omegas", "1,1"});
  CHECK(r.out == "patterns 16\npops 20\n");
  r = run({"count", "--lambdas", "1,0", "--restricted", "--format", "json"});
  CHECK(r.out == R"({"rank":2,"lambda":[1,0],"restricted":true,"patterns":3,"pops":3})" "\n");
  r = run({"patterns", "--lambdas", "1,0"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  r = run({"patterns", "--lambdas", "1", "--format", "json"});
  CHECK(r.out == R"({"rank":1,"eta":[[0]],"lambda":[[1]]})" "\n" R"({"rank":1,"eta":[[1]],"lambda":[[1]]})" "\n");
  r = run({"monomials", "--omegas", "2"});
  CHECK(r.out == "x-(1,1~)@t^0 x-(1,1~)@t^0\nx-(1,1~)@t^0\nx-(1,1~)@t^1\n1\n");
  r = run({"pops", "--omegas", "0,1", "--format", "json"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  r = run({"pops", "--omegas", "1"});
  CHECK(r.out == "eta1=(0) lambda1=(1) | x-(1,1~)@t^0\neta1=(1) lambda1=(1) | 1\n");
}

TEST_CASE("branch listings") {
  auto r = run({"branch", "--lambdas", "1,1"});
  CHECK(r.out == "ell=(0,0) ellp=(0) mult=1 target=(1)\nell=(0,1) ellp=(0) mult=1 target=(1)\nell=(0,1) ellp=(1) mult=1 target=(0)\n");
  r = run({"branch", "--lambdas", "1,1", "--kind", "shtepin-v", "--format", "json"});
  CHECK(r.out == "[[1,0],[1,1]]\n");
  r = run({"branch", "--lambdas", "1,0", "--kind", "shtepin-l"});
  CHECK(r.out == "(0)\n(1)\n");
}

TEST_CASE("character formats") {
  auto r = run({"char", "--omegas", "2", "--format", "csv"});
  CHECK(r.out == "grade,a1,mult\n0,2,1\n0,0,1\n0,-2,1\n1,0,1\n");
  r = run({"char", "--omegas", "2", "--format", "json", "--method", "fermionic"});
  CHECK(character_from_json(r.out) == character_direct(DominantWeight::from_omegas({2})));
  r = run({"char", "--omegas", "1", "--format", "latex"});
  CHECK(r.out == "q^{0} e^{\\varepsilon_{1}} + q^{0} e^{-\\varepsilon_{1}}\n");
}

TEST_CASE("listings do not depend on the thread count") {
  for (const char* cmd : {"char", "pops"}) {
    const auto a = run({cmd, "--omegas", "1,0,1", "--format", "json", "--threads", "1"});
    const auto b = run({cmd, "--omegas", "1,0,1", "--format", "json", "--threads", "4"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache round trip, miss and corruption") {
  const auto dir = fresh_dir("cache");
  cli::CharacterCache cache(dir);
  const auto lam = DominantWeight::from_omegas({1, 1});
  const cli::CacheKey key{2, lam.lambdas(), "direct"};
  std::ostringstream warn;
  CHECK_FALSE(cache.lookup(key, warn).has_value());
  CHECK(warn.str().empty());

  const auto ch = character_direct(lam);
  REQUIRE(cache.store(key, ch, warn));
  const auto hit = cache.lookup(key, warn);
  REQUIRE(hit.has_value());
  CHECK(*hit == ch);
  CHECK(to_json(*hit) == to_json(ch));

  const cli::CacheKey other{2, lam.lambdas(), "fermionic"};
  CHECK(cache.path_for(other) != cache.path_for(key));
  CHECK_FALSE(cache.lookup(other, warn).has_value());

  {
    std::ofstream f(cache.path_for(key), std::ios::trunc);
    f << "{ not json";
  }
  CHECK_FALSE(cache.lookup(key, warn).has_value());
  CHECK(warn.str().find("corrupt") != std::string::npos);

  // a stale format stamp is a miss too
  cli::CacheKey old = key;
  old.format = cli::kCacheFormat + 1;
  REQUIRE(cache.store(old, ch, warn));
  std::ifstream in(cache.path_for(old));
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  {
    std::ofstream f(cache.path_for(key), std::ios::trunc);
    f << body;  // right file name, wrong stamp inside
  }
  std::ostringstream warn2;
  CHECK_FALSE(cache.lookup(key, warn2).has_value());
  CHECK(warn2.str().find("another key or format") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("CLI uses the cache and recovers from corrupt entries") {
  const auto dir = fresh_dir("cli");
  const std::vector<std::string> args{"char", "--omegas", "1,1", "--format", "json", "--cache-dir", dir.string(), "-v"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(first.err.find("direct character") != std::string::npos);
  const auto second = run(args);
  CHECK(second.out == first.out);
  CHECK(second.err.find("cache hit") != std::string::npos);

  for (const auto& e : fs::directory_iterator(dir)) {
    std::ofstream f(e.path(), std::ios::trunc);
    f << "garbage";
  }
  const auto third = run(args);
  CHECK(third.code == 0);
  CHECK(third.out == first.out);
  CHECK(third.err.find("warning") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  const auto dir = fresh_dir("env");
  ::setenv("SPWEYL_CACHE_DIR", dir.string().c_str(), 1);
  const auto r = run({"char", "--omegas", "1"});
  ::unsetenv("SPWEYL_CACHE_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir));
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  fs::remove_all(dir);
}
