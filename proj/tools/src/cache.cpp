#include "spweyl_cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spweyl/serialize.hpp"

namespace spweyl::cli {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string CacheKey::canonical() const {
  std::string s = "spweyl-char/v" + std::to_string(format) + "/r" + std::to_string(rank) + "/";
  for (std::size_t k = 0; k < lambdas.size(); ++k) s += (k ? "," : "") + std::to_string(lambdas[k]);
  return s + "/" + method;
}

fs::path CharacterCache::path_for(const CacheKey& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key.canonical())));
  return dir_ / name;
}

std::optional<GradedCharacter> CharacterCache::lookup(const CacheKey& key, std::ostream& warn) const {
  const fs::path path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    warn << "warning: cache entry " << path.string() << " is unreadable; recomputing\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto doc = nlohmann::json::parse(buf.str());
    if (doc.at("format").get<int>() != kCacheFormat || doc.at("key").get<std::string>() != key.canonical()) {
      warn << "warning: cache entry " << path.string() << " belongs to another key or format; recomputing\n";
      return std::nullopt;
    }
    GradedCharacter ch = character_from_json(doc.at("character").dump());
    if (ch.rank() != key.rank) throw std::invalid_argument("rank mismatch");
    return ch;
  } catch (const std::exception& e) {
    warn << "warning: cache entry " << path.string() << " is corrupt (" << e.what() << "); recomputing\n";
    return std::nullopt;
  }
}

bool CharacterCache::store(const CacheKey& key, const GradedCharacter& ch, std::ostream& warn) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path path = path_for(key);
  fs::path tmp = path;
  tmp += ".tmp";
  nlohmann::ordered_json doc;
  doc["format"] = kCacheFormat;
  doc["key"] = key.canonical();
  doc["character"] = nlohmann::ordered_json::parse(to_json(ch));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << doc.dump() << '\n')) {
      warn << "warning: cannot write cache entry " << tmp.string() << '\n';
      return false;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warn << "warning: cannot install cache entry " << path.string() << ": " << ec.message() << '\n';
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace spweyl::cli
