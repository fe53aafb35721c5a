#pragma once

// On-disk cache of computed characters. One JSON file per key, named by a
// hash of the key; the file repeats the key and a format stamp so that hash
// collisions and stale schemas read as misses.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spweyl/characters.hpp"

namespace spweyl::cli {

inline constexpr int kCacheFormat = 1;

struct CacheKey {
  int rank = 0;
  std::vector<std::int64_t> lambdas;
  std::string method;  // "direct" or "fermionic"
  int format = kCacheFormat;

  std::string canonical() const;
};

class CharacterCache {
 public:
  explicit CharacterCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  /// Miss on absent, unreadable, corrupt or mismatched entries; the last
  /// three also write a warning to `warn`.
  std::optional<GradedCharacter> lookup(const CacheKey& key, std::ostream& warn) const;
  /// Writes through a temporary file and a rename. Returns false (with a
  /// warning) when the directory is not writable.
  bool store(const CacheKey& key, const GradedCharacter& ch, std::ostream& warn) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace spweyl::cli
