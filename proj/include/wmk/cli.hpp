// Command-line workbench: subcommands, output rendering and the result cache.
#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace wmk {

enum ExitCode { kExitOk = 0, kExitValidation = 2, kExitConsistency = 3 };

// Bumping this invalidates every cache entry.
inline constexpr const char* kCacheVersion = "wmk-cache-4";

struct CachedResult {
  std::string output;
  int exit_code = 0;
};

// One JSON file per key under dir; entries with another version tag or key are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::string version = kCacheVersion);
  std::optional<CachedResult> get(const std::string& key) const;
  void put(const std::string& key, const CachedResult& r) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

// 64-bit FNV-1a of s, as 16 hex digits.
std::string content_hash(const std::string& s);

// Runs `wmk` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wmk
