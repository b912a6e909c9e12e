#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wmk/cli.hpp"

namespace wmk {

std::string content_hash(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (content_hash(version_ + '\n' + key) + ".json");
}

std::optional<CachedResult> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<std::string>() != version_ || j.at("key").get<std::string>() != key) return std::nullopt;
    return CachedResult{j.at("output").get<std::string>(), j.at("exit_code").get<int>()};
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const CachedResult& r) const {
  std::filesystem::create_directories(dir_);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch());
  nlohmann::json j = {{"version", version_},
                      {"key", key},
                      {"output", r.output},
                      {"exit_code", r.exit_code},
                      {"created_at", secs.count()}};
  // write then rename so a reader never sees a half-written entry
  auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace wmk
