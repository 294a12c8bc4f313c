#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace logdiv::cli {

std::uint64_t fnv1a(const std::string& data);

/// Content-addressed report store: one file per key, written atomically
/// under an advisory lock. Entries carry their own key so a truncated or
/// foreign file is detected and treated as a miss.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $LOGDIV_CACHE_DIR, else $XDG_CACHE_HOME/logdiv, else ~/.cache/logdiv.
  static std::filesystem::path default_dir();

  std::optional<std::string> lookup(const std::string& key, std::string* warning = nullptr) const;
  void store(const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace logdiv::cli
