#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace logdiv::cli {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path ReportCache::default_dir() {
  if (const char* d = std::getenv("LOGDIV_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "logdiv";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "logdiv";
  return std::filesystem::temp_directory_path() / "logdiv-cache";
}

std::filesystem::path ReportCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<std::string> ReportCache::lookup(const std::string& key, std::string* warning) const {
  auto p = path_for(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string body = ss.str();
  // layout: key line, newline, value
  auto nl = body.find('\n');
  if (nl == std::string::npos || body.compare(0, nl, key) != 0) {
    if (warning) *warning = "corrupt or colliding cache entry " + p.string() + "; recomputing";
    return std::nullopt;
  }
  return body.substr(nl + 1);
}

void ReportCache::store(const std::string& key, const std::string& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  auto lock_path = dir_ / ".lock";
  int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd < 0) return;
  ::flock(fd, LOCK_EX);
  auto p = path_for(key);
  auto tmp = p;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << key << '\n' << value;
  }
  std::filesystem::rename(tmp, p, ec);
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

}  // namespace logdiv::cli
