#include "symloop/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace symloop::cache {

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string entry_path(const std::string& dir, const std::string& key) {
  return (fs::path(dir) / (key + ".json")).string();
}

std::optional<std::string> get(const std::string& dir, const std::string& key) {
  if (dir.empty()) return std::nullopt;
  std::error_code ec;
  fs::path p = entry_path(dir, key);
  if (!fs::exists(p, ec) || ec) return std::nullopt;
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    std::cerr << "cache: warning: cannot read " << p.string() << "\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  if (nlohmann::json::parse(bytes, nullptr, false).is_discarded()) {
    std::cerr << "cache: warning: ignoring corrupted entry " << p.string()
              << "\n";
    return std::nullopt;
  }
  return bytes;
}

bool put(const std::string& dir, const std::string& key,
         const std::string& bytes) {
  if (dir.empty()) return false;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "cache: warning: cannot create " << dir << ": "
              << ec.message() << "\n";
    return false;
  }
  fs::path final_path = entry_path(dir, key);
  fs::path tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cache: warning: cannot write " << tmp.string() << "\n";
      return false;
    }
    out << bytes;
    out.flush();
    if (!out) {
      std::cerr << "cache: warning: short write to " << tmp.string() << "\n";
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    std::cerr << "cache: warning: rename failed for " << final_path.string()
              << ": " << ec.message() << "\n";
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

std::vector<std::string> list(const std::string& dir) {
  std::vector<std::string> keys;
  std::error_code ec;
  if (dir.empty() || !fs::exists(dir, ec) || ec) return keys;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (!e.is_regular_file()) continue;
    fs::path p = e.path();
    if (p.extension() == ".json") keys.push_back(p.stem().string());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

int clear(const std::string& dir) {
  int n = 0;
  for (const auto& k : list(dir)) {
    std::error_code ec;
    if (fs::remove(entry_path(dir, k), ec) && !ec) ++n;
  }
  return n;
}

}  // namespace symloop::cache
