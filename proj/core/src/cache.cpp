#include "minorbit/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace minorbit {

namespace fs = std::filesystem;

std::optional<std::string> resolve_cache_dir(
    const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return explicit_dir;
  if (const char* env = std::getenv("MINORBIT_CACHE_DIR"))
    if (*env) return std::string(env);
  return std::nullopt;
}

std::optional<nlohmann::json> cache_load(const std::string& dir,
                                         const std::string& key) {
  fs::path p = fs::path(dir) / (key + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  return j;
}

void cache_store(const std::string& dir, const std::string& key,
                 const nlohmann::json& value) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  fs::path final_path = fs::path(dir) / (key + ".json");
  fs::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << value.dump(1);
  }
  fs::rename(tmp, final_path, ec);
}

}  // namespace minorbit
