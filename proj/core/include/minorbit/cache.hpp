#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace minorbit {

/// Cache directory resolution order: explicit argument, then the
/// MINORBIT_CACHE_DIR environment variable, else caching is disabled.
std::optional<std::string> resolve_cache_dir(
    const std::optional<std::string>& explicit_dir);

std::optional<nlohmann::json> cache_load(const std::string& dir,
                                         const std::string& key);

void cache_store(const std::string& dir, const std::string& key,
                 const nlohmann::json& value);

}  // namespace minorbit
