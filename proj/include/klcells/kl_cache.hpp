#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

#include "klcells/permutation.hpp"

namespace klcells {

/// Environment variable naming the cache directory; overrides --cache-dir.
inline constexpr const char* kCacheDirEnv = "KLCELLS_CACHE_DIR";
inline constexpr const char* kCacheFileName = "kl_cache.tsv";

/// Cache directory from the environment, falling back to `flag`.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

std::filesystem::path cache_file(const std::filesystem::path& dir);

/// Reads "y<TAB>w<TAB>c0,c1,...,cd" records into the engines for the
/// corresponding degrees.  A missing file loads nothing.  Throws IoError on
/// unreadable or malformed files.
std::size_t load_cache(const std::filesystem::path& file, int max_degree = kDefaultMaxDegree);

/// Writes the memo of every engine created so far, sorted by degree then
/// (y, w) in lexicographic order.  Returns the number of records written.
std::size_t save_cache(const std::filesystem::path& file);

/// Number of records in a cache file (0 if it does not exist).
std::size_t count_cache_entries(const std::filesystem::path& file);

/// Removes the cache file; returns whether one existed.
bool clear_cache(const std::filesystem::path& file);

}  // namespace klcells
