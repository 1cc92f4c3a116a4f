#pragma once

// Persistence of the orbit-count cache as one JSON document:
//   {"format": "nilcount-cache-1", "values": {"N:5:3": "17", ...}}

#include <cstddef>
#include <filesystem>

#include "nilsemi/counting.hpp"

namespace nilsemi {

struct CacheLoadStats {
  std::size_t loaded = 0;
  std::size_t rejected = 0;  // malformed keys or non-integral values
};

/// Merges the file into `cache`. A missing file loads nothing. Throws
/// std::runtime_error if the file exists but is not a cache document.
CacheLoadStats load_cache(std::filesystem::path const& path,
                          OrbitCountCache& cache);

/// Writes to a temporary sibling and renames it over `path`.
void save_cache(std::filesystem::path const& path,
                OrbitCountCache const& cache);

}  // namespace nilsemi
