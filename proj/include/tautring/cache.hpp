#pragma once

// Persistent caches for Witten–Kontsevich numbers and graph enumeration.
//
// Directory: $TAUTRING_CACHE_DIR, else $XDG_CACHE_HOME/tautring, else
// $HOME/.cache/tautring. Files carry a versioned header and a trailing checksum;
// a file failing either is discarded.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tautring {

inline constexpr const char* kCacheDirEnv = "TAUTRING_CACHE_DIR";
inline constexpr const char* kWkCacheFile = "wk.cache";
inline constexpr const char* kGraphCacheFile = "graphs.cache";
extern const char* const kGraphCacheHeader;

std::string cache_directory();

/// Hex FNV-1a digest used as the trailing "# checksum" line.
std::string content_checksum(std::string_view body);

/// Reads the body lines of a file with the given header and a valid checksum trailer.
bool read_cache_file(const std::string& path, const std::string& header, std::vector<std::string>& lines);
/// Writes header, lines and checksum trailer (through a temporary file).
bool write_cache_file(const std::string& path, const std::string& header, const std::vector<std::string>& lines);

struct CacheStatus {
  std::string directory;
  bool wk_present = false;
  bool graphs_present = false;
  std::size_t wk_entries = 0;     // entries on disk (0 for missing or corrupt files)
  std::size_t graph_entries = 0;  // graphs on disk
  bool wk_valid = true;
  bool graphs_valid = true;
};

CacheStatus cache_status(const std::string& dir);
/// Removes both cache files and the in-memory tables; returns warnings.
std::vector<std::string> cache_clear(const std::string& dir);

/// Loads both caches into memory; corrupt files are ignored with a warning.
std::vector<std::string> load_caches(const std::string& dir);
/// Writes both caches; an unwritable directory yields a warning and nothing else.
std::vector<std::string> save_caches(const std::string& dir);

bool graph_cache_load(const std::string& path);
bool graph_cache_save(const std::string& path);

}  // namespace tautring
