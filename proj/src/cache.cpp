#include "tautring/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tautring/graphs.hpp"
#include "tautring/integrate.hpp"

namespace tautring {

namespace fs = std::filesystem;

const char* const kGraphCacheHeader = "# tautring graph-cache v1";

std::string cache_directory() {
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return (fs::path(xdg) / "tautring").string();
  if (const char* home = std::getenv("HOME"); home && *home) return (fs::path(home) / ".cache" / "tautring").string();
  return (fs::current_path() / ".tautring-cache").string();
}

std::string content_checksum(std::string_view body) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : body) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool read_cache_file(const std::string& path, const std::string& header, std::vector<std::string>& lines) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != header) return false;
  std::vector<std::string> all;
  while (std::getline(in, line)) all.push_back(line);
  if (all.empty()) return false;
  const std::string trailer = all.back();
  all.pop_back();
  std::string body;
  for (const auto& l : all) body += l + '\n';
  if (trailer != "# checksum " + content_checksum(body)) return false;
  lines = std::move(all);
  return true;
}

bool write_cache_file(const std::string& path, const std::string& header, const std::vector<std::string>& lines) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    std::string body;
    for (const auto& l : lines) body += l + '\n';
    out << header << '\n' << body << "# checksum " << content_checksum(body) << '\n';
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  return !ec;
}

namespace {

std::vector<GraphCacheEntry> parse_graph_lines(const std::vector<std::string>& lines) {
  std::vector<GraphCacheEntry> entries;
  for (const auto& l : lines) {
    std::istringstream is(l);
    GraphCacheEntry e;
    if (!(is >> e.g >> e.n >> e.edges)) throw std::runtime_error("bad graph cache line");
    std::string key;
    while (is >> key) {
      const StableGraph graph = decode(key);
      validate(graph, e.g, e.n);
      if (graph.num_edges() != e.edges) throw std::runtime_error("graph cache level mismatch");
      e.keys.push_back(key);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

bool graph_cache_load(const std::string& path) {
  std::vector<std::string> lines;
  if (!read_cache_file(path, kGraphCacheHeader, lines)) return false;
  try {
    graph_cache_restore(parse_graph_lines(lines));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool graph_cache_save(const std::string& path) {
  std::vector<std::string> lines;
  for (const auto& e : graph_cache_snapshot()) {
    std::string l = std::to_string(e.g) + ' ' + std::to_string(e.n) + ' ' + std::to_string(e.edges);
    for (const auto& k : e.keys) l += ' ' + k;
    lines.push_back(std::move(l));
  }
  return write_cache_file(path, kGraphCacheHeader, lines);
}

CacheStatus cache_status(const std::string& dir) {
  CacheStatus s;
  s.directory = dir;
  const fs::path wk = fs::path(dir) / kWkCacheFile, gr = fs::path(dir) / kGraphCacheFile;
  std::vector<std::string> lines;
  if (fs::exists(wk)) {
    s.wk_present = true;
    s.wk_valid = read_cache_file(wk.string(), kWkCacheHeader, lines);
    if (s.wk_valid) s.wk_entries = lines.size();
  }
  if (fs::exists(gr)) {
    s.graphs_present = true;
    s.graphs_valid = read_cache_file(gr.string(), kGraphCacheHeader, lines);
    if (s.graphs_valid) {
      std::size_t count = 0;
      for (const auto& l : lines) {
        std::istringstream is(l);
        std::string tok;
        int field = 0;
        while (is >> tok)
          if (++field > 3) ++count;
      }
      s.graph_entries = count;
    }
  }
  return s;
}

std::vector<std::string> cache_clear(const std::string& dir) {
  std::vector<std::string> warnings;
  wk_cache_clear();
  graph_cache_clear();
  for (const char* name : {kWkCacheFile, kGraphCacheFile}) {
    std::error_code ec;
    fs::remove(fs::path(dir) / name, ec);
    if (ec) warnings.push_back("could not remove " + (fs::path(dir) / name).string() + ": " + ec.message());
  }
  return warnings;
}

std::vector<std::string> load_caches(const std::string& dir) {
  std::vector<std::string> warnings;
  const fs::path wk = fs::path(dir) / kWkCacheFile, gr = fs::path(dir) / kGraphCacheFile;
  if (fs::exists(wk) && !wk_cache_load(wk.string()))
    warnings.push_back("discarding corrupt or outdated cache " + wk.string());
  if (fs::exists(gr) && !graph_cache_load(gr.string()))
    warnings.push_back("discarding corrupt or outdated cache " + gr.string());
  return warnings;
}

std::vector<std::string> save_caches(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    return {"cache directory " + dir + " is not writable; results were kept in memory only"};
  std::vector<std::string> warnings;
  if (!wk_cache_save((fs::path(dir) / kWkCacheFile).string()))
    warnings.push_back("could not write " + (fs::path(dir) / kWkCacheFile).string() + "; in-memory only");
  if (!graph_cache_save((fs::path(dir) / kGraphCacheFile).string()))
    warnings.push_back("could not write " + (fs::path(dir) / kGraphCacheFile).string() + "; in-memory only");
  return warnings;
}

}  // namespace tautring
