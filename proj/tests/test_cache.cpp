#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tautring/cache.hpp"
#include "tautring/integrate.hpp"

using namespace tautring;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("tautring-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("cache directory follows the environment") {
  ::setenv(kCacheDirEnv, "/tmp/somewhere-else", 1);
  CHECK(cache_directory() == "/tmp/somewhere-else");
  ::unsetenv(kCacheDirEnv);
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(cache_directory() == "/tmp/xdg/tautring");
  ::unsetenv("XDG_CACHE_HOME");
}

TEST_CASE("cache files round trip and reject tampering") {
  const fs::path dir = fresh_dir("file");
  const std::string path = (dir / "x.cache").string();
  REQUIRE(write_cache_file(path, "# header v1", {"a", "b c"}));
  std::vector<std::string> lines;
  REQUIRE(read_cache_file(path, "# header v1", lines));
  CHECK(lines == std::vector<std::string>{"a", "b c"});
  CHECK_FALSE(read_cache_file(path, "# header v2", lines));
  std::string text = slurp(path);
  text[text.find("b c")] = 'x';
  spit(path, text);
  CHECK_FALSE(read_cache_file(path, "# header v1", lines));
  CHECK_FALSE(read_cache_file((dir / "missing").string(), "# header v1", lines));
  fs::remove_all(dir);
}

TEST_CASE("persistent caches survive a reload") {
  const fs::path dir = fresh_dir("roundtrip");
  wk_cache_clear();
  const Rational value = psi_integral(3, {2, 3, 4});
  CHECK(value == psi_integral(3, {4, 3, 2}));
  enumerate_stable_graphs(1, 3, 3);
  CHECK(save_caches(dir.string()).empty());
  const std::size_t before = wk_cache_size();
  wk_cache_clear();
  graph_cache_clear();
  CHECK(wk_cache_size() == 0);
  CHECK(load_caches(dir.string()).empty());
  CHECK(wk_cache_size() == before);
  const CacheStatus st = cache_status(dir.string());
  CHECK(st.wk_present);
  CHECK(st.wk_valid);
  CHECK(st.wk_entries == before);
  CHECK(st.graphs_present);
  CHECK(st.graph_entries > 0);
  CHECK(psi_integral(3, {2, 3, 4}) == value);
  CHECK(cache_clear(dir.string()).empty());
  CHECK_FALSE(cache_status(dir.string()).wk_present);
  fs::remove_all(dir);
}

TEST_CASE("corrupt caches are discarded with a warning") {
  const fs::path dir = fresh_dir("corrupt");
  psi_integral(2, {2, 2, 2});
  REQUIRE(save_caches(dir.string()).empty());
  // a wrong value with a recomputed checksum must still be rejected
  std::vector<std::string> lines;
  REQUIRE(read_cache_file((dir / kWkCacheFile).string(), kWkCacheHeader, lines));
  for (auto& l : lines) l = l.substr(0, l.rfind(';')) + ";12345";
  REQUIRE(write_cache_file((dir / kWkCacheFile).string(), kWkCacheHeader, lines));
  spit(dir / kGraphCacheFile, "garbage\n");
  wk_cache_clear();
  const auto warnings = load_caches(dir.string());
  CHECK(warnings.size() == 2);
  CHECK(wk_cache_size() == 0);
  CHECK(psi_integral(2, {2, 2, 2}) == Rational(7, 240));
  fs::remove_all(dir);
}

TEST_CASE("unwritable cache directory falls back to memory") {
  const fs::path dir = fresh_dir("blocked");
  spit(dir / "file", "x");
  const std::string bad = (dir / "file" / "sub").string();
  const auto warnings = save_caches(bad);
  CHECK(warnings.size() == 1);
  CHECK(warnings[0].find("not writable") != std::string::npos);
  CHECK(psi_integral(1, {1}) == Rational(1, 24));
  fs::remove_all(dir);
}
