#include "tautring/integrate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tautring/cache.hpp"
#include "tautring/linalg.hpp"
#include "tautring/product.hpp"

namespace tautring {

const char* const kWkCacheHeader = "# tautring wk-cache v1 recursion=dvv kappa=forgotten-point";

namespace {

// (2k-1)!! style product x(x-2)(x-4)...; 1 for x <= 0.
Integer double_factorial(int x) {
  Integer r = 1;
  for (int i = x; i > 1; i -= 2) r *= i;
  return r;
}

using WkKey = std::pair<int, std::vector<int>>;

class WkTable {
 public:
  // Brackets with unstable (g, n) or a negative exponent vanish.
  Rational bracket(int g, std::vector<int> d) {
    const int n = static_cast<int>(d.size());
    if (g < 0 || 2 * g - 2 + n <= 0) return 0;
    int sum = 0;
    for (int x : d) {
      if (x < 0) return 0;
      sum += x;
    }
    if (sum != 3 * g - 3 + n) return 0;
    std::sort(d.begin(), d.end(), std::greater<>());
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return Rational(1, 24);
    WkKey key{g, d};
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Rational value = dvv(g, d);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::map<WkKey, Rational> snapshot() {
    std::lock_guard lock(mutex_);
    return memo_;
  }
  void merge(const std::map<WkKey, Rational>& entries) {
    std::lock_guard lock(mutex_);
    for (const auto& [k, v] : entries) memo_.emplace(k, v);
  }
  void clear() {
    std::lock_guard lock(mutex_);
    memo_.clear();
  }
  std::size_t size() {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  // DVV recursion on the largest exponent d[0] = k + 1 >= 1.
  Rational dvv(int g, const std::vector<int>& d) {
    const int k = d[0] - 1;
    const std::vector<int> rest(d.begin() + 1, d.end());
    const int m = static_cast<int>(rest.size());
    Rational total = 0;

    for (int j = 0; j < m; ++j) {
      std::vector<int> e = rest;
      e[j] += k;
      const Rational coeff = ratio(double_factorial(2 * k + 2 * rest[j] + 1), double_factorial(2 * rest[j] - 1));
      total += coeff * bracket(g, std::move(e));
    }

    Rational split = 0;
    for (int a = 0; a <= k - 1; ++a) {
      const int b = k - 1 - a;
      const Integer weight = double_factorial(2 * a + 1) * double_factorial(2 * b + 1);
      std::vector<int> e = rest;
      e.push_back(a);
      e.push_back(b);
      Rational s = bracket(g - 1, std::move(e));
      for (int g1 = 0; g1 <= g; ++g1)
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          std::vector<int> left{a}, right{b};
          for (int i = 0; i < m; ++i) ((mask >> i) & 1 ? left : right).push_back(rest[i]);
          Rational l = bracket(g1, std::move(left));
          if (l == 0) continue;
          s += l * bracket(g - g1, std::move(right));
        }
      split += Rational(weight) * s;
    }
    total += split / 2;
    return total / Rational(double_factorial(2 * k + 3));
  }

  std::mutex mutex_;
  std::map<WkKey, Rational> memo_;
};

WkTable& wk_table() {
  static WkTable table;
  return table;
}

// Set partitions of {0..m-1} as block lists.
void for_each_set_partition(int m, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      visit(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace

Rational psi_integral(int g, std::vector<int> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("psi_integral: unstable (g, n)");
  for (int x : exponents)
    if (x < 0) throw std::invalid_argument("psi_integral: negative exponent");
  return wk_table().bracket(g, std::move(exponents));
}

Rational psi_integral(const PsiMonomial& m) { return psi_integral(m.g, m.exponents); }

Rational kappa_psi_integral(int g, const std::vector<int>& kappa, const std::vector<int>& psi) {
  const int n = static_cast<int>(psi.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("kappa_psi_integral: unstable (g, n)");
  int degree = 0;
  for (int x : psi) degree += x;
  for (int b : kappa) {
    if (b < 1) throw std::invalid_argument("kappa index must be positive");
    degree += b;
  }
  if (degree != 3 * g - 3 + n) return 0;
  if (kappa.empty()) return psi_integral(g, psi);
  const int m = static_cast<int>(kappa.size());
  Rational total = 0;
  for_each_set_partition(m, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> e = psi;
    for (const auto& block : blocks) {
      int s = 1;
      for (int j : block) s += kappa[j];
      e.push_back(s);
    }
    Rational value = psi_integral(g, std::move(e));
    if ((m - static_cast<int>(blocks.size())) % 2) value = -value;
    total += value;
  });
  return total;
}

Rational evaluate_stratum(const DecoratedStratum& s) {
  const GraphInfo& info = *s.graph;
  const StableGraph& graph = info.graph;
  Rational result = 1;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    std::vector<int> psi;
    for (int marking : graph.legs[v]) psi.push_back(s.decoration.psi_legs[marking - 1]);
    for (int h = 0; h < graph.num_half_edges(); ++h)
      if (info.half_vertex[h] == v) psi.push_back(s.decoration.psi_half[h]);
    result *= kappa_psi_integral(graph.genera[v], s.decoration.kappa[v], psi);
    if (result == 0) break;
  }
  return result;
}

Rational evaluate(const TautClass& x) {
  if (x.degree() != 3 * x.g() - 3 + x.n()) throw std::invalid_argument("evaluate: class is not of top degree");
  Rational total = 0;
  for (const auto& [s, c] : x.terms()) total += c * evaluate_stratum(s);
  return total;
}

namespace {

std::mutex pairing_mutex;
std::map<std::tuple<int, int, int>, std::unique_ptr<PairingMatrix>>& pairing_table() {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<PairingMatrix>> table;
  return table;
}

}  // namespace

const PairingMatrix& pairing_matrix(int g, int n, int d) {
  const auto key = std::make_tuple(g, n, d);
  {
    std::lock_guard lock(pairing_mutex);
    auto it = pairing_table().find(key);
    if (it != pairing_table().end()) return *it->second;
  }
  auto pm = std::make_unique<PairingMatrix>();
  pm->g = g;
  pm->n = n;
  pm->degree = d;
  const int top = 3 * g - 3 + n;
  if (d >= 0 && d <= top) {
    pm->rows = generators(g, n, d);
    pm->columns = generators(g, n, top - d);
    for (const auto& r : pm->rows) {
      std::vector<Rational> row;
      row.reserve(pm->columns.size());
      for (const auto& c : pm->columns) row.push_back(evaluate(multiply_strata(r, c)));
      pm->entries.push_back(std::move(row));
    }
    if (!pm->entries.empty() && !pm->columns.empty()) {
      linalg::Echelon e = linalg::row_echelon(pm->entries, static_cast<int>(pm->columns.size()));
      pm->rank = e.rank();
      pm->pivot_columns = e.pivots;
    }
  }
  std::lock_guard lock(pairing_mutex);
  auto [it, inserted] = pairing_table().emplace(key, std::move(pm));
  return *it->second;
}

std::vector<Rational> pairing_vector(const TautClass& x) {
  const PairingMatrix& pm = pairing_matrix(x.g(), x.n(), x.degree());
  std::vector<Rational> out(pm.columns.size(), 0);
  for (const auto& [s, c] : x.terms()) {
    auto it = std::lower_bound(pm.rows.begin(), pm.rows.end(), s);
    if (it == pm.rows.end() || !(*it == s))
      throw std::logic_error("stratum missing from generator list: " + s.describe());
    const auto& row = pm.entries[it - pm.rows.begin()];
    for (size_t j = 0; j < out.size(); ++j)
      if (row[j] != 0) out[j] += c * row[j];
  }
  return out;
}

std::size_t wk_cache_size() { return wk_table().size(); }
void wk_cache_clear() { wk_table().clear(); }

bool wk_cache_load(const std::string& path) {
  std::vector<std::string> lines;
  if (!read_cache_file(path, kWkCacheHeader, lines)) return false;
  std::map<WkKey, Rational> entries;
  try {
    for (const auto& line : lines) {
      const auto p1 = line.find(';');
      if (p1 == std::string::npos) return false;
      const auto p2 = line.find(';', p1 + 1);
      if (p2 == std::string::npos) return false;
      const int g = std::stoi(line.substr(0, p1));
      std::vector<int> d;
      std::stringstream ds(line.substr(p1 + 1, p2 - p1 - 1));
      std::string tok;
      while (std::getline(ds, tok, ',')) d.push_back(std::stoi(tok));
      const Rational value = parse_rational(line.substr(p2 + 1));
      int sum = 0;
      for (int x : d) {
        if (x < 0) return false;
        sum += x;
      }
      const int n = static_cast<int>(d.size());
      if (g < 0 || 2 * g - 2 + n <= 0 || sum != 3 * g - 3 + n) return false;
      if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) return false;
      entries.emplace(WkKey{g, d}, value);
    }
  } catch (const std::exception&) {
    return false;
  }
  // Spot-check entries against a fresh computation before trusting the file.
  WkTable fresh;
  std::size_t i = 0;
  const std::size_t stride = std::max<std::size_t>(1, entries.size() / 16);
  for (const auto& [k, v] : entries)
    if (i++ % stride == 0 && fresh.bracket(k.first, k.second) != v) return false;
  wk_table().merge(entries);
  return true;
}

bool wk_cache_save(const std::string& path) {
  std::vector<std::string> lines;
  for (const auto& [k, v] : wk_table().snapshot()) {
    std::string l = std::to_string(k.first) + ';';
    for (size_t i = 0; i < k.second.size(); ++i) l += (i ? "," : "") + std::to_string(k.second[i]);
    lines.push_back(l + ';' + to_string(v));
  }
  return write_cache_file(path, kWkCacheHeader, lines);
}

}  // namespace tautring
