// tautring: command-line access to graphs, classes, Pixton's cycles and the checks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "tautring/cache.hpp"
#include "tautring/integrate.hpp"
#include "tautring/pixton.hpp"
#include "tautring/product.hpp"
#include "tautring/serialize.hpp"
#include "tautring/verify.hpp"

using namespace tautring;
using nlohmann::json;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

struct DataOptions {
  int k = 0;
  std::vector<int> A, a;
  CLI::Option* A_opt = nullptr;
  CLI::Option* a_opt = nullptr;

  void add(CLI::App* cmd, const std::string& suffix = "", const std::string& k_name = "--k") {
    cmd->add_option(k_name, k, "twist k")->default_val(0);
    A_opt = cmd->add_option("--A" + suffix, A, "A-vector, comma separated")->delimiter(',')->allow_extra_args(false);
    a_opt = cmd->add_option("--a" + suffix, a, "a-vector (A_i = a_i + k), comma separated")
                ->delimiter(',')
                ->allow_extra_args(false);
    A_opt->excludes(a_opt);
  }

  RamificationData build(int g, int n) const {
    if (A_opt->count() == 0 && a_opt->count() == 0) throw CLI::ValidationError("one of --A / --a is required");
    const std::vector<int>& v = A_opt->count() ? A : a;
    if (static_cast<int>(v.size()) != n)
      throw CLI::ValidationError("vector has " + std::to_string(v.size()) + " entries, expected n = " + std::to_string(n));
    return A_opt->count() ? RamificationData::from_A(g, k, v) : RamificationData::from_a(g, k, v);
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TautClass read_class(const std::string& path) {
  json j;
  try {
    j = json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return tautclass_from_json(j);
}

void print_class(const TautClass& x) {
  std::cout << "class on M(" << x.g() << "," << x.n() << ") of degree " << x.degree() << ", "
            << x.terms().size() << " terms\n";
  for (const auto& [s, c] : x.terms()) std::cout << "  " << to_string(c) << "  " << s.describe() << '\n';
}

void print_report(const CheckReport& r) {
  std::cout << r.name << ": " << to_string(r.verdict) << "  (" << r.seconds << " s)\n";
  if (!r.witness.empty()) std::cout << "  witness: " << r.witness.dump() << '\n';
}

int report_exit(const std::vector<CheckReport>& reports, bool as_json, bool timing) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timing));
    std::cout << json{{"passed", all_passed(reports)}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(r);
  }
  return all_passed(reports) ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the tautological ring of moduli of stable curves"};
  app.require_subcommand(1);
  bool as_json = false, no_timing = false;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_flag("--no-timing", no_timing, "omit timing fields from JSON reports");
  app.fallthrough();
  int g = 0, n = 0;
  auto add_gn = [&](CLI::App* cmd) {
    cmd->add_option("--g", g, "genus")->required();
    cmd->add_option("--n", n, "number of markings")->required();
  };

  auto* graphs_cmd = app.add_subcommand("graphs", "stable graphs with at most --codim edges");
  add_gn(graphs_cmd);
  int codim = 0;
  graphs_cmd->add_option("--codim", codim, "maximal number of edges")->required();

  auto* gens_cmd = app.add_subcommand("generators", "decorated strata of a given degree");
  add_gn(gens_cmd);
  int deg = 0;
  gens_cmd->add_option("--deg", deg, "degree")->required();

  auto* pixton_cmd = app.add_subcommand("pixton", "Pixton's class P_g^{d,k}(A)");
  add_gn(pixton_cmd);
  DataOptions pixton_data;
  pixton_data.add(pixton_cmd);
  std::optional<int> pixton_deg;
  pixton_cmd->add_option("--deg", pixton_deg, "degree (all degrees when omitted)");
  int window_offset = 0;
  std::string method = "faulhaber";
  pixton_cmd->add_option("--window-offset", window_offset, "shift of the r-sample window")->default_val(0);
  pixton_cmd->add_option("--method", method, "weighting summation")->check(CLI::IsMember({"faulhaber", "direct"}));

  auto* hain_cmd = app.add_subcommand("hain", "Hain's divisor");
  add_gn(hain_cmd);
  DataOptions hain_data;
  hain_data.add(hain_cmd);

  auto* mult_cmd = app.add_subcommand("multiply", "product of two classes given as JSON files ('-' for stdin)");
  std::string x_path, y_path;
  mult_cmd->add_option("x", x_path, "first class")->required();
  mult_cmd->add_option("y", y_path, "second class")->required();

  auto* eval_cmd = app.add_subcommand("evaluate", "integral of a top-degree class given as JSON");
  eval_cmd->add_option("x", x_path, "class")->required();

  auto* pair_cmd = app.add_subcommand("pair", "pairing matrix between degree --deg and its complement");
  add_gn(pair_cmd);
  pair_cmd->add_option("--deg", deg, "degree")->required();

  auto* check_cmd = app.add_subcommand("check", "verification bundles");
  check_cmd->require_subcommand(1);
  check_cmd->add_subcommand("paper-section7", "the five verdicts on M(1,3)");
  auto* mult_check = check_cmd->add_subcommand("multiplicativity", "D_a D_b against D_a D_{a+b}");
  add_gn(mult_check);
  DataOptions mult_a, mult_b;
  mult_a.add(mult_check);
  mult_b.k = 0;
  mult_b.A_opt = mult_check->add_option("--B", mult_b.A, "B-vector")->delimiter(',')->allow_extra_args(false);
  mult_b.a_opt = mult_check->add_option("--b", mult_b.a, "b-vector (B_i = b_i + kb)")->delimiter(',')->allow_extra_args(false);
  mult_b.A_opt->excludes(mult_b.a_opt);
  mult_check->add_option("--kb", mult_b.k, "twist of the second datum")->default_val(0);
  std::string locus_name = "all";
  mult_check->add_option("--locus", locus_name, "all | tl | ct | smooth")->default_val("all");
  auto* exp_check = check_cmd->add_subcommand("exp-identities", "P^tl = exp(Q) Delta and exp(P^1) = sum P^d");
  add_gn(exp_check);
  DataOptions exp_data;
  exp_data.add(exp_check);
  auto* gp1_check = check_cmd->add_subcommand("gplus1", "P_g^{g+1,k}(A) vanishes");
  add_gn(gp1_check);
  DataOptions gp1_data;
  gp1_data.add(gp1_check);

  auto* cache_cmd = app.add_subcommand("cache", "persistent cache management");
  cache_cmd->require_subcommand(1);
  cache_cmd->add_subcommand("status", "entries on disk");
  cache_cmd->add_subcommand("clear", "remove cache files");
  cache_cmd->add_subcommand("path", "print the cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  const std::string dir = cache_directory();
  const bool uses_cache = !cache_cmd->parsed();
  if (uses_cache)
    for (const auto& w : load_caches(dir)) std::cerr << "warning: " << w << '\n';

  int code = 0;
  try {
    if (graphs_cmd->parsed()) {
      const auto list = enumerate_stable_graphs(g, n, codim);
      if (as_json) {
        json arr = json::array();
        for (const auto& p : list) arr.push_back(graph_to_json(*p));
        std::cout << json{{"g", g}, {"n", n}, {"codim", codim}, {"graphs", arr}}.dump(2) << '\n';
      } else {
        std::cout << list.size() << " stable graphs of type (" << g << "," << n << ") with at most " << codim
                  << " edges\n";
        for (const auto& p : list)
          std::cout << "  " << p->key << "  edges=" << p->graph.num_edges() << " aut=" << p->aut_count() << '\n';
      }
    } else if (gens_cmd->parsed()) {
      if (2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
      const auto list = generators(g, n, deg);
      if (as_json) {
        json arr = json::array();
        for (const auto& s : list) arr.push_back(stratum_to_json(s));
        std::cout << json{{"g", g}, {"n", n}, {"degree", deg}, {"generators", arr}}.dump(2) << '\n';
      } else {
        std::cout << list.size() << " generators\n";
        for (const auto& s : list) std::cout << "  " << s.describe() << '\n';
      }
    } else if (pixton_cmd->parsed()) {
      const RamificationData data = pixton_data.build(g, n);
      PixtonOptions opts;
      opts.window_offset = window_offset;
      opts.method = method == "direct" ? WeightingMethod::direct : WeightingMethod::faulhaber;
      if (pixton_deg) {
        if (*pixton_deg < 0 || *pixton_deg > 3 * g - 3 + n) throw std::invalid_argument("degree outside [0, 3g-3+n]");
        const TautClass x = pixton_class(data, *pixton_deg, opts);
        if (as_json) std::cout << to_json(x).dump(2) << '\n';
        else print_class(x);
      } else {
        const MixedClass x = pixton_mixed(data, opts);
        if (as_json) std::cout << to_json(x).dump(2) << '\n';
        else
          for (int d = 0; d <= x.top_degree(); ++d) print_class(x[d]);
      }
    } else if (hain_cmd->parsed()) {
      const TautClass x = hain_divisor(hain_data.build(g, n));
      if (as_json) std::cout << to_json(x).dump(2) << '\n';
      else print_class(x);
    } else if (mult_cmd->parsed()) {
      const TautClass x = multiply(read_class(x_path), read_class(y_path));
      if (as_json) std::cout << to_json(x).dump(2) << '\n';
      else print_class(x);
    } else if (eval_cmd->parsed()) {
      const Rational v = evaluate(read_class(x_path));
      if (as_json) std::cout << json{{"value", to_string(v)}}.dump(2) << '\n';
      else std::cout << to_string(v) << '\n';
    } else if (pair_cmd->parsed()) {
      if (2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
      const PairingMatrix& pm = pairing_matrix(g, n, deg);
      if (as_json) {
        json rows = json::array(), cols = json::array(), entries = json::array();
        for (const auto& s : pm.rows) rows.push_back(stratum_to_json(s));
        for (const auto& s : pm.columns) cols.push_back(stratum_to_json(s));
        for (const auto& row : pm.entries) {
          json r = json::array();
          for (const auto& v : row) r.push_back(to_string(v));
          entries.push_back(std::move(r));
        }
        std::cout << json{{"g", g}, {"n", n}, {"degree", deg}, {"rows", rows}, {"columns", cols},
                          {"entries", entries}, {"rank", pm.rank}, {"pivot_columns", pm.pivot_columns}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << pm.rows.size() << " x " << pm.columns.size() << " pairing matrix, rank " << pm.rank << '\n';
        for (size_t j = 0; j < pm.columns.size(); ++j) std::cout << "  c" << j << " = " << pm.columns[j].describe() << '\n';
        for (size_t i = 0; i < pm.rows.size(); ++i) {
          std::cout << "  " << pm.rows[i].describe() << " :";
          for (const auto& v : pm.entries[i]) std::cout << ' ' << to_string(v);
          std::cout << '\n';
        }
      }
    } else if (check_cmd->parsed()) {
      std::vector<CheckReport> reports;
      if (check_cmd->got_subcommand("paper-section7")) {
        reports = check_section7();
      } else if (mult_check->parsed()) {
        const RamificationData a = mult_a.build(g, n);
        const RamificationData b = mult_b.build(g, n);
        reports.push_back(check_multiplicativity(a, b, parse_locus(locus_name)));
      } else if (exp_check->parsed()) {
        reports.push_back(check_exp_identities(exp_data.build(g, n)));
      } else if (gp1_check->parsed()) {
        reports.push_back(check_gplus1(gp1_data.build(g, n)));
      }
      code = report_exit(reports, as_json, !no_timing);
    } else if (cache_cmd->parsed()) {
      if (cache_cmd->got_subcommand("path")) {
        if (as_json) std::cout << json{{"path", dir}}.dump(2) << '\n';
        else std::cout << dir << '\n';
      } else if (cache_cmd->got_subcommand("clear")) {
        for (const auto& w : cache_clear(dir)) std::cerr << "warning: " << w << '\n';
        if (as_json) std::cout << json{{"path", dir}, {"cleared", true}}.dump(2) << '\n';
        else std::cout << "cleared " << dir << '\n';
      } else {
        const CacheStatus s = cache_status(dir);
        if (as_json) {
          std::cout << json{{"path", s.directory},
                            {"wk_present", s.wk_present},
                            {"graphs_present", s.graphs_present},
                            {"wk_entries", s.wk_entries},
                            {"wk_valid", s.wk_valid},
                            {"graph_entries", s.graph_entries},
                            {"graphs_valid", s.graphs_valid}}
                           .dump(2)
                    << '\n';
        } else {
          std::cout << "path: " << s.directory << '\n'
                    << "wk entries: " << s.wk_entries << (s.wk_valid ? "" : " (corrupt file present)") << '\n'
                    << "graph entries: " << s.graph_entries << (s.graphs_valid ? "" : " (corrupt file present)")
                    << '\n';
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (uses_cache)
    for (const auto& w : save_caches(dir)) std::cerr << "warning: " << w << '\n';
  return code;
}
