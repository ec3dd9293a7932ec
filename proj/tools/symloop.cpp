// symloop: covers of surfaces, homological monodromy, simple-loop subspaces.
//
// Verbs:
//   analyze --config JOB.cfg    one cover / tower report
//   search  --config JOB.cfg    epimorphism search over named groups
//   complex [--n N] [--genus G] chord-complex dimensions and connectivity
//   farey   --genus G --alpha i,j --beta k,l   chord chain checked upstairs
//   cache   --cache-dir D [--list|--clear]     cache maintenance
//
// The JSON report goes to stdout (byte-identical across reruns of the same
// config); the human-readable table goes to stderr. Exit codes: 0 analysis
// done, 2 invalid input, 3 invariant violation or theorem-level alarm.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symloop/analyze.hpp"
#include "symloop/cache.hpp"
#include "symloop/complexes.hpp"
#include "symloop/config.hpp"

namespace {

using json = nlohmann::json;
using namespace symloop;

struct CommonFlags {
  std::string config_path;
  std::string cache_dir;
  bool no_cache = false;
  bool full = false;
  int jobs = 1;
  // budget overrides, applied only when the flag was given
  int budget_curves = 0;
  int budget_wordlen = 0;
  long orbit_cap = 0;
  int stab_window = 0;
  long seed = 0;
  bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_config) {
  auto* c = cmd->add_option("--config", f.config_path, "job config file");
  if (needs_config) c->required();
  cmd->add_option("--cache-dir", f.cache_dir, "report cache directory");
  cmd->add_flag("--no-cache", f.no_cache, "bypass the cache");
  cmd->add_flag("--full", f.full, "serialize matrices into the report");
  cmd->add_option("--jobs", f.jobs, "worker cap for search runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-curves", f.budget_curves, "curve family cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-wordlen", f.budget_wordlen, "curve word length cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--orbit-cap", f.orbit_cap, "orbit probe cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--stab-window", f.stab_window, "stabilization window")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "seed recorded in the report identity");
}

cfg::JobConfig load_with_overrides(const CLI::App* cmd, const CommonFlags& f) {
  cfg::JobConfig c = cfg::load_config(f.config_path);
  if (cmd->count("--budget-curves")) c.budget_curves = f.budget_curves;
  if (cmd->count("--budget-wordlen")) c.budget_wordlen = f.budget_wordlen;
  if (cmd->count("--orbit-cap")) c.orbit_cap = f.orbit_cap;
  if (cmd->count("--stab-window")) c.stab_window = f.stab_window;
  if (cmd->count("--seed")) c.seed = f.seed;
  c.full = f.full;
  return c;
}

int emit(const pipeline::Outcome& out) {
  std::cout << out.json_bytes;
  std::cerr << out.table;
  return out.exit_code;
}

int run_analyze(const CLI::App* cmd, const CommonFlags& f) {
  cfg::JobConfig c = load_with_overrides(cmd, f);
  if (c.kind == "search")
    throw cfg::ConfigError("kind = search configs run under the search verb");
  pipeline::Options o{f.cache_dir, f.no_cache, f.jobs};
  return emit(pipeline::analyze(c, o));
}

int run_search(const CLI::App* cmd, const CommonFlags& f) {
  cfg::JobConfig c = load_with_overrides(cmd, f);
  if (c.kind != "search")
    throw cfg::ConfigError("the search verb needs a kind = search config");
  pipeline::Options o{f.cache_dir, f.no_cache, f.jobs};
  return emit(pipeline::search(c, o));
}

int run_complex(int n, int genus, const std::string& dot_path,
                const std::string& json_path) {
  if (n == 0 && genus == 0)
    throw cfg::ConfigError("complex: give --n (punctures) and/or --genus");
  json rep;
  rep["chord_complex"] = nullptr;
  rep["hyperelliptic_check"] = nullptr;
  std::ostringstream table;
  if (n > 0) {
    if (n < 4) throw cfg::ConfigError("complex: --n must be >= 4");
    cx::ChordComplex c = cx::chord_complex(n);
    cx::Connectivity conn = cx::connectivity_report(c);
    json cj = json::parse(cx::json_dump(c));
    cj["components"] = conn.components;
    cj["connected"] = conn.connected;
    rep["chord_complex"] = cj;
    table << "  chord complex on " << n << " punctures: "
          << c.vertices.size() << " vertices, matching dim " << c.matching_dim
          << ", curve-complex dim " << c.curve_dim << ", "
          << conn.components << " component(s)\n";
    if (!dot_path.empty()) {
      std::ofstream out(dot_path, std::ios::trunc);
      if (!out) throw cfg::ConfigError("cannot write " + dot_path);
      out << cx::dot_dump(c);
    }
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::trunc);
      if (!out) throw cfg::ConfigError("cannot write " + json_path);
      out << cx::json_dump(c);
    }
  }
  if (genus > 0) {
    if (genus < 2 || genus > 6)
      throw cfg::ConfigError("complex: --genus must be in 2..6");
    cx::HyperellipticCheck h = cx::hyperelliptic_dimension_check(genus);
    json hj;
    hj["genus"] = h.genus;
    hj["chords"] = h.chords;
    hj["zero_class_chords"] = h.zero_class_chords;
    hj["max_disjoint"] = h.max_disjoint;
    hj["matchings"] = h.matchings;
    hj["planar_matchings"] = h.planar_matchings;
    hj["min_rank"] = h.min_rank;
    hj["max_rank"] = h.max_rank;
    hj["pairwise_zero"] = h.pairwise_zero;
    hj["ok"] = h.ok;
    rep["hyperelliptic_check"] = hj;
    table << "  genus " << genus << ": maximal disjoint families have "
          << h.max_disjoint << " chords and span rank " << h.min_rank << ".."
          << h.max_rank << " (" << (h.ok ? "ok" : "MISMATCH") << ")\n";
    if (!h.ok) {
      std::cout << rep.dump(2) << "\n";
      std::cerr << table.str();
      return 3;
    }
  }
  std::cout << rep.dump(2) << "\n";
  std::cerr << table.str();
  return 0;
}

cx::Chord parse_chord(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw cfg::ConfigError("chord must be 'i,j' (0-based punctures): " + s);
  try {
    int i = std::stoi(s.substr(0, comma));
    int j = std::stoi(s.substr(comma + 1));
    if (i == j) throw cfg::ConfigError("chord endpoints must differ: " + s);
    return {std::min(i, j), std::max(i, j)};
  } catch (const cfg::ConfigError&) {
    throw;
  } catch (...) {
    throw cfg::ConfigError("bad chord '" + s + "'");
  }
}

int run_farey(int genus, const std::string& alpha_s, const std::string& beta_s) {
  if (genus < 2) throw cfg::ConfigError("farey: --genus must be >= 2");
  int n = 2 * genus + 2;
  cx::Chord alpha = parse_chord(alpha_s), beta = parse_chord(beta_s);
  if (alpha.first < 0 || alpha.second >= n || beta.first < 0 ||
      beta.second >= n)
    throw cfg::ConfigError("farey: chord endpoints must lie in 0.." +
                           std::to_string(n - 1));
  if (alpha == beta) throw cfg::ConfigError("farey: chords must differ");

  cx::FareyChain chain = cx::farey_chain(alpha, beta, n);
  perm::Perm flip = *perm::Perm::parse_cycles("(1 2)", 2);
  cover::CoverSpec eps{2, std::vector<perm::Perm>(n - 1, flip)};
  cover::Tower t = cover::tower_from(genus, 0, eps);
  cx::ChainCheck check = cx::verify_chain_upstairs(t, chain);

  json rep;
  json chords = json::array();
  for (const auto& ch : chain.chords)
    chords.push_back(json::array({ch.first, ch.second}));
  rep["genus"] = genus;
  rep["chords"] = chords;
  json pairings = json::array();
  for (const auto& p : check.consecutive) pairings.push_back(p.get_str());
  rep["consecutive_pairings"] = pairings;
  rep["ok"] = check.ok;
  std::cout << rep.dump(2) << "\n";
  std::cerr << "  chain of " << chain.chords.size()
            << " chords, consecutive pairings "
            << (check.ok ? "all unimodular\n" : "NOT all unimodular\n");
  return check.ok ? 0 : 3;
}

int run_cache(const std::string& dir, bool do_list, bool do_clear) {
  if (dir.empty()) throw cfg::ConfigError("cache: --cache-dir is required");
  json rep;
  if (do_clear) {
    rep["removed"] = cache::clear(dir);
  } else {
    json keys = json::array();
    for (const auto& k : cache::list(dir)) keys.push_back(k);
    rep["entries"] = keys;
    (void)do_list;  // listing is the default action
  }
  std::cout << rep.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covers of surfaces, homological monodromy, simple-loop subspaces"};
  app.require_subcommand(1);

  CommonFlags fa, fs;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one cover or tower");
  add_common(analyze, fa, true);
  CLI::App* search = app.add_subcommand("search", "epimorphism search");
  add_common(search, fs, true);

  int cx_n = 0, cx_genus = 0;
  std::string cx_dot, cx_json;
  CLI::App* complex_cmd =
      app.add_subcommand("complex", "chord complex dimensions");
  complex_cmd->add_option("--n", cx_n, "number of punctures (>= 4)");
  complex_cmd->add_option("--genus", cx_genus,
                          "hyperelliptic dimension check (2..6)");
  complex_cmd->add_option("--dot", cx_dot, "write 1-skeleton as DOT");
  complex_cmd->add_option("--json", cx_json, "write complex as JSON");

  int fy_genus = 0;
  std::string fy_alpha, fy_beta;
  CLI::App* farey = app.add_subcommand("farey", "chord chain checked upstairs");
  farey->add_option("--genus", fy_genus, "closed genus (>= 2)")->required();
  farey->add_option("--alpha", fy_alpha, "first chord 'i,j'")->required();
  farey->add_option("--beta", fy_beta, "second chord 'k,l'")->required();

  std::string cache_dir;
  bool cache_list = false, cache_clear = false;
  CLI::App* cache_cmd = app.add_subcommand("cache", "cache maintenance");
  cache_cmd->add_option("--cache-dir", cache_dir, "cache directory")->required();
  cache_cmd->add_flag("--list", cache_list, "list entries (default)");
  cache_cmd->add_flag("--clear", cache_clear, "remove all entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze, fa);
    if (search->parsed()) return run_search(search, fs);
    if (complex_cmd->parsed()) return run_complex(cx_n, cx_genus, cx_dot, cx_json);
    if (farey->parsed()) return run_farey(fy_genus, fy_alpha, fy_beta);
    if (cache_cmd->parsed()) return run_cache(cache_dir, cache_list, cache_clear);
  } catch (const cfg::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const symloop::BudgetError& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const symloop::InvariantError& e) {
    std::cerr << "INVARIANT VIOLATION: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
