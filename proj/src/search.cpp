#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <thread>

#include "symloop/analyze.hpp"
#include "symloop/cache.hpp"

namespace symloop::pipeline {

using json = nlohmann::json;
using words::Word;

namespace {

perm::Perm ncycle(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return perm::Perm(img);
}

perm::Perm pc(const std::string& cycles, int deg) {
  auto p = perm::Perm::parse_cycles(cycles, deg);
  require(p.has_value(), "bad builtin cycle string");
  return *p;
}

// Image in G of a free word under the assignment gen i -> tuple[i].
int eval_word(const perm::Group& g, const std::vector<int>& tup,
              const Word& w) {
  int acc = 0;
  for (int l : w) {
    int e = tup[words::gen_of(l)];
    if (l < 0) e = g.inv(e);
    acc = g.mul(acc, e);
  }
  return acc;
}

struct ClassRep {
  std::vector<int> tuple;  // element indices, one per base generator
  long orbit_size = 0;
};

// Deduplicate surjection tuples by the orbit of: postcomposition with
// Aut(G) and precomposition with the standard twist automorphisms of the
// base. Best effort (the twist generators need not exhaust the mapping
// class group image), so the class count is an upper bound on the true
// number of equivalence classes.
std::vector<ClassRep> dedup_classes(
    const perm::Group& g, const surface::Model& base,
    const std::vector<std::vector<int>>& tuples) {
  auto autos = perm::automorphisms(g);
  std::vector<words::Endo> moves;
  for (const auto& mc : surface::standard_classes(base)) {
    moves.push_back(mc.fwd);
    moves.push_back(mc.bwd);
  }
  std::set<std::vector<int>> seen;
  std::vector<ClassRep> reps;
  for (const auto& t0 : tuples) {
    if (seen.count(t0)) continue;
    // Tuples arrive in lexicographic order, so t0 is its orbit's minimum.
    ClassRep rep{t0, 0};
    std::vector<std::vector<int>> frontier{t0};
    seen.insert(t0);
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& t : frontier) {
        ++rep.orbit_size;
        for (const auto& a : autos) {
          std::vector<int> u(t.size());
          for (size_t i = 0; i < t.size(); ++i) u[i] = a[t[i]];
          if (seen.insert(u).second) next.push_back(u);
        }
        for (const auto& e : moves) {
          std::vector<int> u(t.size());
          for (size_t i = 0; i < t.size(); ++i)
            u[i] = eval_word(g, t, e.img[i]);
          if (seen.insert(u).second) next.push_back(u);
        }
      }
      frontier = std::move(next);
    }
    reps.push_back(rep);
  }
  return reps;
}

}  // namespace

perm::Group named_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'z' && name != "z2xz2") {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
    }
    if (n >= 1 && n <= 12) return perm::generated_group(n, {ncycle(n)});
  }
  if (name == "z2xz2")
    return perm::generated_group(4, {pc("(1 2)(3 4)", 4), pc("(1 3)(2 4)", 4)});
  if (name == "s3")
    return perm::generated_group(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)});
  if (name == "s4")
    return perm::generated_group(4, {pc("(1 2)", 4), pc("(1 2 3 4)", 4)});
  if (name == "a4")
    return perm::generated_group(4, {pc("(1 2 3)", 4), pc("(1 2)(3 4)", 4)});
  if (name == "a5")
    return perm::generated_group(5, {pc("(1 2 3 4 5)", 5), pc("(1 2 3)", 5)});
  if (name == "d4")
    return perm::generated_group(4, {pc("(1 2 3 4)", 4), pc("(1 3)", 4)});
  if (name == "q8")
    return perm::generated_group(
        8, {pc("(1 2 3 4)(5 8 7 6)", 8), pc("(1 5 3 7)(2 6 4 8)", 8)});
  throw cfg::ConfigError("unknown group name '" + name + "'");
}

Outcome search(const cfg::JobConfig& c, const Options& o) {
  std::string canon = cfg::canonical(c);
  std::string key = cache::fnv1a_hex(canon);
  surface::Model base = surface::closed_model(c.base_genus);
  const int ng = base.ngens();
  const Word relator = base.relator();

  json groups = json::array();
  std::vector<std::string> alarms;

  for (const std::string& gname : c.groups) {
    perm::Group g = named_group(gname);
    const int n = g.order();

    // All surjections killing the relator, in lexicographic tuple order.
    std::vector<std::vector<int>> tuples;
    bool truncated = false;
    std::vector<int> tup(ng, 0);
    long visited = 0;
    while (true) {
      if (++visited > c.class_cap) {
        truncated = true;
        break;
      }
      bool surj = [&] {
        std::vector<perm::Perm> ps;
        for (int e : tup) ps.push_back(g.elements[e]);
        return perm::generated_group(g.degree, ps).order() == n;
      }();
      if (surj && eval_word(g, tup, relator) == 0) tuples.push_back(tup);
      int i = ng - 1;
      while (i >= 0 && tup[i] == n - 1) tup[i--] = 0;
      if (i < 0) break;
      ++tup[i];
    }

    std::vector<ClassRep> reps = dedup_classes(g, base, tuples);

    // Analyze one representative per class. Workers pull independent jobs;
    // results land in input order, so the merged report does not depend on
    // the worker count.
    std::vector<json> results(reps.size());
    std::vector<std::exception_ptr> errors(reps.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        size_t i = cursor.fetch_add(1);
        if (i >= reps.size()) return;
        try {
          cfg::JobConfig sub;
          sub.kind = "cover";
          sub.genus = c.base_genus;
          sub.punctures = 0;
          sub.degree = n;
          std::vector<perm::Perm> images;
          perm::regular_rep(g, reps[i].tuple, &images);
          for (int k = 0; k < ng; ++k)
            sub.voltage[base.gen_names[k]] = images[k].cycle_string();
          sub.budget_curves = c.budget_curves;
          sub.budget_wordlen = c.budget_wordlen;
          sub.orbit_cap = c.orbit_cap;
          sub.stab_window = c.stab_window;
          sub.seed = c.seed;
          std::string sub_canon = cfg::canonical(sub);
          std::string sub_key = cache::fnv1a_hex(sub_canon);
          std::optional<std::string> hit;
          if (!o.no_cache && !o.cache_dir.empty())
            hit = cache::get(o.cache_dir, sub_key);
          json rep;
          if (hit) {
            rep = json::parse(*hit);
          } else {
            rep = analyze_report(sub);
            if (!o.no_cache && !o.cache_dir.empty())
              cache::put(o.cache_dir, sub_key, rep.dump(2) + "\n");
          }
          json r;
          r["hash"] = sub_key;
          r["orbit_size"] = reps[i].orbit_size;
          json tj = json::array();
          for (int k = 0; k < ng; ++k)
            tj.push_back(g.elements[reps[i].tuple[k]].cycle_string());
          r["images"] = tj;
          r["dim_h1"] = rep["gap"]["dim_h1"];
          r["dim_h1s"] = rep["gap"]["dim_h1s"];
          r["stabilized"] = rep["h1s"]["stabilized"];
          r["gap"] = rep["gap"]["present"];
          r["config"] = sub_canon;
          results[i] = r;
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    int nw = std::max(1, std::min<int>(o.jobs, (int)reps.size()));
    if (nw <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < reps.size(); ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);

    long gaps = 0;
    json detail = json::array();
    for (size_t i = 0; i < reps.size(); ++i) {
      json r = results[i];
      bool gap = r["gap"].get<bool>() && r["stabilized"].get<bool>();
      if (gap) {
        ++gaps;
        std::string dir = o.cache_dir.empty()
                              ? std::string("reproducers")
                              : o.cache_dir + "/reproducers";
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::string path = dir + "/" + r["hash"].get<std::string>() + ".cfg";
        std::ofstream out(path, std::ios::trunc);
        if (out) {
          out << "# simple-loop gap reproducer (group " << gname << ")\n"
              << r["config"].get<std::string>();
          alarms.push_back("simple_loop_gap (" + gname + ", reproducer " +
                           path + ")");
        } else {
          alarms.push_back("simple_loop_gap (" + gname +
                           ", reproducer archive FAILED)");
        }
      }
      r.erase("config");
      detail.push_back(r);
    }

    json gj;
    gj["group"] = gname;
    gj["order"] = n;
    gj["epimorphisms"] = (long)tuples.size();
    gj["classes"] = (long)reps.size();
    gj["truncated"] = truncated;
    gj["gaps"] = gaps;
    gj["detail"] = detail;
    groups.push_back(gj);
  }

  json rep;
  rep["schema"] = 1;
  rep["kind"] = "search";
  rep["input"] = canon;
  rep["input_hash"] = key;
  rep["base_genus"] = c.base_genus;
  rep["groups"] = groups;
  rep["alarms"] = alarms;

  std::string bytes = rep.dump(2) + "\n";
  Outcome out{bytes, render_table(rep), alarms.empty() ? 0 : 3, false};
  write_output_file(c, out.json_bytes);
  return out;
}

}  // namespace symloop::pipeline
