#include "symloop/analyze.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "symloop/cache.hpp"
#include "symloop/isotypic.hpp"
#include "symloop/mcg.hpp"

namespace symloop::pipeline {

using json = nlohmann::json;
using la::Mat;
using la::Rat;
using la::Vec;
using words::Word;

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (const auto& r : m.row) rows.push_back(vec_json(r));
  return rows;
}

Vec vec_from(const json& a) {
  Vec v;
  for (const auto& x : a) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}

Mat mat_from(const json& rows) {
  Mat m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
  for (int i = 0; i < m.nr; ++i) m.row[i] = vec_from(rows[i]);
  return m;
}

bool is_skew(const Mat& m) {
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  return true;
}

bool preserves_form(const Mat& m, const Mat& omega) {
  return m.transpose() * omega * m == omega;
}

bool unipotent2(const Mat& m) {
  Mat n = m - Mat::identity(m.nr);
  return (n * n).is_zero();
}

struct InvariantLog {
  json records = json::array();
  std::vector<std::string> alarms;

  void check(const std::string& name, bool pass, bool enforced,
             const std::string& note = "") {
    json r;
    r["name"] = name;
    r["pass"] = pass;
    r["enforced"] = enforced;
    if (!note.empty()) r["note"] = note;
    records.push_back(r);
    if (enforced && !pass)
      alarms.push_back(name + (note.empty() ? "" : " (" + note + ")"));
  }
};

// The derived data every analysis needs.
struct Built {
  surface::Model base;
  cover::CoverSpec spec;
  std::optional<cover::Tower> tower;
  cover::Cover cv;
  homology::OpenH1 open;
  homology::HomologySpace H;
  cover::Cover dblcv;        // towers only
  homology::HomologySpace dblH;
};

Built build(const cfg::JobConfig& c) {
  Built b;
  b.base = cfg::base_model(c);
  b.spec = cfg::cover_spec(c, b.base.gen_names);
  try {
    cover::validate_cover(b.base, b.spec);
    if (c.kind == "tower") b.tower = cover::tower_from(c.genus, c.extra, b.spec);
  } catch (const InvariantError& e) {
    // The voltages describe no admissible cover: bad input, not a bug.
    throw cfg::ConfigError(std::string("cover rejected: ") + e.what());
  } catch (const BudgetError& e) {
    throw cfg::ConfigError(std::string("cover rejected: ") + e.what());
  }
  b.cv = cover::derive(b.base, b.spec);
  b.open = homology::h1_open(b.cv);
  b.H = homology::cap(b.cv, b.open, true);
  if (b.tower) {
    b.dblcv = cover::derive(b.base, b.tower->dbl);
    b.dblH = homology::cap(b.dblcv, homology::h1_open(b.dblcv), true);
  }
  return b;
}

json span_json(const mcg::SpanResult& s) {
  json j;
  j["dim"] = s.space.dim();
  j["stabilized"] = s.stabilized;
  j["used"] = s.used;
  j["last_growth"] = s.last_growth;
  return j;
}

std::string kind_name(mcg::SymKind k) {
  switch (k) {
    case mcg::SymKind::Unknown: return "unknown";
    case mcg::SymKind::NotApplicable: return "not-applicable";
    case mcg::SymKind::Chord: return "chord";
    case mcg::SymKind::ConnectedLift: return "connected-lift";
    case mcg::SymKind::TwoComponent: return "two-component";
  }
  return "?";
}

json analyze_job(const cfg::JobConfig& c, const std::string& canon,
                 const std::string& key) {
  Built b = build(c);
  const cover::Cover& cv = b.cv;
  const homology::HomologySpace& H = b.H;
  InvariantLog log;

  // -- structure ---------------------------------------------------------
  log.check("euler_multiplicative",
            cv.graph.euler_open() == c.degree * b.base.graph.euler_open(),
            true);
  int chi_capped = cv.graph.euler_capped();
  log.check("capped_rank_matches_euler", H.dim == 2 - chi_capped, true);
  log.check("omega_skew", is_skew(H.omega), true);
  log.check("omega_nondegenerate", la::rank(H.omega) == H.dim, true);

  // -- deck action --------------------------------------------------------
  cover::DeckAction da = cover::deck_action(cv);
  std::vector<Mat> deckM;
  if (da.regular) {
    deckM = homology::deck_matrices(H, da);
    bool sympl = true;
    for (const auto& m : deckM) sympl = sympl && preserves_form(m, H.omega);
    log.check("deck_symplectic", sympl, true);
  }

  // Group the isotypic decomposition runs under: the full deck group for a
  // plain cover, the even-parity subgroup (the deck group over the
  // hyperelliptic quotient) for a tower.
  perm::Group igroup;
  std::vector<Mat> igroupM, igenM;
  bool have_iso_group = false;
  if (da.regular) {
    if (b.tower) {
      std::vector<perm::Perm> even;
      for (int i = 0; i < da.group.order(); ++i)
        if (b.tower->sheet_parity[da.sheets[i](0)] == 0)
          even.push_back(da.sheets[i]);
      igroup = perm::generated_group(c.degree, even);
      log.check("tower_even_deck_index_two",
                2 * igroup.order() == da.group.order(), true);
    } else {
      igroup = da.group;
    }
    for (const auto& e : igroup.elements) {
      int idx = da.group.index_of(e);
      require(idx >= 0, "isotypic subgroup element escaped the deck group");
      igroupM.push_back(deckM[idx]);
    }
    for (const auto& g : igroup.gens) {
      int idx = da.group.index_of(g);
      igenM.push_back(deckM[idx]);
    }
    have_iso_group = true;
  }

  // -- curve family and multitwists ----------------------------------------
  mcg::EnumBudget eb{c.budget_curves, (size_t)c.budget_wordlen};
  mcg::CurveFamily fam = mcg::enumerate_curves(b.base, eb);
  if (b.tower)
    mcg::fill_symmetric_kinds(fam, *b.tower, b.dblcv, b.dblH);
  else if (b.base.genus >= 1)
    mcg::fill_nonseparating(fam, b.base);

  std::vector<mcg::MultiTwist> twists;
  twists.reserve(fam.entries.size());
  for (const auto& e : fam.entries)
    twists.push_back(mcg::multitwist(cv, H, e.word));

  bool uni = true, tsym = true;
  for (const auto& t : twists) {
    uni = uni && unipotent2(t.matrix);
    tsym = tsym && preserves_form(t.matrix, H.omega);
  }
  log.check("twist_unipotent", uni, true);
  log.check("twist_symplectic", tsym, true);

  // -- simple-loop subspaces ------------------------------------------------
  mcg::SpanResult h1s = mcg::simple_loop_subspace(cv, H, fam, c.stab_window);
  std::optional<mcg::SpanResult> h1si;
  if (b.tower) h1si = mcg::hyperelliptic_sls(cv, H, fam, c.stab_window);

  // Theorem hypotheses. The nondegeneracy/fixed-space statements are about
  // covers of a closed base of genus >= 3; the hyperelliptic statements need
  // tower genus >= 4 and an unramified cover -> quotient map.
  bool hyp_cover = !b.tower && b.base.closed && b.base.genus >= 3;
  bool hyp_tower = b.tower && c.genus >= 4 && b.tower->branch.empty();
  std::string outside = "observed outside theorem hypotheses";

  la::Subspace perp = h1s.space.orthogonal_complement(H.omega);
  {
    bool fix = true;
    for (const auto& t : twists)
      for (const auto& v : perp.basis.row)
        fix = fix && (t.matrix.apply(v) == v);
    log.check("perp_fixed_by_twists", fix, true);
  }
  if (da.regular) {
    bool dinv = true;
    for (const auto& g : da.group.gens) {
      const Mat& M = deckM[da.group.index_of(g)];
      for (const auto& v : h1s.space.basis.row)
        dinv = dinv && h1s.space.contains(M.apply(v));
    }
    log.check("h1s_deck_invariant", dinv, true);
  }
  {
    int k = h1s.space.dim();
    Mat gram(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        gram.at(i, j) =
            mcg::pair(H, h1s.space.basis.row[i], h1s.space.basis.row[j]);
    bool nd = la::rank(gram) == k;
    bool enf = h1s.stabilized && hyp_cover;
    log.check("h1s_omega_nondegenerate", nd, enf, enf ? "" : outside);
  }
  la::Subspace fixed = mcg::dehn_fixed_space(twists, H.dim);
  {
    bool eq = fixed == perp;
    bool enf = h1s.stabilized && hyp_cover;
    log.check("dehn_fixed_is_perp", eq, enf, enf ? "" : outside);
  }

  // -- isotypic decomposition ----------------------------------------------
  json iso = nullptr;
  std::optional<isotypic::IsotypicDecomposition> dec;
  if (have_iso_group) {
    try {
      isotypic::CharacterTable table = isotypic::character_table(igroup);
      auto es = isotypic::rational_idempotents(igroup, table);
      dec = isotypic::isotypic_projectors(igroup, table, es, igroupM);
      log.check("isotypic_verified", true, true);

      iso = json::object();
      iso["group_order"] = igroup.order();
      iso["skipped"] = false;
      json chars = json::array();
      for (size_t k = 0; k < dec->names.size(); ++k) {
        json ch;
        ch["name"] = dec->names[k];
        ch["degree"] = dec->degrees[k];
        ch["orbit"] = dec->orbit_sizes[k];
        ch["dim"] = dec->dims[k];
        chars.push_back(ch);
      }
      iso["characters"] = chars;

      if (!b.tower && b.base.closed) {
        // Closed base: the cover is unramified, so H1 = Q^2 + Q[G]^(2g-2)
        // pins every isotypic dimension.
        bool cw = true;
        for (size_t k = 0; k < dec->names.size(); ++k) {
          long expected = (long)dec->orbit_sizes[k] * dec->degrees[k] *
                              dec->degrees[k] * (2 * b.base.genus - 2) +
                          (k == 0 ? 2 : 0);
          cw = cw && (dec->dims[k] == expected);
        }
        log.check("chevalley_weil_dims", cw, true);
      }

      const mcg::SpanResult& target = b.tower ? *h1si : h1s;
      isotypic::SumCheck sc = isotypic::isotypic_sum_check(
          target.space, *dec, igenM);
      json sum = json::array();
      bool partial = false;
      for (size_t k = 0; k < sc.status.size(); ++k) {
        json s;
        s["name"] = dec->names[k];
        s["dim"] = sc.dims[k];
        s["status"] = sc.status[k] == isotypic::SumStatus::Zero   ? "zero"
                      : sc.status[k] == isotypic::SumStatus::Full ? "full"
                                                                  : "partial";
        sum.push_back(s);
        partial = partial || sc.status[k] == isotypic::SumStatus::Partial;
      }
      iso[b.tower ? "sum_h1si" : "sum_h1s"] = sum;
      bool enf = target.stabilized && (b.tower ? hyp_tower : hyp_cover);
      log.check(b.tower ? "isotypic_no_partial_h1si" : "isotypic_no_partial_h1s",
                !partial, enf, enf ? "" : outside);
    } catch (const BudgetError& e) {
      iso = json::object();
      iso["group_order"] = igroup.order();
      iso["skipped"] = true;
      iso["reason"] = e.what();
    }
  }

  // -- finite-orbit candidates ----------------------------------------------
  // Basis of the Omega-orthogonal complement of H1^s, probed under a
  // deterministic selection of twist matrices.
  std::vector<Mat> probe;
  {
    std::set<std::string> seen;
    Mat id = Mat::identity(H.dim);
    for (const auto& t : twists) {
      if (t.matrix == id) continue;
      if ((int)probe.size() >= 32) break;
      if (seen.insert(t.matrix.str()).second) probe.push_back(t.matrix);
    }
  }
  json candidates = json::array();
  for (const auto& v : perp.basis.row) {
    mcg::OrbitResult r = mcg::orbit_probe(v, probe, (size_t)c.orbit_cap);
    json cj;
    cj["vector"] = vec_json(v);
    cj["finite"] = r.finite;
    cj["orbit"] = (long)r.orbit.size();
    candidates.push_back(cj);
  }

  // -- specialcase witnesses (towers) ---------------------------------------
  json witnesses = nullptr;
  if (b.tower) {
    witnesses = json::array();
    auto ws = mcg::specialcase_detector(*b.tower, cv, H, fam);
    bool any = false;
    for (const auto& w : ws) {
      if (!w.witness) continue;
      any = true;
      json wj;
      wj["entry"] = w.entry;
      wj["curve"] = words::show(fam.entries[w.entry].word, b.base.gen_names);
      wj["kind"] = kind_name(w.kind);
      wj["trivial_coverage"] = w.trivial_coverage;
      wj["cut_count"] = w.cut_count;
      wj["cut_rank"] = w.cut_rank;
      wj["connected_complement"] = w.connected_complement;
      witnesses.push_back(wj);
    }
    if (any && h1si) {
      bool full_sym = h1si->space.dim() == H.dim;
      bool enf = h1si->stabilized && b.tower->branch.empty();
      log.check("witness_forces_full_h1si", full_sym, enf, enf ? "" : outside);
    }
  }

  // -- assemble --------------------------------------------------------------
  json rep;
  rep["schema"] = 1;
  rep["kind"] = c.kind;
  rep["input"] = canon;
  rep["input_hash"] = key;

  json surf;
  surf["base_genus"] = b.base.genus;
  surf["base_punctures"] = b.base.npunct;
  surf["base_closed"] = b.base.closed;
  surf["degree"] = c.degree;
  if (b.tower) {
    surf["tower_genus"] = c.genus;
    surf["extra_marked"] = c.extra;
    json br = json::array();
    for (int j : b.tower->branch) br.push_back(j);
    surf["branch_in_quotient"] = br;
  }
  rep["surface"] = surf;

  json cov;
  cov["connected"] = true;  // validate_cover rejects disconnected input
  cov["regular"] = da.regular;
  cov["deck_order"] = da.regular ? da.group.order() : 0;
  cov["euler_open"] = cv.graph.euler_open();
  cov["genus_capped"] = (2 - chi_capped) / 2;
  {
    std::set<int> bp;
    for (const auto& f : cv.faces)
      if (f.puncture >= 0 && f.branch) bp.insert(f.puncture);
    json arr = json::array();
    for (int j : bp) arr.push_back(j);
    cov["branch_over_base"] = arr;
  }
  rep["cover"] = cov;

  json ranks;
  ranks["open"] = b.open.rank;
  ranks["capped"] = H.dim;
  rep["ranks"] = ranks;

  json curves;
  curves["enumerated"] = (long)fam.entries.size();
  curves["truncated"] = fam.truncated;
  curves["probe_gens"] = (long)probe.size();
  rep["curves"] = curves;

  rep["h1s"] = span_json(h1s);
  rep["h1si"] = h1si ? span_json(*h1si) : json(nullptr);

  json gap;
  gap["dim_h1"] = H.dim;
  gap["dim_h1s"] = h1s.space.dim();
  gap["present"] = h1s.space.dim() < H.dim;
  gap["conclusive"] = h1s.stabilized && !fam.truncated;
  rep["gap"] = gap;

  rep["isotypic"] = iso;
  rep["candidates"] = candidates;
  rep["witnesses"] = witnesses;
  rep["invariants"] = log.records;
  rep["alarms"] = log.alarms;

  if (c.full) {
    json full;
    full["omega"] = mat_json(H.omega);
    full["h1s_basis"] = mat_json(h1s.space.basis);
    if (h1si) full["h1si_basis"] = mat_json(h1si->space.basis);
    full["perp_basis"] = mat_json(perp.basis);
    full["dehn_fixed_basis"] = mat_json(fixed.basis);
    json dg = json::array();
    if (da.regular)
      for (const auto& g : da.group.gens)
        dg.push_back(mat_json(deckM[da.group.index_of(g)]));
    full["deck_gens"] = dg;
    json tm = json::array();
    for (const auto& t : twists) tm.push_back(mat_json(t.matrix));
    full["twists"] = tm;
    if (dec) {
      json pj = json::array();
      for (const auto& p : dec->projectors) pj.push_back(mat_json(p));
      full["projectors"] = pj;
    }
    rep["full"] = full;
  }
  return rep;
}

int exit_code_of(const json& rep) {
  auto it = rep.find("alarms");
  return (it != rep.end() && !it->empty()) ? 3 : 0;
}

}  // namespace

void write_output_file(const cfg::JobConfig& c, const std::string& bytes) {
  if (c.output.empty()) return;
  std::ofstream out(c.output, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "warning: cannot write report to " << c.output << "\n";
    return;
  }
  out << bytes;
}

nlohmann::json analyze_report(const cfg::JobConfig& c) {
  std::string canon = cfg::canonical(c);
  return analyze_job(c, canon, cache::fnv1a_hex(canon));
}

Outcome analyze(const cfg::JobConfig& c, const Options& o) {
  std::string canon = cfg::canonical(c);
  std::string key = cache::fnv1a_hex(canon);
  if (!o.no_cache && !o.cache_dir.empty()) {
    if (auto hit = cache::get(o.cache_dir, key)) {
      json rep = json::parse(*hit);
      Outcome out{*hit, render_table(rep), exit_code_of(rep), true};
      write_output_file(c, out.json_bytes);
      return out;
    }
  }
  json rep = analyze_job(c, canon, key);
  std::string bytes = rep.dump(2) + "\n";
  if (!o.no_cache && !o.cache_dir.empty()) cache::put(o.cache_dir, key, bytes);
  Outcome out{bytes, render_table(rep), exit_code_of(rep), false};
  write_output_file(c, out.json_bytes);
  return out;
}

// ---- rendering ---------------------------------------------------------------

std::string render_table(const json& rep) {
  std::ostringstream t;
  auto line = [&](const std::string& k, const std::string& v) {
    t << "  " << k;
    for (size_t i = k.size(); i < 22; ++i) t << ' ';
    t << v << "\n";
  };
  std::string kind = rep.value("kind", "?");
  t << "symloop report (" << kind << ", input "
    << rep.value("input_hash", std::string("?")) << ")\n";
  if (kind == "search") {
    for (const auto& gj : rep["groups"]) {
      std::ostringstream v;
      v << "order " << gj["order"].get<long>() << ", "
        << gj["epimorphisms"].get<long>() << " epimorphisms, "
        << gj["classes"].get<long>() << " classes, " << gj["gaps"].get<long>()
        << " gaps" << (gj["truncated"].get<bool>() ? " (truncated)" : "");
      line("group " + gj["group"].get<std::string>(), v.str());
      for (const auto& d : gj["detail"]) {
        std::ostringstream w;
        w << "dim H1 = " << d["dim_h1"].get<long>()
          << ", dim H1^s = " << d["dim_h1s"].get<long>()
          << (d["stabilized"].get<bool>() ? "" : " (not stabilized)")
          << (d["gap"].get<bool>() ? "  << GAP" : "");
        line("  class " + d["hash"].get<std::string>().substr(0, 8), w.str());
      }
    }
  } else {
    const json& surf = rep["surface"];
    {
      std::ostringstream v;
      v << "genus " << surf["base_genus"].get<int>();
      if (surf["base_closed"].get<bool>())
        v << ", closed";
      else
        v << ", " << surf["base_punctures"].get<int>() << " punctures";
      line("base", v.str());
    }
    const json& cov = rep["cover"];
    {
      std::ostringstream v;
      v << "degree " << surf["degree"].get<int>() << ", "
        << (cov["regular"].get<bool>()
                ? "regular, deck order " +
                      std::to_string(cov["deck_order"].get<int>())
                : std::string("not regular"))
        << ", capped genus " << cov["genus_capped"].get<int>();
      line("cover", v.str());
    }
    line("H1",
         "dim " + std::to_string(rep["ranks"]["capped"].get<int>()) +
             " (open rank " + std::to_string(rep["ranks"]["open"].get<int>()) +
             ")");
    {
      const json& cu = rep["curves"];
      line("curves", std::to_string(cu["enumerated"].get<long>()) +
                         (cu["truncated"].get<bool>() ? " (truncated)"
                                                      : " (complete)"));
    }
    {
      const json& h = rep["h1s"];
      std::ostringstream v;
      v << "dim " << h["dim"].get<int>() << ", used " << h["used"].get<int>()
        << (h["stabilized"].get<bool>() ? ", stabilized" : ", NOT stabilized");
      line("H1^s", v.str());
    }
    if (!rep["h1si"].is_null()) {
      const json& h = rep["h1si"];
      std::ostringstream v;
      v << "dim " << h["dim"].get<int>() << ", used " << h["used"].get<int>()
        << (h["stabilized"].get<bool>() ? ", stabilized" : ", NOT stabilized");
      line("H1^{s,iota}", v.str());
    }
    {
      const json& gp = rep["gap"];
      std::ostringstream v;
      if (gp["present"].get<bool>())
        v << "dim H1^s = " << gp["dim_h1s"].get<int>() << " < "
          << gp["dim_h1"].get<int>() << " = dim H1"
          << (gp["conclusive"].get<bool>() ? "" : " (inconclusive)");
      else
        v << "none (H1^s = H1)";
      line("gap", v.str());
    }
    if (!rep["isotypic"].is_null()) {
      const json& iso = rep["isotypic"];
      if (iso["skipped"].get<bool>()) {
        line("isotypic", "skipped: " + iso["reason"].get<std::string>());
      } else {
        std::ostringstream v;
        bool first = true;
        for (const auto& ch : iso["characters"]) {
          if (!first) v << ", ";
          first = false;
          v << ch["name"].get<std::string>() << ": dim "
            << ch["dim"].get<int>();
        }
        line("isotypic", v.str());
      }
    }
    {
      long nc = (long)rep["candidates"].size();
      long fin = 0;
      for (const auto& cj : rep["candidates"])
        if (cj["finite"].get<bool>()) ++fin;
      std::ostringstream v;
      if (nc == 0)
        v << "none (H1^s has trivial complement)";
      else
        v << nc << " probed, " << fin << " with finite twist orbit";
      line("candidates", v.str());
    }
    if (!rep["witnesses"].is_null())
      line("witnesses", std::to_string(rep["witnesses"].size()));
    {
      long pass = 0, fail = 0;
      for (const auto& r : rep["invariants"])
        (r["pass"].get<bool>() ? pass : fail)++;
      line("invariants",
           std::to_string(pass) + " pass, " + std::to_string(fail) + " fail");
    }
  }
  if (rep.contains("alarms")) {
    if (rep["alarms"].empty()) {
      line("alarms", "none");
    } else {
      for (const auto& a : rep["alarms"])
        line("ALARM", a.get<std::string>());
    }
  }
  return t.str();
}

json revalidate_full(const json& rep) {
  json out = json::object();
  if (!rep.contains("full")) return out;
  const json& full = rep["full"];

  auto recorded = [&](const std::string& name) -> std::optional<bool> {
    for (const auto& r : rep["invariants"])
      if (r["name"] == name) return r["pass"].get<bool>();
    return std::nullopt;
  };
  auto compare = [&](const std::string& name, bool recomputed) {
    if (auto rec = recorded(name)) out[name] = (*rec == recomputed);
  };

  Mat omega = mat_from(full["omega"]);
  compare("omega_skew", is_skew(omega));
  compare("omega_nondegenerate", la::rank(omega) == omega.nr);

  std::vector<Mat> twists;
  for (const auto& tj : full["twists"]) twists.push_back(mat_from(tj));
  bool uni = true, tsym = true;
  for (const auto& t : twists) {
    uni = uni && unipotent2(t);
    tsym = tsym && preserves_form(t, omega);
  }
  compare("twist_unipotent", uni);
  compare("twist_symplectic", tsym);

  bool dsym = true;
  std::vector<Mat> dg;
  for (const auto& mj : full["deck_gens"]) dg.push_back(mat_from(mj));
  for (const auto& m : dg) dsym = dsym && preserves_form(m, omega);
  if (!dg.empty()) compare("deck_symplectic", dsym);

  Mat h1s_basis = mat_from(full["h1s_basis"]);
  la::Subspace h1s = la::Subspace::span(omega.nr, h1s_basis.row);
  Mat perp_basis = mat_from(full["perp_basis"]);
  la::Subspace perp = la::Subspace::span(omega.nr, perp_basis.row);

  {
    bool fix = true;
    for (const auto& t : twists)
      for (const auto& v : perp.basis.row) fix = fix && (t.apply(v) == v);
    compare("perp_fixed_by_twists", fix);
  }
  {
    bool dinv = true;
    for (const auto& m : dg)
      for (const auto& v : h1s.basis.row)
        dinv = dinv && h1s.contains(m.apply(v));
    if (!dg.empty()) compare("h1s_deck_invariant", dinv);
  }
  {
    int k = h1s.dim();
    Mat gram(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        gram.at(i, j) = la::dot(h1s.basis.row[i], omega.apply(h1s.basis.row[j]));
    compare("h1s_omega_nondegenerate", la::rank(gram) == k);
  }
  {
    la::Subspace fixed = la::Subspace::full(omega.nr);
    for (const auto& t : twists) {
      Mat d = t - Mat::identity(omega.nr);
      la::Subspace ker = la::Subspace::span(omega.nr, la::kernel(d).row);
      fixed = fixed.intersect(ker);
    }
    compare("dehn_fixed_is_perp", fixed == perp);
  }
  if (full.contains("projectors")) {
    std::vector<Mat> ps;
    for (const auto& pj : full["projectors"]) ps.push_back(mat_from(pj));
    Mat sum(omega.nr, omega.nr);
    bool ok = true;
    for (const auto& p : ps) {
      sum = sum + p;
      ok = ok && (p * p == p);
    }
    ok = ok && (sum == Mat::identity(omega.nr));
    for (size_t i = 0; i < ps.size() && ok; ++i)
      for (size_t j = i + 1; j < ps.size() && ok; ++j)
        ok = ok && (ps[i] * ps[j]).is_zero();
    compare("isotypic_verified", ok);
  }
  return out;
}

}  // namespace symloop::pipeline
