// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit code = number
// of failed criteria.
//
// Every mathematical assertion here is exact (rational arithmetic, zero
// tolerance). The only tunable quantities are the pinned constants below:
// randomization seed, enumeration budgets, matrix-size caps, and runtime
// ceilings. Oracles are independent of the code paths they check: Euler
// numbers come from Riemann-Hurwitz on voltage cycle counts, deck traces
// from fixed-cell counts, complex dimensions from closed-form counts.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symloop/analyze.hpp"
#include "symloop/complexes.hpp"
#include "symloop/isotypic.hpp"
#include "symloop/mcg.hpp"

using namespace symloop;
using cover::CoverSpec;
using la::Mat;
using la::Rat;
using la::Vec;
using nlohmann::json;
using perm::Perm;
namespace fs = std::filesystem;

namespace {

// ---- pinned knobs -----------------------------------------------------------
constexpr uint64_t kSeed = 0x5eed2026u;
constexpr int kRandomCovers = 200;   // criterion 1 sample size
constexpr int kMaxDegree = 48;       // criterion 1 degree bound
constexpr int kClosedDimCap = 40;    // closed-base samples keep dim H1 small
constexpr int kMatrixDimCap = 64;    // covers that produce matrices (crit 2)
constexpr int kTwistCurvesPer = 8;   // twist curves per matrix-producing cover
constexpr int kCurveBudget = 200;    // curve enumeration budget (crit 4/5)
constexpr int kStabWindow = 3;
constexpr int kFareyPairs = 100;     // criterion 7 sample size
constexpr double kBudget1 = 60.0, kBudget2 = 120.0, kBudget5 = 600.0,
                 kBudget6 = 60.0, kBudget9 = 600.0;

std::mt19937_64 g_rng(kSeed);
int rnd(int m) { return (int)(g_rng() % (uint64_t)m); }

Perm random_perm(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  for (int i = d - 1; i > 0; --i) std::swap(v[i], v[rnd(i + 1)]);
  return Perm(std::move(v));
}

Perm random_full_cycle(int d) {
  // a d-cycle visiting the sheets in a random order
  std::vector<int> order(d), img(d);
  std::iota(order.begin(), order.end(), 0);
  for (int i = d - 1; i > 0; --i) std::swap(order[i], order[rnd(i + 1)]);
  for (int i = 0; i < d; ++i) img[order[i]] = order[(i + 1) % d];
  return Perm(std::move(img));
}

Perm perm_power(const Perm& p, int k) {
  Perm r = Perm::identity(p.deg());
  for (int i = 0; i < k; ++i) r = Perm::compose(p, r);
  return r;
}

bool transitive(const CoverSpec& c) {
  if (c.degree == 1) return true;
  std::vector<int> seen(c.degree, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (const Perm& p : c.rho)
      for (int t : {p(s), p.inverse()(s)})
        if (!seen[t]) {
          seen[t] = 1;
          ++reached;
          stack.push_back(t);
        }
  }
  return reached == c.degree;
}

struct Sample {
  surface::Model base;
  CoverSpec spec;
  long capped_euler_rh = 0;  // independent Riemann-Hurwitz value
  bool closed = false;
};

// chi of the capped cover by Riemann-Hurwitz over the capped base: branch
// points contribute cycle deficits of the puncture holonomies.
long rh_capped_euler(const surface::Model& m, const CoverSpec& c) {
  int g = m.genus;
  long chi = (long)c.degree * (2 - 2 * g);
  for (int j = 0; j < m.npunct; ++j)
    chi -= c.degree - cover::holonomy(m, c, j).num_cycles();
  return chi;
}

bool is_skew(const Mat& o) {
  for (int i = 0; i < o.nr; ++i)
    for (int j = 0; j < o.nc; ++j)
      if (o.at(i, j) != -o.at(j, i)) return false;
  return true;
}
bool symplectic(const Mat& omega, const Mat& m) {
  return m.transpose() * omega * m == omega;
}
bool unipotent2(const Mat& m) {
  Mat d = m - Mat::identity(m.nr);
  return (d * d).is_zero();
}
Rat trace(const Mat& m) {
  Rat t(0);
  for (int i = 0; i < m.nr; ++i) t += m.at(i, i);
  return t;
}

// Smallest generating tuple (one or two elements) of a small group, by
// element index. Used to spread voltage images over the handles.
std::vector<int> generating_elts(const perm::Group& g) {
  int n = g.order();
  for (int i = 1; i < n; ++i)
    if (perm::generated_group(g.degree, {g.elements[i]}, n).order() == n)
      return {i};
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm::generated_group(g.degree, {g.elements[i], g.elements[j]}, n)
              .order() == n)
        return {i, j};
  throw std::runtime_error("no generating pair");
}

// Q8 needs a deeper curve family: its simple-loop span plateaus from entry
// ~6 to ~461 before reaching full rank, so 200 curves stabilize prematurely
// (the exit-3 demonstration in criterion 4 uses exactly that).
int budget_for(const std::string& gname) {
  return gname == "q8" ? 800 : kCurveBudget;
}

// Voltage config for a regular G-cover of the closed genus-gb surface with
// the chosen images on commuting handle slots ([a_i, b_i] dies slotwise).
cfg::JobConfig closed_cover_config(const std::string& gname, int gb,
                                   int pattern) {
  auto g = pipeline::named_group(gname);
  auto gen = generating_elts(g);
  std::vector<int> images(2 * gb, 0);
  if (gen.size() == 1) {
    images[0] = gen[0];                      // a1
    if (pattern == 1) images[1] = gen[0];    // b1 = a1: commutator still dies
  } else {
    images[0] = gen[0];
    images[pattern == 0 ? 2 : 3] = gen[1];   // a2, or b2 (commutes with a2=e)
  }
  CoverSpec spec = cover::regular_cover(g, images);
  cfg::JobConfig c;
  c.kind = "cover";
  c.genus = gb;
  c.punctures = 0;
  c.degree = spec.degree;
  auto m = surface::closed_model(gb);
  for (int k = 0; k < m.ngens(); ++k)
    c.voltage[m.gen_names[k]] = spec.rho[k].cycle_string();
  c.budget_curves = budget_for(gname);
  c.stab_window = kStabWindow;
  return c;
}

cfg::JobConfig tower_config(int genus, const std::vector<std::string>& volts,
                            int degree) {
  cfg::JobConfig c;
  c.kind = "tower";
  c.genus = genus;
  c.degree = degree;
  for (size_t k = 0; k < volts.size(); ++k)
    c.voltage["x" + std::to_string(k + 1)] = volts[k];
  c.budget_curves = kCurveBudget;
  c.stab_window = kStabWindow;
  return c;
}

// Tower voltage sets with unramified cover -> quotient (every holonomy an
// involution): repeating patterns over Z2, Z2^2, Z2^3.
std::vector<cfg::JobConfig> unramified_towers_g4() {
  std::vector<cfg::JobConfig> out;
  out.push_back(tower_config(4, std::vector<std::string>(9, "(1 2)"), 2));
  {
    std::vector<std::string> v;
    for (int k = 0; k < 9; ++k)
      v.push_back(k % 2 == 0 ? "(1 2)(3 4)" : "(1 3)(2 4)");
    out.push_back(tower_config(4, v, 4));
  }
  {
    const char* abc[3] = {"(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)",
                          "(1 5)(2 6)(3 7)(4 8)"};
    std::vector<std::string> v;
    for (int k = 0; k < 9; ++k) v.push_back(abc[k % 3]);
    out.push_back(tower_config(4, v, 8));
  }
  return out;
}

struct Criterion {
  int id;
  std::string label;
  double ceiling;  // seconds; 0 = no pinned ceiling
  std::function<bool(std::string&)> run;
};

// shared state across criteria
std::vector<Sample> g_samples;                       // criterion 1 output
struct MatrixPack {
  int sample = -1;
  homology::HomologySpace H;
  cover::DeckAction da;
  std::vector<Mat> deck;            // empty if irregular
  std::vector<mcg::MultiTwist> twists;
  cover::Cover cv;
};
std::vector<MatrixPack> g_packs;                     // criterion 2 output
std::vector<json> g_tower_reports;                   // criterion 5 output

bool crit1_euler(std::string& detail) {
  g_samples.clear();
  int closed_count = 0;
  for (int i = 0; i < kRandomCovers; ++i) {
    Sample s;
    if (rnd(3) == 0) {
      // closed base, cyclic voltages: the relator dies in an abelian image
      int g = 1 + rnd(4);
      int dcap = g == 1 ? kMaxDegree
                        : std::min(kMaxDegree, (kClosedDimCap - 2) / (2 * g - 2));
      int d = 1 + rnd(dcap);
      s.base = surface::closed_model(g);
      s.closed = true;
      Perm c = random_full_cycle(d);
      std::vector<Perm> rho;
      rho.push_back(c);  // a1 a full cycle: transitive
      for (int k = 1; k < s.base.ngens(); ++k)
        rho.push_back(perm_power(c, rnd(d)));
      s.spec = CoverSpec{d, rho};
      ++closed_count;
    } else {
      int g = rnd(5);
      int n = g == 0 ? 2 + rnd(5) : 1 + rnd(6);
      int d = 1 + rnd(kMaxDegree);
      s.base = surface::punctured_model(g, n);
      std::vector<Perm> rho;
      for (int k = 0; k < s.base.ngens(); ++k) rho.push_back(random_perm(d));
      s.spec = CoverSpec{d, rho};
      if (!transitive(s.spec)) {
        s.spec.rho[0] = random_full_cycle(d);  // force connectivity
      }
    }
    cover::validate_cover(s.base, s.spec);
    auto cv = cover::derive(s.base, s.spec);
    long chi_open_base = s.base.graph.euler_open();
    if (cv.graph.euler_open() != s.spec.degree * chi_open_base) {
      detail = "open euler not multiplicative at sample " + std::to_string(i);
      return false;
    }
    s.capped_euler_rh = rh_capped_euler(s.base, s.spec);
    if (cv.graph.euler_capped() != s.capped_euler_rh) {
      detail = "capped euler disagrees with Riemann-Hurwitz at sample " +
               std::to_string(i);
      return false;
    }
    if ((2 - s.capped_euler_rh) % 2 != 0) {
      detail = "odd capped rank at sample " + std::to_string(i);
      return false;
    }
    g_samples.push_back(std::move(s));
  }
  detail = std::to_string(kRandomCovers) + " covers (" +
           std::to_string(closed_count) +
           " closed-base), open euler multiplicative and capped euler == "
           "Riemann-Hurwitz, exact";
  return true;
}

bool crit2_symplectic(std::string& detail) {
  g_packs.clear();
  int deck_checked = 0, twist_checked = 0, commute_checked = 0;
  for (size_t i = 0; i < g_samples.size(); ++i) {
    const Sample& s = g_samples[i];
    long dim = 2 - s.capped_euler_rh;
    if (dim > kMatrixDimCap) continue;
    MatrixPack p;
    p.sample = (int)i;
    p.cv = cover::derive(s.base, s.spec);
    p.H = homology::cap(p.cv, homology::h1_open(p.cv), true);
    if (p.H.dim != (int)dim) {
      detail = "capped dim disagrees with Riemann-Hurwitz at sample " +
               std::to_string(i);
      return false;
    }
    if (!is_skew(p.H.omega)) {
      detail = "omega not skew at sample " + std::to_string(i);
      return false;
    }
    p.da = cover::deck_action(p.cv);
    if (p.da.regular) p.deck = homology::deck_matrices(p.H, p.da);
    for (const Mat& D : p.deck) {
      if (!symplectic(p.H.omega, D)) {
        detail = "non-symplectic deck matrix at sample " + std::to_string(i);
        return false;
      }
      ++deck_checked;
    }
    auto fam = mcg::enumerate_curves(s.base, {kTwistCurvesPer, 2000});
    for (const auto& e : fam.entries) {
      auto tw = mcg::multitwist(p.cv, p.H, e.word);
      if (!symplectic(p.H.omega, tw.matrix)) {
        detail = "non-symplectic multitwist at sample " + std::to_string(i);
        return false;
      }
      if (!unipotent2(tw.matrix)) {
        detail = "(T - I)^2 != 0 at sample " + std::to_string(i);
        return false;
      }
      for (const Mat& D : p.deck) {
        if (D * tw.matrix != tw.matrix * D) {
          detail = "multitwist does not commute with deck at sample " +
                   std::to_string(i);
          return false;
        }
        ++commute_checked;
      }
      ++twist_checked;
      p.twists.push_back(std::move(tw));
    }
    g_packs.push_back(std::move(p));
  }
  // floors make sure the pinned seed actually exercises the suite
  if (g_packs.size() < 30 || deck_checked < 60 || twist_checked < 200) {
    detail = "sample too thin: " + std::to_string(g_packs.size()) +
             " covers, " + std::to_string(deck_checked) + " deck, " +
             std::to_string(twist_checked) + " twists";
    return false;
  }
  detail = std::to_string(g_packs.size()) + " covers (dim <= " +
           std::to_string(kMatrixDimCap) + "): " +
           std::to_string(deck_checked) + " deck and " +
           std::to_string(twist_checked) +
           " twist matrices symplectic, twists unipotent, " +
           std::to_string(commute_checked) + " commutators zero, exact";
  return true;
}

bool crit3_character(std::string& detail) {
  int covers = 0, elements = 0;
  for (const MatrixPack& p : g_packs) {
    const Sample& s = g_samples[p.sample];
    if (!s.closed || !p.da.regular) continue;
    // canonical rotation keys for the faces of the derived graph
    auto face_key = [](std::vector<int> cyc) {
      auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      return cyc;
    };
    std::set<std::vector<int>> faces;
    for (const auto& f : p.cv.faces) faces.insert(face_key(f.cycle));
    long expected_dim = 2 + (long)s.spec.degree * (2 * s.base.genus - 2);
    if (p.H.dim != expected_dim) {
      detail = "cover rank differs from 2 + |G|(2g-2)";
      return false;
    }
    for (size_t gi = 0; gi < p.deck.size(); ++gi) {
      // independent trace: fixed cells under the deck action
      long f0 = 0, f1 = 0, f2 = 0;
      for (int v = 0; v < s.spec.degree; ++v) f0 += p.da.sheets[gi](v) == v;
      for (int e = 0; e < p.cv.graph.ne; ++e) f1 += p.da.edges[gi](e) == e;
      for (const auto& f : p.cv.faces) {
        std::vector<int> mapped;
        for (int h : f.cycle)
          mapped.push_back(2 * p.da.edges[gi](h / 2) + (h & 1));
        if (face_key(mapped) == face_key(f.cycle)) ++f2;
      }
      Rat cells_trace = Rat(2 - (f0 - f1 + f2));
      if (trace(p.deck[gi]) != cells_trace) {
        detail = "matrix trace disagrees with the fixed-cell count";
        return false;
      }
      if (gi != 0 && cells_trace != Rat(2)) {
        detail = "nontrivial deck element with trace != 2";
        return false;
      }
      if (gi == 0 && cells_trace != Rat(expected_dim)) {
        detail = "identity trace differs from 2 + |G|(2g-2)";
        return false;
      }
      ++elements;
    }
    ++covers;
  }
  if (covers < 8 || elements < 60) {
    detail = "sample too thin: " + std::to_string(covers) + " covers, " +
             std::to_string(elements) + " elements";
    return false;
  }
  detail = std::to_string(covers) + " unramified closed-base covers, " +
           std::to_string(elements) +
           " deck elements: homology trace == 2 - (fixed cells), nontrivial "
           "traces all 2, exact";
  return true;
}

bool crit4_simple_loop(std::string& detail) {
  const char* names[] = {"z2", "z3", "z4", "z5",   "z6", "z7",
                         "z8", "z2xz2", "s3", "d4", "q8"};
  int stabilized = 0, attempted = 0;
  for (const char* gname : names) {
    auto c = closed_cover_config(gname, 3, 0);
    auto base = cfg::base_model(c);
    auto spec = cfg::cover_spec(c, base.gen_names);
    auto cv = cover::derive(base, spec);
    auto H = homology::cap(cv, homology::h1_open(cv), true);
    auto da = cover::deck_action(cv);
    auto deck = homology::deck_matrices(H, da);
    auto fam = mcg::enumerate_curves(base, {budget_for(gname), 4096});
    std::vector<mcg::MultiTwist> twists;
    for (const auto& e : fam.entries)
      twists.push_back(mcg::multitwist(cv, H, e.word));
    auto sr = mcg::simple_loop_subspace(cv, H, fam, kStabWindow);
    ++attempted;
    if (!sr.stabilized) continue;
    ++stabilized;
    // (a) omega restricted to H1s is nondegenerate
    Mat gram = sr.space.basis * H.omega * sr.space.basis.transpose();
    if (la::rank(gram) != sr.space.dim()) {
      detail = std::string("omega degenerate on H1s for ") + gname;
      return false;
    }
    // (b) every multitwist fixes the complement pointwise
    auto perp = sr.space.orthogonal_complement(H.omega);
    for (const auto& tw : twists)
      for (int r = 0; r < perp.basis.nr; ++r)
        if (tw.matrix.apply(perp.basis.row[r]) != perp.basis.row[r]) {
          detail = std::string("twist moves a perp vector for ") + gname;
          return false;
        }
    // (c) H1s is deck-invariant
    for (const Mat& D : deck)
      for (int r = 0; r < sr.space.basis.nr; ++r)
        if (!sr.space.contains(D.apply(sr.space.basis.row[r]))) {
          detail = std::string("H1s not deck-invariant for ") + gname;
          return false;
        }
    // (d) common fixed space of the twists == the complement
    if (!(mcg::dehn_fixed_space(twists, H.dim) == perp)) {
      detail = std::string("dehn-fixed space differs from perp for ") + gname;
      return false;
    }
  }
  if (stabilized < 8) {
    detail = "only " + std::to_string(stabilized) + "/" +
             std::to_string(attempted) + " runs stabilized";
    return false;
  }
  pipeline::Options o;
  o.no_cache = true;
  // violation path, live: the q8 cover with only 200 curves stabilizes
  // prematurely on a 30-dim span with degenerate omega. The enforced
  // nondegeneracy invariant must fail, alarm, and exit 3.
  {
    auto c = closed_cover_config("q8", 3, 0);
    c.budget_curves = kCurveBudget;
    auto out = pipeline::analyze(c, o);
    auto rep = json::parse(out.json_bytes);
    bool alarmed = false;
    for (const auto& a : rep["alarms"])
      if (a.get<std::string>().find("h1s_omega_nondegenerate") !=
          std::string::npos)
        alarmed = true;
    if (out.exit_code != 3 || !alarmed) {
      detail = "premature q8 span did not trip the nondegeneracy alarm";
      return false;
    }
  }
  // clean path: exit 0, no alarms, and the serialized full report survives
  // independent revalidation
  {
    auto c = closed_cover_config("z3", 3, 0);
    c.full = true;
    auto out = pipeline::analyze(c, o);
    auto rep = json::parse(out.json_bytes);
    if (out.exit_code != 0 || !rep["alarms"].empty()) {
      detail = "clean run did not exit 0 without alarms";
      return false;
    }
    auto agree = pipeline::revalidate_full(rep);
    if (agree.empty()) {
      detail = "full report carried no revalidatable matrices";
      return false;
    }
    for (auto it = agree.begin(); it != agree.end(); ++it)
      if (it.value() != true) {
        detail = "report self-validation disagrees on " + it.key();
        return false;
      }
  }
  detail = std::to_string(stabilized) + "/" + std::to_string(attempted) +
           " genus-3-base covers stabilized; nondegeneracy, perp fixing, "
           "deck invariance, dehn-fixed == perp all exact; premature q8 "
           "span exits 3 with the nondegeneracy alarm";
  return true;
}

bool crit5_isotypic(std::string& detail) {
  const char* names[] = {"z2", "z3", "z4",    "z5", "z6", "z7",
                         "z8", "z9", "z2xz2", "s3", "d4", "q8", "a4"};
  pipeline::Options o;
  o.no_cache = true;
  int covers_ok = 0;
  for (const char* gname : names) {
    for (int pattern : {0, 1}) {
      auto c = closed_cover_config(gname, 3, pattern);
      auto rep = pipeline::analyze_report(c);
      if (!rep["alarms"].empty()) {
        detail = std::string("alarm on cover ") + gname;
        return false;
      }
      if (rep["h1s"]["stabilized"] != true) continue;
      if (rep["isotypic"]["skipped"] == true) continue;
      for (const auto& e : rep["isotypic"]["sum_h1s"])
        if (e["status"] == "partial") {
          detail = std::string("partial isotypic status on ") + gname;
          return false;
        }
      ++covers_ok;
    }
  }
  g_tower_reports.clear();
  int towers_ok = 0;
  for (auto& tc : unramified_towers_g4()) {
    auto rep = pipeline::analyze_report(tc);
    if (!rep["alarms"].empty()) {
      detail = "alarm on genus-4 tower";
      return false;
    }
    if (rep["surface"]["branch_in_quotient"].size() != 0) {
      detail = "tower unexpectedly branched";
      return false;
    }
    g_tower_reports.push_back(rep);
    if (rep["h1si"]["stabilized"] != true ||
        rep["isotypic"]["skipped"] == true)
      continue;
    for (const auto& e : rep["isotypic"]["sum_h1si"])
      if (e["status"] == "partial") {
        detail = "partial isotypic status on a genus-4 tower";
        return false;
      }
    ++towers_ok;
  }
  if (covers_ok < 20) {
    detail = "only " + std::to_string(covers_ok) + " stabilized covers";
    return false;
  }
  if (towers_ok < 2) {
    detail = "only " + std::to_string(towers_ok) + " stabilized towers";
    return false;
  }
  detail = std::to_string(covers_ok) +
           " stabilized genus-3-base covers and " + std::to_string(towers_ok) +
           " unramified genus-4 towers: no partial isotypic status";
  return true;
}

bool crit6_dimensions(std::string& detail) {
  for (int n = 5; n <= 14; ++n) {
    auto c = cx::chord_complex(n);
    if (c.curve_dim != n / 2 - 1 || c.matching_dim != n / 2 - 1) {
      detail = "wrong dimension at n = " + std::to_string(n);
      return false;
    }
    if (n <= 10 && !cx::connectivity_report(c).connected) {
      detail = "disconnected at n = " + std::to_string(n);
      return false;
    }
  }
  // genus side: a maximal family has g+1 disjoint curves but rank g (one
  // relation), so families with connected complement have at most g curves:
  // dimension g - 1 for the nonseparating flavor
  for (int g = 2; g <= 6; ++g) {
    auto hc = cx::hyperelliptic_dimension_check(g);
    if (!hc.ok || hc.max_disjoint != g + 1 || hc.min_rank != g ||
        hc.max_rank != g || hc.zero_class_chords != 0) {
      detail = "rank bookkeeping failed at genus " + std::to_string(g);
      return false;
    }
  }
  detail = "chord dims n/2-1 for n=5..14, connected for n=5..10; maximal "
           "genus-side families rank g (dimension g-1 nonseparating), g=2..6";
  return true;
}

bool crit7_farey(std::string& detail) {
  int done = 0;
  for (int g = 2; g <= 4; ++g) {
    auto flip = *Perm::parse_cycles("(1 2)", 2);
    auto t = cover::tower_from(
        g, 0, CoverSpec{2, std::vector<Perm>(2 * g + 1, flip)});
    auto dblcv = cover::derive(t.sphere, t.dbl);
    auto H = homology::cap(dblcv, homology::h1_open(dblcv), true);
    int n = 2 * g + 2;
    int quota = kFareyPairs / 3 + (g == 2 ? kFareyPairs % 3 : 0);
    for (int it = 0; it < quota; ++it) {
      cx::Chord a{0, 0}, b{0, 0};
      while (a == b) {
        a = {rnd(n), rnd(n)};
        while (a.first == a.second) a = {rnd(n), rnd(n)};
        if (a.first > a.second) std::swap(a.first, a.second);
        b = {rnd(n), rnd(n)};
        while (b.first == b.second) b = {rnd(n), rnd(n)};
        if (b.first > b.second) std::swap(b.first, b.second);
      }
      auto chain = cx::farey_chain(a, b, n);
      auto ck = cx::verify_chain_upstairs(t, chain);
      if (!ck.ok) {
        detail = "consecutive pairing not unimodular at genus " +
                 std::to_string(g);
        return false;
      }
      // ends of a bridged chain: check disjoint chords pair to zero
      bool share = a.first == b.first || a.first == b.second ||
                   a.second == b.first || a.second == b.second;
      bool interleaved = (a.first < b.first && b.first < a.second &&
                          a.second < b.second) ||
                         (b.first < a.first && a.first < b.second &&
                          b.second < a.second);
      if (!share && !interleaved) {
        if (mcg::pair(H, ck.classes.front(), ck.classes.back()) != Rat(0)) {
          detail = "disjoint chords pair nonzero at genus " +
                   std::to_string(g);
          return false;
        }
      }
      ++done;
    }
  }
  detail = std::to_string(done) +
           " random chord pairs at g=2..4: chains verified, consecutive "
           "pairings +-1, disjoint end pairings 0, exact";
  return true;
}

bool crit8_specialcase(std::string& detail) {
  // add the small towers to the genus-4 reports from criterion 5
  std::vector<json> reports = g_tower_reports;
  for (int g : {2, 3}) {
    auto tc = tower_config(
        g, std::vector<std::string>(2 * g + 1, "(1 2)"), 2);
    reports.push_back(pipeline::analyze_report(tc));
  }
  int positive = 0, checked = 0;
  for (const auto& rep : reports) {
    if (rep["witnesses"].empty() || rep["h1si"]["stabilized"] != true)
      continue;
    ++positive;
    if (rep["h1si"]["dim"] != rep["ranks"]["capped"]) {
      detail = "detector-positive run with H1^{s,iota} != H1";
      return false;
    }
    ++checked;
  }
  if (positive == 0) {
    detail = "no detector-positive tower runs to check";
    return false;
  }
  detail = std::to_string(checked) + "/" + std::to_string(reports.size()) +
           " tower runs detector-positive and stabilized; all report "
           "H1^{s,iota} == H1";
  return true;
}

bool crit9_search(std::string& detail) {
  fs::path dir = fs::temp_directory_path() / "symloop-acceptance-search";
  fs::remove_all(dir);
  fs::create_directories(dir);
  cfg::JobConfig c;
  c.kind = "search";
  c.base_genus = 2;
  c.groups = {"z2", "z3"};
  c.budget_curves = 120;
  pipeline::Options o;
  o.cache_dir = dir.string();
  o.jobs = 4;
  auto out = pipeline::search(c, o);
  auto rep = json::parse(out.json_bytes);
  long expected_epis[2] = {15, 80};  // 2^4-1 and 3^4-1 surjections
  long gaps = 0;
  std::string per_class;
  for (size_t gi = 0; gi < rep["groups"].size(); ++gi) {
    const auto& grp = rep["groups"][gi];
    if (grp["epimorphisms"] != expected_epis[gi]) {
      detail = "wrong epimorphism count for " +
               grp["group"].get<std::string>();
      return false;
    }
    if (grp["truncated"] == true) {
      detail = "search truncated unexpectedly";
      return false;
    }
    for (const auto& d : grp["detail"]) {
      if (!d.contains("dim_h1s") || !d.contains("stabilized")) {
        detail = "per-class report incomplete";
        return false;
      }
      per_class += grp["group"].get<std::string>() + ":" +
                   std::to_string(d["dim_h1s"].get<long>()) + "/" +
                   std::to_string(d["dim_h1"].get<long>()) + " ";
    }
    gaps += grp["gaps"].get<long>();
  }
  bool pass;
  if (gaps == 0) {
    pass = out.exit_code == 0 && rep["alarms"].empty();
    detail = "all Z/2 and Z/3 covers of the closed genus-2 surface: " +
             per_class + "no gap (expected at these degrees)";
    if (!pass) detail = "gap-free search did not exit cleanly";
  } else {
    bool archived = fs::exists(dir / "reproducers") &&
                    !fs::is_empty(dir / "reproducers");
    pass = out.exit_code == 3 && !rep["alarms"].empty() && archived;
    detail = pass ? "gap found: alarm raised and reproducer archived (" +
                        per_class + ")"
                  : "gap found but the alarm/reproducer path misfired";
  }
  fs::remove_all(dir);
  return pass;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "euler multiplicativity + capped genus (Riemann-Hurwitz oracle)",
       kBudget1, crit1_euler},
      {2, "symplectic/unipotent/equivariance of deck and twist matrices",
       kBudget2, crit2_symplectic},
      {3, "deck character == 2 via fixed-cell oracle on closed covers", 0,
       crit3_character},
      {4, "simple-loop subspace invariants on stabilized runs", 0,
       crit4_simple_loop},
      {5, "no partial isotypic status (genus-3 bases, genus-4 towers)",
       kBudget5, crit5_isotypic},
      {6, "curve-complex dimensions and connectivity", kBudget6,
       crit6_dimensions},
      {7, "farey chains verify upstairs", 0, crit7_farey},
      {8, "detector-positive towers have full symmetric simple-loop homology",
       0, crit8_specialcase},
      {9, "epimorphism search harness (Z/2, Z/3 over genus 2)", kBudget9,
       crit9_search},
  };

  int failures = 0;
  for (auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = cr.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && cr.ceiling > 0 && secs > cr.ceiling) {
      ok = false;
      detail += " [over the runtime ceiling]";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << cr.id << ". " << cr.label << ": "
         << detail << " (" << std::fixed;
    line.precision(1);
    line << secs << "s";
    if (cr.ceiling > 0) line << " <= " << cr.ceiling << "s";
    line << ")";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
