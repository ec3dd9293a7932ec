#include "symloop/mcg.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "symloop/base.hpp"

namespace symloop::mcg {

Rat pair(const HomologySpace& H, const Vec& x, const Vec& y) {
  return la::dot(x, H.omega.apply(y));
}

namespace {

void add_transvection(Mat& m, const HomologySpace& H, const Vec& c) {
  Vec oc = H.omega.apply(c);  // T(x) = x + <x,c> c, <x,c> = x . (Omega c)
  for (int i = 0; i < m.nr; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < m.nc; ++j)
      if (oc[j] != 0) m.at(i, j) += c[i] * oc[j];
  }
}

}  // namespace

Mat transvection_product(const HomologySpace& H, const std::vector<Vec>& cs) {
  Mat m = Mat::identity(H.dim);
  for (const Vec& c : cs) add_transvection(m, H, c);
  return m;
}

MultiTwist multitwist(const Cover& cv, const HomologySpace& H,
                      const Word& curve) {
  MultiTwist t;
  t.base_curve = curve;
  t.components = cover::fiber_components(cv.spec, curve);
  for (const auto& comp : t.components)
    t.component_classes.push_back(
        H.project(homology::lift_class_open(cv, H.open, curve, comp[0])));
  t.matrix = transvection_product(H, t.component_classes);

  Mat n = t.matrix - Mat::identity(H.dim);
  require((n * n).is_zero(),
          "multitwist is not unipotent of class 2: components not disjoint");
  require(t.matrix.transpose() * H.omega * t.matrix == H.omega,
          "multitwist does not preserve the intersection form");
  return t;
}

CurveFamily enumerate_curves(const Model& m, const EnumBudget& b) {
  CurveFamily fam;
  auto classes = surface::standard_classes(m);
  std::set<Word> seen;
  // Returns false once the count budget is hit.
  auto push = [&](Word w, std::string prov) {
    if ((int)fam.entries.size() >= b.max_curves) {
      fam.truncated = true;
      return false;
    }
    Word canon = words::canonical_loop(w);
    if (canon.empty() || !seen.insert(canon).second) return true;
    CurveEntry e;
    e.word = words::cyclically_reduced(std::move(w));
    e.canonical = std::move(canon);
    e.provenance = std::move(prov);
    fam.entries.push_back(std::move(e));
    return true;
  };
  for (const auto& nc : surface::standard_curves(m))
    if (!push(nc.loop, nc.name)) return fam;
  for (size_t qi = 0; qi < fam.entries.size(); ++qi)
    for (const auto& cls : classes)
      for (int dir : {1, -1}) {
        const words::Endo& e = dir > 0 ? cls.fwd : cls.bwd;
        Word img;
        try {
          img = e.apply(fam.entries[qi].word, b.max_word_len);
        } catch (const BudgetError&) {
          fam.truncated = true;
          continue;
        }
        std::string prov = cls.name + (dir > 0 ? "" : "^-1") + "*" +
                           fam.entries[qi].provenance;
        if (!push(std::move(img), std::move(prov))) return fam;
      }
  return fam;
}

SymInfo classify_symmetric(const Tower& t, const Cover& dblcv,
                           const HomologySpace& dblH, const Word& beta) {
  SymInfo info;
  const int ne = t.sphere.graph.ne;
  auto ev = words::exponent_vector(beta, ne);
  int enclosed_w = 0;
  long sgn = 0;
  for (int e = 0; e < ne; ++e) {
    if (ev[e] == 0) continue;
    if (ev[e] != 1 && ev[e] != -1) return info;  // not a region boundary
    if (sgn == 0) sgn = ev[e];
    if (ev[e] != sgn) return info;
    if (t.eps_gen(e)) ++enclosed_w;
  }
  int tw = std::min(enclosed_w, t.weierstrass() - enclosed_w);
  info.enclosed_weierstrass = tw;

  if (enclosed_w % 2 == 1) {
    // Connected double-cover lift; essential iff it encloses >= 3 on both
    // sides (one enclosed Weierstrass point bounds a disk upstairs).
    if (tw >= 3) {
      info.kind = SymKind::ConnectedLift;
      info.dbl_classes.push_back(dblH.project(
          homology::lift_class_open(dblcv, dblH.open, beta, 0)));
    }
    return info;
  }

  auto comps = cover::fiber_components(t.dbl, beta);
  require(comps.size() == 2, "even word must have a two-component lift");
  for (const auto& comp : comps)
    info.dbl_classes.push_back(dblH.project(
        homology::lift_class_open(dblcv, dblH.open, beta, comp[0])));
  const Vec& c0 = info.dbl_classes[0];
  const Vec& c1 = info.dbl_classes[1];
  if (la::is_zero_vec(c0)) {
    require(la::is_zero_vec(c1), "lift classes must vanish together");
    return info;  // both components separate upstairs
  }
  Vec minus = c1;
  for (Rat& x : minus) x = -x;
  require(c0 == c1 || c0 == minus,
          "parallel lift components must be homologous up to sign");
  info.kind = tw == 2 ? SymKind::Chord : SymKind::TwoComponent;
  return info;
}

void fill_symmetric_kinds(CurveFamily& fam, const Tower& t, const Cover& dblcv,
                          const HomologySpace& dblH) {
  for (auto& e : fam.entries) {
    SymInfo info = classify_symmetric(t, dblcv, dblH, e.word);
    e.sym = info.kind;
    e.nonseparating =
        info.kind == SymKind::Chord || info.kind == SymKind::TwoComponent;
  }
}

void fill_nonseparating(CurveFamily& fam, const Model& m) {
  cover::CoverSpec triv{1, std::vector<perm::Perm>(m.graph.ne,
                                                   perm::Perm::identity(1))};
  Cover cv = cover::derive(m, triv);
  auto h = homology::h1_open(cv);
  HomologySpace H = homology::cap(cv, h, true);
  for (auto& e : fam.entries)
    e.nonseparating =
        !la::is_zero_vec(H.project(homology::chain_class(h, e.word)));
}

namespace {

SpanResult fold_family(const Cover& cv, const HomologySpace& H,
                       const CurveFamily& fam, int window, bool sym_only) {
  SpanResult r;
  r.space = la::Subspace(H.dim);
  for (int i = 0; i < (int)fam.entries.size(); ++i) {
    const CurveEntry& e = fam.entries[i];
    if (sym_only) {
      require(e.sym != SymKind::Unknown, "symmetric kinds are not filled");
      if (e.sym != SymKind::Chord && e.sym != SymKind::ConnectedLift &&
          e.sym != SymKind::TwoComponent)
        continue;
    }
    bool grew = false;
    for (const auto& comp : cover::fiber_components(cv.spec, e.word))
      if (r.space.add(H.project(
              homology::lift_class_open(cv, H.open, e.word, comp[0]))))
        grew = true;
    if (grew) r.last_growth = r.used;
    ++r.used;
  }
  r.stabilized = r.space.dim() == H.dim ||
                 (r.used - 1 - r.last_growth >= window && r.used > 0);
  return r;
}

}  // namespace

SpanResult simple_loop_subspace(const Cover& cv, const HomologySpace& H,
                                const CurveFamily& fam, int window) {
  return fold_family(cv, H, fam, window, false);
}

SpanResult hyperelliptic_sls(const Cover& cv, const HomologySpace& H,
                             const CurveFamily& fam, int window) {
  return fold_family(cv, H, fam, window, true);
}

la::Subspace dehn_fixed_space(const std::vector<MultiTwist>& twists, int dim) {
  require(!twists.empty(), "fixed space of an empty twist list");
  Mat stacked(0, dim);
  for (const MultiTwist& t : twists) {
    Mat n = t.matrix - Mat::identity(dim);
    stacked = la::vstack(stacked, n);
  }
  Mat k = la::kernel(stacked);
  std::vector<Vec> rows(k.row.begin(), k.row.end());
  return la::Subspace::span(dim, rows);
}

OrbitResult orbit_probe(const Vec& v, const std::vector<Mat>& gens,
                        size_t cap) {
  std::vector<Mat> ops;
  for (const Mat& g : gens) {
    auto inv = la::inverse(g);
    require(inv.has_value(), "orbit generator is not invertible");
    ops.push_back(g);
    ops.push_back(std::move(*inv));
  }
  std::set<Vec> seen{v};
  std::vector<Vec> queue{v};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Mat& op : ops) {
      Vec w = op.apply(queue[qi]);
      if (seen.insert(w).second) {
        if (seen.size() > cap) return {false, {}};
        queue.push_back(std::move(w));
      }
    }
  return {true, std::vector<Vec>(seen.begin(), seen.end())};
}

std::vector<Witness> specialcase_detector(const Tower& t, const Cover& full,
                                          const HomologySpace& fullH,
                                          const CurveFamily& fam) {
  std::vector<Witness> out;
  for (int i = 0; i < (int)fam.entries.size(); ++i) {
    const CurveEntry& e = fam.entries[i];
    if (e.sym != SymKind::Chord && e.sym != SymKind::ConnectedLift) continue;
    Witness w;
    w.entry = i;
    w.kind = e.sym;
    // gamma covers the sphere word once (chord: gamma is isotopic to either
    // parallel copy) or twice (connected lift).
    size_t gamma_deg = e.sym == SymKind::Chord ? 1 : 2;
    auto comps = cover::transport(full.spec, e.word).cycles(true);
    w.trivial_coverage = true;
    for (const auto& c : comps)
      if (c.size() != gamma_deg) w.trivial_coverage = false;
    // Cut along the full preimage of gamma: for a chord that is the set of
    // components over one parallel copy, picked out by sheet parity.
    la::Subspace span(fullH.dim);
    for (const auto& c : comps) {
      if (e.sym == SymKind::Chord && t.sheet_parity[c[0]] != 0) continue;
      ++w.cut_count;
      span.add(fullH.project(
          homology::lift_class_open(full, fullH.open, e.word, c[0])));
    }
    w.cut_rank = span.dim();
    w.connected_complement = w.cut_rank == w.cut_count;
    w.witness = w.trivial_coverage && w.connected_complement;
    out.push_back(w);
  }
  return out;
}

}  // namespace symloop::mcg
