#pragma once
// Homological mapping-class machinery on a cover: multitwist transvections,
// curve-family enumeration, symmetric-curve classification over a tower,
// simple-loop subspaces, Dehn fixed spaces, orbit probing, and the detector
// for curves with trivial covering and connected complement.

#include <optional>
#include <string>
#include <vector>

#include "symloop/covering.hpp"
#include "symloop/homology.hpp"
#include "symloop/linalg.hpp"
#include "symloop/surface.hpp"
#include "symloop/words.hpp"

namespace symloop::mcg {

using cover::Cover;
using cover::Tower;
using homology::HomologySpace;
using la::Mat;
using la::Rat;
using la::Vec;
using surface::Model;
using words::Word;

// <x, y> with respect to the capped intersection form.
Rat pair(const HomologySpace& H, const Vec& x, const Vec& y);

// Product of the transvections by the classes of all components of the
// preimage of `curve`: x -> x + sum_i <x, c_i> c_i. The caller certifies
// that the curve is simple (take it from a CurveFamily).
struct MultiTwist {
  Word base_curve;
  std::vector<std::vector<int>> components;  // sheet cycles
  std::vector<Vec> component_classes;        // capped classes, one per cycle
  Mat matrix;
};
MultiTwist multitwist(const Cover& cv, const HomologySpace& H,
                      const Word& curve);
// Transvection product over a subset of components (for splitting a
// bounding-pair preimage by side).
Mat transvection_product(const HomologySpace& H, const std::vector<Vec>& cs);

// ---- Curve enumeration ------------------------------------------------------
enum class SymKind {
  Unknown,        // not classified (no tower context)
  NotApplicable,  // inessential or separating upstairs
  Chord,          // two parallel copies of one symmetric curve
  ConnectedLift,  // connected symmetric lift (odd parity)
  TwoComponent,   // candidate symmetric bounding pair
};

struct CurveEntry {
  Word word;
  Word canonical;          // dedup key (free homotopy, unoriented)
  std::string provenance;  // twist sequence applied to a seed
  bool nonseparating = false;
  SymKind sym = SymKind::Unknown;
};
struct CurveFamily {
  std::vector<CurveEntry> entries;
  bool truncated = false;  // a budget cap was hit
};
struct EnumBudget {
  int max_curves = 200;
  size_t max_word_len = 10000;
};

// BFS closure of the standard seed curves under the standard twist
// automorphisms (forward and inverse), deduplicated by canonical form.
CurveFamily enumerate_curves(const Model& m, const EnumBudget& b);

// ---- Symmetric classification over a tower ---------------------------------
// dblcv/dblH: the derived parity double cover, capped with fill_all.
struct SymInfo {
  SymKind kind = SymKind::NotApplicable;
  int enclosed_weierstrass = 0;    // on the smaller side
  std::vector<Vec> dbl_classes;    // capped classes of the double-cover lifts
};
SymInfo classify_symmetric(const Tower& t, const Cover& dblcv,
                           const HomologySpace& dblH, const Word& beta);

// Fill sym (and nonseparating = lift essential) for a sphere family.
void fill_symmetric_kinds(CurveFamily& fam, const Tower& t, const Cover& dblcv,
                          const HomologySpace& dblH);
// Fill nonseparating for a family on a genus >= 1 base: class nonzero in the
// capped base surface.
void fill_nonseparating(CurveFamily& fam, const Model& m);

// ---- Simple-loop subspaces --------------------------------------------------
struct SpanResult {
  la::Subspace space;
  bool stabilized = false;
  int last_growth = -1;  // index of the last entry that enlarged the span
  int used = 0;          // entries folded in
};

// Span of the classes of all lift components of every family curve.
// stabilized: the final `window` used entries added no dimension (or the
// span is already everything).
SpanResult simple_loop_subspace(const Cover& cv, const HomologySpace& H,
                                const CurveFamily& fam, int window);
// Same span restricted to entries classified Chord / ConnectedLift /
// TwoComponent. Kinds must be filled.
SpanResult hyperelliptic_sls(const Cover& cv, const HomologySpace& H,
                             const CurveFamily& fam, int window);

// Intersection of the fixed spaces Ker(T - I).
la::Subspace dehn_fixed_space(const std::vector<MultiTwist>& twists, int dim);

// BFS closure of v under the matrices and their inverses; finite = false
// means the orbit exceeded the cap, never "provably infinite".
struct OrbitResult {
  bool finite = false;
  std::vector<Vec> orbit;
};
OrbitResult orbit_probe(const Vec& v, const std::vector<Mat>& gens,
                        size_t cap);

// ---- Trivial-coverage witness detector --------------------------------------
// A witness is a symmetric curve gamma downstairs (Chord or ConnectedLift
// entry) such that the cover -> quotient covering is trivial over gamma and
// the full preimage of gamma has connected complement. Connectivity is
// certified by rank bookkeeping: cutting a closed surface along k disjoint
// curves leaves 1 + k - rank(classes) pieces.
struct Witness {
  int entry = -1;
  SymKind kind = SymKind::Unknown;
  bool trivial_coverage = false;
  int cut_count = 0;
  int cut_rank = 0;
  bool connected_complement = false;
  bool witness = false;
};
std::vector<Witness> specialcase_detector(const Tower& t, const Cover& full,
                                          const HomologySpace& fullH,
                                          const CurveFamily& fam);

}  // namespace symloop::mcg
