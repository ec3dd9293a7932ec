#pragma once
// Finite covers of the one-vertex models by permutation voltages: one sheet
// permutation per base edge. The derived fatgraph carries everything
// downstream (homology, deck action, lifts); Reidemeister-Schreier style
// generators fall out later as spanning-tree chords.
//
// Indexing of the derived objects, fixed here and relied on everywhere:
//   * vertices = sheets 0..d-1;
//   * edge copy (e,s) has index e*d+s, runs from sheet s to sheet rho_e(s);
//   * the copy of base half h seen at sheet t is half_at(h,t), and the
//     rotation at t replays the base rotation: rot[half_at(h,t)] =
//     half_at(rot[h],t).

#include <string>
#include <vector>

#include "symloop/perm.hpp"
#include "symloop/surface.hpp"
#include "symloop/words.hpp"

namespace symloop::cover {

using perm::Group;
using perm::Perm;
using surface::FatGraph;
using surface::Model;
using words::Word;

struct CoverSpec {
  int degree = 1;
  std::vector<Perm> rho;  // base edge -> sheet permutation
};

// Monodromy of a based loop; letters act in word order, so transport(w)(s)
// is the end sheet of the lift of w starting on sheet s.
Perm transport(const CoverSpec& c, const Word& w);

// Monodromy around puncture j (transport of the puncture loop).
Perm holonomy(const Model& m, const CoverSpec& c, int j);

// Arity checks, connectedness, and the relator condition when the base is
// closed. Throws InvariantError naming the violated condition.
void validate_cover(const Model& m, const CoverSpec& c);

// Connected components of the preimage of the loop w = cycles of
// transport(w) on sheets. The component through sheet s covers w with
// degree = its cycle length.
std::vector<std::vector<int>> fiber_components(const CoverSpec& c,
                                               const Word& w);

struct Cover {
  Model base;
  CoverSpec spec;
  std::vector<Perm> rho_inv;  // inverse voltages, precomputed
  FatGraph graph;             // the derived surface

  // A face of the derived graph covers a base face with some multiplicity.
  // puncture >= 0 marks faces over a base puncture; such a face is a genuine
  // boundary unless the holonomy there is nontrivial (branch), in which case
  // capping fills it and the puncture becomes a branch point of the cover.
  struct Face {
    std::vector<int> cycle;
    int base_face = 0;
    int multiplicity = 1;
    int puncture = -1;  // -1: face over a disk of the base, always filled
    bool branch = false;
  };
  std::vector<Face> faces;

  int degree() const { return spec.degree; }
  int edge_of(int e, int s) const { return e * spec.degree + s; }
  int base_edge(int de) const { return de / spec.degree; }
  int sheet_of_edge(int de) const { return de % spec.degree; }
  int base_half(int dh) const { return 2 * base_edge(dh / 2) + (dh & 1); }
  int sheet_of_half(int dh) const { return graph.vert[dh]; }
  // Copy of base half h at the vertex of sheet t.
  int half_at(int h, int t) const;
};

Cover derive(const Model& m, const CoverSpec& c);

// Lift of a based path: letters over derived edges. Endpoint sheet equals
// transport(w)(start); the projection of the lift is w.
struct LiftedPath {
  Word letters;
  int end_sheet = 0;
};
LiftedPath lift_path(const Cover& cv, const Word& w, int start);

// Regular-cover deck transformations. Sheets are identified with the
// monodromy group via s <-> u_s, the unique element with u_s(0) = s; the
// deck permutation of element g sends s to u_s(g^{-1}(0)). The assignment
// g -> sheets[g] is then a homomorphism, acts freely, and commutes with
// every transport.
struct DeckAction {
  bool regular = false;
  Group group;                   // monodromy image on sheets
  std::vector<int> elt_of_sheet; // s -> index of u_s in group.elements
  std::vector<Perm> sheets;      // element -> deck permutation of sheets
  std::vector<Perm> edges;       // element -> induced permutation of edges
};
// regular=false (with the rest empty) when the cover is not regular.
DeckAction deck_action(const Cover& cv);

// Voltages of the regular cover attached to a group with chosen generator
// elements (left multiplication on elements; sheet 0 = identity).
CoverSpec regular_cover(const Group& g, const std::vector<int>& gen_elts);

// ---- Hyperelliptic towers ---------------------------------------------------
// A cover of the closed genus-g surface compatible with the hyperelliptic
// involution, presented over the sphere: punctures 0..2g+1 are the
// Weierstrass points, the rest are carried-along marked points. epsilon is
// the parity character (Weierstrass generators odd); its double cover caps
// to the closed genus-g surface and the full cover factors through it.
struct Tower {
  int genus = 0;
  int extra = 0;
  Model sphere;    // S_{0, 2g+2+extra}
  CoverSpec full;  // the composite cover over the sphere
  CoverSpec dbl;   // the epsilon double cover (hyperelliptic quotient)
  Group ghat;                     // monodromy group of `full`
  std::vector<int> parity;        // ghat element -> epsilon parity
  std::vector<int> sheet_parity;  // sheet -> side of the double cover
  bool regular = false;           // deck-dependent features need this
  std::vector<int> branch;        // punctures ramified in cover -> quotient

  int npunct() const { return 2 * genus + 2 + extra; }
  int weierstrass() const { return 2 * genus + 2; }
  bool is_weierstrass(int j) const { return j < 2 * genus + 2; }
  // Parity of sphere generator edge e (edge e is the loop of puncture e).
  int eps_gen(int e) const { return e < 2 * genus + 2 ? 1 : 0; }
};

// Throws InvariantError if epsilon does not factor through the cover (in
// particular if some Weierstrass voltage fixes a sheet it must move), and
// BudgetError if the monodromy group exceeds order_cap.
Tower tower_from(int genus, int extra, const CoverSpec& full,
                 int order_cap = 100000);

}  // namespace symloop::cover
