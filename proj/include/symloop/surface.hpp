#pragma once
// Combinatorial surfaces as one-vertex fatgraphs, plus an exact engine for
// Dehn twists about curves drawn as chord diagrams in the outer polygon.
//
// Conventions (fixed throughout, relied on by every downstream module):
//   * edge e has tail half-edge 2e and head half-edge 2e+1;
//   * rot is the counterclockwise successor around a vertex;
//   * a face traversal crossing half h reads letter +e at the tail half,
//     -e at the head half;
//   * generator order a1 b1 ... ag bg x1 ... x_{n-1}; the loop around the
//     last puncture is ([a1,b1]...[ag,bg] x1...x_{n-1})^-1.

#include <string>
#include <vector>

#include "symloop/linalg.hpp"
#include "symloop/words.hpp"

namespace symloop::surface {

using words::Endo;
using words::MappingClass;
using words::Word;
using Rat = la::Rat;

struct FatGraph {
  int nv = 0, ne = 0;
  std::vector<int> vert;  // half-edge -> vertex
  std::vector<int> rot;   // half-edge -> ccw successor at same vertex

  static int pair(int h) { return h ^ 1; }
  int nh() const { return 2 * ne; }
  int next_in_face(int h) const { return rot[pair(h)]; }

  // Cycles of the face permutation / the rotation, each starting from its
  // smallest half-edge, listed in order of that smallest half-edge.
  std::vector<std::vector<int>> faces() const;
  std::vector<std::vector<int>> vertex_cycles() const;

  int euler_open() const { return nv - ne; }
  int euler_capped() const { return nv - ne + (int)faces().size(); }
  void validate() const;
};

inline int face_letter(int h) { return h % 2 == 0 ? h / 2 + 1 : -(h / 2 + 1); }

struct Model {
  int genus = 0;
  int npunct = 0;        // 0 for the closed model
  bool closed = false;   // closed: covers must kill relator()
  FatGraph graph;        // single vertex
  std::vector<std::string> gen_names;
  std::vector<int> outer_cycle;    // outer face half-edge cycle (polygon sides)
  std::vector<int> puncture_face;  // puncture -> index into graph.faces()

  int ngens() const { return (int)gen_names.size(); }
  // Loop around puncture j, based at the vertex. For j = npunct-1 this is
  // the inverse of relator().
  Word puncture_loop(int j) const;
  // [a1,b1]...[ag,bg] x1...x_{n-1}
  Word relator() const;

  // Generator/edge indices.
  int gen_a(int h) const { return 2 * h; }
  int gen_b(int h) const { return 2 * h + 1; }
  int gen_x(int j) const { return 2 * genus + j; }
};

Model punctured_model(int genus, int npunct);  // npunct >= 1
Model closed_model(int genus);                 // genus >= 1

// ---- Curves drawn in the outer polygon ------------------------------------
// A closed curve transverse to the graph: a cyclic sequence of directed
// chords of the outer polygon. A chord end (side, pos) sits on polygon side
// `side` at fraction pos in (0,1) along the face traversal of that side.
// Between chord i and chord i+1 the curve crosses the edge under side
// to(i): so from(i+1) must be the opposite side of the same edge at
// fraction 1-pos. Chords must be pairwise non-crossing and all endpoints
// distinct. Any retraction stays clear of the corner before side 0, where
// the outer puncture sits in the punctured models.

struct ChordEnd {
  int side = 0;
  Rat pos;
};
struct Drawn {
  struct Chord {
    ChordEnd from, to;
  };
  std::vector<Chord> chords;
};

void validate_drawn(const Model& m, const Drawn& c);
// Free-group word of the drawn curve (based via the retraction; compare up
// to free homotopy with words::canonical_loop).
Word drawn_word(const Model& m, const Drawn& c);
// Images of all generators under the Dehn twist about the drawn curve.
// dir=+1 is the twist with tau_{a1}(b1) ~ b1 a1; dir=-1 its inverse.
Endo twist_images(const Model& m, const Drawn& c, int dir = 1);
MappingClass drawn_twist(const Model& m, const Drawn& c,
                         const std::string& name);

// Standard curves, genus >= 1 (0-based handle index):
Drawn a_curve(const Model& m, int h);      // parallel to a_h, crosses b_h once
Drawn b_curve(const Model& m, int h);      // parallel to b_h, crosses a_h once
Drawn chain_curve(const Model& m, int h);  // joins handles h,h+1; class a_h+a_{h+1}

// ---- Sphere mapping classes (genus 0) --------------------------------------
// half_twist(m,k), 0 <= k <= n-2: swaps punctures k,k+1 (0-based); k = n-2
// swaps the last generator puncture with the outer one.
MappingClass half_twist(const Model& m, int k);
// Word of the curve enclosing exactly punctures i < j (0-based, j <= n-1).
Word chord_word(const Model& m, int i, int j);
// Dehn twist about that curve (the square of a conjugated half twist).
MappingClass chord_twist(const Model& m, int i, int j);

// ---- Generating families ----------------------------------------------------
struct NamedCurve {
  std::string name;
  Word loop;
  MappingClass twist;
};

// Twist generators: genus >= 1: a/b/chain twists; genus 0: half twists.
std::vector<MappingClass> standard_classes(const Model& m);
// Seed curves with twists: genus >= 1: a/b/chain curves; genus 0: the
// consecutive chords {i,i+1}.
std::vector<NamedCurve> standard_curves(const Model& m);

}  // namespace symloop::surface
