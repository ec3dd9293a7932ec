#pragma once
// Exact rational H1 of a derived cover.
//
// Open homology: BFS spanning tree from sheet 0 (edges scanned in index
// order), one basis loop per non-tree edge. A closed edge chain's class is
// just its signed chord counts. Capping quotients by the classes of the
// filled boundary faces; the projection and a section (unit chords at the
// kept positions) are retained so classes move both ways.
//
// The intersection form is computed combinatorially: both loops are pushed
// off the vertices, strands along an edge are separated into parallel
// slots, and each pair of vertex passages contributes the sign of its
// corner crossing. Convention: on the torus model <a1, b1> = +1.

#include <string>
#include <vector>

#include "symloop/covering.hpp"
#include "symloop/linalg.hpp"
#include "symloop/words.hpp"

namespace symloop::homology {

using cover::Cover;
using la::Mat;
using la::Rat;
using la::Vec;
using words::Word;

struct OpenH1 {
  int rank = 0;
  std::vector<int> chords;     // non-tree derived edges, increasing
  std::vector<int> chord_pos;  // derived edge -> basis position or -1
  std::vector<int> parent;     // vertex -> BFS parent (-1 at the root)
  std::vector<int> parent_letter;  // signed edge letter parent -> vertex
  std::vector<Word> loops;     // basis loop of each chord, based at sheet 0
  Mat boundary;                // one row per face of the cover
};

OpenH1 h1_open(const Cover& cv);

// Class of a closed edge chain (letters over derived edges).
Vec chain_class(const OpenH1& h, const Word& edge_letters);

// Based loop 0 -> v -> 0 hitting v through the spanning tree.
Word tree_loop_through(const OpenH1& h, int v);

// <loop_i, loop_j> for all basis loops; exact, skew.
Mat intersection_form_open(const Cover& cv, const OpenH1& h);

// Signed intersection number of two closed edge chains.
Rat intersect_chains(const Cover& cv, const Word& a, const Word& b);

struct HomologySpace {
  int dim = 0;
  bool closed = false;  // every face filled: Omega is then nondegenerate
  std::vector<std::string> labels;  // kept chords, "gen#sheet"
  std::vector<int> kept;            // kept chord positions
  std::vector<int> filled_faces;
  Mat omega;    // dim x dim, skew
  Mat proj;     // dim x open rank
  Mat include;  // open rank x dim section, proj * include = id
  OpenH1 open;

  Vec project(const Vec& open_coords) const { return proj.apply(open_coords); }
  Vec lift(const Vec& capped) const { return include.apply(capped); }
};

// Fill the faces over branch punctures and over disks of the base (always),
// plus the faces over genuine punctures when fill_all is set.
HomologySpace cap(const Cover& cv, const OpenH1& h, bool fill_all);

// Class of the closed lift component of w through the given sheet (the lift
// is traversed cycle-length many times), in open coordinates.
Vec lift_class_open(const Cover& cv, const OpenH1& h, const Word& w,
                    int sheet);

// Capped matrices of the deck action, indexed like da.group.elements.
// Verifies M^T Omega M = Omega for each; throws InvariantError if the cover
// is not regular.
std::vector<Mat> deck_matrices(const HomologySpace& H,
                               const cover::DeckAction& da);

}  // namespace symloop::homology
