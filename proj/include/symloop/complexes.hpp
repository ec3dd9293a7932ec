#pragma once
// Finite chord-diagram proxies for curve complexes of punctured spheres.
//
// A vertex is an unordered pair {i, j} of puncture labels standing for the
// convex-position curve enclosing exactly those two punctures; disjoint
// label pairs give disjoint curves, so the chord complex is a full
// subcomplex of the complex generated by 2-punctured-disc curves. The two
// models diverge at n = 4 only: there the chord model has three disjoint
// matched pairs while complementary curves on the 4-punctured sphere are
// isotopic, so the curve complex is a finite set of points. Both dimensions
// are always reported.

#include <string>
#include <utility>
#include <vector>

#include "symloop/covering.hpp"
#include "symloop/homology.hpp"
#include "symloop/linalg.hpp"

namespace symloop::cx {

using la::Rat;
using la::Vec;

using Chord = std::pair<int, int>;  // normalized first < second

struct ChordComplex {
  int n = 0;
  std::vector<Chord> vertices;             // lexicographic
  std::vector<std::vector<int>> adjacent;  // disjointness 1-skeleton
  int matching_dim = 0;  // max pairwise-disjoint set size - 1, by enumeration
  int curve_dim = 0;     // curve-complex dimension: n/2 - 1 for n >= 5, 0 at 4
};

ChordComplex chord_complex(int n);  // n >= 4

struct Connectivity {
  int components = 0;
  bool connected = false;
};
Connectivity connectivity_report(const ChordComplex& c);

std::string dot_dump(const ChordComplex& c);
std::string json_dump(const ChordComplex& c);

// Maximal disjoint chord families on 2g+2 points are the perfect matchings,
// g+1 chords each, so the complex has dimension g. Every chord lifts to the
// hyperelliptic double cover with nonzero capped class, but the lifts of a
// disjoint family bound a subsurface (one sheet of the cut cover), giving
// one relation: each maximal family spans rank exactly g. The rank check
// runs over the non-crossing matchings, whose convex chords really are
// pairwise disjoint; every other matching is the image of one of these
// under a puncture braid, which acts invertibly on H1 and cannot change the
// rank.
struct HyperellipticCheck {
  int genus = 0;
  int chords = 0;              // C(2g+2, 2) vertices
  int zero_class_chords = 0;   // lifts that cap to zero (expected none)
  int max_disjoint = 0;        // g+1
  long matchings = 0;          // all perfect matchings, (2g+1)!!
  long planar_matchings = 0;   // non-crossing ones, rank-checked
  int min_rank = 0, max_rank = 0;  // over planar matchings
  bool pairwise_zero = false;  // planar families pair to 0 under omega
  bool ok = false;
};
HyperellipticCheck hyperelliptic_dimension_check(int g);  // 2 <= g <= 6

struct FareyChain {
  std::vector<Chord> chords;  // consecutive entries share one endpoint
};
// Chain from alpha to beta (distinct), at most one bridging chord.
FareyChain farey_chain(Chord alpha, Chord beta, int n);

struct ChainCheck {
  std::vector<Vec> classes;      // capped classes of lifts in the double cover
  std::vector<Rat> consecutive;  // symplectic pairings of neighbours
  bool ok = false;               // all |pairing| == 1
};
// Lifts each chord through sheet 0 of the double cover of the tower and
// pairs neighbours. Chords on extra (non-Weierstrass) punctures rejected.
ChainCheck verify_chain_upstairs(const cover::Tower& t, const FareyChain& chain);

}  // namespace symloop::cx
