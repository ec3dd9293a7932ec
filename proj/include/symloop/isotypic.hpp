#pragma once
// Rational representation theory of a small permutation group, applied to
// the deck action on H1.
//
// Complex irreducible characters are computed by Dixon's method: all
// arithmetic happens in F_p for a prime p = 1 (mod exponent) and p > 2|G|^2,
// where the class-sum eigenvalue vectors live. Galois orbits are fused into
// rational characters; the central idempotent of the orbit of chi has
// class-c coefficient (chi(1)/|G|) * Tr_{Q(chi)/Q}(chi(c^{-1})), an integer
// over |G|, lifted from F_p by symmetric residue (the bound p > 2|G|^2 makes
// the lift unique) and then verified exactly in the rational class algebra.

#include <string>
#include <vector>

#include "symloop/homology.hpp"
#include "symloop/linalg.hpp"
#include "symloop/perm.hpp"

namespace symloop::isotypic {

using la::Mat;
using la::Rat;
using la::Vec;
using perm::Group;

struct CharacterTable {
  long p = 0;       // Dixon prime
  long exponent = 1;
  int order = 1;
  int nclasses = 1;
  Group::Classes classes;          // identity class first
  std::vector<int> class_size;
  std::vector<int> class_rep;      // element index of a representative
  std::vector<int> inv_class;      // class of the inverses
  std::vector<long> degrees;       // chi(1), genuine integers
  std::vector<std::vector<long>> values;  // values[chi][class] in F_p
};

// Throws BudgetError past order_cap. Table rows are sorted by (degree,
// value vector), so the trivial character comes first.
CharacterTable character_table(const Group& g, int order_cap = 200);

struct RationalIdempotent {
  std::string name;        // "chi<k>" with degree/orbit annotations elsewhere
  std::vector<int> orbit;  // complex characters fused over Q
  long degree = 1;         // common chi(1)
  std::vector<Rat> coeff;  // per class: coefficient of its elements
};

// Partition of unity in the rational class algebra of g (the group the
// table was computed from). The partition identity is verified exactly;
// idempotency exactly for |G| <= 96 and mod p above that; pairwise
// orthogonality exactly for |G| <= 48 (it is re-verified exactly on the
// projector matrices downstream in every case).
std::vector<RationalIdempotent> rational_idempotents(const Group& g,
                                                     const CharacterTable& t);

struct IsotypicDecomposition {
  std::vector<std::string> names;
  std::vector<long> degrees;
  std::vector<int> orbit_sizes;
  std::vector<Mat> projectors;  // on the capped homology, sum = identity
  std::vector<int> dims;        // = trace of the projector
};

// deck: capped deck matrices indexed like g.elements. Verifies the
// partition of unity, idempotency, pairwise orthogonality, and commutation
// with the deck generators, all exactly.
IsotypicDecomposition isotypic_projectors(const Group& g,
                                          const CharacterTable& t,
                                          const std::vector<RationalIdempotent>& es,
                                          const std::vector<Mat>& deck);

enum class SumStatus { Zero, Full, Partial };

struct SumCheck {
  std::vector<SumStatus> status;  // per rational character
  std::vector<int> dims;          // dim of the projection of the subspace
};

// Projects the subspace into each isotypic component. The subspace must be
// invariant under the deck generators (throws InvariantError otherwise).
// Partial statuses are reported as data; whether a Partial is a theorem
// violation depends on hypotheses the caller knows (stabilization, base
// genus, empty branch locus).
SumCheck isotypic_sum_check(const la::Subspace& v,
                            const IsotypicDecomposition& d,
                            const std::vector<Mat>& deck_gens);

}  // namespace symloop::isotypic
