#pragma once
// Words in a free group on generators 0..ngens-1. Letter encoding: the
// integer +(g+1) is generator g, -(g+1) its inverse. Zero never appears.

#include <string>
#include <vector>

#include "symloop/base.hpp"

namespace symloop::words {

using Word = std::vector<int>;

inline int letter(int gen, bool inverse = false) {
  return inverse ? -(gen + 1) : (gen + 1);
}
inline int gen_of(int l) { return (l > 0 ? l : -l) - 1; }

Word reduced(Word w);          // cancel adjacent x x^-1
Word cyclically_reduced(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word conjugate(const Word& u, const Word& w);  // u^-1 w u

// Canonical representative of the free-homotopy class of an unoriented
// loop: lexicographic minimum over all rotations of the cyclically reduced
// word and of its inverse. Letter order: a < a^-1 < b < b^-1 < ...
Word canonical_loop(const Word& w);

std::vector<long> exponent_vector(const Word& w, int ngens);

std::string show(const Word& w, const std::vector<std::string>& gen_names);
// Parse "a1 b1^-1 a1^-1" style (whitespace separated); names must match
// gen_names exactly.
Word parse(const std::string& s, const std::vector<std::string>& gen_names);

// Endomorphism of the free group: generator g maps to img[g].
struct Endo {
  int ngens = 0;
  std::vector<Word> img;

  static Endo identity(int ngens);
  // Substitute and reduce; throws BudgetError past max_len.
  Word apply(const Word& w, size_t max_len = 1u << 20) const;
  // (after o before): first before, then after.
  static Endo compose(const Endo& after, const Endo& before);
  bool operator==(const Endo&) const = default;
};

// An invertible free-group substitution with a verified inverse.
struct MappingClass {
  std::string name;
  Endo fwd;
  Endo bwd;

  MappingClass inverse() const { return {name + "^-1", bwd, fwd}; }
  static MappingClass compose(const MappingClass& after,
                              const MappingClass& before);
  // Checks bwd o fwd == fwd o bwd == id on generators.
  void check() const;
};

}  // namespace symloop::words
