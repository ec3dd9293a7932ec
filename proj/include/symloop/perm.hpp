#pragma once
// Permutations on {0..n-1} and small permutation groups.
// Group element order is BFS discovery order from the identity, so every
// enumeration downstream is deterministic.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symloop::perm {

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}
  static Perm identity(int n);

  int deg() const { return (int)img.size(); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;

  // after(before(i))
  static Perm compose(const Perm& after, const Perm& before);
  Perm inverse() const;
  long order() const;

  // Cycles in increasing order of smallest element; fixed points omitted
  // unless include_fixed.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
  int num_cycles() const;  // counting fixed points

  std::string cycle_string() const;  // 1-based, "()" for the identity
  // Parse 1-based cycle notation like "(1 2 3)(4 5)"; "()" or "" = identity.
  static std::optional<Perm> parse_cycles(const std::string& s, int degree);

  auto operator<=>(const Perm&) const = default;
};

struct Group {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // elements[0] = identity, BFS order
  bool truncated = false;      // hit the enumeration cap

  int order() const { return (int)elements.size(); }
  int index_of(const Perm& p) const;  // -1 if absent
  int mul(int i, int j) const;        // index of elements[i] o elements[j]
  int inv(int i) const;

  bool is_abelian() const;
  bool is_transitive() const;
  bool is_regular() const;  // transitive and |G| == degree
  long exponent() const;

  std::vector<int> center() const;  // element indices

  // Conjugacy classes sorted by (size, smallest element index); classes[0]
  // is the identity class.
  struct Classes {
    std::vector<std::vector<int>> members;
    std::vector<int> class_of;  // element index -> class id
  };
  Classes conjugacy_classes() const;

  // Index of elements[e]^k (k may be negative).
  int power(int e, long k) const;

 private:
  mutable std::map<Perm, int> index_;
  void build_index() const;
};

// Closure of gens under composition; throws std::runtime_error if the order
// exceeds cap.
Group generated_group(int degree, std::vector<Perm> gens, int cap = 100000);

// Left-regular permutation representation: degree |G|, generator images are
// left multiplication by the given elements. Sheet 0 is the identity.
Group regular_rep(const Group& g, const std::vector<int>& gen_elts,
                  std::vector<Perm>* images_out);

// All automorphisms of a small group, as permutations of element indices.
// Brute force; intended for |G| <= 64.
std::vector<std::vector<int>> automorphisms(const Group& g);

}  // namespace symloop::perm
