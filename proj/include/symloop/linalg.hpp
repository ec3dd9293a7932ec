#pragma once
// Dense exact linear algebra over Q (GMP rationals).
// Everything here is deterministic: pivoting always picks the first nonzero
// entry in column order, and Subspace keeps its basis in reduced row echelon
// form so equal subspaces compare equal row-by-row.

#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace symloop::la {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

struct Mat {
  int nr = 0, nc = 0;
  std::vector<Vec> row;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), row(r, Vec(c, Rat(0))) {}

  static Mat identity(int n);

  Rat& at(int i, int j) { return row[i][j]; }
  const Rat& at(int i, int j) const { return row[i][j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const = default;

  Vec apply(const Vec& v) const;  // matrix * column vector
  Mat transpose() const;
  bool is_zero() const;
  std::string str() const;  // for diagnostics
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// In-place reduced row echelon form. Returns rank; if pivots != nullptr it
// receives the pivot column of each nonzero row, in order.
int rref(Mat& m, std::vector<int>* pivots = nullptr);

int rank(Mat m);
Rat det(Mat m);
std::optional<Mat> inverse(const Mat& m);

// Basis (as rows) of { x : m x = 0 }, canonical w.r.t. RREF free columns.
Mat kernel(const Mat& m);

// One solution of A x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);

bool is_zero_vec(const Vec& v);
Rat dot(const Vec& a, const Vec& b);

// A subspace of Q^ambient stored as an RREF row basis (canonical form:
// two Subspace objects are equal iff they describe the same subspace).
struct Subspace {
  int ambient = 0;
  Mat basis;  // RREF, no zero rows
  std::vector<int> pivots;

  Subspace() = default;
  explicit Subspace(int amb) : ambient(amb), basis(0, amb) {}

  static Subspace span(int amb, const std::vector<Vec>& vecs);
  static Subspace full(int amb);

  int dim() const { return basis.nr; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool add(const Vec& v);  // true if the dimension grew
  bool operator==(const Subspace& o) const;

  // Residue of v after reduction against the basis (zero iff contained).
  Vec reduce(const Vec& v) const;

  // { v : b^T form v = 0 for every basis row b }.
  Subspace orthogonal_complement(const Mat& form) const;
  Subspace intersect(const Subspace& other) const;
};

}  // namespace symloop::la
