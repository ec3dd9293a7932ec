#include "symloop/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace symloop::la {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (nc != o.nr) throw std::logic_error("Mat::*: shape mismatch");
  Mat r(nr, o.nc);
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nc; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.nc; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if ((int)v.size() != nc) throw std::logic_error("Mat::apply: shape mismatch");
  Vec r(nr, Rat(0));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (row[i][j] != 0 && v[j] != 0) r[i] += row[i][j] * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(nc, nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& r : row)
    for (const auto& x : r)
      if (x != 0) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < nr; ++i) {
    os << "[";
    for (int j = 0; j < nc; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.nr != b.nr) throw std::logic_error("hstack: row mismatch");
  Mat r(a.nr, a.nc + b.nc);
  for (int i = 0; i < a.nr; ++i) {
    for (int j = 0; j < a.nc; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.nc; ++j) r.at(i, a.nc + j) = b.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.nc != b.nc && a.nr != 0 && b.nr != 0)
    throw std::logic_error("vstack: col mismatch");
  Mat r(0, a.nr ? a.nc : b.nc);
  r.row = a.row;
  r.row.insert(r.row.end(), b.row.begin(), b.row.end());
  r.nr = (int)r.row.size();
  return r;
}

int rref(Mat& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < m.nc && r < m.nr; ++c) {
    int p = -1;
    for (int i = r; i < m.nr; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m.row[p], m.row[r]);
    Rat lead = m.at(r, c);
    for (int j = c; j < m.nc; ++j) m.at(r, j) /= lead;
    for (int i = 0; i < m.nr; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  m.row.resize(r, Vec(m.nc, Rat(0)));
  // keep shape bookkeeping consistent: rows below rank are dropped
  m.nr = r;
  return r;
}

int rank(Mat m) { return rref(m); }

Rat det(Mat m) {
  if (m.nr != m.nc) throw std::logic_error("det: not square");
  Rat d(1);
  int n = m.nr;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) { std::swap(m.row[p], m.row[c]); d = -d; }
    d *= m.at(c, c);
    Rat inv_lead = Rat(1) / m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv_lead;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.nr != m.nc) throw std::logic_error("inverse: not square");
  Mat aug = hstack(m, Mat::identity(m.nr));
  std::vector<int> piv;
  int r = rref(aug, &piv);
  if (r != m.nr || (r > 0 && piv.back() >= m.nr)) return std::nullopt;
  for (int i = 0; i < r; ++i)
    if (piv[i] != i) return std::nullopt;
  Mat inv(m.nr, m.nr);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nr; ++j) inv.at(i, j) = aug.at(i, m.nr + j);
  return inv;
}

Mat kernel(const Mat& m) {
  Mat e = m;
  std::vector<int> piv;
  rref(e, &piv);
  std::vector<bool> is_pivot(m.nc, false);
  for (int c : piv) is_pivot[c] = true;
  Mat k(0, m.nc);
  for (int c = 0; c < m.nc; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.nc, Rat(0));
    v[c] = 1;
    for (int i = 0; i < (int)piv.size(); ++i) v[piv[i]] = -e.at(i, c);
    k.row.push_back(std::move(v));
  }
  k.nr = (int)k.row.size();
  return k;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.nr, a.nc + 1);
  for (int i = 0; i < a.nr; ++i) {
    for (int j = 0; j < a.nc; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.nc) = b[i];
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  for (int i = 0; i < r; ++i)
    if (piv[i] == a.nc) return std::nullopt;  // inconsistent
  Vec x(a.nc, Rat(0));
  for (int i = 0; i < r; ++i) x[piv[i]] = aug.at(i, a.nc);
  return x;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Subspace Subspace::span(int amb, const std::vector<Vec>& vecs) {
  Subspace s(amb);
  for (const auto& v : vecs) s.add(v);
  return s;
}

Subspace Subspace::full(int amb) {
  Subspace s(amb);
  s.basis = Mat::identity(amb);
  s.pivots.resize(amb);
  for (int i = 0; i < amb; ++i) s.pivots[i] = i;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (int i = 0; i < basis.nr; ++i) {
    const Rat& f = r[pivots[i]];
    if (f == 0) continue;
    Rat c = f;  // basis rows have leading 1
    for (int j = pivots[i]; j < ambient; ++j)
      if (basis.at(i, j) != 0) r[j] -= c * basis.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis.nr; ++i)
    if (!contains(other.basis.row[i])) return false;
  return true;
}

bool Subspace::add(const Vec& v) {
  if ((int)v.size() != ambient) throw std::logic_error("Subspace::add: size");
  Vec r = reduce(v);
  int lead = -1;
  for (int j = 0; j < ambient; ++j)
    if (r[j] != 0) { lead = j; break; }
  if (lead < 0) return false;
  Rat f = r[lead];
  for (int j = lead; j < ambient; ++j) r[j] /= f;
  // insert keeping pivot columns increasing
  int pos = 0;
  while (pos < (int)pivots.size() && pivots[pos] < lead) ++pos;
  basis.row.insert(basis.row.begin() + pos, r);
  basis.nr++;
  pivots.insert(pivots.begin() + pos, lead);
  // clear the new pivot column above
  for (int i = 0; i < basis.nr; ++i) {
    if (i == pos || basis.at(i, lead) == 0) continue;
    Rat c = basis.at(i, lead);
    for (int j = lead; j < ambient; ++j) basis.at(i, j) -= c * basis.row[pos][j];
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient == o.ambient && basis == o.basis;
}

Subspace Subspace::orthogonal_complement(const Mat& form) const {
  // rows of (basis * form) pair each basis vector against unknown v
  Mat m = basis * form;
  if (basis.nr == 0) return Subspace::full(ambient);
  Mat k = kernel(m);
  Subspace s(ambient);
  for (int i = 0; i < k.nr; ++i) s.add(k.row[i]);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // v in both spans: solve [B1^T | -B2^T] (x;y) = 0
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient);
  Mat bt = basis.transpose();                   // ambient x d1
  Mat ot = other.basis.transpose();             // ambient x d2
  Mat m(ambient, dim() + other.dim());
  for (int i = 0; i < ambient; ++i) {
    for (int j = 0; j < dim(); ++j) m.at(i, j) = bt.at(i, j);
    for (int j = 0; j < other.dim(); ++j) m.at(i, dim() + j) = -ot.at(i, j);
  }
  Mat k = kernel(m);
  Subspace s(ambient);
  for (int i = 0; i < k.nr; ++i) {
    Vec v(ambient, Rat(0));
    for (int j = 0; j < dim(); ++j)
      for (int c = 0; c < ambient; ++c) v[c] += k.at(i, j) * basis.at(j, c);
    s.add(v);
  }
  return s;
}

}  // namespace symloop::la
