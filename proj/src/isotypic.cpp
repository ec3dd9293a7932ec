#include "symloop/isotypic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "symloop/base.hpp"

namespace symloop::isotypic {
namespace {

// Arithmetic in F_p with p < 2^31; products fit in long long.
long addm(long a, long b, long p) {
  long s = a + b;
  return s >= p ? s - p : s;
}
long subm(long a, long b, long p) {
  long s = a - b;
  return s < 0 ? s + p : s;
}
long mulm(long a, long b, long p) { return static_cast<long>((long long)a * b % p); }
long powm(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
long invm(long a, long p) { return powm(a, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p = 1 (mod m) and p > lower.
long dixon_prime(long m, long lower) {
  long p = (lower / m) * m + 1;
  while (p <= lower || !is_prime(p)) p += m;
  return p;
}

// Dense polynomials over F_p, coefficients low to high; zero = empty.
using Poly = std::vector<long>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
  }
  ptrim(c);
  return c;
}

Poly prem(Poly a, const Poly& b, long p) {
  long lead_inv = invm(b.back(), p);
  while (a.size() >= b.size()) {
    long f = mulm(a.back(), lead_inv, p);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = subm(a[off + i], mulm(f, b[i], p), p);
    ptrim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly pquo(Poly a, const Poly& b, long p) {
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  long lead_inv = invm(b.back(), p);
  while (a.size() >= b.size()) {
    long f = mulm(a.back(), lead_inv, p);
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = subm(a[off + i], mulm(f, b[i], p), p);
    ptrim(a);
    if (a.empty()) break;
  }
  ptrim(q);
  return q;
}

Poly pgcd(Poly a, Poly b, long p) {
  while (!b.empty()) {
    Poly r = prem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    long f = invm(a.back(), p);
    for (long& c : a) c = mulm(c, f, p);
  }
  return a;
}

Poly ppowmod(Poly base, long e, const Poly& f, long p) {
  Poly r = {1};
  base = prem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = prem(pmul(r, base, p), f, p);
    base = prem(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Roots of a squarefree f that splits into linear factors over F_p
// (Cantor-Zassenhaus, degree-one case).
void proots(const Poly& f, long p, std::vector<long>& out, std::mt19937_64& rng) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(subm(0, mulm(f[0], invm(f[1], p), p), p));
    return;
  }
  for (int tries = 0; tries < 400; ++tries) {
    long a = static_cast<long>(rng() % static_cast<unsigned long>(p));
    Poly t = ppowmod({a, 1}, (p - 1) / 2, f, p);
    if (t.empty())
      t = {p - 1};
    else
      t[0] = subm(t[0], 1, p);
    ptrim(t);
    if (t.empty()) continue;
    Poly g = pgcd(t, f, p);
    if (g.size() <= 1 || g.size() >= f.size()) continue;
    proots(g, p, out, rng);
    proots(pquo(f, g, p), p, out, rng);
    return;
  }
  throw InvariantError("root splitting over F_p stalled");
}

Poly derivative(const Poly& f, long p) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(mulm(f[i], static_cast<long>(i % p), p));
  ptrim(d);
  return d;
}

// Characteristic polynomial of a k x k matrix over F_p: similarity
// reduction to upper Hessenberg form, then the last-column expansion
// recurrence d_i = (x - H[i-1][i-1]) d_{i-1}
//                  - sum_r H[r][i-1] (prod_{j=r+1}^{i-1} H[j][j-1]) d_r.
Poly charpoly(std::vector<std::vector<long>> h, long p) {
  int k = static_cast<int>(h.size());
  for (int j = 0; j + 2 < k; ++j) {
    int piv = -1;
    for (int r = j + 1; r < k; ++r)
      if (h[r][j] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < k; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    long piv_inv = invm(h[j + 1][j], p);
    for (int i = j + 2; i < k; ++i) {
      if (h[i][j] == 0) continue;
      long f = mulm(h[i][j], piv_inv, p);
      for (int c = j; c < k; ++c) h[i][c] = subm(h[i][c], mulm(f, h[j + 1][c], p), p);
      for (int r = 0; r < k; ++r) h[r][j + 1] = addm(h[r][j + 1], mulm(f, h[r][i], p), p);
    }
  }
  std::vector<Poly> d(k + 1);
  d[0] = {1};
  for (int i = 1; i <= k; ++i) {
    Poly q(d[i - 1].size() + 1, 0);
    for (size_t c = 0; c < d[i - 1].size(); ++c) {
      q[c + 1] = addm(q[c + 1], d[i - 1][c], p);
      q[c] = subm(q[c], mulm(h[i - 1][i - 1], d[i - 1][c], p), p);
    }
    long prod = 1;
    for (int r = i - 2; r >= 0; --r) {
      prod = mulm(prod, h[r + 1][r], p);
      if (prod == 0) break;
      if (h[r][i - 1] == 0) continue;
      long f = mulm(h[r][i - 1], prod, p);
      for (size_t c = 0; c < d[r].size(); ++c) q[c] = subm(q[c], mulm(f, d[r][c], p), p);
    }
    ptrim(q);
    d[i] = std::move(q);
  }
  return d[k];
}

// Nullspace basis of a k x k matrix over F_p.
std::vector<std::vector<long>> nullspace(std::vector<std::vector<long>> a, long p) {
  int k = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < k && row < k; ++col) {
    int piv = -1;
    for (int r = row; r < k; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    long f = invm(a[row][col], p);
    for (int c = 0; c < k; ++c) a[row][c] = mulm(a[row][c], f, p);
    for (int r = 0; r < k; ++r) {
      if (r == row || a[r][col] == 0) continue;
      long g = a[r][col];
      for (int c = 0; c < k; ++c) a[r][c] = subm(a[r][c], mulm(g, a[row][c], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(k, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (int free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(k, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = subm(0, a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Class-algebra product of two class-coefficient vectors, exactly over Q.
Vec class_product(const Group& g, const std::vector<int>& cls,
                  const std::vector<int>& class_size, const Vec& x, const Vec& y) {
  int n = g.order();
  int k = static_cast<int>(class_size.size());
  Vec acc(k, Rat(0));
  for (int u = 0; u < n; ++u) {
    const Rat& xu = x[cls[u]];
    if (xu == 0) continue;
    for (int v = 0; v < n; ++v) {
      const Rat& yv = y[cls[v]];
      if (yv == 0) continue;
      acc[cls[g.mul(u, v)]] += xu * yv;
    }
  }
  for (int l = 0; l < k; ++l) acc[l] /= class_size[l];
  return acc;
}

// Same product mod p, from symmetric-residue numerators over |G|.
std::vector<long> class_product_modp(const Group& g, const std::vector<int>& cls,
                                     const std::vector<int>& class_size,
                                     const std::vector<long>& x,
                                     const std::vector<long>& y, long p) {
  int n = g.order();
  int k = static_cast<int>(class_size.size());
  std::vector<long> acc(k, 0);
  for (int u = 0; u < n; ++u) {
    if (x[cls[u]] == 0) continue;
    for (int v = 0; v < n; ++v)
      acc[cls[g.mul(u, v)]] = addm(acc[cls[g.mul(u, v)]], mulm(x[cls[u]], y[cls[v]], p), p);
  }
  for (int l = 0; l < k; ++l) acc[l] = mulm(acc[l], invm(class_size[l] % p, p), p);
  return acc;
}

Rat trace(const Mat& m) {
  Rat t(0);
  for (int i = 0; i < m.nr; ++i) t += m.at(i, i);
  return t;
}

}  // namespace

CharacterTable character_table(const Group& g, int order_cap) {
  int n = g.order();
  if (n > order_cap)
    throw BudgetError("character table: group order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(order_cap));
  CharacterTable t;
  t.order = n;
  t.exponent = g.exponent();
  t.classes = g.conjugacy_classes();
  int k = static_cast<int>(t.classes.members.size());
  t.nclasses = k;
  require(t.classes.class_of[0] == 0, "identity class is not first");
  t.class_size.resize(k);
  t.class_rep.resize(k);
  t.inv_class.resize(k);
  for (int i = 0; i < k; ++i) {
    t.class_size[i] = static_cast<int>(t.classes.members[i].size());
    t.class_rep[i] = t.classes.members[i][0];
    t.inv_class[i] = t.classes.class_of[g.inv(t.class_rep[i])];
  }
  // p = 1 (mod exponent) and p > 2|G|^2, so every idempotent numerator
  // (bounded by chi(1)^2 * orbit size <= |G|^2) lifts uniquely.
  t.p = dixon_prime(t.exponent, std::max<long>(2L * n * n, t.exponent));
  long p = t.p;
  const auto& cls = t.classes.class_of;

  std::mt19937_64 rng(0x51d0'9e61ull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // M = sum_i r_i M_i where (M_i)_{jl} = a_{ijl}; the common eigenvectors
    // of the class-sum matrices are the vectors (omega_l(chi))_l and a
    // random combination separates them.
    std::vector<long> r(k);
    for (long& x : r) x = static_cast<long>(rng() % static_cast<unsigned long>(p));
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        int l = cls[g.mul(u, v)];
        m[cls[v]][l] = addm(m[cls[v]][l], r[cls[u]], p);
      }
    for (int l = 0; l < k; ++l) {
      long f = invm(t.class_size[l] % p, p);
      for (int j = 0; j < k; ++j) m[j][l] = mulm(m[j][l], f, p);
    }

    Poly f = charpoly(m, p);
    if (pgcd(f, derivative(f, p), p).size() > 1) continue;
    // All eigenvalues lie in F_p: x^p = x (mod f).
    Poly xp = ppowmod({0, 1}, p, f, p);
    require(xp == prem({0, 1}, f, p),
            "class-sum eigenvalues escaped the prime field");
    std::vector<long> roots;
    proots(f, p, roots, rng);
    if (static_cast<int>(roots.size()) != k) continue;
    std::sort(roots.begin(), roots.end());

    std::vector<long> degrees;
    std::vector<std::vector<long>> values;
    bool ok = true;
    for (long lam : roots) {
      auto shifted = m;
      for (int i = 0; i < k; ++i) shifted[i][i] = subm(shifted[i][i], lam, p);
      auto basis = nullspace(shifted, p);
      if (basis.size() != 1 || basis[0][0] == 0) {
        ok = false;
        break;
      }
      // Normalized so omega(identity) = 1, the eigenvector is the vector of
      // class-sum eigenvalues omega_l = |C_l| chi(g_l) / chi(1).
      std::vector<long> omega = basis[0];
      long f0 = invm(omega[0], p);
      for (long& x : omega) x = mulm(x, f0, p);
      long s = 0;
      for (int l = 0; l < k; ++l)
        s = addm(s, mulm(mulm(omega[l], omega[t.inv_class[l]], p),
                         invm(t.class_size[l] % p, p), p),
                 p);
      // chi(1)^2 * s = |G|; the degree is the unique root <= sqrt(|G|).
      long target = mulm(n % p, invm(s, p), p);
      long deg = 0;
      for (long d = 1; d * d <= n; ++d)
        if (mulm(d, d, p) == target) {
          deg = d;
          break;
        }
      if (deg == 0) {
        ok = false;
        break;
      }
      std::vector<long> chi(k);
      for (int l = 0; l < k; ++l)
        chi[l] = mulm(mulm(omega[l], deg % p, p), invm(t.class_size[l] % p, p), p);
      degrees.push_back(deg);
      values.push_back(std::move(chi));
    }
    if (!ok) continue;

    long sumsq = 0;
    for (long d : degrees) sumsq += d * d;
    if (sumsq != n) continue;

    std::vector<int> ord(k);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
      if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
      return values[a] < values[b];
    });
    for (int i : ord) {
      t.degrees.push_back(degrees[i]);
      t.values.push_back(values[i]);
    }
    // First row orthogonality, in the F_p model of the cyclotomic field.
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        long acc = 0;
        for (int l = 0; l < k; ++l)
          acc = addm(acc,
                     mulm(t.class_size[l] % p,
                          mulm(t.values[a][l], t.values[b][t.inv_class[l]], p), p),
                     p);
        require(acc == (a == b ? n % p : 0), "character orthogonality failed");
      }
    return t;
  }
  throw InvariantError("character table: eigenvector separation failed");
}

std::vector<RationalIdempotent> rational_idempotents(const Group& g,
                                                     const CharacterTable& t) {
  require(g.order() == t.order, "group does not match its character table");
  int n = t.order;
  int k = t.nclasses;
  long p = t.p;
  long m = t.exponent;

  // Galois conjugation sends chi to g -> chi(g^t) for t coprime to the
  // exponent; on the class level that permutes columns by i -> cls(rep_i^t).
  std::vector<std::vector<int>> power_class;
  for (long tt = 1; tt < m || power_class.empty(); ++tt) {
    if (std::gcd(tt, m) != 1) continue;
    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i)
      sigma[i] = t.classes.class_of[g.power(t.class_rep[i], tt)];
    power_class.push_back(std::move(sigma));
  }
  std::map<std::vector<long>, int> by_values;
  int nchi = static_cast<int>(t.values.size());
  for (int c = 0; c < nchi; ++c) by_values[t.values[c]] = c;

  std::vector<RationalIdempotent> out;
  std::vector<bool> used(nchi, false);
  for (int c = 0; c < nchi; ++c) {
    if (used[c]) continue;
    RationalIdempotent e;
    e.degree = t.degrees[c];
    std::vector<bool> in_orbit(nchi, false);
    for (const auto& sigma : power_class) {
      std::vector<long> w(k);
      for (int i = 0; i < k; ++i) w[i] = t.values[c][sigma[i]];
      auto it = by_values.find(w);
      require(it != by_values.end(), "Galois conjugate missing from table");
      if (!in_orbit[it->second]) {
        in_orbit[it->second] = true;
        e.orbit.push_back(it->second);
        used[it->second] = true;
      }
    }
    std::sort(e.orbit.begin(), e.orbit.end());
    e.name = "chi" + std::to_string(out.size());
    // Coefficient of class c: (chi(1)/|G|) Tr_{Q(chi)/Q}(chi(c^{-1})); the
    // numerator chi(1) * sum over the orbit is an integer of absolute value
    // at most chi(1)^2 |orbit| <= |G|^2 < p/2, so the symmetric residue is
    // exact.
    e.coeff.resize(k);
    for (int i = 0; i < k; ++i) {
      long s = 0;
      for (int psi : e.orbit) s = addm(s, t.values[psi][t.inv_class[i]], p);
      long num = mulm(e.degree % p, s, p);
      long lifted = num <= p / 2 ? num : num - p;
      e.coeff[i] = Rat(lifted, n);
      e.coeff[i].canonicalize();
    }
    out.push_back(std::move(e));
  }

  // Partition of unity, exactly.
  for (int i = 0; i < k; ++i) {
    Rat s(0);
    for (const auto& e : out) s += e.coeff[i];
    require(s == (i == 0 ? 1 : 0), "central idempotents do not sum to 1");
  }
  // Idempotency in the class algebra.
  for (const auto& e : out) {
    if (n <= 96) {
      Vec sq = class_product(g, t.classes.class_of, t.class_size, e.coeff, e.coeff);
      require(sq == e.coeff, "central idempotent fails e*e = e");
    } else {
      std::vector<long> num(k);
      for (int i = 0; i < k; ++i) {
        long v = mulm(static_cast<long>(mpz_class(e.coeff[i].get_num()).get_si() % p + p) % p,
                      invm(static_cast<long>(mpz_class(e.coeff[i].get_den()).get_si() % p), p),
                      p);
        num[i] = v;
      }
      auto sq = class_product_modp(g, t.classes.class_of, t.class_size, num, num, p);
      require(sq == num, "central idempotent fails e*e = e (mod p)");
    }
  }
  if (n <= 48) {
    for (size_t a = 0; a < out.size(); ++a)
      for (size_t b = a + 1; b < out.size(); ++b) {
        Vec pr = class_product(g, t.classes.class_of, t.class_size, out[a].coeff,
                               out[b].coeff);
        require(la::is_zero_vec(pr), "central idempotents are not orthogonal");
      }
  }
  return out;
}

IsotypicDecomposition isotypic_projectors(const Group& g, const CharacterTable& t,
                                          const std::vector<RationalIdempotent>& es,
                                          const std::vector<Mat>& deck) {
  require(static_cast<int>(deck.size()) == g.order(),
          "deck matrices do not cover the group");
  require(g.order() == t.order, "group does not match its character table");
  int dim = deck.empty() ? 0 : deck[0].nr;
  IsotypicDecomposition d;
  for (const auto& e : es) {
    Mat pmat(dim, dim);
    for (int u = 0; u < g.order(); ++u) {
      const Rat& c = e.coeff[t.classes.class_of[u]];
      if (c == 0) continue;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) pmat.at(i, j) += c * deck[u].at(i, j);
    }
    d.names.push_back(e.name);
    d.degrees.push_back(e.degree);
    d.orbit_sizes.push_back(static_cast<int>(e.orbit.size()));
    d.projectors.push_back(std::move(pmat));
  }

  Mat sum(dim, dim);
  for (const auto& pm : d.projectors) sum = sum + pm;
  require(sum == Mat::identity(dim), "isotypic projectors do not sum to I");
  for (size_t a = 0; a < d.projectors.size(); ++a) {
    require(d.projectors[a] * d.projectors[a] == d.projectors[a],
            "isotypic projector is not idempotent");
    for (size_t b = a + 1; b < d.projectors.size(); ++b)
      require((d.projectors[a] * d.projectors[b]).is_zero(),
              "isotypic projectors are not orthogonal");
  }
  // Commuting with the deck generators gives invariance under all of G.
  for (const auto& gen : g.gens) {
    const Mat& dg = deck[g.index_of(gen)];
    for (const auto& pm : d.projectors)
      require(dg * pm == pm * dg, "isotypic projector is not deck-equivariant");
  }
  int total = 0;
  for (const auto& pm : d.projectors) {
    Rat tr = trace(pm);
    require(tr.get_den() == 1 && tr >= 0, "projector trace is not a dimension");
    d.dims.push_back(static_cast<int>(tr.get_num().get_si()));
    total += d.dims.back();
  }
  require(total == dim, "isotypic dimensions do not fill H1");
  return d;
}

SumCheck isotypic_sum_check(const la::Subspace& v, const IsotypicDecomposition& d,
                            const std::vector<Mat>& deck_gens) {
  for (const auto& m : deck_gens)
    for (const auto& b : v.basis.row)
      if (!v.contains(m.apply(b)))
        throw InvariantError("subspace is not deck-invariant");
  SumCheck out;
  int total = 0;
  for (size_t c = 0; c < d.projectors.size(); ++c) {
    std::vector<Vec> img;
    img.reserve(v.basis.row.size());
    for (const auto& b : v.basis.row) img.push_back(d.projectors[c].apply(b));
    la::Subspace s = la::Subspace::span(v.ambient, img);
    int dim = s.dim();
    total += dim;
    out.dims.push_back(dim);
    if (dim == 0)
      out.status.push_back(SumStatus::Zero);
    else if (dim == d.dims[c])
      out.status.push_back(SumStatus::Full);
    else
      out.status.push_back(SumStatus::Partial);
  }
  require(total == v.dim(), "invariant subspace does not split isotypically");
  return out;
}

}  // namespace symloop::isotypic
