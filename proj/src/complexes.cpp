#include "symloop/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include <json.hpp>

#include "symloop/base.hpp"
#include "symloop/surface.hpp"

namespace symloop::cx {

using words::Word;

namespace {

bool disjoint(const Chord& a, const Chord& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

// Maximum number of pairwise-disjoint chords on the label set `mask`; equals
// the maximum matching size of the complete graph, computed honestly.
int max_matching(unsigned mask, std::vector<int>& memo) {
  if (mask == 0 || (mask & (mask - 1)) == 0) return 0;
  if (memo[mask] >= 0) return memo[mask];
  int lo = std::countr_zero(mask);
  unsigned rest = mask & ~(1u << lo);
  int best = max_matching(rest, memo);  // leave lo unmatched
  for (unsigned m = rest; m; m &= m - 1) {
    int j = std::countr_zero(m);
    best = std::max(best, 1 + max_matching(rest & ~(1u << j), memo));
  }
  return memo[mask] = best;
}

// Exact integer rank by fraction-free (Bareiss) elimination.
int rank_exact(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  int nr = static_cast<int>(m.size());
  int nc = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int c = col + 1; c < nc; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<mpz_class> scale_to_int(const Vec& v) {
  mpz_class den = 1;
  for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(Rat(x * den).get_num());
  return out;
}

void normalize(Chord& c) {
  if (c.first > c.second) std::swap(c.first, c.second);
}

void check_chord(const Chord& c, int n) {
  require(0 <= c.first && c.first < c.second && c.second < n,
          "chord endpoints out of range");
}

}  // namespace

ChordComplex chord_complex(int n) {
  require(n >= 4, "chord complex needs at least 4 punctures");
  ChordComplex c;
  c.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.vertices.push_back({i, j});
  c.adjacent.resize(c.vertices.size());
  for (size_t u = 0; u < c.vertices.size(); ++u)
    for (size_t v = u + 1; v < c.vertices.size(); ++v)
      if (disjoint(c.vertices[u], c.vertices[v])) {
        c.adjacent[u].push_back(static_cast<int>(v));
        c.adjacent[v].push_back(static_cast<int>(u));
      }
  std::vector<int> memo(1u << n, -1);
  c.matching_dim = max_matching((1u << n) - 1, memo) - 1;
  c.curve_dim = n == 4 ? 0 : n / 2 - 1;
  return c;
}

Connectivity connectivity_report(const ChordComplex& c) {
  Connectivity out;
  std::vector<char> seen(c.vertices.size(), 0);
  for (size_t start = 0; start < c.vertices.size(); ++start) {
    if (seen[start]) continue;
    ++out.components;
    std::vector<size_t> stack = {start};
    seen[start] = 1;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (int v : c.adjacent[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  out.connected = out.components == 1;
  return out;
}

std::string dot_dump(const ChordComplex& c) {
  std::ostringstream os;
  os << "graph chords {\n";
  for (const auto& v : c.vertices)
    os << "  \"" << v.first << "-" << v.second << "\";\n";
  for (size_t u = 0; u < c.vertices.size(); ++u)
    for (int v : c.adjacent[u])
      if (static_cast<size_t>(v) > u)
        os << "  \"" << c.vertices[u].first << "-" << c.vertices[u].second
           << "\" -- \"" << c.vertices[v].first << "-" << c.vertices[v].second
           << "\";\n";
  os << "}\n";
  return os.str();
}

std::string json_dump(const ChordComplex& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["matching_dim"] = c.matching_dim;
  j["curve_dim"] = c.curve_dim;
  auto verts = nlohmann::json::array();
  for (const auto& v : c.vertices) verts.push_back({v.first, v.second});
  j["vertices"] = verts;
  auto edges = nlohmann::json::array();
  for (size_t u = 0; u < c.vertices.size(); ++u)
    for (int v : c.adjacent[u])
      if (static_cast<size_t>(v) > u) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

HyperellipticCheck hyperelliptic_dimension_check(int g) {
  require(2 <= g && g <= 6, "genus out of the enumerable range [2, 6]");
  HyperellipticCheck out;
  out.genus = g;
  int n = 2 * g + 2;

  // Minimal tower: the full cover is the epsilon double cover itself (every
  // edge is a Weierstrass loop when there are no extra punctures).
  perm::Perm flip = *perm::Perm::parse_cycles("(1 2)", 2);
  cover::CoverSpec eps{2, std::vector<perm::Perm>(n - 1, flip)};
  cover::Tower tw = cover::tower_from(g, 0, eps);
  cover::Cover dbl = cover::derive(tw.sphere, tw.dbl);
  homology::HomologySpace h = homology::cap(dbl, homology::h1_open(dbl), false);
  require(h.dim == 2 * g, "double cover does not cap to genus g");

  std::map<Chord, Vec> capped;
  std::map<Chord, std::vector<mpz_class>> cls;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Word w = surface::chord_word(tw.sphere, i, j);
      Vec v = h.project(homology::lift_class_open(dbl, h.open, w, 0));
      if (la::is_zero_vec(v)) ++out.zero_class_chords;
      cls[{i, j}] = scale_to_int(v);
      capped[{i, j}] = std::move(v);
      ++out.chords;
    }

  out.min_rank = 2 * g + 1;
  out.max_rank = 0;
  std::vector<Chord> matching;
  std::vector<char> used(n, 0);
  bool all_nonzero = out.zero_class_chords == 0;
  bool ranks_ok = true;
  out.pairwise_zero = true;
  auto crossing = [](const Chord& x, const Chord& y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  auto recurse = [&](auto&& self, int done) -> void {
    if (done == n) {
      ++out.matchings;
      for (size_t a = 0; a < matching.size(); ++a)
        for (size_t b = a + 1; b < matching.size(); ++b)
          if (crossing(matching[a], matching[b])) return;
      ++out.planar_matchings;
      for (size_t a = 0; a < matching.size(); ++a)
        for (size_t b = a + 1; b < matching.size(); ++b)
          if (la::dot(capped[matching[a]], h.omega.apply(capped[matching[b]])) != 0)
            out.pairwise_zero = false;
      std::vector<std::vector<mpz_class>> rows;
      rows.reserve(matching.size());
      for (const auto& ch : matching) rows.push_back(cls[ch]);
      int r = rank_exact(std::move(rows));
      out.min_rank = std::min(out.min_rank, r);
      out.max_rank = std::max(out.max_rank, r);
      if (r != g) ranks_ok = false;
      return;
    }
    int lo = 0;
    while (used[lo]) ++lo;
    used[lo] = 1;
    for (int j = lo + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      matching.push_back({lo, j});
      self(self, done + 2);
      matching.pop_back();
      used[j] = 0;
    }
    used[lo] = 0;
  };
  recurse(recurse, 0);

  out.max_disjoint = g + 1;
  out.ok = all_nonzero && ranks_ok && out.pairwise_zero && out.min_rank == g &&
           out.max_rank == g;
  return out;
}

FareyChain farey_chain(Chord alpha, Chord beta, int n) {
  require(n >= 4, "need at least 4 punctures");
  normalize(alpha);
  normalize(beta);
  check_chord(alpha, n);
  check_chord(beta, n);
  require(alpha != beta, "chain endpoints must be distinct chords");
  FareyChain out;
  int shared = (alpha.first == beta.first) + (alpha.first == beta.second) +
               (alpha.second == beta.first) + (alpha.second == beta.second);
  if (shared == 1) {
    out.chords = {alpha, beta};
    return out;
  }
  Chord bridge{alpha.second, beta.first};
  normalize(bridge);
  out.chords = {alpha, bridge, beta};
  return out;
}

ChainCheck verify_chain_upstairs(const cover::Tower& t, const FareyChain& chain) {
  require(chain.chords.size() >= 2, "chain needs at least two chords");
  for (const auto& c : chain.chords) {
    check_chord(c, t.npunct());
    require(t.is_weierstrass(c.first) && t.is_weierstrass(c.second),
            "chain touches an extra puncture");
  }
  cover::Cover dbl = cover::derive(t.sphere, t.dbl);
  homology::HomologySpace h = homology::cap(dbl, homology::h1_open(dbl), false);
  ChainCheck out;
  for (const auto& c : chain.chords) {
    Word w = surface::chord_word(t.sphere, c.first, c.second);
    out.classes.push_back(h.project(homology::lift_class_open(dbl, h.open, w, 0)));
  }
  out.ok = true;
  for (size_t i = 0; i + 1 < out.classes.size(); ++i) {
    Rat p = la::dot(out.classes[i], h.omega.apply(out.classes[i + 1]));
    if (p != 1 && p != -1) out.ok = false;
    out.consecutive.push_back(std::move(p));
  }
  return out;
}

}  // namespace symloop::cx
