#include "symloop/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symloop::perm {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 0; i < deg(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& after, const Perm& before) {
  if (after.deg() != before.deg())
    throw std::invalid_argument("perm degree mismatch");
  std::vector<int> v(after.deg());
  for (int i = 0; i < after.deg(); ++i) v[i] = after.img[before.img[i]];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(deg());
  for (int i = 0; i < deg(); ++i) v[img[i]] = i;
  return Perm(std::move(v));
}

long Perm::order() const {
  long ord = 1;
  for (const auto& c : cycles(false)) ord = std::lcm(ord, (long)c.size());
  return ord;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(deg(), 0);
  for (int i = 0; i < deg(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = 1;
      cyc.push_back(j);
      j = img[j];
    } while (j != i);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::num_cycles() const { return (int)cycles(true).size(); }

std::string Perm::cycle_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

std::optional<Perm> Perm::parse_cycles(const std::string& s, int degree) {
  Perm p = Perm::identity(degree);
  std::vector<char> used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  };
  skip_ws();
  if (i == s.size()) return p;
  if (s.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    return i == s.size() ? std::optional<Perm>(p) : std::nullopt;
  }
  while (i < s.size()) {
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != '(') return std::nullopt;
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i >= s.size()) return std::nullopt;
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit((unsigned char)s[i])) return std::nullopt;
      int v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i]))
        v = v * 10 + (s[i++] - '0');
      if (v < 1 || v > degree) return std::nullopt;
      if (used[v - 1]) return std::nullopt;
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p.img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  skip_ws();
  if (i != s.size()) return std::nullopt;
  return p;
}

void Group::build_index() const {
  if (!index_.empty() || elements.empty()) return;
  for (int i = 0; i < (int)elements.size(); ++i) index_[elements[i]] = i;
}

int Group::index_of(const Perm& p) const {
  build_index();
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int Group::mul(int i, int j) const {
  int k = index_of(Perm::compose(elements[i], elements[j]));
  if (k < 0) throw std::logic_error("group not closed");
  return k;
}

int Group::inv(int i) const { return index_of(elements[i].inverse()); }

bool Group::is_abelian() const {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (Perm::compose(gens[i], gens[j]) != Perm::compose(gens[j], gens[i]))
        return false;
  return true;
}

bool Group::is_transitive() const {
  if (degree == 0) return false;
  std::vector<char> seen(degree, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      for (int w : {g(v), g.inverse()(v)}) {
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push_back(w);
        }
      }
    }
  }
  return cnt == degree;
}

bool Group::is_regular() const {
  return is_transitive() && order() == degree;
}

long Group::exponent() const {
  long e = 1;
  for (const auto& p : elements) e = std::lcm(e, p.order());
  return e;
}

std::vector<int> Group::center() const {
  std::vector<int> z;
  for (int i = 0; i < order(); ++i) {
    bool central = true;
    for (const auto& g : gens) {
      if (Perm::compose(elements[i], g) != Perm::compose(g, elements[i])) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(i);
  }
  return z;
}

Group::Classes Group::conjugacy_classes() const {
  int n = order();
  Classes cl;
  cl.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cl.class_of[i] >= 0) continue;
    std::set<int> members{i};
    for (int u = 0; u < n; ++u) members.insert(mul(mul(u, i), inv(u)));
    int id = (int)cl.members.size();
    std::vector<int> v(members.begin(), members.end());
    for (int m : v) cl.class_of[m] = id;
    cl.members.push_back(std::move(v));
  }
  // Stable order: identity class first, then by (size, smallest member).
  std::vector<int> ord(cl.members.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    auto ka = std::pair(cl.members[a].size(), cl.members[a][0]);
    auto kb = std::pair(cl.members[b].size(), cl.members[b][0]);
    return ka < kb;
  });
  Classes out;
  out.class_of.assign(n, -1);
  for (int c : ord) {
    int id = (int)out.members.size();
    for (int m : cl.members[c]) out.class_of[m] = id;
    out.members.push_back(cl.members[c]);
  }
  return out;
}

int Group::power(int e, long k) const {
  long m = elements[e].order();
  k %= m;
  if (k < 0) k += m;
  int r = 0;
  for (long t = 0; t < k; ++t) r = mul(r, e);
  return r;
}

Group generated_group(int degree, std::vector<Perm> gens, int cap) {
  for (const auto& g : gens)
    if (g.deg() != degree) throw std::invalid_argument("generator degree");
  Group grp;
  grp.degree = degree;
  grp.gens = gens;
  std::set<Perm> seen;
  Perm id = Perm::identity(degree);
  grp.elements.push_back(id);
  seen.insert(id);
  std::deque<int> q{0};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      Perm next = Perm::compose(grp.elements[i], g);
      if (seen.insert(next).second) {
        if ((int)grp.elements.size() >= cap)
          throw std::runtime_error("group enumeration exceeded cap");
        grp.elements.push_back(std::move(next));
        q.push_back((int)grp.elements.size() - 1);
      }
    }
  }
  return grp;
}

Group regular_rep(const Group& g, const std::vector<int>& gen_elts,
                  std::vector<Perm>* images_out) {
  int n = g.order();
  std::vector<Perm> lams;
  for (int u : gen_elts) {
    std::vector<int> v(n);
    for (int s = 0; s < n; ++s) v[s] = g.mul(u, s);
    lams.emplace_back(std::move(v));
  }
  if (images_out) *images_out = lams;
  return generated_group(n, lams, n + 1);
}

std::vector<std::vector<int>> automorphisms(const Group& g) {
  int n = g.order();
  std::vector<std::vector<int>> M(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = g.mul(i, j);

  std::vector<int> gidx;
  for (const auto& gen : g.gens) {
    int k = g.index_of(gen);
    if (k < 0) throw std::logic_error("generator missing from group");
    if (std::find(gidx.begin(), gidx.end(), k) == gidx.end())
      gidx.push_back(k);
  }

  // BFS derivation tree: elt -> (parent, generator slot).
  std::vector<std::pair<int, int>> deriv(n, {-1, -1});
  std::vector<int> bfs{0};
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t h = 0; h < bfs.size(); ++h) {
      int i = bfs[h];
      for (size_t s = 0; s < gidx.size(); ++s) {
        int j = M[i][gidx[s]];
        if (!seen[j]) {
          seen[j] = 1;
          deriv[j] = {i, (int)s};
          bfs.push_back(j);
        }
      }
    }
  }
  if ((int)bfs.size() != n) throw std::logic_error("generators do not generate");

  std::vector<long> ords(n);
  for (int i = 0; i < n; ++i) ords[i] = g.elements[i].order();

  std::vector<std::vector<int>> cand(gidx.size());
  for (size_t s = 0; s < gidx.size(); ++s)
    for (int i = 0; i < n; ++i)
      if (ords[i] == ords[gidx[s]]) cand[s].push_back(i);

  std::vector<std::vector<int>> result;
  std::vector<int> pick(gidx.size(), 0);
  while (true) {
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    for (size_t h = 1; h < bfs.size(); ++h) {
      int j = bfs[h];
      auto [p, s] = deriv[j];
      phi[j] = M[phi[p]][cand[s][pick[s]]];
    }
    bool ok = true;
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n && ok; ++i) {
      if (hit[phi[i]]) ok = false;
      hit[phi[i]] = 1;
    }
    for (int i = 0; i < n && ok; ++i)
      for (size_t s = 0; s < gidx.size() && ok; ++s)
        if (phi[M[i][gidx[s]]] != M[phi[i]][phi[gidx[s]]]) ok = false;
    if (ok) result.push_back(std::move(phi));

    size_t s = 0;
    while (s < pick.size() && ++pick[s] == (int)cand[s].size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return result;
}

}  // namespace symloop::perm
