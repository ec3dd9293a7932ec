#include "symloop/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "symloop/base.hpp"

namespace symloop::cover {

namespace {

bool is_perm_of(const Perm& p, int d) {
  if (p.deg() != d) return false;
  std::vector<char> hit(d, 0);
  for (int i : p.img) {
    if (i < 0 || i >= d || hit[i]) return false;
    hit[i] = 1;
  }
  return true;
}

bool sheets_connected(const CoverSpec& c) {
  int d = c.degree;
  std::vector<std::vector<int>> adj(d);
  for (const Perm& p : c.rho)
    for (int s = 0; s < d; ++s) {
      adj[s].push_back(p(s));
      adj[p(s)].push_back(s);
    }
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : adj[s])
      if (!seen[t]) {
        seen[t] = 1;
        ++found;
        stack.push_back(t);
      }
  }
  return found == d;
}

}  // namespace

Perm transport(const CoverSpec& c, const Word& w) {
  Perm t = Perm::identity(c.degree);
  for (int l : w) {
    const Perm& p = c.rho[words::gen_of(l)];
    t = Perm::compose(l > 0 ? p : p.inverse(), t);
  }
  return t;
}

Perm holonomy(const Model& m, const CoverSpec& c, int j) {
  return transport(c, m.puncture_loop(j));
}

void validate_cover(const Model& m, const CoverSpec& c) {
  require(c.degree >= 1, "cover degree must be positive");
  require((int)c.rho.size() == m.graph.ne,
          "one voltage permutation per base edge required");
  for (const Perm& p : c.rho)
    require(is_perm_of(p, c.degree), "voltage is not a permutation of the sheets");
  require(sheets_connected(c), "disconnected cover");
  if (m.closed)
    require(transport(c, m.relator()).is_identity(),
            "relator acts nontrivially on a cover of a closed base");
}

std::vector<std::vector<int>> fiber_components(const CoverSpec& c,
                                               const Word& w) {
  return transport(c, w).cycles(true);
}

int Cover::half_at(int h, int t) const {
  int e = h / 2;
  if (h % 2 == 0) return 2 * edge_of(e, t);
  return 2 * edge_of(e, rho_inv[e](t)) + 1;
}

Cover derive(const Model& m, const CoverSpec& c) {
  validate_cover(m, c);
  Cover cv;
  cv.base = m;
  cv.spec = c;
  for (const Perm& p : c.rho) cv.rho_inv.push_back(p.inverse());

  const int d = c.degree, ne = m.graph.ne;
  FatGraph& g = cv.graph;
  g.nv = d;
  g.ne = ne * d;
  g.vert.assign(2 * g.ne, 0);
  g.rot.assign(2 * g.ne, 0);
  for (int e = 0; e < ne; ++e)
    for (int s = 0; s < d; ++s) {
      g.vert[2 * cv.edge_of(e, s)] = s;
      g.vert[2 * cv.edge_of(e, s) + 1] = c.rho[e](s);
    }
  for (int h = 0; h < 2 * ne; ++h)
    for (int t = 0; t < d; ++t)
      g.rot[cv.half_at(h, t)] = cv.half_at(m.graph.rot[h], t);
  g.validate();
  require(g.euler_open() == d * m.graph.euler_open(),
          "Euler characteristic is not multiplicative");

  auto base_faces = m.graph.faces();
  std::vector<int> face_of_half(2 * ne, -1);
  for (int fi = 0; fi < (int)base_faces.size(); ++fi)
    for (int h : base_faces[fi]) face_of_half[h] = fi;
  std::vector<int> punc_of_face(base_faces.size(), -1);
  for (int j = 0; j < (int)m.puncture_face.size(); ++j)
    punc_of_face[m.puncture_face[j]] = j;
  std::vector<Perm> hol;
  for (int j = 0; j < m.npunct; ++j) hol.push_back(holonomy(m, c, j));

  std::vector<int> covering_faces(base_faces.size(), 0);
  for (auto& cyc : g.faces()) {
    Cover::Face f;
    f.base_face = face_of_half[cv.base_half(cyc[0])];
    require(cyc.size() % base_faces[f.base_face].size() == 0,
            "face does not cover its base face evenly");
    f.multiplicity = (int)(cyc.size() / base_faces[f.base_face].size());
    f.puncture = punc_of_face[f.base_face];
    f.branch = f.puncture >= 0 && !hol[f.puncture].is_identity();
    covering_faces[f.base_face] += f.multiplicity;
    f.cycle = std::move(cyc);
    cv.faces.push_back(std::move(f));
  }
  for (int fi = 0; fi < (int)base_faces.size(); ++fi)
    require(covering_faces[fi] == d, "face multiplicities do not add up to the degree");
  for (int j = 0; j < m.npunct; ++j) {
    int nf = 0;
    for (const auto& f : cv.faces) nf += f.puncture == j;
    require(nf == hol[j].num_cycles(),
            "boundary count over a puncture does not match its holonomy");
  }
  return cv;
}

LiftedPath lift_path(const Cover& cv, const Word& w, int start) {
  LiftedPath out;
  int s = start;
  for (int l : w) {
    int e = words::gen_of(l);
    if (l > 0) {
      out.letters.push_back(words::letter(cv.edge_of(e, s)));
      s = cv.spec.rho[e](s);
    } else {
      s = cv.rho_inv[e](s);
      out.letters.push_back(words::letter(cv.edge_of(e, s), true));
    }
  }
  out.end_sheet = s;
  return out;
}

DeckAction deck_action(const Cover& cv) {
  DeckAction da;
  const int d = cv.degree();
  try {
    da.group = perm::generated_group(d, cv.spec.rho, d + 1);
  } catch (const std::runtime_error&) {
    return da;  // monodromy group larger than the fiber
  }
  if (da.group.order() != d || !da.group.is_transitive()) return da;
  da.regular = true;

  da.elt_of_sheet.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    int s = da.group.elements[i](0);
    require(da.elt_of_sheet[s] == -1, "monodromy group is not free on sheets");
    da.elt_of_sheet[s] = i;
  }
  for (int gi = 0; gi < d; ++gi) {
    int target = da.group.elements[da.group.inv(gi)](0);
    Perm ds;
    ds.img.resize(d);
    for (int s = 0; s < d; ++s)
      ds.img[s] = da.group.elements[da.elt_of_sheet[s]](target);
    Perm de;
    de.img.resize(cv.graph.ne);
    for (int e = 0; e < cv.base.graph.ne; ++e)
      for (int s = 0; s < d; ++s)
        de.img[cv.edge_of(e, s)] = cv.edge_of(e, ds(s));
    da.sheets.push_back(std::move(ds));
    da.edges.push_back(std::move(de));
  }
  return da;
}

CoverSpec regular_cover(const Group& g, const std::vector<int>& gen_elts) {
  std::vector<Perm> imgs;
  perm::regular_rep(g, gen_elts, &imgs);
  return CoverSpec{g.order(), std::move(imgs)};
}

Tower tower_from(int genus, int extra, const CoverSpec& full, int order_cap) {
  require(genus >= 1, "tower genus must be at least 1");
  require(extra >= 0, "negative puncture count");
  Tower t;
  t.genus = genus;
  t.extra = extra;
  t.sphere = surface::punctured_model(0, 2 * genus + 2 + extra);
  validate_cover(t.sphere, full);
  t.full = full;

  const int d = full.degree;
  std::vector<Perm> inv;
  for (const Perm& p : full.rho) inv.push_back(p.inverse());
  t.sheet_parity.assign(d, -1);
  t.sheet_parity[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int e = 0; e < t.sphere.graph.ne; ++e)
      for (int n : {full.rho[e](s), inv[e](s)})
        if (t.sheet_parity[n] == -1) {
          t.sheet_parity[n] = t.sheet_parity[s] ^ t.eps_gen(e);
          stack.push_back(n);
        }
  }
  for (int e = 0; e < t.sphere.graph.ne; ++e)
    for (int s = 0; s < d; ++s)
      require(t.sheet_parity[full.rho[e](s)] ==
                  (t.sheet_parity[s] ^ t.eps_gen(e)),
              "parity character does not factor through the cover");

  try {
    t.ghat = perm::generated_group(d, full.rho, order_cap);
  } catch (const std::runtime_error&) {
    throw BudgetError("tower monodromy group exceeds the order cap");
  }
  for (const Perm& u : t.ghat.elements) t.parity.push_back(t.sheet_parity[u(0)]);
  t.regular = t.ghat.order() == d;

  t.dbl.degree = 2;
  for (int e = 0; e < t.sphere.graph.ne; ++e)
    t.dbl.rho.push_back(t.eps_gen(e) ? Perm({1, 0}) : Perm::identity(2));

  for (int j = 0; j < t.npunct(); ++j) {
    size_t longest = 0;
    for (auto& cyc : holonomy(t.sphere, full, j).cycles(true))
      longest = std::max(longest, cyc.size());
    if (longest > (t.is_weierstrass(j) ? 2u : 1u)) t.branch.push_back(j);
  }

  require(derive(t.sphere, t.dbl).graph.euler_capped() == 2 - 2 * genus,
          "parity double cover does not cap to the nominal genus");
  return t;
}

}  // namespace symloop::cover
