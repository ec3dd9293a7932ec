#include "symloop/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symloop::surface {

using words::letter;

// ---------------------------------------------------------------------------
// FatGraph

static std::vector<std::vector<int>> cycles_of(const std::vector<int>& next) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(next.size(), 0);
  for (int h = 0; h < (int)next.size(); ++h) {
    if (seen[h]) continue;
    std::vector<int> cyc;
    int x = h;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = next[x];
    } while (x != h);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> FatGraph::faces() const {
  std::vector<int> nxt(nh());
  for (int h = 0; h < nh(); ++h) nxt[h] = next_in_face(h);
  return cycles_of(nxt);
}

std::vector<std::vector<int>> FatGraph::vertex_cycles() const {
  return cycles_of(rot);
}

void FatGraph::validate() const {
  require((int)vert.size() == nh() && (int)rot.size() == nh(),
          "fatgraph: bad array sizes");
  std::vector<char> hit(nh(), 0);
  for (int h = 0; h < nh(); ++h) {
    require(rot[h] >= 0 && rot[h] < nh() && !hit[rot[h]],
            "fatgraph: rot is not a permutation");
    hit[rot[h]] = 1;
    require(vert[rot[h]] == vert[h], "fatgraph: rot leaves vertex");
  }
  for (const auto& cyc : vertex_cycles())
    for (int h : cyc)
      require(vert[h] == vert[cyc[0]], "fatgraph: vert vs rot mismatch");
  require((int)vertex_cycles().size() == nv, "fatgraph: vertex count");
}

// ---------------------------------------------------------------------------
// Standard one-vertex models

static Model build_model(int genus, int npunct) {
  int g = genus, n = npunct;
  int ngens = 2 * g + n - 1;
  require(g >= 0 && n >= 1 && ngens >= 1, "model: unsupported (genus,punctures)");

  Model m;
  m.genus = g;
  m.npunct = n;
  for (int h = 0; h < g; ++h) {
    m.gen_names.push_back("a" + std::to_string(h + 1));
    m.gen_names.push_back("b" + std::to_string(h + 1));
  }
  for (int j = 0; j < n - 1; ++j)
    m.gen_names.push_back("x" + std::to_string(j + 1));

  // The outer face must trace (a rotation of) the inverse of the relator
  // [a1,b1]...[ag,bg] x1...x_{n-1}, so that the boundary word of the last
  // puncture really is puncture_loop(n-1) for every voltage assignment,
  // abelian or not. [a,b]^-1 = b a b^-1 a^-1 reads tau b, tau a, eta b,
  // eta a; the x block contributes x_{n-1}^-1 ... x_1^-1.
  for (int h = g - 1; h >= 0; --h) {
    m.outer_cycle.push_back(4 * h + 2);  // tau b_h
    m.outer_cycle.push_back(4 * h + 0);  // tau a_h
    m.outer_cycle.push_back(4 * h + 3);  // eta b_h
    m.outer_cycle.push_back(4 * h + 1);  // eta a_h
  }
  for (int j = n - 2; j >= 0; --j)
    m.outer_cycle.push_back(2 * (2 * g + j) + 1);  // eta x_j

  FatGraph& fg = m.graph;
  fg.nv = 1;
  fg.ne = ngens;
  fg.vert.assign(2 * ngens, 0);
  std::vector<int> phi(2 * ngens, -1);
  auto add_cycle = [&](const std::vector<int>& cyc) {
    for (size_t i = 0; i < cyc.size(); ++i)
      phi[cyc[i]] = cyc[(i + 1) % cyc.size()];
  };
  add_cycle(m.outer_cycle);
  for (int j = 0; j < n - 1; ++j) add_cycle({2 * (2 * g + j)});  // monogons
  fg.rot.resize(2 * ngens);
  for (int h = 0; h < 2 * ngens; ++h) fg.rot[h] = phi[FatGraph::pair(h)];
  fg.validate();
  require((int)fg.vertex_cycles().size() == 1, "model: not one vertex");

  auto fcs = fg.faces();
  require((int)fcs.size() == n, "model: face count");
  m.puncture_face.assign(n, -1);
  for (int f = 0; f < (int)fcs.size(); ++f) {
    // Monogons at the tail halves are the generator faces; everything else
    // (including the head monogon when the outer face degenerates, g=0 n=2)
    // is the outer face.
    if (fcs[f].size() == 1 && (fcs[f][0] & 1) == 0) {
      int e = fcs[f][0] / 2;
      m.puncture_face[e - 2 * g] = f;
    } else {
      m.puncture_face[n - 1] = f;
    }
  }
  for (int j = 0; j < n; ++j) require(m.puncture_face[j] >= 0, "model: punctures");
  return m;
}

Model punctured_model(int genus, int npunct) {
  return build_model(genus, npunct);
}

Model closed_model(int genus) {
  require(genus >= 1, "closed model needs genus >= 1");
  Model m = build_model(genus, 1);
  m.npunct = 0;
  m.closed = true;
  m.puncture_face.clear();
  return m;
}

Word Model::relator() const {
  Word r;
  for (int h = 0; h < genus; ++h) {
    int a = letter(gen_a(h)), b = letter(gen_b(h));
    r.insert(r.end(), {a, b, -a, -b});
  }
  int nx = closed ? 0 : npunct - 1;
  for (int j = 0; j < nx; ++j) r.push_back(letter(gen_x(j)));
  return words::reduced(r);
}

Word Model::puncture_loop(int j) const {
  require(!closed && j >= 0 && j < npunct, "puncture index");
  if (j < npunct - 1) return {letter(gen_x(j))};
  return words::inverse(relator());
}

// ---------------------------------------------------------------------------
// Chord-diagram engine
//
// A chord end on polygon side `side` at fraction pos has boundary coordinate
// beta = side + pos in [0, m). Retractions run along the polygon boundary
// without passing beta = 0 (the outer puncture sits just before side 0), so
// a chord from beta1 to beta2 retracts along the linear interval between
// them. The retraction of a chord is a list of partial edge segments; a
// segment on edge e from parameter p to q (p,q in [0,1], 0 = tail) is a path
// in the edge; segments with both ends in {0,1} spell generator letters.

namespace {

struct Seg {
  int edge;
  Rat a, b;
};

struct Poly {
  const Model* m;
  std::vector<int> side_of_half;
  int msides;

  explicit Poly(const Model& mm) : m(&mm) {
    msides = (int)mm.outer_cycle.size();
    side_of_half.assign(mm.graph.nh(), -1);
    for (int s = 0; s < msides; ++s) side_of_half[mm.outer_cycle[s]] = s;
  }
  int half(int side) const { return m->outer_cycle[side]; }
  int edge(int side) const { return half(side) / 2; }
  // edge parameter of a point on a side (tail side runs with the edge)
  Rat eparam(const ChordEnd& e) const {
    return half(e.side) % 2 == 0 ? e.pos : 1 - e.pos;
  }
  Rat beta(const ChordEnd& e) const { return e.side + e.pos; }

  // Segment on side s from side-fraction u to v.
  Seg on_side(int s, const Rat& u, const Rat& v) const {
    if (half(s) % 2 == 0) return {edge(s), u, v};
    return {edge(s), 1 - u, 1 - v};
  }

  std::vector<Seg> retract(const Drawn::Chord& c) const {
    std::vector<Seg> out;
    if (c.from.side == c.to.side) {
      out.push_back(on_side(c.from.side, c.from.pos, c.to.pos));
      return out;
    }
    if (c.from.side < c.to.side) {
      out.push_back(on_side(c.from.side, c.from.pos, 1));
      for (int s = c.from.side + 1; s < c.to.side; ++s)
        out.push_back(on_side(s, 0, 1));
      out.push_back(on_side(c.to.side, 0, c.to.pos));
    } else {
      out.push_back(on_side(c.from.side, c.from.pos, 0));
      for (int s = c.from.side - 1; s > c.to.side; --s)
        out.push_back(on_side(s, 1, 0));
      out.push_back(on_side(c.to.side, 1, c.to.pos));
    }
    return out;
  }
};

bool is_cap(const Rat& q) { return q == 0 || q == 1; }

// Merge adjacent segments that continue on the same edge, drop spikes, and
// read off generator letters. Every joint between consecutive pieces of a
// retracted curve matches either at an interior crossing parameter or at a
// vertex cap, so the result is cap-to-cap.
Word segments_to_word(const std::vector<Seg>& in) {
  std::vector<Seg> st;
  for (Seg s : in) {
    while (true) {
      if (s.a == s.b) break;
      if (!st.empty() && st.back().edge == s.edge && st.back().b == s.a) {
        s.a = st.back().a;
        st.pop_back();
        continue;
      }
      st.push_back(s);
      break;
    }
  }
  Word w;
  for (const Seg& s : st) {
    if (s.a == s.b) continue;
    require(is_cap(s.a) && is_cap(s.b),
            "drawn curve: segment does not close at the vertex");
    w.push_back(s.a == 0 ? letter(s.edge) : -letter(s.edge));
  }
  return words::reduced(w);
}

struct Crossing {
  int edge;
  Rat t;
  int sign;   // +1 if the departing chord end is on the tail side
  int joint;  // crossing between chord `joint` and chord `joint+1`
};

struct Diagram {
  Poly poly;
  std::vector<std::vector<Seg>> chord_segs;
  std::vector<Crossing> crossings;

  Diagram(const Model& m, const Drawn& c) : poly(m) {
    int N = (int)c.chords.size();
    for (const auto& ch : c.chords) chord_segs.push_back(poly.retract(ch));
    for (int i = 0; i < N; ++i) {
      const auto& dep = c.chords[(i + 1) % N].from;
      crossings.push_back({poly.edge(dep.side), poly.eparam(dep),
                           poly.half(dep.side) % 2 == 0 ? 1 : -1, i});
    }
  }

  // The full curve as a path starting just after crossing `joint`,
  // reversed for eps = -1. Starts and ends at the crossing parameter.
  std::vector<Seg> insertion(int joint, int eps) const {
    int N = (int)chord_segs.size();
    std::vector<Seg> out;
    for (int k = 1; k <= N; ++k) {
      const auto& cs = chord_segs[(joint + k) % N];
      out.insert(out.end(), cs.begin(), cs.end());
    }
    if (eps < 0) {
      std::reverse(out.begin(), out.end());
      for (Seg& s : out) std::swap(s.a, s.b);
    }
    return out;
  }
};

}  // namespace

void validate_drawn(const Model& m, const Drawn& c) {
  Poly poly(m);
  int N = (int)c.chords.size();
  require(N >= 1, "drawn curve: empty");
  std::set<Rat> betas;
  for (const auto& ch : c.chords) {
    for (const ChordEnd* e : {&ch.from, &ch.to}) {
      require(e->side >= 0 && e->side < poly.msides, "drawn curve: bad side");
      require(e->pos > 0 && e->pos < 1, "drawn curve: position not in (0,1)");
      require(poly.side_of_half[FatGraph::pair(poly.half(e->side))] >= 0,
              "drawn curve: edge leaves the outer polygon");
      require(betas.insert(poly.beta(*e)).second,
              "drawn curve: coincident endpoints");
    }
  }
  for (int i = 0; i < N; ++i) {
    const auto& to = c.chords[i].to;
    const auto& fr = c.chords[(i + 1) % N].from;
    require(poly.half(fr.side) == FatGraph::pair(poly.half(to.side)) &&
                fr.pos == 1 - to.pos,
            "drawn curve: chords do not chain across an edge");
  }
  for (int i = 0; i < N; ++i) {
    Rat lo = poly.beta(c.chords[i].from), hi = poly.beta(c.chords[i].to);
    if (hi < lo) std::swap(lo, hi);
    for (int j = i + 1; j < N; ++j) {
      int inside = 0;
      for (const ChordEnd* e : {&c.chords[j].from, &c.chords[j].to}) {
        Rat q = poly.beta(*e);
        if (lo < q && q < hi) ++inside;
      }
      require(inside != 1, "drawn curve: chords cross");
    }
  }
}

Word drawn_word(const Model& m, const Drawn& c) {
  validate_drawn(m, c);
  Diagram d(m, c);
  // Flatten, rotating to start at a corner (a cap endpoint) if one exists;
  // otherwise the curve never meets the vertex and its word is trivial.
  std::vector<Seg> flat;
  for (const auto& cs : d.chord_segs) flat.insert(flat.end(), cs.begin(), cs.end());
  int start = -1;
  for (int i = 0; i < (int)flat.size(); ++i)
    if (is_cap(flat[i].a)) {
      start = i;
      break;
    }
  if (start < 0) return {};
  std::vector<Seg> rot(flat.begin() + start, flat.end());
  rot.insert(rot.end(), flat.begin(), flat.begin() + start);
  return segments_to_word(rot);
}

Endo twist_images(const Model& m, const Drawn& c, int dir) {
  validate_drawn(m, c);
  require(dir == 1 || dir == -1, "twist direction");
  Diagram d(m, c);

  Endo out;
  out.ngens = m.ngens();
  for (int e = 0; e < m.ngens(); ++e) {
    std::vector<const Crossing*> xs;
    for (const auto& x : d.crossings)
      if (x.edge == e) xs.push_back(&x);
    std::sort(xs.begin(), xs.end(),
              [](const Crossing* p, const Crossing* q) { return p->t < q->t; });
    std::vector<Seg> segs;
    Rat cur = 0;
    for (const Crossing* x : xs) {
      segs.push_back({e, cur, x->t});
      auto ins = d.insertion(x->joint, dir * x->sign);
      segs.insert(segs.end(), ins.begin(), ins.end());
      cur = x->t;
    }
    segs.push_back({e, cur, 1});
    out.img.push_back(segments_to_word(segs));
  }
  return out;
}

MappingClass drawn_twist(const Model& m, const Drawn& c,
                         const std::string& name) {
  MappingClass mc{name, twist_images(m, c, 1), twist_images(m, c, -1)};
  mc.check();
  return mc;
}

// Handle h occupies outer polygon sides 4*(g-1-h) .. 4*(g-1-h)+3 in the
// order eta b_h, eta a_h, tau b_h, tau a_h.
static int hblock(const Model& m, int h) {
  require(m.genus >= 1 && h >= 0 && h < m.genus, "handle index");
  return 4 * (m.genus - 1 - h);
}

Drawn a_curve(const Model& m, int h) {
  int p = hblock(m, h);
  Drawn c{{{{p + 2, Rat(1, 2)}, {p + 0, Rat(1, 2)}}}};
  validate_drawn(m, c);
  return c;
}

Drawn b_curve(const Model& m, int h) {
  int p = hblock(m, h);
  Drawn c{{{{p + 3, Rat(1, 2)}, {p + 1, Rat(1, 2)}}}};
  validate_drawn(m, c);
  return c;
}

Drawn chain_curve(const Model& m, int h) {
  require(h + 1 < m.genus, "chain curve needs two handles");
  int p = hblock(m, h + 1);
  Drawn c{{{{p + 0, Rat(1, 2)}, {p + 6, Rat(1, 2)}},
           {{p + 4, Rat(1, 2)}, {p + 2, Rat(1, 2)}}}};
  validate_drawn(m, c);
  return c;
}

// ---------------------------------------------------------------------------
// Sphere mapping classes

MappingClass half_twist(const Model& m, int k) {
  require(m.genus == 0 && !m.closed, "half twists live on the sphere");
  int n = m.npunct;
  require(k >= 0 && k <= n - 2, "half twist index");
  Endo fwd = Endo::identity(m.ngens()), bwd = fwd;
  if (k < n - 2) {
    int xk = letter(m.gen_x(k)), xk1 = letter(m.gen_x(k + 1));
    fwd.img[k] = {xk, xk1, -xk};
    fwd.img[k + 1] = {xk};
    bwd.img[k] = {xk1};
    bwd.img[k + 1] = {-xk1, xk, xk1};
  } else {
    int xk = letter(m.gen_x(k));
    Word outer = words::inverse(m.relator());
    fwd.img[k] = words::reduced(words::concat({xk}, words::concat(outer, {-xk})));
    bwd.img[k] = outer;
  }
  MappingClass mc{"s" + std::to_string(k + 1), fwd, bwd};
  mc.check();
  return mc;
}

// Pushes puncture i+1 rightwards to slot j. Empty when j = i+1.
static MappingClass slide(const Model& m, int i, int j) {
  MappingClass phi{"", Endo::identity(m.ngens()), Endo::identity(m.ngens())};
  for (int k = i + 1; k <= j - 1; ++k)
    phi = MappingClass::compose(half_twist(m, k), phi);
  return phi;
}

Word chord_word(const Model& m, int i, int j) {
  require(m.genus == 0 && 0 <= i && i < j && j < m.npunct, "chord punctures");
  Word base = words::concat(m.puncture_loop(i), m.puncture_loop(i + 1));
  return slide(m, i, j).fwd.apply(base);
}

MappingClass chord_twist(const Model& m, int i, int j) {
  require(m.genus == 0 && 0 <= i && i < j && j < m.npunct, "chord punctures");
  MappingClass s = half_twist(m, i);
  MappingClass tw = MappingClass::compose(s, s);
  MappingClass phi = slide(m, i, j);
  MappingClass out =
      MappingClass::compose(phi, MappingClass::compose(tw, phi.inverse()));
  out.name = "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  out.check();
  return out;
}

// ---------------------------------------------------------------------------
// Families

std::vector<MappingClass> standard_classes(const Model& m) {
  std::vector<MappingClass> out;
  if (m.genus == 0) {
    for (int k = 0; k <= m.npunct - 2; ++k) out.push_back(half_twist(m, k));
    return out;
  }
  for (const auto& cv : standard_curves(m)) out.push_back(cv.twist);
  return out;
}

std::vector<NamedCurve> standard_curves(const Model& m) {
  std::vector<NamedCurve> out;
  if (m.genus == 0) {
    for (int k = 0; k + 1 < m.npunct; ++k)
      out.push_back({"c(" + std::to_string(k + 1) + "," + std::to_string(k + 2) + ")",
                     chord_word(m, k, k + 1), chord_twist(m, k, k + 1)});
    return out;
  }
  auto add = [&](const std::string& name, const Drawn& d) {
    out.push_back({name, drawn_word(m, d), drawn_twist(m, d, "T(" + name + ")")});
  };
  for (int h = 0; h < m.genus; ++h) {
    add("a" + std::to_string(h + 1), a_curve(m, h));
    add("b" + std::to_string(h + 1), b_curve(m, h));
  }
  for (int h = 0; h + 1 < m.genus; ++h)
    add("c" + std::to_string(h + 1), chain_curve(m, h));
  return out;
}

}  // namespace symloop::surface
