#include "symloop/homology.hpp"

#include <algorithm>
#include <utility>

#include "symloop/base.hpp"

namespace symloop::homology {

using surface::face_letter;

OpenH1 h1_open(const Cover& cv) {
  const auto& g = cv.graph;
  OpenH1 h;
  h.parent.assign(g.nv, -1);
  h.parent_letter.assign(g.nv, 0);
  h.chord_pos.assign(g.ne, -1);

  // BFS from sheet 0; adjacency scanned in edge-index order, forward
  // direction first, so the tree is reproducible.
  std::vector<std::vector<std::pair<int, int>>> adj(g.nv);
  for (int e = 0; e < g.ne; ++e) {
    int t = g.vert[2 * e], hd = g.vert[2 * e + 1];
    adj[t].push_back({hd, words::letter(e)});
    adj[hd].push_back({t, words::letter(e, true)});
  }
  std::vector<char> seen(g.nv, 0);
  std::vector<char> tree(g.ne, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (auto [w, l] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        tree[words::gen_of(l)] = 1;
        h.parent[w] = v;
        h.parent_letter[w] = l;
        queue.push_back(w);
      }
  }
  for (char s : seen) require(s, "cover is not connected");

  for (int e = 0; e < g.ne; ++e)
    if (!tree[e]) {
      h.chord_pos[e] = (int)h.chords.size();
      h.chords.push_back(e);
    }
  h.rank = (int)h.chords.size();
  require(h.rank == 1 - g.euler_open(), "open rank disagrees with Euler count");

  auto path_from_root = [&](int v) {
    Word up;
    for (int u = v; h.parent[u] != -1; u = h.parent[u])
      up.push_back(h.parent_letter[u]);
    return Word(up.rbegin(), up.rend());
  };
  for (int e : h.chords) {
    Word loop = path_from_root(g.vert[2 * e]);
    loop.push_back(words::letter(e));
    Word back = path_from_root(g.vert[2 * e + 1]);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
      loop.push_back(-*it);
    h.loops.push_back(std::move(loop));
  }

  h.boundary = Mat((int)cv.faces.size(), h.rank);
  for (int fi = 0; fi < (int)cv.faces.size(); ++fi) {
    Word w;
    for (int half : cv.faces[fi].cycle) w.push_back(face_letter(half));
    h.boundary.row[fi] = chain_class(h, w);
  }
  return h;
}

Vec chain_class(const OpenH1& h, const Word& edge_letters) {
  Vec c(h.rank, Rat(0));
  for (int l : edge_letters) {
    int pos = h.chord_pos[words::gen_of(l)];
    if (pos >= 0) c[pos] += l > 0 ? 1 : -1;
  }
  return c;
}

Word tree_loop_through(const OpenH1& h, int v) {
  Word up;
  for (int u = v; h.parent[u] != -1; u = h.parent[u])
    up.push_back(h.parent_letter[u]);
  Word out(up.rbegin(), up.rend());
  for (int l : up) out.push_back(-l);
  return words::reduced(out);
}

namespace {

// Angular position on the circle around a vertex: rotation rank of the
// half-edge, then the strand slot across the edge. Scanning ccw through the
// band of a tail half meets slots in increasing order, through a head half
// in decreasing order (the band is mirrored there).
using Key = std::pair<int, int>;

struct Passage {
  Key arr, dep;
};

// z strictly inside the ccw arc from x to y.
bool ccw_between(const Key& x, const Key& y, const Key& z) {
  if (x < y) return x < z && z < y;
  return z > x || z < y;
}

std::vector<std::vector<Passage>> passages_by_vertex(
    const Cover& cv, const std::vector<int>& rank_of_half, const Word& w,
    std::vector<int>* slot_counter) {
  const auto& g = cv.graph;
  std::vector<std::vector<Passage>> by_vertex(g.nv);
  if (w.empty()) return by_vertex;
  int n = (int)w.size();
  std::vector<int> slot(n);
  for (int i = 0; i < n; ++i) slot[i] = ++(*slot_counter)[words::gen_of(w[i])];
  auto key = [&](int half, int s) {
    return Key{rank_of_half[half], half % 2 == 0 ? s : -s};
  };
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    int arr_half = 2 * words::gen_of(w[i]) + (w[i] > 0 ? 1 : 0);
    int dep_half = 2 * words::gen_of(w[j]) + (w[j] > 0 ? 0 : 1);
    require(g.vert[arr_half] == g.vert[dep_half],
            "edge chain is not a closed path");
    by_vertex[g.vert[arr_half]].push_back(
        {key(arr_half, slot[i]), key(dep_half, slot[j])});
  }
  return by_vertex;
}

std::vector<int> half_ranks(const Cover& cv) {
  std::vector<int> rank_of_half(cv.graph.nh(), 0);
  for (const auto& cyc : cv.graph.vertex_cycles())
    for (int i = 0; i < (int)cyc.size(); ++i) rank_of_half[cyc[i]] = i;
  return rank_of_half;
}

Rat intersect_with_ranks(const Cover& cv, const std::vector<int>& ranks,
                         const Word& a, const Word& b) {
  std::vector<int> slots(cv.graph.ne, 0);
  auto pa = passages_by_vertex(cv, ranks, a, &slots);
  auto pb = passages_by_vertex(cv, ranks, b, &slots);
  long total = 0;
  for (int v = 0; v < cv.graph.nv; ++v)
    for (const Passage& p : pa[v])
      for (const Passage& q : pb[v]) {
        bool in1 = ccw_between(p.arr, p.dep, q.arr);
        bool in2 = ccw_between(p.arr, p.dep, q.dep);
        if (in1 != in2) total += in1 ? 1 : -1;
      }
  return Rat(total);
}

}  // namespace

Rat intersect_chains(const Cover& cv, const Word& a, const Word& b) {
  return intersect_with_ranks(cv, half_ranks(cv), a, b);
}

Mat intersection_form_open(const Cover& cv, const OpenH1& h) {
  auto ranks = half_ranks(cv);
  Mat omega(h.rank, h.rank);
  for (int i = 0; i < h.rank; ++i)
    for (int j = i + 1; j < h.rank; ++j) {
      Rat x = intersect_with_ranks(cv, ranks, h.loops[i], h.loops[j]);
      omega.at(i, j) = x;
      omega.at(j, i) = -x;
    }
  return omega;
}

HomologySpace cap(const Cover& cv, const OpenH1& h, bool fill_all) {
  HomologySpace H;
  H.open = h;
  for (int fi = 0; fi < (int)cv.faces.size(); ++fi) {
    const auto& f = cv.faces[fi];
    if (f.puncture < 0 || f.branch || fill_all) H.filled_faces.push_back(fi);
  }
  H.closed = H.filled_faces.size() == cv.faces.size();

  Mat rows((int)H.filled_faces.size(), h.rank);
  for (int i = 0; i < rows.nr; ++i) rows.row[i] = h.boundary.row[H.filled_faces[i]];
  std::vector<int> pivots;
  int brank = la::rref(rows, &pivots);
  int expected = H.closed ? (int)cv.faces.size() - 1 : (int)H.filled_faces.size();
  require(brank == expected, "filled boundary classes have unexpected rank");

  std::vector<char> is_pivot(h.rank, 0);
  for (int p : pivots) is_pivot[p] = 1;
  for (int c = 0; c < h.rank; ++c)
    if (!is_pivot[c]) H.kept.push_back(c);
  H.dim = (int)H.kept.size();
  if (H.closed)
    require(H.dim == 2 - cv.graph.euler_capped(),
            "capped dimension disagrees with Euler count");

  H.proj = Mat(H.dim, h.rank);
  for (int i = 0; i < H.dim; ++i) H.proj.at(i, H.kept[i]) = 1;
  for (int k = 0; k < brank; ++k)
    for (int i = 0; i < H.dim; ++i)
      H.proj.at(i, pivots[k]) = -rows.at(k, H.kept[i]);
  H.include = Mat(h.rank, H.dim);
  for (int i = 0; i < H.dim; ++i) H.include.at(H.kept[i], i) = 1;

  Mat omega_open = intersection_form_open(cv, h);
  H.omega = Mat(H.dim, H.dim);
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < H.dim; ++j)
      H.omega.at(i, j) = omega_open.at(H.kept[i], H.kept[j]);

  for (int c : H.kept) {
    int e = h.chords[c];
    H.labels.push_back(cv.base.gen_names[cv.base_edge(e)] + "#" +
                       std::to_string(cv.sheet_of_edge(e)));
  }
  return H;
}

Vec lift_class_open(const Cover& cv, const OpenH1& h, const Word& w,
                    int sheet) {
  Word letters;
  int s = sheet;
  do {
    auto leg = cover::lift_path(cv, w, s);
    letters.insert(letters.end(), leg.letters.begin(), leg.letters.end());
    s = leg.end_sheet;
  } while (s != sheet);
  return chain_class(h, letters);
}

std::vector<Mat> deck_matrices(const HomologySpace& H,
                               const cover::DeckAction& da) {
  require(da.regular, "deck matrices need a regular cover");
  const OpenH1& h = H.open;
  std::vector<Mat> out;
  for (const perm::Perm& ep : da.edges) {
    Mat open_map(h.rank, h.rank);
    for (int i = 0; i < h.rank; ++i)
      for (int l : h.loops[i]) {
        int pos = h.chord_pos[ep(words::gen_of(l))];
        if (pos >= 0) open_map.at(pos, i) += l > 0 ? 1 : -1;
      }
    Mat m = H.proj * open_map * H.include;
    require(m.transpose() * H.omega * m == H.omega,
            "deck matrix does not preserve the intersection form");
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace symloop::homology
