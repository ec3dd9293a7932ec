#include <doctest.h>

#include <set>

#include "symloop/homology.hpp"

using namespace symloop;
using cover::CoverSpec;
using la::Mat;
using la::Rat;
using la::Vec;
using perm::Perm;
using words::Word;

namespace {
Perm pc(const std::string& s, int deg) {
  auto p = Perm::parse_cycles(s, deg);
  REQUIRE(p.has_value());
  return *p;
}
cover::Cover trivial_cover(const surface::Model& m) {
  return cover::derive(
      m, CoverSpec{1, std::vector<Perm>(m.ngens(), Perm::identity(1))});
}
bool is_skew(const Mat& o) {
  for (int i = 0; i < o.nr; ++i)
    for (int j = 0; j < o.nc; ++j)
      if (o.at(i, j) != -o.at(j, i)) return false;
  return true;
}
bool preserves(const Mat& o, const Mat& m) {
  return m.transpose() * o * m == o;
}
}  // namespace

TEST_CASE("open H1 of the one-holed torus") {
  auto cv = trivial_cover(surface::punctured_model(1, 1));
  auto h = homology::h1_open(cv);
  CHECK(h.rank == 2);  // one vertex: every edge is a chord
  CHECK(h.chords == std::vector<int>{0, 1});
  auto omega = homology::intersection_form_open(cv, h);
  // frozen orientation convention: <a1, b1> = +1
  CHECK(omega.at(0, 1) == Rat(1));
  CHECK(omega.at(1, 0) == Rat(-1));
  CHECK(omega.at(0, 0) == Rat(0));
}

TEST_CASE("capping the one-punctured genus-2 model") {
  auto cv = trivial_cover(surface::punctured_model(2, 1));
  auto h = homology::h1_open(cv);
  CHECK(h.rank == 4);
  SUBCASE("boundary faces kept: degenerate form") {
    auto H = homology::cap(cv, h, false);
    CHECK(H.dim == 4);
    CHECK_FALSE(H.closed);
  }
  SUBCASE("filled: the standard genus-2 symplectic form") {
    auto H = homology::cap(cv, h, true);
    CHECK(H.dim == 4);
    CHECK(H.closed);
    CHECK(is_skew(H.omega));
    CHECK(la::rank(H.omega) == 4);
    CHECK(H.omega.at(0, 1) == Rat(1));  // <a1,b1>
    CHECK(H.omega.at(2, 3) == Rat(1));  // <a2,b2>
    CHECK(H.omega.at(0, 2) == Rat(0));
    CHECK(H.omega.at(0, 3) == Rat(0));
    CHECK(H.proj * H.include == Mat::identity(4));
  }
}

TEST_CASE("sphere homology dies when every face is filled") {
  auto cv = trivial_cover(surface::punctured_model(0, 4));
  auto h = homology::h1_open(cv);
  CHECK(h.rank == 3);
  auto H = homology::cap(cv, h, true);
  CHECK(H.dim == 0);
  auto Hb = homology::cap(cv, h, false);
  CHECK(Hb.dim == 3);  // punctured: nothing filled
  CHECK(la::rank(Hb.omega) == 0);  // disjoint puncture loops never cross
}

TEST_CASE("chain classes and tree loops in a connected cover") {
  auto m = surface::punctured_model(1, 1);
  CoverSpec c{3, {pc("(1 2 3)", 3), pc("()", 3)}};
  auto cv = cover::derive(m, c);
  auto h = homology::h1_open(cv);
  // chi = 3*(-1): rank = 1 - chi_open... V=3, E=6, rank = E - V + 1 = 4
  CHECK(h.rank == 4);
  for (int v = 0; v < 3; ++v) {
    Word loop = homology::tree_loop_through(h, v);
    if (v == 0) CHECK(loop.empty());
    Vec cls = homology::chain_class(h, loop);
    for (const auto& x : cls) CHECK(x == Rat(0));  // tree loops bound
  }
  // each basis loop has class = unit vector at its own position
  for (size_t i = 0; i < h.loops.size(); ++i) {
    Vec cls = homology::chain_class(h, h.loops[i]);
    for (int j = 0; j < (int)cls.size(); ++j)
      CHECK(cls[j] == Rat(j == (int)i ? 1 : 0));
  }
}

TEST_CASE("lift classes: powers wind around the fiber component") {
  auto m = surface::punctured_model(1, 1);
  CoverSpec c{3, {pc("(1 2 3)", 3), pc("()", 3)}};
  auto cv = cover::derive(m, c);
  auto h = homology::h1_open(cv);
  Word a = words::parse("a1", m.gen_names);
  Word b = words::parse("b1", m.gen_names);
  // a1 cycles all three sheets: one component, closing after 3 laps. Its
  // chain e0 e1 e2 meets only chord 2 (the tree took edges 0 and 1), so the
  // class is the first basis vector no matter the starting sheet.
  Vec ca = homology::lift_class_open(cv, h, a, 0);
  CHECK(ca == Vec{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(homology::lift_class_open(cv, h, a, 1) == ca);
  // b1 has trivial voltage: each sheet carries its own closed lift, the
  // chord copy of the b-edge at that sheet
  for (int s = 0; s < 3; ++s) {
    Vec cb = homology::lift_class_open(cv, h, b, s);
    Vec want(4, Rat(0));
    want[1 + s] = Rat(1);  // chords are {2,3,4,5}; edge 3+s sits at 1+s
    CHECK(cb == want);
  }
}

TEST_CASE("labels name generator copies by sheet") {
  auto m = surface::punctured_model(1, 1);
  CoverSpec c{2, {pc("(1 2)", 2), pc("()", 2)}};
  auto cv = cover::derive(m, c);
  auto H = homology::cap(cv, homology::h1_open(cv), true);
  REQUIRE(H.dim == (int)H.labels.size());
  for (const auto& l : H.labels) {
    auto hash = l.find('#');
    REQUIRE(hash != std::string::npos);
    std::string gen = l.substr(0, hash);
    CHECK((gen == "a1" || gen == "b1"));
  }
}

TEST_CASE("deck matrices are symplectic and form a representation") {
  auto m = surface::closed_model(2);
  CoverSpec c{3, {pc("(1 2 3)", 3), pc("()", 3), pc("()", 3), pc("()", 3)}};
  auto cv = cover::derive(m, c);
  auto H = homology::cap(cv, homology::h1_open(cv), true);
  CHECK(H.dim == 8);  // genus 4 upstairs
  CHECK(is_skew(H.omega));
  CHECK(la::rank(H.omega) == 8);
  auto da = cover::deck_action(cv);
  REQUIRE(da.regular);
  auto mats = homology::deck_matrices(H, da);
  REQUIRE(mats.size() == 3);
  for (const auto& M : mats) CHECK(preserves(H.omega, M));
  // the representation property, using the group's own multiplication
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(mats[i] * mats[j] == mats[da.group.mul(i, j)]);
  CHECK(mats[0] == Mat::identity(8));  // elements[0] is the identity
}

TEST_CASE("deck character of an unramified cover of a closed surface") {
  // H1(cover) = Q^2 + Q[G]^(2g-2): the trace of every nontrivial deck
  // element is 2, and of the identity 2 + |G|(2g-2).
  auto m = surface::closed_model(2);
  SUBCASE("Z/3") {
    CoverSpec c{3, {pc("(1 2 3)", 3), pc("()", 3), pc("()", 3), pc("()", 3)}};
    auto cv = cover::derive(m, c);
    auto H = homology::cap(cv, homology::h1_open(cv), true);
    auto mats = homology::deck_matrices(H, cover::deck_action(cv));
    for (size_t i = 0; i < mats.size(); ++i) {
      Rat tr(0);
      for (int d = 0; d < mats[i].nr; ++d) tr += mats[i].at(d, d);
      CHECK(tr == Rat(i == 0 ? 2 + 3 * 2 : 2));
    }
  }
  SUBCASE("Z/2 x Z/2") {
    CoverSpec c{4,
                {pc("(1 2)(3 4)", 4), pc("(1 3)(2 4)", 4), pc("()", 4),
                 pc("()", 4)}};
    auto cv = cover::derive(m, c);
    auto da = cover::deck_action(cv);
    REQUIRE(da.regular);
    auto H = homology::cap(cv, homology::h1_open(cv), true);
    CHECK(H.dim == 2 + 4 * 2);
    auto mats = homology::deck_matrices(H, da);
    for (size_t i = 0; i < mats.size(); ++i) {
      Rat tr(0);
      for (int d = 0; d < mats[i].nr; ++d) tr += mats[i].at(d, d);
      CHECK(tr == Rat(da.sheets[i].is_identity() ? 10 : 2));
    }
  }
}

TEST_CASE("intersection numbers of chains agree with the form") {
  auto cv = trivial_cover(surface::punctured_model(2, 1));
  auto h = homology::h1_open(cv);
  auto omega = homology::intersection_form_open(cv, h);
  for (size_t i = 0; i < h.loops.size(); ++i)
    for (size_t j = 0; j < h.loops.size(); ++j)
      CHECK(homology::intersect_chains(cv, h.loops[i], h.loops[j]) ==
            omega.at((int)i, (int)j));
}
