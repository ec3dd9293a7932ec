#include <doctest.h>

#include "symloop/complexes.hpp"

using namespace symloop;
using cover::CoverSpec;
using la::Rat;
using perm::Perm;

namespace {
cover::Tower minimal_tower(int g, int extra = 0) {
  auto flip = *Perm::parse_cycles("(1 2)", 2);
  return cover::tower_from(
      g, extra, CoverSpec{2, std::vector<Perm>(2 * g + 1 + extra, flip)});
}
}  // namespace

TEST_CASE("four punctures: matchings vs curves diverge") {
  auto c = cx::chord_complex(4);
  CHECK(c.vertices.size() == 6);  // C(4,2)
  CHECK(c.matching_dim == 1);     // {0,1},{2,3} is a matching edge
  CHECK(c.curve_dim == 0);        // but the curve complex is 0-dimensional
  auto conn = cx::connectivity_report(c);
  CHECK(conn.components == 3);  // three complementary pairs, no mixing
  CHECK_FALSE(conn.connected);
}

TEST_CASE("five punctures: the Petersen graph") {
  auto c = cx::chord_complex(5);
  CHECK(c.vertices.size() == 10);
  for (const auto& adj : c.adjacent) CHECK(adj.size() == 3);  // 3-regular
  CHECK(c.matching_dim == 1);
  CHECK(c.curve_dim == 1);
  auto conn = cx::connectivity_report(c);
  CHECK(conn.connected);
  CHECK(conn.components == 1);
}

TEST_CASE("dimension grows with floor(n/2) - 1") {
  for (int n = 5; n <= 9; ++n) {
    auto c = cx::chord_complex(n);
    CHECK(c.curve_dim == n / 2 - 1);
    CHECK(c.matching_dim == n / 2 - 1);
    CHECK(c.vertices.size() == (size_t)(n * (n - 1) / 2));
    CHECK(cx::connectivity_report(c).connected);
  }
}

TEST_CASE("vertices are lexicographic normalized pairs") {
  auto c = cx::chord_complex(6);
  CHECK(c.vertices.front() == cx::Chord{0, 1});
  CHECK(c.vertices.back() == cx::Chord{4, 5});
  for (const auto& [i, j] : c.vertices) CHECK(i < j);
  // adjacency is symmetric disjointness
  for (size_t v = 0; v < c.vertices.size(); ++v)
    for (int w : c.adjacent[v]) {
      auto [a, b] = c.vertices[v];
      auto [x, y] = c.vertices[w];
      CHECK(a != x);
      CHECK(a != y);
      CHECK(b != x);
      CHECK(b != y);
    }
}

TEST_CASE("hyperelliptic rank check, genus 2 to 4") {
  struct Row {
    int g;
    long matchings, planar;
  };
  // (2g+1)!! perfect matchings; Catalan(g+1) non-crossing ones
  for (const auto& r : {Row{2, 15, 5}, Row{3, 105, 14}, Row{4, 945, 42}}) {
    auto hc = cx::hyperelliptic_dimension_check(r.g);
    CHECK(hc.ok);
    CHECK(hc.genus == r.g);
    CHECK(hc.chords == (2 * r.g + 2) * (2 * r.g + 1) / 2);
    CHECK(hc.zero_class_chords == 0);
    CHECK(hc.max_disjoint == r.g + 1);
    CHECK(hc.matchings == r.matchings);
    CHECK(hc.planar_matchings == r.planar);
    // each maximal disjoint family loses exactly one rank to the cut relation
    CHECK(hc.min_rank == r.g);
    CHECK(hc.max_rank == r.g);
    CHECK(hc.pairwise_zero);
  }
}

TEST_CASE("farey chains between chords") {
  SUBCASE("sharing an endpoint: direct step") {
    auto ch = cx::farey_chain({1, 2}, {1, 3}, 6);
    REQUIRE(ch.chords.size() == 2);
    CHECK(ch.chords.front() == cx::Chord{1, 2});
    CHECK(ch.chords.back() == cx::Chord{1, 3});
  }
  SUBCASE("disjoint pairs get one bridge") {
    auto ch = cx::farey_chain({1, 2}, {3, 4}, 6);
    REQUIRE(ch.chords.size() == 3);
    auto [a, b] = ch.chords[1];
    // the bridge shares one endpoint with each end
    CHECK((a == 1 || a == 2 || b == 1 || b == 2));
    CHECK((a == 3 || a == 4 || b == 3 || b == 4));
  }
}

TEST_CASE("chains lift to unimodular pairings upstairs") {
  auto t = minimal_tower(2);
  SUBCASE("neighbouring chords") {
    auto ck = cx::verify_chain_upstairs(t, cx::farey_chain({0, 1}, {1, 2}, 6));
    CHECK(ck.ok);
    REQUIRE(ck.consecutive.size() == 1);
    CHECK((ck.consecutive[0] == Rat(1) || ck.consecutive[0] == Rat(-1)));
    for (const auto& cls : ck.classes) CHECK_FALSE(la::is_zero_vec(cls));
  }
  SUBCASE("bridged chords") {
    auto ck = cx::verify_chain_upstairs(t, cx::farey_chain({0, 1}, {2, 3}, 6));
    CHECK(ck.ok);
    CHECK(ck.classes.size() == 3);
    CHECK(ck.consecutive.size() == 2);
  }
  SUBCASE("extra marked points are rejected") {
    auto te = minimal_tower(2, 1);  // 7 punctures, puncture 6 not Weierstrass
    cx::FareyChain bad{{{5, 6}}};
    CHECK_THROWS_AS(cx::verify_chain_upstairs(te, bad), InvariantError);
  }
}
