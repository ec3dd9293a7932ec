#include <doctest.h>

#include "symloop/surface.hpp"

using namespace symloop;
using surface::Model;
using words::Word;

TEST_CASE("one-vertex models have the right face structure") {
  // S_{g,n}: one vertex, 2g + n - 1 edges, n faces once capped.
  for (int g = 0; g <= 3; ++g)
    for (int n = (g == 0 ? 3 : 1); n <= 4; ++n) {
      Model m = surface::punctured_model(g, n);
      CAPTURE(g);
      CAPTURE(n);
      CHECK(m.graph.nv == 1);
      CHECK(m.graph.ne == 2 * g + n - 1);
      CHECK((int)m.graph.faces().size() == n);
      CHECK(m.graph.euler_capped() == 2 - 2 * g);
      CHECK_NOTHROW(m.graph.validate());
    }
}

TEST_CASE("closed model is the one-holed model plus the relator condition") {
  Model m = surface::closed_model(2);
  CHECK(m.closed);
  CHECK(m.npunct == 0);
  CHECK(m.ngens() == 4);
  CHECK((int)m.graph.faces().size() == 1);
  // relator = [a1,b1][a2,b2]
  CHECK(m.relator() == Word{1, 2, -1, -2, 3, 4, -3, -4});
}

TEST_CASE("puncture loops multiply to the inverse relator") {
  Model m = surface::punctured_model(1, 2);
  // x1 * (loop around last puncture) ~ relator^-1 relations: the last loop
  // is ([a1,b1] x1)^-1.
  Word last = m.puncture_loop(1);
  CHECK(words::reduced(words::concat(m.relator(), last)) == Word{});
  CHECK(words::canonical_loop(m.puncture_loop(0)) ==
        words::canonical_loop(Word{3}));
}

TEST_CASE("standard twists are verified mapping classes") {
  for (auto [g, n] : {std::pair{1, 1}, {2, 1}, {0, 5}, {3, 2}}) {
    Model m = g == 0 ? surface::punctured_model(0, n)
                     : surface::punctured_model(g, n);
    for (const auto& mc : surface::standard_classes(m)) {
      CAPTURE(mc.name);
      CHECK_NOTHROW(mc.check());
    }
  }
}

TEST_CASE("a-twist acts on b1 as expected") {
  // tau_{a1}(b1) ~ b1 a1 up to free homotopy (orientation convention
  // frozen here).
  Model m = surface::punctured_model(1, 1);
  auto tw = surface::drawn_twist(m, surface::a_curve(m, 0), "ta1");
  Word image = tw.fwd.apply(words::parse("b1", m.gen_names));
  CHECK(words::canonical_loop(image) ==
        words::canonical_loop(words::parse("b1 a1", m.gen_names)));
  // and it fixes a1 up to homotopy
  Word ia = tw.fwd.apply(words::parse("a1", m.gen_names));
  CHECK(words::canonical_loop(ia) ==
        words::canonical_loop(words::parse("a1", m.gen_names)));
}

TEST_CASE("b-twist acts on a1") {
  Model m = surface::punctured_model(1, 1);
  auto tw = surface::drawn_twist(m, surface::b_curve(m, 0), "tb1");
  Word image = tw.fwd.apply(words::parse("a1", m.gen_names));
  // tau_{b1}(a1) is a1 b1^{+-1}; the sign pins the twist orientation.
  bool plus = words::canonical_loop(image) ==
              words::canonical_loop(words::parse("a1 b1", m.gen_names));
  bool minus = words::canonical_loop(image) ==
               words::canonical_loop(words::parse("a1 b1^-1", m.gen_names));
  CHECK((plus || minus));
}

TEST_CASE("chain curve abelianizes to the sum of neighbouring a-classes") {
  Model m = surface::punctured_model(2, 1);
  Word w = surface::drawn_word(m, surface::chain_curve(m, 0));
  auto v = words::exponent_vector(w, m.ngens());
  // class a1 + a2 up to global sign: gens ordered a1 b1 a2 b2
  bool plus = v == std::vector<long>{1, 0, 1, 0};
  bool minus = v == std::vector<long>{-1, 0, -1, 0};
  CHECK((plus || minus));
}

TEST_CASE("sphere half twists satisfy a braid relation") {
  Model m = surface::punctured_model(0, 5);
  auto s1 = surface::half_twist(m, 0);
  auto s2 = surface::half_twist(m, 1);
  using words::MappingClass;
  auto lhs = MappingClass::compose(s1, MappingClass::compose(s2, s1));
  auto rhs = MappingClass::compose(s2, MappingClass::compose(s1, s2));
  // compare as free-group endomorphisms up to homotopy on each generator
  for (int g = 0; g < m.ngens(); ++g) {
    CHECK(words::canonical_loop(lhs.fwd.img[g]) ==
          words::canonical_loop(rhs.fwd.img[g]));
  }
}

TEST_CASE("chord words enclose the right punctures") {
  Model m = surface::punctured_model(0, 6);
  // The chord around punctures {i, j} abelianizes to x_{i+1} + x_{j+1}
  // (indices into the generators x1..x5 of the first five punctures).
  auto v01 = words::exponent_vector(surface::chord_word(m, 0, 1), m.ngens());
  CHECK(v01 == std::vector<long>{1, 1, 0, 0, 0});
  auto v24 = words::exponent_vector(surface::chord_word(m, 2, 4), m.ngens());
  CHECK(v24 == std::vector<long>{0, 0, 1, 0, 1});
  // A chord reaching the outer puncture: x6 = -(x1+..+x5) in homology, so
  // the class of the {2,5} chord is x3 + x6 up to orientation.
  auto v25 = words::exponent_vector(surface::chord_word(m, 2, 5), m.ngens());
  bool plus = v25 == std::vector<long>{1, 1, 0, 1, 1};
  bool minus = v25 == std::vector<long>{-1, -1, 0, -1, -1};
  CHECK((plus || minus));
}

TEST_CASE("drawn curves validate and reject crossings") {
  Model m = surface::punctured_model(1, 1);
  CHECK_NOTHROW(surface::validate_drawn(m, surface::a_curve(m, 0)));
  CHECK_NOTHROW(surface::validate_drawn(m, surface::b_curve(m, 0)));
}
