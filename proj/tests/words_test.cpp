#include <doctest.h>

#include "symloop/words.hpp"

using namespace symloop;
using words::Endo;
using words::MappingClass;
using words::Word;

namespace {
const std::vector<std::string> names{"a1", "b1"};
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  // a b b^-1 a^-1 a -> a   (letters: a=+1, b=+2)
  CHECK(words::reduced({1, 2, -2, -1, 1}) == Word{1});
  CHECK(words::reduced({1, -1}) == Word{});
  CHECK(words::reduced({}) == Word{});
  // nested cancellation
  CHECK(words::reduced({1, 2, -2, -1}) == Word{});
}

TEST_CASE("cyclic reduction trims conjugating ends") {
  // a^-1 b a is cyclically reduced to b
  CHECK(words::cyclically_reduced({-1, 2, 1}) == Word{2});
  CHECK(words::cyclically_reduced({1, 2}) == Word{1, 2});
}

TEST_CASE("inverse and concatenation") {
  Word w{1, -2, 1};
  CHECK(words::reduced(words::concat(w, words::inverse(w))) == Word{});
  CHECK(words::inverse(w) == Word{-1, 2, -1});
}

TEST_CASE("canonical loop identifies rotations and inversion") {
  Word ab{1, 2};
  CHECK(words::canonical_loop({2, 1}) == words::canonical_loop(ab));
  CHECK(words::canonical_loop({-2, -1}) == words::canonical_loop(ab));
  CHECK(words::canonical_loop(words::conjugate({1}, {2, 2})) ==
        words::canonical_loop({2, 2}));  // conjugates agree
  CHECK(words::canonical_loop({1}) != words::canonical_loop({2}));
}

TEST_CASE("exponent vector abelianizes") {
  auto v = words::exponent_vector({1, 2, -1, 2, 2}, 2);
  CHECK(v == std::vector<long>{0, 3});
}

TEST_CASE("parse and show round trip") {
  Word w = words::parse("a1 b1^-1 a1^-1", names);
  CHECK(w == Word{1, -2, -1});
  CHECK(words::show(w, names) == "a1 b1^-1 a1^-1");
  CHECK_THROWS(words::parse("c3", names));
}

TEST_CASE("endomorphism substitution and composition") {
  // phi: a -> a b, b -> b
  Endo phi{2, {{1, 2}, {2}}};
  CHECK(phi.apply({1}) == Word{1, 2});
  CHECK(phi.apply({-1}) == Word{-2, -1});
  Endo id = Endo::identity(2);
  CHECK(Endo::compose(phi, id) == phi);
  // phi^2: a -> a b b
  CHECK(Endo::compose(phi, phi).apply({1}) == Word{1, 2, 2});
}

TEST_CASE("mapping class verifies its inverse") {
  Endo fwd{2, {{1, 2}, {2}}};
  Endo bwd{2, {{1, -2}, {2}}};
  MappingClass mc{"t", fwd, bwd};
  CHECK_NOTHROW(mc.check());
  MappingClass broken{"t", fwd, fwd};
  CHECK_THROWS_AS(broken.check(), InvariantError);
}

TEST_CASE("substitution length budget throws") {
  Endo doubling{1, {{1, 1}}};
  Word w{1};
  // 2^40 letters exceeds any sane budget
  Endo phi = doubling;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 40; ++i) phi = Endo::compose(doubling, phi);
        return phi.apply(w, 1u << 20);
      }(),
      BudgetError);
}
