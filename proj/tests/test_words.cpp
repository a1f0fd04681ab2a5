#include <doctest.h>

#include "orbtop/words.hpp"

using namespace orbtop;

TEST_SUITE_BEGIN("words");

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(free_reduce(parse_word("+1 -1")).empty());
  CHECK(free_reduce(parse_word("+1 -2 +2 -1")).empty());
  CHECK(free_reduce(parse_word("+3 +1 -1 -3 +2")) == parse_word("+2"));
  // Cancellation can cascade through the stack.
  CHECK(free_reduce(parse_word("+1 +2 -2 -1 +1")) == parse_word("+1"));
  CHECK(free_reduce(parse_word("-4 +1 +4 -1 -1")) == parse_word("-4 +1 +4 -1 -1"));
}

TEST_CASE("cyclic reduction also cancels across the wrap-around") {
  CHECK(cyclic_reduce(parse_word("+2 +1 -2")) == parse_word("+1"));
  CHECK(cyclic_reduce(parse_word("-1 +2 +2 +1")) == parse_word("+2 +2"));
  CHECK(cyclic_reduce(parse_word("+1 -1")).empty());
  CHECK(is_cyclically_reduced(parse_word("-4 +1 +4 -1 -1")));
  CHECK_FALSE(is_cyclically_reduced(parse_word("+2 +1 -2")));
  CHECK(is_cyclically_reduced(Word{}));
}

TEST_CASE("the standard conjugation relator reduces to a generator killer at a fixed point") {
  // (-i, +i, +i, -i, -i) with j = i frees down to (-i).
  Word w = {neg(7), pos(7), pos(7), neg(7), neg(7)};
  CHECK(cyclic_reduce(w) == Word{neg(7)});
}

TEST_CASE("exponent sums drop zero entries") {
  auto sums = exponent_sums(parse_word("-4 +1 +4 -1 -1"));
  REQUIRE(sums.size() == 1);
  CHECK(sums.at(1) == -1);

  auto torus = exponent_sums(parse_word("+1 +2 -1 -2"));
  CHECK(torus.empty());

  auto mixed = exponent_sums(parse_word("+5 +5 -3 +0"));
  CHECK(mixed.size() == 3);
  CHECK(mixed.at(5) == 2);
  CHECK(mixed.at(3) == -1);
  CHECK(mixed.at(0) == 1);
}

TEST_CASE("format and parse round trip, including generator 0") {
  const char* samples[] = {"-4 +1 +4 -1 -1", "+0 -0 +17", "+123456789012345678901"};
  for (const char* s : samples) CHECK(format_word(parse_word(s)) == s);
  CHECK(format_word(Word{}).empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("  +1   -2  ") == Word{pos(1), neg(2)});
}

TEST_CASE("letters require explicit signs and digits") {
  CHECK_THROWS_AS(parse_word("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("+1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("+1a"), std::invalid_argument);
}

TEST_SUITE_END();
