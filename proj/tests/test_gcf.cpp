#include <doctest.h>

#include <random>
#include <set>

#include "orbtop/errors.hpp"
#include "orbtop/gcf.hpp"

using namespace orbtop;

TEST_SUITE_BEGIN("gcf");

TEST_CASE("parsing the Collatz DSL yields the built-in Collatz function") {
  Gcf g = parse_gcf("mod 2\n0: (1/2)x + 0\n1: 3x + 1\n", "collatz");
  CHECK(g == collatz_gcf());
  CHECK(g.modulus == 2);
  CHECK(g.branches[0].a == Rational(1, 2));
  CHECK(g.branches[0].b == 0);
  CHECK(g.branches[1].a == 3);
  CHECK(g.branches[1].b == 1);
}

TEST_CASE("declarations may be separated by semicolons") {
  Gcf g = parse_gcf("mod 2 ; 0: (1/2)x + 0 ; 1: 3x + 1");
  CHECK(g == collatz_gcf());
}

TEST_CASE("comments and omitted terms") {
  Gcf g = parse_gcf("# successor\nmod 1\n0: x + 1\n");
  CHECK(g == successor_gcf());

  Gcf h = parse_gcf("mod 1\n0: 2x\n");
  CHECK(h.branches[0].a == 2);
  CHECK(h.branches[0].b == 0);

  Gcf k = parse_gcf("mod 1\n0: x\n");
  CHECK(k.branches[0].a == 1);
  CHECK(k.branches[0].b == 0);
}

TEST_CASE("negative constants in both spellings") {
  Gcf g = parse_gcf("mod 1\n0: 2x + -3\n");
  CHECK(g.branches[0].b == -3);
  Gcf h = parse_gcf("mod 1\n0: 2x - 3\n");
  CHECK(h.branches[0].b == -3);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_gcf("mod 2\n0: x + 1\n"), ParseError);       // missing residue
  CHECK_THROWS_AS(parse_gcf("mod 1\n0: x\n0: 2x\n"), ParseError);    // duplicate residue
  CHECK_THROWS_AS(parse_gcf("mod 0\n"), ParseError);                 // modulus <= 0
  CHECK_THROWS_AS(parse_gcf("mod 1\n0: (1/0)x + 1\n"), ParseError);  // zero denominator
  CHECK_THROWS_AS(parse_gcf("0: x + 1\n"), ParseError);              // no modulus
  CHECK_THROWS_AS(parse_gcf("mod 1\n0: x + 1 junk\n"), ParseError);
  CHECK_THROWS_AS(parse_gcf("mod 1\n5: x + 1\n"), ParseError);       // residue out of range

  try {
    parse_gcf("mod 2\n0: (1/2)x + 0\nbogus\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("validation accepts total functions on the positive integers") {
  CHECK(validate(collatz_gcf()).accepted);
  CHECK(validate(successor_gcf()).accepted);
  // Constant branches are fine for validity.
  CHECK(validate(parse_gcf("mod 1\n0: 0x + 5\n")).accepted);
  // The identity.
  CHECK(validate(parse_gcf("mod 1\n0: x\n")).accepted);
}

TEST_CASE("validation rejects non-integral and non-positive branches") {
  ValidationReport r = validate(parse_gcf("mod 2\n0: (1/3)x + 0\n1: 3x + 1\n"));
  CHECK_FALSE(r.accepted);
  CHECK(r.residue == 0);

  // g(1) = 0: leaves the positive integers.
  ValidationReport s = validate(parse_gcf("mod 1\n0: x - 1\n"));
  CHECK_FALSE(s.accepted);
  REQUIRE(s.witness.has_value());
  CHECK(*s.witness == 1);
  CHECK(*s.value_at_witness == 0);

  // Negative slope eventually leaves the positive integers.
  CHECK_FALSE(validate(parse_gcf("mod 1\n0: -1x + 10\n")).accepted);

  // Non-integral constant on an otherwise integral branch.
  CHECK_FALSE(validate(parse_gcf("mod 1\n0: x + (1/2)\n")).accepted);
}

TEST_CASE("evaluation is exact at any magnitude") {
  Gcf C = collatz_gcf();
  CHECK(eval(C, 1) == 4);
  CHECK(eval(C, 2) == 1);
  CHECK(eval(C, 3) == 10);
  CHECK(eval(C, 4) == 2);
  CHECK(eval(C, 27) == 82);

  Integer big = Integer(1) << 200;  // even: halves exactly
  CHECK(eval(C, big) == Integer(1) << 199);
  Integer odd = big + 1;
  CHECK(eval(C, odd) == 3 * odd + 1);
}

TEST_CASE("preimages respect residue classes") {
  Gcf C = collatz_gcf();
  CHECK(preimage(C, 1) == std::vector<Integer>{2});
  CHECK(preimage(C, 10) == std::vector<Integer>{3, 20});
  CHECK(preimage(C, 5) == std::vector<Integer>{10});
  // 3x + 1 = 13 has the even solution x = 4, which lives on the other
  // branch; only 26 maps to 13.
  CHECK(preimage(C, 13) == std::vector<Integer>{26});
  // Nothing maps to values outside both branch images.
  CHECK(preimage(parse_gcf("mod 1\n0: 2x\n"), 7).empty());
}

TEST_CASE("constant branches make preimages infinite") {
  Gcf g = parse_gcf("mod 1\n0: 0x + 5\n");
  CHECK_THROWS_AS(preimage(g, 5), InfinitePreimageRisk);
  CHECK(preimage(g, 4).empty());
}

TEST_CASE("preimage agrees with brute force on a window") {
  Gcf g = parse_gcf("mod 3\n0: (1/3)x + 0\n1: (2/3)x + (1/3)\n2: 4x + 1\n");
  REQUIRE(validate(g).accepted);
  for (Integer y = 1; y <= 40; ++y) {
    std::set<Integer> expected;
    for (Integer x = 1; x <= 400; ++x)
      if (eval(g, x) == y) expected.insert(x);
    std::vector<Integer> got = preimage(g, y);
    // Everything claimed is a genuine preimage...
    for (const Integer& x : got) CHECK(eval(g, x) == y);
    // ...and every brute-force hit is claimed.
    for (const Integer& x : expected)
      CHECK(std::find(got.begin(), got.end(), x) != got.end());
  }
}

TEST_CASE("render/parse round trip on random functions") {
  std::mt19937 rng(20250814);
  std::uniform_int_distribution<int> mod_d(1, 6), num_d(-9, 9), den_d(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Gcf g;
    g.modulus = static_cast<unsigned long>(mod_d(rng));
    for (unsigned long i = 0; i < g.modulus; ++i) {
      GcfBranch br;
      br.a = make_rational(num_d(rng), den_d(rng));
      br.b = make_rational(num_d(rng), den_d(rng));
      g.branches.push_back(br);
    }
    CHECK(parse_gcf(render_gcf(g)) == g);
  }
}

TEST_SUITE_END();
