#include <doctest.h>

#include "orbtop/function.hpp"
#include "orbtop/gcf.hpp"
#include "orbtop/transform.hpp"

using namespace orbtop;

TEST_SUITE_BEGIN("transform");

TEST_CASE("phi on small values") {
  CHECK(phi(1) == PhiPair{1, 1});
  CHECK(phi(2) == PhiPair{1, 2});
  CHECK(phi(3) == PhiPair{1, 3});
  CHECK(phi(4) == PhiPair{1, 0});
  CHECK(phi(5) == PhiPair{2, 1});
  CHECK(phi(9) == PhiPair{3, 1});
}

TEST_CASE("phi_inv on small values") {
  CHECK(phi_inv(1, 1) == 1);
  CHECK(phi_inv(10, 2) == 38);
  CHECK(phi_inv(2, 0) == 8);
  CHECK(phi_inv(PhiPair{3, 1}) == 9);
}

TEST_CASE("phi and phi_inv are mutually inverse") {
  for (Integer n = 1; n <= 100000; ++n) CHECK(phi_inv(phi(n)) == n);
  for (Integer m = 1; m <= 25000; ++m)
    for (int r = 0; r < 4; ++r) CHECK(phi(phi_inv(m, r)) == PhiPair{m, r});
}

TEST_CASE("the hat transform fixes the m = 1 fibre") {
  FunctionHandle h = hat(FunctionHandle::collatz());
  CHECK(h.name() == "hat:collatz");
  for (Integer n = 1; n <= 4; ++n) CHECK(h(n) == n);
}

TEST_CASE("hat of Collatz on the worked examples") {
  FunctionHandle h = hat(FunctionHandle::collatz());
  CHECK(h(3) == 3);
  CHECK(h(5) == 2);   // phi(5) = (2,1), C(2) = 1, phi_inv(1,2) = 2
  CHECK(h(9) == 38);  // phi(9) = (3,1), C(3) = 10, phi_inv(10,2) = 38
}

TEST_CASE("hat projects onto the base function in the first component") {
  FunctionHandle C = FunctionHandle::collatz();
  FunctionHandle h = hat(C);
  for (Integer n = 5; n <= 10000; ++n) {
    PhiPair p = phi(n);
    PhiPair q = phi(h(n));
    CHECK(q.m == C(p.m));
    CHECK(q.r == (p.r + 1) % 4);
  }
}

TEST_CASE("hat nests") {
  FunctionHandle hh = hat(hat(FunctionHandle::collatz()));
  CHECK(hh.name() == "hat:hat:collatz");
  for (Integer n = 1; n <= 4; ++n) CHECK(hh(n) == n);
  // phi(19) = (5, 3); hat(C)(5) = 2 <= 4, so hat(hat(C))(19) = phi_inv(2, 0) = 8.
  CHECK(hh(19) == 8);
}

TEST_CASE("hat preimages satisfy the adjunction on a window") {
  FunctionHandle h = hat(FunctionHandle::collatz());
  for (Integer y = 1; y <= 100; ++y) {
    std::vector<Integer> pre = h.preimage(y);
    for (const Integer& x : pre) CHECK(h(x) == y);
    for (Integer x = 1; x <= 500; ++x)
      if (h(x) == y)
        CHECK(std::find(pre.begin(), pre.end(), x) != pre.end());
  }
}

TEST_CASE("hat of successor never returns to the fixed fibre") {
  FunctionHandle h = hat(FunctionHandle::successor());
  Integer x = 5;
  for (int i = 0; i < 50; ++i) {
    x = h(x);
    CHECK(x > 4);
  }
}

TEST_SUITE_END();
