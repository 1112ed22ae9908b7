#include <doctest.h>

#include "helpers.hpp"
#include "minfam/error.hpp"
#include "minfam/negative_cone.hpp"

using namespace minfam;
using testing::c1;
using testing::c2;
using testing::names;
using testing::t1;
using testing::t2;

TEST_CASE("minus-two classes") {
  CHECK(names(enumerate_minus_two(t1(2))) == std::vector<std::string>{"-e1+e2", "e1-e2"});
  CHECK(enumerate_minus_two(t1(0)).empty());
  CHECK(enumerate_minus_two(t1(8)).size() == 240);
  CHECK(names(enumerate_minus_two(t2(0))) == std::vector<std::string>{"-l0+l1", "l0-l1"});
  CHECK_THROWS_AS(enumerate_minus_two(t1(9)), Error);
}

TEST_CASE("exceptional classes") {
  CHECK(names(enumerate_exceptional(t1(2))) == std::vector<std::string>{"e2", "e1", "e0-e1-e2"});
  CHECK(enumerate_exceptional(t1(0)).empty());
  CHECK(enumerate_exceptional(t2(0)).empty());
  const std::size_t lines[] = {6, 10, 16, 27, 56, 240};
  for (std::size_t r = 3; r <= 8; ++r) CHECK(enumerate_exceptional(t1(r)).size() == lines[r - 3]);
  // Type2 r is Type1 r+1.
  for (std::size_t r = 1; r <= 7; ++r) CHECK(enumerate_exceptional(t2(r)).size() == enumerate_exceptional(t1(r + 1)).size());
  for (const auto& e : enumerate_exceptional(t1(7))) {
    CHECK(intersect(e, e) == -1);
    CHECK(intersect(canonical_class(t1(7)), e) == -1);
  }
}

TEST_CASE("irreducible negatives") {
  CurveConfiguration plain(t1(2), {});
  CHECK(plain.irreducible_negatives().size() == 3);
  CHECK(irreducible_negative_curves(plain).size() == 3);

  CurveConfiguration with_root(t1(2), {c1(2, {0, -1, 1})});
  CHECK(names(with_root.irreducible_negatives()) == std::vector<std::string>{"e2", "e1-e2", "e0-e1-e2"});
  CHECK(CurveConfiguration(t1(0), {}).irreducible_negatives().empty());
}

TEST_CASE("root systems: closure and consistency") {
  // A2 chain: e1-e2, e2-e3 close up with e1-e3 and stay simple.
  CurveConfiguration a2(t1(3), {c1(3, {0, -1, 1, 0}), c1(3, {0, 0, -1, 1})});
  CHECK(a2.simple_roots().size() == 2);
  CHECK(names(a2.irreducible_exceptional()) == std::vector<std::string>{"e3", "e0-e1-e2"});
  // Two roots meeting negatively cannot both be irreducible curves.
  CHECK_THROWS_AS(CurveConfiguration(t1(3), {c1(3, {0, -1, 1, 0}), c1(3, {0, 0, 1, -1})}), Error);
  // A class and its negative.
  CHECK_THROWS_AS(CurveConfiguration(t1(2), {c1(2, {0, -1, 1}), c1(2, {0, 1, -1})}), Error);
  try {
    CurveConfiguration(t1(2), {c1(2, {1, 1, 1})});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRoot);
  }
}

TEST_CASE("moving and fixed parts") {
  CurveConfiguration config(t1(4), {});
  auto d = moving_fixed_decomposition(c1(4, {7, 4, 4, 1, 1}), config);
  CHECK(to_string(d.moving) == "6e0-3e1-3e2-e3-e4");
  CHECK(to_string(d.fixed) == "e0-e1-e2");

  DivisorClass nef = c1(4, {6, 3, 3, 1, 1});
  auto n = moving_fixed_decomposition(nef, config);
  CHECK(n.moving == nef);
  CHECK(n.fixed.is_zero());

  auto d2 = moving_fixed_decomposition(c1(4, {3, 2, 2, 0, 0}), config);
  CHECK(to_string(d2.moving) == "2e0-e1-e2");
  CHECK(to_string(d2.fixed) == "e0-e1-e2");

  CHECK_THROWS_AS(moving_fixed_decomposition(c1(2, {-1, 0, 0}), CurveConfiguration(t1(2), {})), Error);
}

TEST_CASE("nefness") {
  CHECK(is_nef(c1(8, {19, 6, 6, 4, 4, 3, 3, 2, 2}), CurveConfiguration(t1(8), {})));
  CHECK_FALSE(is_nef(c1(2, {-1, 0, 0}), CurveConfiguration(t1(2), {})));
  CHECK(is_nef(c1(2, {2, 1, 1}), CurveConfiguration(t1(2), {})));
  CHECK(is_nef(c1(2, {2, 2, 0}), CurveConfiguration(t1(2), {})));  // twice a pencil
  CHECK_FALSE(is_nef(c1(2, {1, 2, 0}), CurveConfiguration(t1(2), {})));
}

TEST_CASE("h0") {
  CurveConfiguration c6(t1(6), {});
  CHECK(h0(c1(6, {1, 1, 0, 0, 0, 0, 0}), c6) == 2);
  CHECK(h0(c1(6, {2, 1, 1, 1, 1, 0, 0}), c6) == 2);
  CHECK(h0(c1(6, {3, 2, 1, 1, 1, 1, 1}), c6) == 2);
  CHECK(h0(DivisorClass::zero(t1(3)), CurveConfiguration(t1(3), {})) == 1);
  CHECK(h0(c1(2, {2, 1, 1}), CurveConfiguration(t1(2), {})) == 4);
  CHECK(h0(c1(2, {-1, 0, 0}), CurveConfiguration(t1(2), {})) == 0);
  CHECK(h0(c1(0, {3}), CurveConfiguration(t1(0), {})) == 10);
  CHECK(h0(c2(0, {1, 1}), CurveConfiguration(t2(0), {})) == 4);
  // A fixed exceptional curve contributes nothing.
  CHECK(h0(c1(2, {0, -1, 0}), CurveConfiguration(t1(2), {})) == 1);
}
