#include <catch_amalgamated.hpp>

#include <set>
#include <utility>

#include "orientmap/chords.hpp"
#include "orientmap/membership.hpp"

using namespace orientmap;

namespace {

constexpr auto kComb = IntersectionMethod::Combinatorial;
constexpr auto kGeo = IntersectionMethod::Geometric;

// Textbook arc test, independent of both library routes: chords sharing an
// endpoint meet; a one-point chord meets nothing else; four distinct points
// meet iff exactly one of b, d lies strictly between a and c.
bool arcs_interleave(int a, int c, int b, int d) {
  if (a == b || a == d || c == b || c == d) return true;
  if (a == c || b == d) return false;
  const int lo = std::min(a, c);
  const int hi = std::max(a, c);
  auto inside = [&](int x) { return lo < x && x < hi; };
  return inside(b) != inside(d);
}

std::set<std::pair<int, int>> as_set(const Chord& x, const Chord& y) {
  return {{x.low(), x.high()}, {y.low(), y.high()}};
}

}  // namespace

TEST_CASE("chord intersection examples", "[chords]") {
  for (auto method : {kComb, kGeo}) {
    INFO(to_string(method));
    CHECK(chords_intersect(4, Chord(4, 1, 3), Chord(4, 0, 2), method));
    CHECK(chords_intersect(4, Chord(4, 0, 2), Chord(4, 0, 3), method));
    CHECK_FALSE(chords_intersect(4, Chord(4, 0, 1), Chord(4, 2, 3), method));
    CHECK_FALSE(chords_intersect(5, Chord(5, 2, 2), Chord(5, 0, 3), method));
    CHECK(chords_intersect(5, Chord(5, 2, 2), Chord(5, 2, 2), method));
    CHECK_FALSE(chords_intersect(5, Chord(5, 1, 1), Chord(5, 2, 2), method));
  }
  CHECK(kernel::orientation(std::array<int, 4>{0, 0, 2, 3}) != Orientation::Neither);
  CHECK(kernel::orientation(std::array<int, 4>{0, 2, 1, 3}) == Orientation::Neither);
  CHECK(kernel::orientation(std::array<int, 4>{2, 0, 2, 3}) == Orientation::Neither);
}

TEST_CASE("chord parsing and validation", "[chords]") {
  CHECK(Chord::parse("3-1", 4) == Chord(4, 1, 3));
  const auto [x, y] = parse_chord_pair("1-3:0-2", 4);
  CHECK(x == Chord(4, 1, 3));
  CHECK(y == Chord(4, 0, 2));
  CHECK_THROWS_AS(Chord(4, 0, 4), InvalidInput);
  CHECK_THROWS_AS(Chord::parse("1:3", 4), InvalidInput);
  CHECK_THROWS_AS(Chord::parse("1-2-3", 4), InvalidInput);
  CHECK_THROWS_AS(parse_chord_pair("1-3", 4), InvalidInput);
  CHECK_THROWS_AS(chords_intersect(5, Chord(4, 0, 1), Chord(5, 0, 1)), InvalidInput);
}

TEST_CASE("exact segment predicate", "[chords][geometry]") {
  using geometry::Point;
  using geometry::segments_meet;
  CHECK(segments_meet({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_meet({0, 0}, {1, 1}, {2, 2}, {3, 3}));  // collinear, disjoint
  CHECK(segments_meet({0, 0}, {2, 2}, {1, 1}, {3, 3}));        // collinear overlap
  CHECK(segments_meet({0, 0}, {2, 2}, {1, 1}, {1, 1}));        // point on segment
  CHECK_FALSE(segments_meet({0, 0}, {2, 2}, {1, 2}, {1, 2}));
  CHECK(segments_meet({1, 1}, {1, 1}, {1, 1}, {1, 1}));
  // No three placed points are collinear.
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        CHECK(geometry::orient(geometry::place(a), geometry::place(b), geometry::place(c)) != 0);
}

TEST_CASE("both routes agree with the arc oracle on every quadruple", "[chords][exhaustive]") {
  for (int n = 1; n <= 12; ++n) {
    std::size_t disagreements = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const bool oracle = arcs_interleave(a, c, b, d);
            const bool comb = kernel::chords_meet_combinatorial(a, c, b, d);
            const bool geo = kernel::chords_meet_geometric(a, c, b, d);
            if (comb != oracle || geo != oracle) {
              ++disagreements;
              UNSCOPED_INFO("n=" << n << " (" << a << "," << b << "," << c << "," << d << ")");
            }
          }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("intersection is symmetric and respects common endpoints", "[chords][exhaustive]") {
  const int n = 7;
  for (auto method : {kComb, kGeo}) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const bool base = kernel::chords_meet(a, c, b, d, method);
            REQUIRE(kernel::chords_meet(c, a, b, d, method) == base);
            REQUIRE(kernel::chords_meet(a, c, d, b, method) == base);
            REQUIRE(kernel::chords_meet(b, d, a, c, method) == base);
            if (a == b || a == d || c == b || c == d) REQUIRE(base);
          }
  }
  // Images of chords with a common endpoint still share that endpoint's image.
  const Mapping alpha = make_mapping(5, {3, 0, 0, 4, 1});
  for (int shared = 0; shared < 5; ++shared)
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        CHECK(chords_intersect(5, Chord(5, shared, x).image(alpha), Chord(5, shared, y).image(alpha)));
}

TEST_CASE("chord property examples", "[chords]") {
  const auto swap_tail = has_chord_property(make_mapping(4, {0, 1, 3, 2}));
  REQUIRE_FALSE(swap_tail.holds);
  REQUIRE(swap_tail.counterexample.has_value());
  const auto& cx = *swap_tail.counterexample;
  CHECK(as_set(cx.first, cx.second) == std::set<std::pair<int, int>>{{1, 3}, {0, 2}});
  CHECK(cx.quadruple == std::array<int, 4>{0, 1, 2, 3});
  const Mapping alpha = make_mapping(4, {0, 1, 3, 2});
  CHECK(as_set(cx.first.image(alpha), cx.second.image(alpha)) == std::set<std::pair<int, int>>{{1, 2}, {0, 3}});
  CHECK_FALSE(chords_intersect(4, cx.first.image(alpha), cx.second.image(alpha)));

  const Mapping fold = make_mapping(4, {0, 0, 3, 2});
  CHECK(chords_intersect(4, Chord(4, 1, 3).image(fold), Chord(4, 0, 2).image(fold)));
  CHECK(has_chord_property(fold).holds);
  CHECK(has_chord_property(fold, kGeo).holds);
  CHECK(has_chord_property(identity(6)).holds);
  CHECK_FALSE(has_chord_property(make_mapping(4, {0, 1, 3, 2}), kGeo).holds);
}

TEST_CASE("chord property matches the quadruple test", "[chords][exhaustive]") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_all(n).for_each([&](MapIndex, std::span<const int> images) {
      const bool quad = kernel::quad_test(images);
      const bool comb = !kernel::chord_property_violation(images, kComb).has_value();
      const bool geo = !kernel::chord_property_violation(images, kGeo).has_value();
      if (quad != comb || quad != geo) FAIL("mismatch at " << text::join(images));
    });
  }
}
