#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "orientmap/error.hpp"
#include "orientmap/mapping.hpp"
#include "orientmap/seq.hpp"
#include "orientmap/text.hpp"

namespace orientmap {

/// A chord between two of the n points placed clockwise on a circle. The
/// endpoints may coincide (a one-point chord). Stored normalized, low <= high.
class Chord {
 public:
  Chord(int n, int a, int b) : n_(n), low_(std::min(a, b)), high_(std::max(a, b)) {
    if (n <= 0) throw InvalidInput("cycle size must be positive, got " + std::to_string(n));
    if (low_ < 0 || high_ >= n) {
      throw InvalidInput("chord endpoint outside [0, " + std::to_string(n) + "): " +
                         std::to_string(a) + "-" + std::to_string(b));
    }
  }

  /// "1-3".
  static Chord parse(std::string_view text, int n) {
    const std::size_t dash = text.find('-');
    if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos) {
      throw InvalidInput("chord must look like 'a-c', got '" + std::string(text) + "'");
    }
    return Chord(n, text::parse_int(text.substr(0, dash)), text::parse_int(text.substr(dash + 1)));
  }

  int n() const noexcept { return n_; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return high_; }
  bool is_point() const noexcept { return low_ == high_; }

  /// Image chord {p alpha, q alpha}.
  Chord image(const Mapping& alpha) const {
    if (alpha.n() != n_) throw InvalidInput("cycle size mismatch between chord and mapping");
    return Chord(n_, alpha(low_), alpha(high_));
  }

  std::string to_string() const { return std::to_string(low_) + "-" + std::to_string(high_); }

  friend bool operator==(const Chord&, const Chord&) = default;

 private:
  int n_;
  int low_;
  int high_;
};

/// "1-3:0-2".
inline std::pair<Chord, Chord> parse_chord_pair(std::string_view text, int n) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput("chord pair must look like 'a-c:b-d', got '" + std::string(text) + "'");
  }
  return {Chord::parse(text.substr(0, colon), n), Chord::parse(text.substr(colon + 1), n)};
}

enum class IntersectionMethod { Combinatorial, Geometric };

constexpr std::string_view to_string(IntersectionMethod m) noexcept {
  return m == IntersectionMethod::Combinatorial ? "combinatorial" : "geometric";
}

namespace geometry {

struct Point {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Point j sits at (j, j^2). Points on a parabola are in strictly convex
// position and their hull order is 0, 1, ..., n-1, which is the circle order.
constexpr Point place(int j) noexcept {
  return {static_cast<std::int64_t>(j), static_cast<std::int64_t>(j) * j};
}

/// Sign of the cross product (b - a) x (c - a).
constexpr int orient(const Point& a, const Point& b, const Point& c) noexcept {
  const std::int64_t cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (cross > 0) - (cross < 0);
}

// r is already known to be collinear with p and q.
constexpr bool in_box(const Point& p, const Point& q, const Point& r) noexcept {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

/// Whether closed segments [p1,p2] and [q1,q2] share a point. Either segment may
/// be degenerate (a single point).
constexpr bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) noexcept {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && in_box(q1, q2, p1)) return true;
  if (d2 == 0 && in_box(q1, q2, p2)) return true;
  if (d3 == 0 && in_box(p1, p2, q1)) return true;
  if (d4 == 0 && in_box(p1, p2, q2)) return true;
  return false;
}

}  // namespace geometry

namespace kernel {

/// Chords ac and bd meet iff (a, b, c, d) is oriented.
inline bool chords_meet_combinatorial(int a, int c, int b, int d) noexcept {
  const std::array<int, 4> quad{a, b, c, d};
  return is_oriented(orientation(quad));
}

inline bool chords_meet_geometric(int a, int c, int b, int d) noexcept {
  return geometry::segments_meet(geometry::place(a), geometry::place(c), geometry::place(b),
                                 geometry::place(d));
}

inline bool chords_meet(int a, int c, int b, int d, IntersectionMethod method) noexcept {
  return method == IntersectionMethod::Combinatorial ? chords_meet_combinatorial(a, c, b, d)
                                                     : chords_meet_geometric(a, c, b, d);
}

/// First (a, b, c, d) in lexicographic order where chords ac, bd meet but their
/// images do not; nullopt when the chord property holds.
inline std::optional<std::array<int, 4>> chord_property_violation(std::span<const int> images,
                                                                  IntersectionMethod method) {
  const int n = static_cast<int>(images.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!chords_meet(a, c, b, d, method)) continue;
          const auto ia = images[static_cast<std::size_t>(a)];
          const auto ib = images[static_cast<std::size_t>(b)];
          const auto ic = images[static_cast<std::size_t>(c)];
          const auto id = images[static_cast<std::size_t>(d)];
          if (!chords_meet(ia, ic, ib, id, method)) return std::array<int, 4>{a, b, c, d};
        }
  return std::nullopt;
}

}  // namespace kernel

inline bool chords_intersect(int n, const Chord& first, const Chord& second,
                             IntersectionMethod method = IntersectionMethod::Combinatorial) {
  if (first.n() != n || second.n() != n) {
    throw InvalidInput("chord cycle size does not match n = " + std::to_string(n));
  }
  return kernel::chords_meet(first.low(), first.high(), second.low(), second.high(), method);
}

struct ChordViolation {
  Chord first;   // {a, c}
  Chord second;  // {b, d}
  std::array<int, 4> quadruple;  // (a, b, c, d)
};

struct ChordPropertyResult {
  bool holds = true;
  std::optional<ChordViolation> counterexample;
  explicit operator bool() const noexcept { return holds; }
};

/// Whether every intersecting pair of chords still intersects after applying alpha.
inline ChordPropertyResult has_chord_property(const Mapping& alpha,
                                              IntersectionMethod method = IntersectionMethod::Combinatorial) {
  const auto bad = kernel::chord_property_violation(alpha.images(), method);
  if (!bad) return {};
  const auto [a, b, c, d] = *bad;
  return {false, ChordViolation{Chord(alpha.n(), a, c), Chord(alpha.n(), b, d), *bad}};
}

}  // namespace orientmap
