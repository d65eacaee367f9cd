#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientmap/chords.hpp"
#include "orientmap/mapping.hpp"
#include "orientmap/seq.hpp"

namespace orientmap {

/// Which direction a triple test checks: images of cyclic triples stay cyclic
/// (Preserve) or become anti-cyclic (Reverse).
enum class Mode { Preserve, Reverse };

constexpr std::string_view to_string(Mode m) noexcept {
  return m == Mode::Preserve ? "preserve" : "reverse";
}

/// Definitional membership in OP_n, OR_n and P_n, read off the image sequence.
struct MembershipReport {
  bool in_op = false;
  bool in_or = false;
  bool in_p = false;
  std::size_t image_size = 0;
  Orientation image_orientation = Orientation::Neither;

  friend bool operator==(const MembershipReport&, const MembershipReport&) = default;
};

namespace kernel {

inline MembershipReport classify(std::span<const int> images) {
  MembershipReport r;
  r.image_orientation = orientation(images);
  r.in_op = admits_cyclic(r.image_orientation);
  r.in_or = admits_anticyclic(r.image_orientation);
  r.in_p = r.in_op || r.in_or;
  r.image_size = distinct(images);
  return r;
}

// Every pairwise-distinct cyclic source triple is checked; triples with a
// repeated entry have at most two distinct image values and constrain nothing.
inline bool triple_test(std::span<const int> images, Mode mode) {
  const int n = static_cast<int>(images.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const std::array<int, 3> source{i, j, k};
        if (!admits_cyclic(orientation(source))) continue;
        const std::array<int, 3> image{images[static_cast<std::size_t>(i)],
                                       images[static_cast<std::size_t>(j)],
                                       images[static_cast<std::size_t>(k)]};
        const Orientation o = orientation(image);
        if (mode == Mode::Preserve ? !admits_cyclic(o) : !admits_anticyclic(o)) return false;
      }
  return true;
}

inline bool quad_test(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const std::array<int, 4> source{a, b, c, d};
          if (!is_oriented(orientation(source))) continue;
          const std::array<int, 4> image{
              images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)],
              images[static_cast<std::size_t>(c)], images[static_cast<std::size_t>(d)]};
          if (!is_oriented(orientation(image))) return false;
        }
  return true;
}

}  // namespace kernel

/// (0, 1, ..., n-1) alpha.
inline Seq image_sequence(const Mapping& alpha) {
  return Seq(alpha.n(), std::vector<int>(alpha.images().begin(), alpha.images().end()));
}

inline MembershipReport classify(const Mapping& alpha) { return kernel::classify(alpha.images()); }

/// Triple characterization of OP_n (Preserve) or OR_n (Reverse). Agrees with
/// classify() for maps of image size at least 3; every map of image size at
/// most 2 passes both modes.
inline bool triple_test(const Mapping& alpha, Mode mode) { return kernel::triple_test(alpha.images(), mode); }

/// Quadruple characterization of P_n: every oriented quadruple has an oriented image.
inline bool quad_test(const Mapping& alpha) { return kernel::quad_test(alpha.images()); }

struct Discrepancy {
  std::string rule;
  std::string detail;
  // Allowed disagreement: the literal triple characterization fails for maps
  // with image size <= 2.
  bool sanctioned = false;
};

struct ConsistencyReport {
  MembershipReport definitional;
  bool triple_op = false;
  bool triple_or = false;
  bool quad_p = false;
  bool chord_p = false;
  std::vector<Discrepancy> discrepancies;

  /// No discrepancy outside the sanctioned low-rank exemption.
  bool consistent() const {
    for (const auto& d : discrepancies)
      if (!d.sanctioned) return false;
    return true;
  }
};

namespace detail {
inline std::string yes_no(bool b) { return b ? "true" : "false"; }
}  // namespace detail

/// Runs every membership test on alpha and records each disagreement.
inline ConsistencyReport cross_check(const Mapping& alpha) {
  ConsistencyReport r;
  r.definitional = classify(alpha);
  r.triple_op = triple_test(alpha, Mode::Preserve);
  r.triple_or = triple_test(alpha, Mode::Reverse);
  r.quad_p = quad_test(alpha);
  r.chord_p = has_chord_property(alpha).holds;

  const auto& def = r.definitional;
  const bool low_rank = def.image_size <= 2;
  const std::string rank_note = " (image_size=" + std::to_string(def.image_size) + ")";
  if (r.triple_op != def.in_op) {
    r.discrepancies.push_back({"triple_op=in_op",
                               "triple_op=" + detail::yes_no(r.triple_op) +
                                   " vs in_op=" + detail::yes_no(def.in_op) + rank_note,
                               low_rank});
  }
  if (r.triple_or != def.in_or) {
    r.discrepancies.push_back({"triple_or=in_or",
                               "triple_or=" + detail::yes_no(r.triple_or) +
                                   " vs in_or=" + detail::yes_no(def.in_or) + rank_note,
                               low_rank});
  }
  if (r.quad_p != def.in_p) {
    r.discrepancies.push_back(
        {"quad_p=in_p", "quad_p=" + detail::yes_no(r.quad_p) + " vs in_p=" + detail::yes_no(def.in_p), false});
  }
  if (r.quad_p != r.chord_p) {
    r.discrepancies.push_back(
        {"quad_p=chord_p", "quad_p=" + detail::yes_no(r.quad_p) + " vs chord_p=" + detail::yes_no(r.chord_p), false});
  }
  return r;
}

}  // namespace orientmap
