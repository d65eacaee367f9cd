#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orientmap/error.hpp"
#include "orientmap/mapping.hpp"
#include "orientmap/membership.hpp"
#include "orientmap/seq.hpp"

namespace orientmap {

// Counterexample extraction. Both constructions follow the case analysis that
// proves the triple and quadruple characterizations, with every free choice
// made deterministically (smallest index, first scan hit). Every result is
// re-checked with orientation() before it is returned.

/// Which branch of the triple construction fired.
///   One:   i alpha != j alpha, emit (i, j, j+1)
///   Two:   (i+1) alpha != (j+1) alpha, emit (i, i+1, j+1)
///   Three*: both images coincide; a third value k alpha decides the subcase.
enum class TripleCase { One, Two, ThreeOne, ThreeTwo, ThreeThree };

constexpr std::string_view to_string(TripleCase c) noexcept {
  switch (c) {
    case TripleCase::One: return "1";
    case TripleCase::Two: return "2";
    case TripleCase::ThreeOne: return "3.1";
    case TripleCase::ThreeTwo: return "3.2";
    case TripleCase::ThreeThree: return "3.3";
  }
  return "?";
}

struct TripleWitness {
  std::array<int, 3> points{};
  Mode mode = Mode::Preserve;
  TripleCase proof_case = TripleCase::One;
  bool swapped = false;         // roles of the two descents i, j were exchanged
  bool gamma_composed = false;  // built for alpha*gamma, reported for alpha

  /// e.g. "1", "3.2-swapped", "gamma-composed:1".
  std::string case_label() const {
    std::string label(to_string(proof_case));
    if (swapped) label += "-swapped";
    if (gamma_composed) label = "gamma-composed:" + label;
    return label;
  }

  friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

enum class QuadCase { Case1Min, Case1Max, Case2 };

constexpr std::string_view to_string(QuadCase c) noexcept {
  switch (c) {
    case QuadCase::Case1Min: return "case1-min";
    case QuadCase::Case1Max: return "case1-max";
    case QuadCase::Case2: return "case2";
  }
  return "?";
}

struct QuadWitness {
  std::array<int, 4> points{};
  QuadCase proof_case = QuadCase::Case2;

  std::string case_label() const { return std::string(to_string(proof_case)); }

  friend bool operator==(const QuadWitness&, const QuadWitness&) = default;
};

namespace detail {

template <std::size_t N>
std::array<int, N> image_of(std::span<const int> images, const std::array<int, N>& points) {
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = images[static_cast<std::size_t>(points[i])];
  return out;
}

template <std::size_t N>
bool pairwise_distinct(const std::array<int, N>& p) {
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (p[a] == p[b]) return false;
  return true;
}

template <std::size_t N>
std::string tuple_string(const std::array<int, N>& p) {
  return "(" + text::join(p) + ")";
}

// Preserve-mode construction on a raw image list. The caller guarantees at
// least two circular descents and image size >= 3.
inline TripleWitness build_preserve_triple(std::span<const int> a) {
  const int n = static_cast<int>(a.size());
  auto at = [&](int p) { return a[static_cast<std::size_t>(((p % n) + n) % n)]; };
  auto succ = [&](int p) { return (p + 1) % n; };

  std::vector<int> descents;
  for (int t = 0; t < n; ++t)
    if (at(t) > at(t + 1)) descents.push_back(t);

  for (std::size_t x = 0; x < descents.size(); ++x) {
    for (std::size_t y = x + 1; y < descents.size(); ++y) {
      int i = descents[x];
      int j = descents[y];
      TripleWitness w;
      if (at(i) != at(j)) {
        if (at(i) < at(j)) { std::swap(i, j); w.swapped = true; }
        w.proof_case = TripleCase::One;
        w.points = {i, j, succ(j)};
        return w;
      }
      if (at(i + 1) != at(j + 1)) {
        if (at(i + 1) < at(j + 1)) { std::swap(i, j); w.swapped = true; }
        w.proof_case = TripleCase::Two;
        w.points = {i, succ(i), succ(j)};
        return w;
      }
      std::optional<int> k;
      for (int p = 0; p < n; ++p) {
        if (at(p) != at(i) && at(p) != at(i + 1)) { k = p; break; }
      }
      if (!k) continue;  // image size <= 2; excluded by the caller
      const std::array<int, 5> ring{i, succ(i), *k, j, succ(j)};
      if (!admits_cyclic(kernel::orientation(ring))) { std::swap(i, j); w.swapped = true; }
      if (at(*k) > at(i)) {
        w.proof_case = TripleCase::ThreeOne;
        w.points = {*k, i, succ(i)};
      } else if (at(*k) > at(i + 1)) {
        w.proof_case = TripleCase::ThreeTwo;
        w.points = {i, *k, succ(j)};
      } else {
        w.proof_case = TripleCase::ThreeThree;
        w.points = {i, succ(i), *k};
      }
      return w;
    }
  }
  throw WitnessInvariantError("no descent pair admits a triple witness");
}

}  // namespace detail

/// Whether w certifies that alpha is not in OP (Preserve) or not in OR (Reverse):
/// distinct points, cyclic-only source, image anti-cyclic-only (Preserve) or
/// cyclic-only (Reverse).
inline bool validate(const TripleWitness& w, const Mapping& alpha) {
  for (int p : w.points)
    if (p < 0 || p >= alpha.n()) return false;
  if (!detail::pairwise_distinct(w.points)) return false;
  if (kernel::orientation(w.points) != Orientation::CyclicOnly) return false;
  const auto image = detail::image_of(alpha.images(), w.points);
  const Orientation want = w.mode == Mode::Preserve ? Orientation::AntiCyclicOnly : Orientation::CyclicOnly;
  return kernel::orientation(image) == want;
}

/// Whether w certifies alpha is not in P: distinct points, cyclic-only source,
/// image oriented neither way.
inline bool validate(const QuadWitness& w, const Mapping& alpha) {
  for (int p : w.points)
    if (p < 0 || p >= alpha.n()) return false;
  if (!detail::pairwise_distinct(w.points)) return false;
  if (kernel::orientation(w.points) != Orientation::CyclicOnly) return false;
  return kernel::orientation(detail::image_of(alpha.images(), w.points)) == Orientation::Neither;
}

/// A cyclic triple whose image breaks the orientation condition of `mode`.
///
/// Requires alpha outside OP (Preserve) or OR (Reverse) and image size >= 3;
/// maps of image size <= 2 pass the triple test and have no such witness.
/// Reverse mode runs the Preserve construction on alpha*gamma, gamma the
/// order reversal, and reports the same points.
inline TripleWitness witness_triple(const Mapping& alpha, Mode mode) {
  const MembershipReport m = classify(alpha);
  const bool member = mode == Mode::Preserve ? m.in_op : m.in_or;
  if (member) {
    throw PreconditionError("witness_triple: " + alpha.to_string() + " is in " +
                            (mode == Mode::Preserve ? "OP" : "OR") + "; no witness exists");
  }
  if (m.image_size <= 2) {
    throw PreconditionError("witness_triple: " + alpha.to_string() + " has image size " +
                            std::to_string(m.image_size) + "; triple witnesses need image size >= 3");
  }

  TripleWitness w;
  if (mode == Mode::Preserve) {
    w = detail::build_preserve_triple(alpha.images());
  } else {
    const Mapping beta = compose(alpha, reversal(alpha.n()));
    w = detail::build_preserve_triple(beta.images());
    w.gamma_composed = true;
  }
  w.mode = mode;

  if (!validate(w, alpha)) {
    const auto image = detail::image_of(alpha.images(), w.points);
    throw WitnessInvariantError("triple witness " + detail::tuple_string(w.points) + " [" + w.case_label() +
                                "] for " + alpha.to_string() + " failed validation; image " +
                                detail::tuple_string(image) + " is " +
                                std::string(to_string(kernel::orientation(image))));
  }
  return w;
}

/// A cyclic quadruple of distinct points whose image is not oriented.
/// Requires alpha outside P_n.
inline QuadWitness witness_quad(const Mapping& alpha) {
  const MembershipReport m = classify(alpha);
  if (m.in_p) throw PreconditionError("witness_quad: " + alpha.to_string() + " is in P; no witness exists");

  const auto a = alpha.images();
  const int n = alpha.n();
  auto wrap = [&](int p) { return ((p % n) + n) % n; };
  auto at = [&](int p) { return a[static_cast<std::size_t>(wrap(p))]; };
  auto scan = [&](int from, int to, auto pred) -> std::optional<int> {
    for (int p = from; p <= to; ++p)
      if (pred(p)) return p;
    return std::nullopt;
  };
  auto ascent = [&](int p) { return at(p) < at(p + 1); };
  auto descent = [&](int p) { return at(p) > at(p + 1); };

  const int lo = *std::min_element(a.begin(), a.end());
  const int hi = *std::max_element(a.begin(), a.end());

  // A non-constant map always has a minimum followed by something larger and
  // a maximum followed by something smaller; constant maps are in P.
  const auto i = scan(0, n - 1, [&](int p) { return at(p) == lo && ascent(p); });
  const auto ip = scan(0, n - 1, [&](int p) { return at(p) == hi && descent(p); });
  if (!i || !ip) throw WitnessInvariantError("witness_quad: no extremal start for " + alpha.to_string());

  // First descent in i+1, ..., i+n-2 and first ascent in i'+1, ..., i'+n-2.
  const auto j = scan(*i + 1, *i + n - 2, descent);
  const auto jp = scan(*ip + 1, *ip + n - 2, ascent);
  if (!j || !jp) throw WitnessInvariantError("witness_quad: scan found no turn for " + alpha.to_string());

  QuadWitness w;
  if (at(*i + 1) == at(*j)) {
    const auto k = scan(*j + 1, *i + n - 2, ascent);
    if (!k) throw WitnessInvariantError("witness_quad: no ascent after the minimum chain for " + alpha.to_string());
    w.proof_case = QuadCase::Case1Min;
    w.points = {wrap(*i), wrap(*i + 1), wrap(*k), wrap(*k + 1)};
  } else if (at(*ip + 1) == at(*jp)) {
    const auto k = scan(*jp + 1, *ip + n - 2, descent);
    if (!k) throw WitnessInvariantError("witness_quad: no descent after the maximum chain for " + alpha.to_string());
    w.proof_case = QuadCase::Case1Max;
    w.points = {wrap(*ip), wrap(*ip + 1), wrap(*k), wrap(*k + 1)};
  } else {
    w.proof_case = QuadCase::Case2;
    w.points = {wrap(*i), wrap(*i + 1), wrap(*ip), wrap(*ip + 1)};
  }

  if (!validate(w, alpha)) {
    const auto image = detail::image_of(a, w.points);
    throw WitnessInvariantError("quad witness " + detail::tuple_string(w.points) + " [" + w.case_label() +
                                "] for " + alpha.to_string() + " failed validation; image " +
                                detail::tuple_string(image) + " is " +
                                std::string(to_string(kernel::orientation(image))));
  }
  return w;
}

}  // namespace orientmap
