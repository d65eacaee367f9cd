#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientmap/error.hpp"
#include "orientmap/text.hpp"

namespace orientmap {

/// Orientation class of a sequence read around a circle.
///
/// A sequence is cyclic when it has at most one circular descent and
/// anti-cyclic when it has at most one circular ascent. The tag records both
/// facts at once.
enum class Orientation : std::uint8_t { CyclicOnly, AntiCyclicOnly, Both, Neither };

constexpr bool admits_cyclic(Orientation o) noexcept {
  return o == Orientation::CyclicOnly || o == Orientation::Both;
}

constexpr bool admits_anticyclic(Orientation o) noexcept {
  return o == Orientation::AntiCyclicOnly || o == Orientation::Both;
}

constexpr bool is_oriented(Orientation o) noexcept { return o != Orientation::Neither; }

constexpr bool is_uniquely_oriented(Orientation o) noexcept {
  return o == Orientation::CyclicOnly || o == Orientation::AntiCyclicOnly;
}

constexpr Orientation from_flags(bool cyclic, bool anticyclic) noexcept {
  if (cyclic && anticyclic) return Orientation::Both;
  if (cyclic) return Orientation::CyclicOnly;
  if (anticyclic) return Orientation::AntiCyclicOnly;
  return Orientation::Neither;
}

/// Orientation of the reversed sequence.
constexpr Orientation swapped(Orientation o) noexcept {
  switch (o) {
    case Orientation::CyclicOnly: return Orientation::AntiCyclicOnly;
    case Orientation::AntiCyclicOnly: return Orientation::CyclicOnly;
    default: return o;
  }
}

constexpr std::string_view to_string(Orientation o) noexcept {
  switch (o) {
    case Orientation::CyclicOnly: return "CyclicOnly";
    case Orientation::AntiCyclicOnly: return "AntiCyclicOnly";
    case Orientation::Both: return "Both";
    case Orientation::Neither: return "Neither";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Orientation o) { return os << to_string(o); }

// Allocation-free kernels over raw item lists. The hot loops of the
// membership tests and the verification harness go through these.
namespace kernel {

inline std::size_t descents(std::span<const int> items) noexcept {
  const std::size_t t = items.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t next = (i + 1 == t) ? 0 : i + 1;
    count += items[i] > items[next] ? 1 : 0;
  }
  return count;
}

inline std::size_t ascents(std::span<const int> items) noexcept {
  const std::size_t t = items.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t next = (i + 1 == t) ? 0 : i + 1;
    count += items[i] < items[next] ? 1 : 0;
  }
  return count;
}

// Single pass; stops as soon as both counts exceed one.
inline Orientation orientation(std::span<const int> items) noexcept {
  const std::size_t t = items.size();
  std::size_t down = 0;
  std::size_t up = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const int a = items[i];
    const int b = items[(i + 1 == t) ? 0 : i + 1];
    down += a > b ? 1 : 0;
    up += a < b ? 1 : 0;
    if (down > 1 && up > 1) return Orientation::Neither;
  }
  return from_flags(down <= 1, up <= 1);
}

inline std::size_t distinct(std::span<const int> items) {
  std::vector<int> copy(items.begin(), items.end());
  std::sort(copy.begin(), copy.end());
  return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

}  // namespace kernel

/// A finite sequence over [n] = {0, ..., n-1}.
class Seq {
 public:
  Seq(int n, std::vector<int> items) : n_(n), items_(std::move(items)) {
    if (n_ <= 0) throw InvalidInput("cycle size must be positive, got " + std::to_string(n_));
    for (int v : items_) {
      if (v < 0 || v >= n_) {
        throw InvalidInput("sequence value " + std::to_string(v) + " outside [0, " +
                           std::to_string(n_) + ")");
      }
    }
  }

  /// Parses "0,1,0,1". Without an explicit n the cycle size is 1 + max value.
  static Seq parse(std::string_view text, std::optional<int> n = std::nullopt) {
    std::vector<int> items = text::parse_int_list(text);
    int size = 1;
    if (n) {
      size = *n;
    } else if (!items.empty()) {
      size = 1 + *std::max_element(items.begin(), items.end());
    }
    return Seq(size, std::move(items));
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::span<const int> items() const noexcept { return items_; }
  int operator[](std::size_t i) const { return items_[i]; }

  std::string to_string() const { return text::join(items_); }

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  int n_;
  std::vector<int> items_;
};

inline std::ostream& operator<<(std::ostream& os, const Seq& s) { return os << '(' << s.to_string() << ')'; }

namespace detail {
inline void require_nonempty(const Seq& s, const char* what) {
  if (s.empty()) throw std::domain_error(std::string(what) + ": empty sequence has no orientation");
}
}  // namespace detail

/// Number of positions i with a_i > a_{i+1}, indices mod length.
inline std::size_t circular_descents(const Seq& s) {
  detail::require_nonempty(s, "circular_descents");
  return kernel::descents(s.items());
}

inline std::size_t circular_ascents(const Seq& s) {
  detail::require_nonempty(s, "circular_ascents");
  return kernel::ascents(s.items());
}

inline Orientation orientation(const Seq& s) {
  detail::require_nonempty(s, "orientation");
  return kernel::orientation(s.items());
}

/// The rotation (a_{i+1}, a_{i+2}, ..., a_i).
inline Seq cyclic_variant(const Seq& s, std::size_t i) {
  if (i >= s.size()) {
    throw InvalidInput("cyclic variant index " + std::to_string(i) + " out of range for length " +
                       std::to_string(s.size()));
  }
  std::vector<int> items(s.items().begin(), s.items().end());
  std::rotate(items.begin(), items.begin() + static_cast<std::ptrdiff_t>((i + 1) % s.size()),
              items.end());
  return Seq(s.n(), std::move(items));
}

inline Seq reverse(const Seq& s) {
  std::vector<int> items(s.items().rbegin(), s.items().rend());
  return Seq(s.n(), std::move(items));
}

inline std::size_t distinct_count(const Seq& s) { return kernel::distinct(s.items()); }

/// The relation ~ on uniquely oriented sequences. Not defined elsewhere.
inline bool same_orientation(const Seq& s, const Seq& t) {
  const Orientation a = orientation(s);
  const Orientation b = orientation(t);
  if (!is_uniquely_oriented(a) || !is_uniquely_oriented(b)) {
    throw PreconditionError("same_orientation: " + s.to_string() + " is " +
                            std::string(to_string(a)) + ", " + t.to_string() + " is " +
                            std::string(to_string(b)) + "; both must be uniquely oriented");
  }
  return a == b;
}

}  // namespace orientmap
