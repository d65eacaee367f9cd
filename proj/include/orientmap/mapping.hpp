#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientmap/error.hpp"
#include "orientmap/seq.hpp"
#include "orientmap/text.hpp"

namespace orientmap {

/// A total self-map of [n], stored as its image list: images()[j] is the image of j.
///
/// Composition is left to right, as in postfix notation: compose(a, b) applies
/// a first and then b.
class Mapping {
 public:
  Mapping(int n, std::vector<int> images) : images_(std::move(images)) {
    if (n <= 0) throw InvalidInput("cycle size must be positive, got " + std::to_string(n));
    if (images_.size() != static_cast<std::size_t>(n)) {
      throw InvalidInput("mapping on [" + std::to_string(n) + "] needs " + std::to_string(n) +
                         " images, got " + std::to_string(images_.size()));
    }
    for (int v : images_) {
      if (v < 0 || v >= n) {
        throw InvalidInput("image " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      }
    }
  }

  /// "0,1,3,2"; n is the list length.
  static Mapping parse(std::string_view text) {
    std::vector<int> images = text::parse_int_list(text);
    if (images.empty()) throw InvalidInput("empty mapping");
    const int n = static_cast<int>(images.size());
    return Mapping(n, std::move(images));
  }

  int n() const noexcept { return static_cast<int>(images_.size()); }
  std::span<const int> images() const noexcept { return images_; }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  int at(int point) const {
    if (point < 0 || point >= n()) throw InvalidInput("point " + std::to_string(point) + " outside [0, n)");
    return (*this)(point);
  }

  std::string to_string() const { return text::join(images_); }

  friend bool operator==(const Mapping&, const Mapping&) = default;
  friend auto operator<=>(const Mapping& a, const Mapping& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Mapping& m) { return os << '[' << m.to_string() << ']'; }

inline Mapping make_mapping(int n, std::vector<int> images) { return Mapping(n, std::move(images)); }

/// S alpha: the pointwise image of a sequence.
inline Seq apply_seq(const Mapping& alpha, const Seq& s) {
  if (s.n() != alpha.n()) {
    throw InvalidInput("cycle size mismatch: mapping on [" + std::to_string(alpha.n()) +
                       "], sequence over [" + std::to_string(s.n()) + "]");
  }
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.items()) out.push_back(alpha(v));
  return Seq(s.n(), std::move(out));
}

/// i -> (i alpha) beta.
inline Mapping compose(const Mapping& alpha, const Mapping& beta) {
  if (alpha.n() != beta.n()) {
    throw InvalidInput("cannot compose mappings on [" + std::to_string(alpha.n()) + "] and [" +
                       std::to_string(beta.n()) + "]");
  }
  std::vector<int> out(alpha.images().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = beta(alpha.images()[i]);
  return Mapping(alpha.n(), std::move(out));
}

/// |im(alpha)|.
inline std::size_t image_size(const Mapping& alpha) { return kernel::distinct(alpha.images()); }

enum class SpecialKind { Identity, Rotation, Reversal };

/// identity: i -> i; rotation: i -> i+1 mod n; reversal: i -> n-1-i.
inline Mapping special(int n, SpecialKind kind) {
  if (n <= 0) throw InvalidInput("cycle size must be positive, got " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    switch (kind) {
      case SpecialKind::Identity: images[static_cast<std::size_t>(i)] = i; break;
      case SpecialKind::Rotation: images[static_cast<std::size_t>(i)] = (i + 1) % n; break;
      case SpecialKind::Reversal: images[static_cast<std::size_t>(i)] = n - 1 - i; break;
    }
  }
  return Mapping(n, std::move(images));
}

inline Mapping identity(int n) { return special(n, SpecialKind::Identity); }
inline Mapping reversal(int n) { return special(n, SpecialKind::Reversal); }

// ---------------------------------------------------------------------------
// Enumeration of T_n in lexicographic order of image lists.
//
// The index of a mapping is its image list read as a base-n numeral with
// position 0 most significant, so index order and lexicographic order agree.
// ---------------------------------------------------------------------------

using MapIndex = std::uint64_t;

/// n^n. Throws if it does not fit in 64 bits.
inline MapIndex transformation_count(int n) {
  if (n <= 0) throw InvalidInput("cycle size must be positive, got " + std::to_string(n));
  MapIndex total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<MapIndex>::max() / static_cast<MapIndex>(n)) {
      throw InvalidInput("n^n overflows for n = " + std::to_string(n));
    }
    total *= static_cast<MapIndex>(n);
  }
  return total;
}

inline void images_at(int n, MapIndex index, std::span<int> out) {
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = static_cast<int>(index % static_cast<MapIndex>(n));
    index /= static_cast<MapIndex>(n);
  }
}

inline Mapping mapping_at(int n, MapIndex index) {
  if (index >= transformation_count(n)) throw InvalidInput("mapping index out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  images_at(n, index, images);
  return Mapping(n, std::move(images));
}

inline MapIndex index_of(std::span<const int> images, int n) {
  MapIndex index = 0;
  for (int v : images) index = index * static_cast<MapIndex>(n) + static_cast<MapIndex>(v);
  return index;
}

inline MapIndex index_of(const Mapping& m) { return index_of(m.images(), m.n()); }

/// Advances an image list to its lexicographic successor. Returns false on wrap-around.
inline bool next_images(std::span<int> images, int n) noexcept {
  for (std::size_t pos = images.size(); pos-- > 0;) {
    if (++images[pos] < n) return true;
    images[pos] = 0;
  }
  return false;
}

/// A contiguous index range [first, last) of T_n, iterable as Mapping values.
class MappingRange {
 public:
  class iterator {
   public:
    using value_type = Mapping;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, MapIndex index) : n_(n), index_(index) {}

    Mapping operator*() const { return mapping_at(n_, index_); }
    MapIndex index() const noexcept { return index_; }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { auto copy = *this; ++index_; return copy; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    int n_ = 1;
    MapIndex index_ = 0;
  };

  MappingRange(int n, MapIndex first, MapIndex last) : n_(n), first_(first), last_(last) {}

  int n() const noexcept { return n_; }
  MapIndex first() const noexcept { return first_; }
  MapIndex last() const noexcept { return last_; }
  MapIndex size() const noexcept { return last_ - first_; }

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }

  /// Splits into at most `parts` contiguous, non-empty, order-preserving ranges.
  std::vector<MappingRange> split(std::size_t parts) const {
    std::vector<MappingRange> out;
    if (parts == 0) parts = 1;
    const MapIndex total = size();
    const MapIndex chunk = total / parts;
    const MapIndex extra = total % parts;
    MapIndex cursor = first_;
    for (std::size_t p = 0; p < parts && cursor < last_; ++p) {
      const MapIndex len = chunk + (p < extra ? 1 : 0);
      if (len == 0) continue;
      out.emplace_back(n_, cursor, cursor + len);
      cursor += len;
    }
    return out;
  }

  /// Visits (index, images) without allocating per element.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (first_ >= last_) return;
    std::vector<int> images(static_cast<std::size_t>(n_));
    images_at(n_, first_, images);
    for (MapIndex idx = first_; idx < last_; ++idx) {
      fn(idx, std::span<const int>(images));
      next_images(images, n_);
    }
  }

 private:
  int n_;
  MapIndex first_;
  MapIndex last_;
};

/// All n^n members of T_n, lexicographically.
inline MappingRange enumerate_all(int n) { return MappingRange(n, 0, transformation_count(n)); }

}  // namespace orientmap
