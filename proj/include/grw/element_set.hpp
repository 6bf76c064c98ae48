#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grw {

// Dense element index. Carriers are capped well below 2^16.
using Elem = std::uint16_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Raw word-span helpers shared by ElementSet and BitRows.
namespace bits {

inline bool subset(std::span<const std::uint64_t> a,
                   std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool intersects(std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

inline bool test(std::span<const std::uint64_t> a, std::size_t i) {
  return (a[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> a, std::size_t i) {
  a[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace bits

// Bit-packed subset of a finite universe {0, ..., universe-1}.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const { return bits::test(words_, i); }
  void insert(std::size_t i) { bits::set(words_, i); }
  void erase(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const ElementSet& other) const {
    return bits::subset(words_, other.words_);
  }
  bool intersects(const ElementSet& other) const {
    return bits::intersects(words_, other.words_);
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }

  // Members in increasing order.
  std::vector<Elem> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(static_cast<Elem>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Numeric order of the bitset read as an integer (bit i has weight 2^i).
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    return s.hash();
  }
};

// Fixed-width bitset rows stored contiguously; used by the triple kernels.
class BitRows {
 public:
  BitRows() = default;
  BitRows(std::size_t rows, std::size_t bits)
      : width_(words_for(bits)), data_(rows * width_, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * width_, width_};
  }
  std::span<std::uint64_t> row(std::size_t r) {
    return {data_.data() + r * width_, width_};
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace grw
