#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace finloc {

/// Largest carrier representable by an ElementSet.
inline constexpr int kMaxElements = 64;

/// A subset of {0, ..., 63} packed into one machine word.
///
/// Iteration visits members in ascending index order, which is the canonical
/// enumeration order used everywhere in the library.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  /// Members strictly below index i.
  constexpr ElementSet below(int i) const {
    return ElementSet(i >= 64 ? bits_ : bits_ & ((std::uint64_t{1} << i) - 1));
  }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  class iterator {
  public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator==(const iterator&) const = default;
  private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i : *this) out.push_back(i);
    return out;
  }

private:
  std::uint64_t bits_ = 0;
};

/// Builds the set whose members are the positions of `mask` mapped through `items`.
inline ElementSet gather(ElementSet mask, const std::vector<int>& items) {
  ElementSet out;
  for (int i : mask) out.insert(items[i]);
  return out;
}

}  // namespace finloc
