#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace freelat {

// Subset of a ground set with at most 64 elements, encoded as one machine
// word indexed by ground-set position. All enumeration loops in this library
// run on these single-word operations.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr int max_size = 64;

  static constexpr Subset empty() { return Subset(0); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool has(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr void add(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  // Iteration over member indices in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

// Calls f on every subset of mask, the empty set and mask itself included.
template <typename F>
void for_each_subset_of(Subset mask, F&& f) {
  std::uint64_t m = mask.bits();
  std::uint64_t s = m;
  while (true) {
    f(Subset(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace freelat

template <>
struct std::hash<freelat::Subset> {
  std::size_t operator()(freelat::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
