#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace permsplit {

/// Largest ground-set element a Subset can hold.
inline constexpr int kMaxElement = 31;

/// A subset of [n] = {1, ..., n} stored as a bitmask (bit i-1 <-> element i).
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint32_t bits) { return Subset(bits); }
  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static constexpr Subset interval(int lo, int hi) {
    Subset s;
    for (int e = lo; e <= hi; ++e) s.bits_ |= bit(e);
    return s;
  }
  static constexpr Subset full(int n) { return interval(1, n); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ & bit(e)) != 0; }
  constexpr Subset with(int e) const { return Subset(bits_ | bit(e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~bit(e)); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  /// Smallest / largest element; 0 for the empty set.
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max_element() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  /// Elements in increasing order.
  std::vector<int> elements() const;

  /// Complement inside [n].
  constexpr Subset complement(int n) const { return Subset(full(n).bits_ & ~bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  /// Orders by bitmask; use lex_less for the ordering on sorted element lists.
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  static constexpr std::uint32_t bit(int e) { return std::uint32_t{1} << (e - 1); }

  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of the increasing element sequences.
bool lex_less(Subset a, Subset b);

/// Ordering by (size, lexicographic), the canonical display order.
bool size_lex_less(Subset a, Subset b);

/// Component-wise comparison of sorted equal-size sets (a <=_G b).
bool gale_leq(Subset a, Subset b);

/// Digit string ("1246") when every element is at most 9, otherwise
/// comma-separated ("1,2,10"). The empty set prints as "{}".
std::string to_string(Subset s);

/// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

}  // namespace permsplit
