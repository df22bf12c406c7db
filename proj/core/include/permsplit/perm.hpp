#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permsplit/subset.hpp"

namespace permsplit {

/// A permutation of [n] in one-line notation a_1 ... a_n. The same sequence
/// read as coordinates is the corresponding vertex of the permutahedron.
class Permutation {
 public:
  /// Throws DomainError unless `one_line` is a bijection [n] -> [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The longest element n (n-1) ... 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  /// Value at 1-based position.
  int at(int position) const { return entries_[position - 1]; }
  std::span<const int> entries() const { return entries_; }

  /// 1-based position holding `value`.
  int position_of(int value) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// An ordered sequence of distinct values from [n]; possibly partial.
class ValueSequence {
 public:
  ValueSequence() = default;
  ValueSequence(int n, std::vector<int> values);

  int ground_size() const { return n_; }
  const std::vector<int>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  /// Concatenation; throws DomainError if the parts share a value.
  friend ValueSequence operator+(const ValueSequence& a, const ValueSequence& b);
  friend bool operator==(const ValueSequence&, const ValueSequence&) = default;

  /// Requires the sequence to use every value of [n] exactly once.
  Permutation to_permutation() const;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

/// Closed interval [lo, hi] of the strong Bruhat order; lo <= hi always holds.
class BruhatInterval {
 public:
  /// Throws DomainError if lo is not below hi.
  BruhatInterval(Permutation lo, Permutation hi);

  const Permutation& lo() const { return lo_; }
  const Permutation& hi() const { return hi_; }
  int size() const { return lo_.size(); }

  friend bool operator==(const BruhatInterval&, const BruhatInterval&) = default;
  friend std::strong_ordering operator<=>(const BruhatInterval& a, const BruhatInterval& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.hi_ <=> b.hi_;
  }

 private:
  Permutation lo_;
  Permutation hi_;
};

/// The four sequences attached to a value set A inside [n].
struct SetSequences {
  ValueSequence increasing;        // A read upward
  ValueSequence decreasing;        // A read downward
  ValueSequence identity_without;  // e with the values of A deleted
  ValueSequence longest_without;   // w with the values of A deleted
};

/// Number of inversions, which equals the Coxeter length.
int length(const Permutation& p);

/// Permutations covering p: one transposition away and exactly one longer.
/// Returned in increasing one-line order.
std::vector<Permutation> bruhat_covers(const Permutation& p);

/// Strong Bruhat comparison via the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Every z with u <= z <= v, sorted. Filters S_n, so intended for n <= 8.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);
std::vector<Permutation> bruhat_interval(const BruhatInterval& interval);

/// t*(j) = n - t(j) + 1.
Permutation dual_permutation(const Permutation& t);

/// [lo, hi]* = [hi*, lo*].
BruhatInterval dual_interval(const BruhatInterval& interval);

SetSequences set_sequences(Subset values, int n);

/// Permutation whose point form is the sum of indicator vectors of the
/// chain B_1 < ... < B_n = [n]. Throws DomainError for a malformed chain.
Permutation bruhat_permutation_of_chain(std::span<const Subset> chain, int n);

/// Inverse of bruhat_permutation_of_chain: B_i holds the positions carrying
/// the i largest values.
std::vector<Subset> chain_of_permutation(const Permutation& t);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Digit string for n <= 9, comma-separated integers otherwise.
std::string to_string(const Permutation& p);
std::string to_string(const ValueSequence& s);
std::string to_string(const BruhatInterval& interval);

/// Accepts both external forms. `n`, when positive, must match the length.
Permutation parse_permutation(std::string_view text, int n = 0);

}  // namespace permsplit
