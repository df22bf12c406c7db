#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "permsplit/error.hpp"
#include "permsplit/rational.hpp"
#include "permsplit/subset.hpp"

namespace permsplit {

/// Ground sets are kept small: derived data is tabulated over all 2^n subsets.
inline constexpr int kMaxMatroidGround = 20;

/// Raised by matroid_from_bases when the exchange axiom fails; carries the
/// witness (B1, B2, x) with no y in B2 \ B1 making B1 - x + y a basis.
class ExchangeAxiomError : public DomainError {
 public:
  ExchangeAxiomError(Subset b1, Subset b2, int x);

  Subset first() const { return first_; }
  Subset second() const { return second_; }
  int element() const { return element_; }

 private:
  Subset first_;
  Subset second_;
  int element_;
};

/// A matroid on [n] stored by its bases. Rank and independence tables over
/// all subsets are built once on construction and shared between copies.
class SetMatroid {
 public:
  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  /// Bases in lexicographic order.
  const std::vector<Subset>& bases() const { return bases_; }

  bool is_basis(Subset s) const;
  bool is_independent(Subset s) const;
  int rank_of(Subset s) const;
  /// No element outside `s` raises its rank.
  bool is_flat(Subset s) const;
  bool is_loop(int e) const { return rank_of(Subset::of({e})) == 0; }

  friend bool operator==(const SetMatroid& a, const SetMatroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

  /// Skips the exchange-axiom check; for callers that construct bases of a
  /// known matroid (duals, minors, LPM intervals). Sizes are still checked.
  static SetMatroid trusted(int n, std::vector<Subset> bases);

 private:
  struct Tables {
    std::vector<std::uint8_t> basis;
    std::vector<std::uint8_t> rank;
  };

  SetMatroid(int n, std::vector<Subset> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::shared_ptr<const Tables> tables_;
};

/// Validated construction. Throws DomainError for empty/mixed-size input or
/// elements outside [n], and ExchangeAxiomError for an exchange failure.
SetMatroid matroid_from_bases(int n, std::vector<Subset> bases);

/// Uniform matroid U_{k,n}.
SetMatroid uniform_matroid(int k, int n);

/// Minimal dependent sets, ordered by (size, lexicographic).
std::vector<Subset> circuits(const SetMatroid& m);

/// Rank-closed sets, ordered by (size, lexicographic).
std::vector<Subset> flats(const SetMatroid& m);

SetMatroid dual_matroid(const SetMatroid& m);

/// Minors on [n] \ {e}, relabelled to [n-1] by shifting larger labels down.
SetMatroid delete_element(const SetMatroid& m, int e);
SetMatroid contract_element(const SetMatroid& m, int e);

/// The three equivalent characterizations of M <=_q N.
enum class QuotientCriterion {
  kCircuits = 1,       // every circuit of N is a union of circuits of M
  kFlats = 2,          // every flat of M is a flat of N
  kBasisExchange = 3,  // exchange condition between bases of N and M
};

/// True iff m is a quotient of n under the chosen criterion. Throws
/// DomainError when the ground sets differ.
bool is_quotient(const SetMatroid& m, const SetMatroid& n,
                 QuotientCriterion criterion = QuotientCriterion::kFlats);

/// Column matroid of an exact matrix; rank deficiency is allowed.
SetMatroid matroid_from_rational_matrix(const RationalMatrix& a);

}  // namespace permsplit
