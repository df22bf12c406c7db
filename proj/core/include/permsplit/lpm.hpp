#pragma once

#include <optional>
#include <vector>

#include "permsplit/matroid.hpp"
#include "permsplit/perm.hpp"
#include "permsplit/subset.hpp"

namespace permsplit {

/// Raised when U <=_G L fails; `index` is the first 1-based step with u_i > l_i.
class GaleOrderError : public DomainError {
 public:
  GaleOrderError(Subset upper, Subset lower, int index);
  int index() const { return index_; }

 private:
  int index_;
};

/// Lattice path matroid M[U, L]: the k-subsets B with U <=_G B <=_G L.
class LatticePathMatroid {
 public:
  /// Throws DomainError for sets outside [n] or of different sizes and
  /// GaleOrderError when U is not Gale-below L.
  LatticePathMatroid(int n, Subset upper, Subset lower);

  /// U_{k,n} = M[{1..k}, {n-k+1..n}].
  static LatticePathMatroid uniform(int k, int n);

  int ground_size() const { return n_; }
  int rank() const { return upper_.size(); }
  Subset upper() const { return upper_; }
  Subset lower() const { return lower_; }

  friend bool operator==(const LatticePathMatroid&, const LatticePathMatroid&) = default;

 private:
  int n_;
  Subset upper_;
  Subset lower_;
};

/// A pair of steps (u_j, l_i) with max{0, u_j - l_i} <= j - i.
struct GoodPair {
  int u = 0;  // element of U
  int l = 0;  // element of L
  int j = 0;  // 1-based index of u in U
  int i = 0;  // 1-based index of l in L

  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// One elementary step of a quotient chain.
struct QuotientStep {
  GoodPair pair;
  LatticePathMatroid result;
};

/// Bases in lexicographic order, generated path by path between U and L.
std::vector<Subset> lpm_bases(const LatticePathMatroid& m);

SetMatroid to_set_matroid(const LatticePathMatroid& m);

/// Tests the good-pair inequality for u in U and l in L; false otherwise.
bool is_good_pair(const LatticePathMatroid& m, int u, int l);

/// Every good pair, ordered by (j, i).
std::vector<GoodPair> good_pairs(const LatticePathMatroid& m);

/// M[U - u, L - l]. Throws DomainError unless (u, l) is a good pair of m.
LatticePathMatroid elementary_quotient(const LatticePathMatroid& m, int u, int l);
LatticePathMatroid elementary_quotient(const LatticePathMatroid& m, const GoodPair& pair);

/// Chain of elementary quotients from `high` down to `low`, or nullopt when
/// `low` is not a quotient of `high`. Throws DomainError on different n.
std::optional<std::vector<QuotientStep>> quotient_chain(const LatticePathMatroid& low,
                                                        const LatticePathMatroid& high);

/// L = {n-k+1, ..., n}.
bool is_schubert(const LatticePathMatroid& m);
/// U = {1, ..., k}.
bool is_dual_schubert(const LatticePathMatroid& m);

/// Recognizes M[U, L] under the identity labelling of the ground set.
std::optional<LatticePathMatroid> is_lpm(const SetMatroid& m);

/// Full flag of lattice path matroids M_1 <=_q ... <=_q M_n, rank(M_i) = i.
class LPFMFlag {
 public:
  /// Accepts n constituents, or n-1 with U_{n,n} appended. Throws
  /// DomainError for wrong ranks, mixed ground sets or a failed quotient.
  explicit LPFMFlag(std::vector<LatticePathMatroid> constituents);

  int ground_size() const { return constituents_.front().ground_size(); }
  const std::vector<LatticePathMatroid>& constituents() const { return constituents_; }
  std::vector<SetMatroid> set_matroids() const;

 private:
  std::vector<LatticePathMatroid> constituents_;
};

/// [tau_L, tau_U] from the chains of lower and upper paths.
BruhatInterval lpfm_interval(const LPFMFlag& flag);

/// Constituents of the flag matroid whose polytope is the BIP of `interval`.
struct IntervalFlag {
  std::vector<SetMatroid> constituents;  // rank 1..n
  bool lpfm = false;                      // every constituent an LPM, consecutive quotients
};

IntervalFlag flag_of_interval(const BruhatInterval& interval);

}  // namespace permsplit
