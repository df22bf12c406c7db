#pragma once

#include <map>
#include <set>
#include <vector>

#include "permsplit/perm.hpp"
#include "permsplit/subset.hpp"

// Brute-force reference computations. They avoid the library's own
// algorithms (beyond the Permutation and Subset value types) so that the
// library can be checked against them.
namespace permsplit::oracle {

/// Word length in the adjacent transpositions, by breadth-first search from e.
std::map<Permutation, int> coxeter_lengths(int n);

/// Bruhat order of S_n as reachability in the cover digraph
/// (u -> u.(i j) whenever the length goes up by exactly one).
class ReachabilityOrder {
 public:
  explicit ReachabilityOrder(int n);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool leq(const Permutation& u, const Permutation& v) const;
  std::vector<Permutation> covers(const Permutation& u) const;
  /// Sorted points of [u, v]; empty if u is not below v.
  std::vector<Permutation> interval(const Permutation& u, const Permutation& v) const;

 private:
  int index(const Permutation& p) const;

  std::vector<Permutation> elements_;
  std::map<Permutation, int> index_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<bool>> reach_;
};

/// Number of k-subsets B with u_i <= b_i <= l_i, counted by dynamic
/// programming over lattice paths.
long long lattice_path_count(int n, Subset upper, Subset lower);

/// Every k-subset of [n] between U and L componentwise, by filtering.
std::vector<Subset> gale_filter_bases(int n, Subset upper, Subset lower);

/// Closed sides {x_S <= a} and {x_S >= a} of S_n, by direct summation.
struct VertexPartition {
  std::vector<Permutation> below;  // sorted
  std::vector<Permutation> above;  // sorted
  bool strictly_below = false;
  bool strictly_above = false;
  bool edge_crossed = false;
};
VertexPartition vertex_partition(int n, Subset support, long level);

/// Good split: both open sides occupied, no edge of Pi_n crossed, and both
/// closed sides equal to an interval of `order`.
bool is_good_split(const ReachabilityOrder& order, Subset support, long level);

}  // namespace permsplit::oracle
