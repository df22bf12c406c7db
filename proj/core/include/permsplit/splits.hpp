#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permsplit/perm.hpp"
#include "permsplit/polytope.hpp"
#include "permsplit/rational.hpp"
#include "permsplit/subset.hpp"

namespace permsplit {

/// The level set x_S = level inside the ambient hyperplane of Pi_n.
///
/// x_S = a and x_{[n]-S} = n(n+1)/2 - a describe the same hyperplane, so the
/// support is stored canonically: the smaller of S and its complement, the
/// lexicographically smaller one on ties. Orientation follows the stored
/// support ("-" side: x_S <= level, "+" side: x_S >= level).
class SplitHyperplane {
 public:
  /// Throws DomainError for an empty or full support, n < 2, or a level
  /// outside [min x_S, max x_S] over Pi_n.
  SplitHyperplane(int n, Subset support, Rational level);
  SplitHyperplane(int n, Subset support, long level) : SplitHyperplane(n, support, Rational(level)) {}

  int ground_size() const { return n_; }
  Subset support() const { return support_; }
  const Rational& level() const { return level_; }
  bool has_integer_level() const { return is_integer(level_); }

  /// -1, 0, +1 for x_S below, on, above the level.
  int side(const Permutation& p) const;

  friend bool operator==(const SplitHyperplane&, const SplitHyperplane&) = default;
  /// (|S|, S lexicographic, level).
  friend bool operator<(const SplitHyperplane& a, const SplitHyperplane& b);

 private:
  int n_;
  Subset support_;
  Rational level_;
};

/// "x1+x2=4"; half-integer levels print as "x1+x2=9/2".
std::string to_string(const SplitHyperplane& h);

/// min and max of x_S over the vertices of Pi_n.
std::pair<int, int> support_range(int n, int support_size);

enum class HyperplaneFamily { kT1, kT2, kT3 };

/// A hyperplane from the three families, with the parameter that produced
/// it: j for kT1/kT2, r for kT3 (with coordinate 1 or n).
struct TheoremHyperplane {
  SplitHyperplane hyperplane;
  HyperplaneFamily family;
  int parameter;
  int coordinate;  // kT3 only; 0 otherwise
};

/// Tagged union of the three families, deduplicated (a kT3 tag wins over
/// the coinciding j = 1 members of kT1 and kT2), sorted by hyperplane.
std::vector<TheoremHyperplane> theorem_family(int n);

/// Hyperplanes of theorem_family(n).
std::vector<SplitHyperplane> theorem_hyperplanes(int n);

std::optional<TheoremHyperplane> classify(const SplitHyperplane& h);

/// A pair of cells, the one containing e first and the one containing w second.
struct CellPair {
  BruhatInterval identity_cell;
  BruhatInterval longest_cell;
  friend bool operator==(const CellPair&, const CellPair&) = default;
};

enum class SplitVerdict { kGoodSplit, kBadSquare, kBadHexagon, kNotASplit };

std::string to_string(SplitVerdict verdict);

struct SplitReport {
  SplitVerdict verdict = SplitVerdict::kNotASplit;
  std::optional<CellPair> cells;          // present for kGoodSplit
  std::optional<Face2D> offending_face;   // present for kBadSquare / kBadHexagon
  std::pair<bool, bool> lpfm{false, false};  // LPFM verdicts of (identity, longest) cells
  std::string detail;
};

/// Closed-form cells for the three families; nullopt for other hyperplanes.
std::optional<CellPair> predicted_cells(const SplitHyperplane& h);

/// Classifies the split Pi_n = (x_S <= a) u (x_S >= a). Conditions are tested
/// in order: both open sides occupied, no edge crossing, no square cut, every
/// cut hexagon separating its min and max, both closed sides Bruhat intervals.
SplitReport check_split(const SplitHyperplane& h);

/// Hyperplane of the split whose cells are the duals of h's cells. Throws
/// DomainError when h is not a good split.
SplitHyperplane dual_hyperplane(const SplitHyperplane& h);

enum class ScanLevels {
  kIntegers,
  /// Integers and half-integers; used to confirm fractional levels never split.
  kHalfIntegers,
};

/// Every good split over all supports and levels strictly inside the range
/// of x_S, sorted.
std::vector<SplitHyperplane> exhaustive_scan(int n, ScanLevels levels = ScanLevels::kIntegers);

}  // namespace permsplit
