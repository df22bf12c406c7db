#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permsplit/perm.hpp"
#include "permsplit/polytope.hpp"
#include "permsplit/splits.hpp"

namespace permsplit {

/// A maximal cell of a subdivision. signs[k] is '-' for x_S <= level and
/// '+' for x_S >= level with respect to the k-th hyperplane.
struct SubdivisionCell {
  std::string signs;
  BruhatInterval interval;
  bool lpfm = false;
  friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
};

struct Subdivision {
  int n = 0;
  std::vector<SplitHyperplane> hyperplanes;  // sorted
  std::vector<SubdivisionCell> cells;        // sorted by interval
  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

enum class RejectionReason { kNewVertex, kNonBipCell };

std::string to_string(RejectionReason reason);

struct Rejection {
  RejectionReason reason = RejectionReason::kNewVertex;
  std::string signs;                        // cell where the failure appeared
  std::optional<RationalPoint> witness;     // the new vertex, for kNewVertex
  std::vector<RationalPoint> cell_vertices; // the offending cell, for kNonBipCell
};

struct SubdivisionOutcome {
  std::optional<Subdivision> subdivision;
  std::optional<Rejection> rejection;
  bool accepted() const { return subdivision.has_value(); }
};

/// Cuts Pi_n by every hyperplane at once and keeps the full-dimensional sign
/// cells. Rejects the set when a cell has a vertex that is not a permutation,
/// or a cell that is not a Bruhat interval polytope. Throws DomainError if
/// some hyperplane is not a good split or lives in another dimension.
SubdivisionOutcome subdivision_from_hyperplanes(int n, std::vector<SplitHyperplane> hyperplanes);

/// Every cell of `finer` lies inside a cell of `coarser` (as vertex sets).
bool refines(const Subdivision& finer, const Subdivision& coarser);

/// Accepted subdivisions from sets of good splits, ordered by refinement.
struct SubdivisionPoset {
  int n = 0;
  std::vector<Subdivision> elements;            // by hyperplane count, then hyperplane lists
  std::vector<std::pair<int, int>> covers;      // (coarser, finer) index pairs, sorted

  std::vector<int> minimal() const;  // coarsest elements
  std::vector<int> maximal() const;  // finest elements
  /// Elements with the largest number of cells.
  std::vector<int> top_rank() const;
};

/// Tries every set of good splits of Pi_n. Supersets of a set rejected for a
/// new vertex are skipped, since adding hyperplanes keeps that vertex. The
/// geometric refinement order is checked against hyperplane inclusion;
/// disagreement throws std::logic_error.
SubdivisionPoset build_poset(int n);

enum class PosetFormat { kDot, kJson };

/// DOT edges point from coarser to finer.
std::string export_poset(const SubdivisionPoset& poset, PosetFormat format);

}  // namespace permsplit
