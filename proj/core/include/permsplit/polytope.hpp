#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permsplit/matroid.hpp"
#include "permsplit/perm.hpp"
#include "permsplit/rational.hpp"
#include "permsplit/subset.hpp"

namespace permsplit {

/// A point of R^n with exact coordinates.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coordinates) : coordinates_(std::move(coordinates)) {}
  explicit RationalPoint(const Permutation& p);

  int size() const { return static_cast<int>(coordinates_.size()); }
  const Rational& operator[](std::size_t i) const { return coordinates_[i]; }
  const std::vector<Rational>& coordinates() const { return coordinates_; }

  /// Sum of the coordinates indexed by `support` (1-based).
  Rational sum_over(Subset support) const;

  /// The permutation this point equals, if it is one.
  std::optional<Permutation> as_permutation() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.coordinates_ < b.coordinates_;
  }

 private:
  std::vector<Rational> coordinates_;
};

enum class Sense { kAtLeast, kAtMost, kEqual };

/// sum_{i in support} x_i  (>= | <= | =)  level.
struct LinearConstraint {
  Subset support;
  Sense sense = Sense::kAtLeast;
  Rational level;

  bool satisfied_by(const RationalPoint& x) const;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

enum class FaceShape { kSquare, kHexagon };

/// A 2-face of the permutahedron given by an ordered set partition into
/// n-2 blocks; earlier blocks carry larger values.
struct Face2D {
  std::vector<Subset> blocks;
  FaceShape shape = FaceShape::kSquare;
  std::vector<Permutation> vertices;  // sorted
  Permutation min;                    // Bruhat-least vertex
  Permutation max;                    // Bruhat-greatest vertex
};

enum class EnumerationStatus {
  kOk,
  /// No vertex found: the system is empty, or has no vertices (unbounded
  /// with a lineality space, or insufficient constraints).
  kNoVertices,
};

struct VertexEnumeration {
  std::vector<RationalPoint> vertices;  // sorted, unique
  EnumerationStatus status = EnumerationStatus::kOk;
};

/// All n! permutations, as vertices of the permutahedron.
std::vector<Permutation> permutahedron_vertices(int n);

/// x_1 + ... + x_n = n(n+1)/2.
LinearConstraint ambient_equality(int n);

/// One x_S >= C(|S|+1, 2) per nonempty proper S (size-lex order of S),
/// followed by the ambient equality.
std::vector<LinearConstraint> permutahedron_facets(int n);

/// Vertex pairs differing by a swap of the values k and k+1; first < second.
std::vector<std::pair<Permutation, Permutation>> permutahedron_edges(int n);

std::vector<Face2D> faces_2d(int n);

/// Sums of indicator vectors over chains of bases B_1 < ... < B_k with B_i a
/// basis of the i-th constituent. Throws DomainError if some consecutive
/// pair is not a quotient or ground sets differ.
std::vector<RationalPoint> flag_polytope_vertices(std::span<const SetMatroid> flag);

/// [u, v] when the set has a unique Bruhat minimum u and maximum v and
/// equals the interval between them.
std::optional<BruhatInterval> is_bip(std::span<const Permutation> points);
/// Throws DomainError if some point is not a permutation.
std::optional<BruhatInterval> is_bip(std::span<const RationalPoint> points);

/// Exact vertex set of {x : constraints}. Every choice of inequalities that
/// together with the equalities gives a square system is solved exactly;
/// nonsingular solutions satisfying all constraints are kept.
VertexEnumeration enumerate_vertices(std::span<const LinearConstraint> constraints, int n);

/// Dimension of the affine hull of a nonempty point set.
int affine_dimension(std::span<const RationalPoint> points);

}  // namespace permsplit
