#include "permsplit/polytope.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <string>

#include "permsplit/parallel.hpp"

namespace permsplit {

RationalPoint::RationalPoint(const Permutation& p) {
  coordinates_.reserve(static_cast<std::size_t>(p.size()));
  for (int v : p.entries()) coordinates_.emplace_back(v);
}

Rational RationalPoint::sum_over(Subset support) const {
  Rational total = 0;
  for (int i : support.elements()) total += coordinates_[static_cast<std::size_t>(i - 1)];
  return total;
}

std::optional<Permutation> RationalPoint::as_permutation() const {
  const int n = size();
  std::vector<int> values;
  values.reserve(coordinates_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : coordinates_) {
    if (!is_integer(c)) return std::nullopt;
    const long v = boost::multiprecision::numerator(c).convert_to<long>();
    if (v < 1 || v > n || seen[v]) return std::nullopt;
    seen[v] = true;
    values.push_back(static_cast<int>(v));
  }
  return Permutation(std::move(values));
}

bool LinearConstraint::satisfied_by(const RationalPoint& x) const {
  const Rational value = x.sum_over(support);
  switch (sense) {
    case Sense::kAtLeast:
      return value >= level;
    case Sense::kAtMost:
      return value <= level;
    case Sense::kEqual:
      return value == level;
  }
  return false;
}

std::vector<Permutation> permutahedron_vertices(int n) {
  if (n < 1) throw DomainError("permutahedron needs n >= 1");
  return all_permutations(n);
}

LinearConstraint ambient_equality(int n) {
  return LinearConstraint{Subset::full(n), Sense::kEqual, Rational(n * (n + 1) / 2)};
}

std::vector<LinearConstraint> permutahedron_facets(int n) {
  if (n < 1) throw DomainError("facets need n >= 1");
  std::vector<LinearConstraint> out;
  for (int size = 1; size < n; ++size) {
    for (Subset s : k_subsets(n, size)) {
      out.push_back(LinearConstraint{s, Sense::kAtLeast, Rational(size * (size + 1) / 2)});
    }
  }
  out.push_back(ambient_equality(n));
  return out;
}

std::vector<std::pair<Permutation, Permutation>> permutahedron_edges(int n) {
  if (n < 2) throw DomainError("edges need n >= 2");
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& p : all_permutations(n)) {
    std::vector<int> work(p.entries().begin(), p.entries().end());
    for (int k = 1; k < n; ++k) {
      const int a = p.position_of(k) - 1;
      const int b = p.position_of(k + 1) - 1;
      std::swap(work[a], work[b]);
      Permutation q(work);
      std::swap(work[a], work[b]);
      if (p < q) out.emplace_back(p, std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Permutation> face_vertices(const std::vector<Subset>& blocks, int n) {
  std::vector<std::vector<int>> block_positions;
  std::vector<std::vector<int>> block_values;
  int top = n;
  for (Subset b : blocks) {
    block_positions.push_back(b.elements());
    std::vector<int> values;
    for (int v = top - b.size() + 1; v <= top; ++v) values.push_back(v);
    block_values.push_back(std::move(values));
    top -= b.size();
  }
  std::vector<Permutation> out;
  std::vector<int> point(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> place = [&](std::size_t block) {
    if (block == blocks.size()) {
      out.emplace_back(point);
      return;
    }
    auto values = block_values[block];
    do {
      for (std::size_t t = 0; t < values.size(); ++t) point[block_positions[block][t] - 1] = values[t];
      place(block + 1);
    } while (std::next_permutation(values.begin(), values.end()));
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

const Permutation& bruhat_extreme(const std::vector<Permutation>& set, bool minimum) {
  for (const auto& candidate : set) {
    const bool extreme = std::all_of(set.begin(), set.end(), [&](const Permutation& other) {
      return minimum ? bruhat_leq(candidate, other) : bruhat_leq(other, candidate);
    });
    if (extreme) return candidate;
  }
  throw DomainError("face without a Bruhat extreme vertex");
}

}  // namespace

std::vector<Face2D> faces_2d(int n) {
  if (n < 3) throw DomainError("2-faces need n >= 3");
  const int block_count = n - 2;
  std::vector<Face2D> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  // Enumerate surjective labellings position -> block in lexicographic order.
  std::function<void(int)> assign = [&](int position) {
    if (position == n) {
      std::vector<Subset> blocks(static_cast<std::size_t>(block_count));
      for (int p = 0; p < n; ++p) blocks[label[p]] = blocks[label[p]].with(p + 1);
      if (std::any_of(blocks.begin(), blocks.end(), [](Subset b) { return b.empty(); })) return;
      auto vertices = face_vertices(blocks, n);
      const bool hexagon = std::any_of(blocks.begin(), blocks.end(), [](Subset b) { return b.size() == 3; });
      Permutation lo = bruhat_extreme(vertices, true);
      Permutation hi = bruhat_extreme(vertices, false);
      out.push_back(Face2D{std::move(blocks), hexagon ? FaceShape::kHexagon : FaceShape::kSquare,
                           std::move(vertices), std::move(lo), std::move(hi)});
      return;
    }
    for (int b = 0; b < block_count; ++b) {
      label[position] = b;
      assign(position + 1);
    }
  };
  assign(0);
  return out;
}

std::vector<RationalPoint> flag_polytope_vertices(std::span<const SetMatroid> flag) {
  if (flag.empty()) throw DomainError("empty flag");
  const int n = flag.front().ground_size();
  for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
    if (flag[i + 1].ground_size() != n) throw DomainError("flag constituents on different ground sets");
    if (!is_quotient(flag[i], flag[i + 1])) {
      throw DomainError("constituent " + std::to_string(i + 1) + " is not a quotient of constituent " +
                        std::to_string(i + 2));
    }
  }
  std::set<std::vector<int>> sums;
  std::vector<int> point(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, Subset)> extend = [&](std::size_t level, Subset previous) {
    if (level == flag.size()) {
      sums.insert(point);
      return;
    }
    for (Subset b : flag[level].bases()) {
      if (!previous.is_subset_of(b)) continue;
      for (int e : b.elements()) ++point[e - 1];
      extend(level + 1, b);
      for (int e : b.elements()) --point[e - 1];
    }
  };
  extend(0, Subset{});
  std::vector<RationalPoint> out;
  out.reserve(sums.size());
  for (const auto& s : sums) {
    std::vector<Rational> coords(s.begin(), s.end());
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::optional<BruhatInterval> is_bip(std::span<const Permutation> points) {
  if (points.empty()) return std::nullopt;
  std::vector<Permutation> set(points.begin(), points.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const int n = set.front().size();
  for (const auto& p : set) {
    if (p.size() != n) throw DomainError("points of different dimensions");
  }
  std::vector<const Permutation*> minima;
  std::vector<const Permutation*> maxima;
  for (const auto& candidate : set) {
    bool is_min = true;
    bool is_max = true;
    for (const auto& other : set) {
      if (is_min && !bruhat_leq(candidate, other)) is_min = false;
      if (is_max && !bruhat_leq(other, candidate)) is_max = false;
      if (!is_min && !is_max) break;
    }
    if (is_min) minima.push_back(&candidate);
    if (is_max) maxima.push_back(&candidate);
  }
  if (minima.size() != 1 || maxima.size() != 1) return std::nullopt;
  if (bruhat_interval(*minima.front(), *maxima.front()) != set) return std::nullopt;
  return BruhatInterval(*minima.front(), *maxima.front());
}

std::optional<BruhatInterval> is_bip(std::span<const RationalPoint> points) {
  std::vector<Permutation> perms;
  perms.reserve(points.size());
  for (const auto& p : points) {
    auto perm = p.as_permutation();
    if (!perm) throw DomainError("point is not a permutation");
    perms.push_back(std::move(*perm));
  }
  return is_bip(std::span<const Permutation>(perms));
}

namespace {

/// Solves rows * x = rhs for square 0/1 coefficient rows; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(const std::vector<const LinearConstraint*>& rows, int n) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = rows[r]->support.contains(c + 1) ? 1 : 0;
    a[r][n] = rows[r]->level;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
  return x;
}

/// Fraction-free (Bareiss) singularity test; the 0/1 rows keep every
/// intermediate an integer minor, far from overflow for n <= 12.
bool is_singular(const std::vector<const LinearConstraint*>& rows, int n) {
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = rows[r]->support.contains(c + 1) ? 1 : 0;
  }
  long long previous = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return true;
      std::swap(a[k], a[swap_row]);
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / previous;
      a[r][k] = 0;
    }
    previous = a[k][k];
  }
  return a[n - 1][n - 1] == 0;
}

}  // namespace

VertexEnumeration enumerate_vertices(std::span<const LinearConstraint> constraints, int n) {
  std::vector<const LinearConstraint*> equalities;
  std::vector<const LinearConstraint*> inequalities;
  for (const auto& c : constraints) {
    if (c.support.empty()) throw DomainError("constraint with empty support");
    if (!c.support.is_subset_of(Subset::full(n))) throw DomainError("constraint support outside [n]");
    (c.sense == Sense::kEqual ? equalities : inequalities).push_back(&c);
  }
  VertexEnumeration result;
  const int free = n - static_cast<int>(equalities.size());
  if (free < 0 || free > static_cast<int>(inequalities.size())) {
    result.status = EnumerationStatus::kNoVertices;
    return result;
  }
  const int m = static_cast<int>(inequalities.size());

  std::mutex merge_mutex;
  std::set<RationalPoint> found;
  auto check_and_add = [&](const std::vector<int>& pick, std::set<RationalPoint>& local) {
    std::vector<const LinearConstraint*> rows = equalities;
    for (int idx : pick) rows.push_back(inequalities[idx]);
    if (is_singular(rows, n)) return;
    auto solution = solve_square(rows, n);
    if (!solution) return;
    RationalPoint x(std::move(*solution));
    for (const auto& c : constraints) {
      if (!c.satisfied_by(x)) return;
    }
    local.insert(std::move(x));
  };

  if (free == 0) {
    std::set<RationalPoint> local;
    check_and_add({}, local);
    found = std::move(local);
  } else {
    // Parallelize over the first chosen inequality.
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t first) {
      std::set<RationalPoint> local;
      std::vector<int> pick(static_cast<std::size_t>(free));
      pick[0] = static_cast<int>(first);
      std::function<void(int, int)> choose = [&](int slot, int start) {
        if (slot == free) {
          check_and_add(pick, local);
          return;
        }
        for (int idx = start; idx <= m - (free - slot); ++idx) {
          pick[slot] = idx;
          choose(slot + 1, idx + 1);
        }
      };
      choose(1, static_cast<int>(first) + 1);
      std::lock_guard lock(merge_mutex);
      found.merge(local);
    });
  }
  result.vertices.assign(found.begin(), found.end());
  if (result.vertices.empty()) result.status = EnumerationStatus::kNoVertices;
  return result;
}

int affine_dimension(std::span<const RationalPoint> points) {
  if (points.empty()) throw DomainError("affine dimension of an empty set");
  const int n = points.front().size();
  RationalMatrix diffs(static_cast<int>(points.size()) - 1, n);
  for (std::size_t r = 1; r < points.size(); ++r) {
    for (int c = 0; c < n; ++c) diffs(static_cast<int>(r) - 1, c) = points[r][c] - points[0][c];
  }
  return diffs.rank();
}

}  // namespace permsplit
