#include "permsplit/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permsplit/json_io.hpp"
#include "permsplit/lpm.hpp"
#include "permsplit/parallel.hpp"

namespace permsplit {

std::string to_string(RejectionReason reason) {
  return reason == RejectionReason::kNewVertex ? "new-vertex" : "non-bip-cell";
}

namespace {

struct SignCell {
  std::string signs;
  VertexEnumeration enumeration;
};

}  // namespace

SubdivisionOutcome subdivision_from_hyperplanes(int n, std::vector<SplitHyperplane> hyperplanes) {
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  for (const auto& h : hyperplanes) {
    if (h.ground_size() != n) {
      throw DomainError(to_string(h) + " is not a hyperplane for n = " + std::to_string(n));
    }
    if (check_split(h).verdict != SplitVerdict::kGoodSplit) {
      throw DomainError(to_string(h) + " is not a good split");
    }
  }
  const std::size_t m = hyperplanes.size();
  if (m > 20) throw DomainError("too many hyperplanes");
  const std::vector<LinearConstraint> facets = permutahedron_facets(n);
  std::vector<SignCell> sign_cells(std::size_t{1} << m);
  parallel_for(sign_cells.size(), [&](std::size_t mask) {
    std::vector<LinearConstraint> constraints = facets;
    std::string signs;
    for (std::size_t k = 0; k < m; ++k) {
      const bool above = (mask >> (m - 1 - k)) & 1u;
      signs += above ? '+' : '-';
      constraints.push_back(LinearConstraint{hyperplanes[k].support(),
                                             above ? Sense::kAtLeast : Sense::kAtMost,
                                             hyperplanes[k].level()});
    }
    sign_cells[mask] = SignCell{std::move(signs), enumerate_vertices(constraints, n)};
  });

  SubdivisionOutcome outcome;
  Subdivision subdivision{n, hyperplanes, {}};
  for (const auto& cell : sign_cells) {
    const auto& vertices = cell.enumeration.vertices;
    if (vertices.empty() || affine_dimension(vertices) != n - 1) continue;
    std::vector<Permutation> points;
    for (const auto& v : vertices) {
      auto p = v.as_permutation();
      if (!p) {
        outcome.rejection = Rejection{RejectionReason::kNewVertex, cell.signs, v, vertices};
        return outcome;
      }
      points.push_back(std::move(*p));
    }
    const auto interval = is_bip(points);
    if (!interval) {
      outcome.rejection = Rejection{RejectionReason::kNonBipCell, cell.signs, std::nullopt, vertices};
      return outcome;
    }
    subdivision.cells.push_back(SubdivisionCell{cell.signs, *interval, flag_of_interval(*interval).lpfm});
  }
  std::sort(subdivision.cells.begin(), subdivision.cells.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.interval < b.interval; });
  outcome.subdivision = std::move(subdivision);
  return outcome;
}

namespace {

bool refines_cells(const std::vector<std::set<Permutation>>& finer,
                   const std::vector<std::set<Permutation>>& coarser) {
  return std::all_of(finer.begin(), finer.end(), [&](const std::set<Permutation>& f) {
    return std::any_of(coarser.begin(), coarser.end(), [&](const std::set<Permutation>& c) {
      return std::includes(c.begin(), c.end(), f.begin(), f.end());
    });
  });
}

std::vector<std::set<Permutation>> cell_vertex_sets(const Subdivision& s) {
  std::vector<std::set<Permutation>> out;
  for (const auto& cell : s.cells) {
    const auto points = bruhat_interval(cell.interval);
    out.emplace_back(points.begin(), points.end());
  }
  return out;
}

std::vector<BruhatInterval> cell_intervals(const Subdivision& s) {
  std::vector<BruhatInterval> out;
  for (const auto& cell : s.cells) out.push_back(cell.interval);
  return out;
}

}  // namespace

bool refines(const Subdivision& finer, const Subdivision& coarser) {
  if (finer.n != coarser.n) return false;
  return refines_cells(cell_vertex_sets(finer), cell_vertex_sets(coarser));
}

std::vector<int> SubdivisionPoset::minimal() const {
  std::vector<bool> has_below(elements.size(), false);
  for (const auto& [lo, hi] : covers) has_below[hi] = true;
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!has_below[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> SubdivisionPoset::maximal() const {
  std::vector<bool> has_above(elements.size(), false);
  for (const auto& [lo, hi] : covers) has_above[lo] = true;
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!has_above[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> SubdivisionPoset::top_rank() const {
  std::size_t most = 0;
  for (const auto& e : elements) most = std::max(most, e.cells.size());
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].cells.size() == most) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> index_combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == m - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::uint32_t mask_of(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  for (int i : indices) mask |= std::uint32_t{1} << i;
  return mask;
}

bool includes_hyperplanes(const Subdivision& big, const Subdivision& small) {
  return std::includes(big.hyperplanes.begin(), big.hyperplanes.end(), small.hyperplanes.begin(),
                       small.hyperplanes.end());
}

}  // namespace

SubdivisionPoset build_poset(int n) {
  const std::vector<SplitHyperplane> splits = exhaustive_scan(n);
  const int m = static_cast<int>(splits.size());
  if (m > 20) throw DomainError("too many good splits for n = " + std::to_string(n));

  SubdivisionPoset poset;
  poset.n = n;
  std::vector<std::uint32_t> dead;  // sets rejected for a new vertex
  std::set<std::vector<BruhatInterval>> seen;
  for (int k = 1; k <= m; ++k) {
    std::vector<std::vector<int>> level;
    for (auto& combo : index_combinations(m, k)) {
      const std::uint32_t mask = mask_of(combo);
      const bool pruned =
          std::any_of(dead.begin(), dead.end(), [&](std::uint32_t d) { return (d & mask) == d; });
      if (!pruned) level.push_back(std::move(combo));
    }
    if (level.empty()) break;
    std::vector<SubdivisionOutcome> outcomes(level.size());
    parallel_for(level.size(), [&](std::size_t i) {
      std::vector<SplitHyperplane> chosen;
      for (int index : level[i]) chosen.push_back(splits[index]);
      outcomes[i] = subdivision_from_hyperplanes(n, std::move(chosen));
    });
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto& outcome = outcomes[i];
      if (outcome.rejection && outcome.rejection->reason == RejectionReason::kNewVertex) {
        dead.push_back(mask_of(level[i]));
      }
      if (!outcome.accepted()) continue;
      if (seen.insert(cell_intervals(*outcome.subdivision)).second) {
        poset.elements.push_back(std::move(*outcome.subdivision));
      }
    }
  }

  const std::size_t size = poset.elements.size();
  std::vector<std::vector<std::set<Permutation>>> vertex_sets;
  for (const auto& e : poset.elements) vertex_sets.push_back(cell_vertex_sets(e));
  // below[a][b]: b strictly refines a
  std::vector<std::vector<bool>> below(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a == b) continue;
      const bool geometric = refines_cells(vertex_sets[b], vertex_sets[a]);
      const bool combinatorial = includes_hyperplanes(poset.elements[b], poset.elements[a]);
      if (geometric != combinatorial) {
        throw std::logic_error("refinement and hyperplane inclusion disagree for elements " +
                               std::to_string(a) + " and " + std::to_string(b));
      }
      below[a][b] = geometric;
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!below[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size && covered; ++c) covered = !(below[a][c] && below[c][b]);
      if (covered) poset.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return poset;
}

std::string export_poset(const SubdivisionPoset& poset, PosetFormat format) {
  if (format == PosetFormat::kJson) return poset_to_json(poset).dump(2) + "\n";
  std::ostringstream out;
  out << "digraph subdivisions_" << poset.n << " {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const auto& e = poset.elements[i];
    std::string label;
    for (const auto& h : e.hyperplanes) label += (label.empty() ? "" : ", ") + to_string(h);
    label += "\\n";
    for (std::size_t c = 0; c < e.cells.size(); ++c) {
      label += (c == 0 ? "" : " ") + to_string(e.cells[c].interval);
    }
    out << "  s" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) out << "  s" << lo << " -> s" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace permsplit
