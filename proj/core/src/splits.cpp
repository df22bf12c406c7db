#include "permsplit/splits.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "permsplit/lpm.hpp"
#include "permsplit/parallel.hpp"

namespace permsplit {

namespace {

Subset canonical_support(int n, Subset s) {
  const Subset c = s.complement(n);
  return size_lex_less(c, s) ? c : s;
}

int total(int n) { return n * (n + 1) / 2; }

}  // namespace

std::pair<int, int> support_range(int n, int support_size) {
  const int k = support_size;
  return {k * (k + 1) / 2, k * (2 * n - k + 1) / 2};
}

SplitHyperplane::SplitHyperplane(int n, Subset support, Rational level) : n_(n) {
  if (n < 2) throw DomainError("hyperplanes need n >= 2");
  if (support.empty() || support == Subset::full(n) || !support.is_subset_of(Subset::full(n))) {
    throw DomainError("support " + to_string(support) + " must be a nonempty proper subset of [" +
                      std::to_string(n) + "]");
  }
  const auto [lo, hi] = support_range(n, support.size());
  if (level < lo || level > hi) {
    throw DomainError("level " + permsplit::to_string(level) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "] for support " + to_string(support));
  }
  support_ = canonical_support(n, support);
  level_ = support_ == support ? level : Rational(total(n)) - level;
}

int SplitHyperplane::side(const Permutation& p) const {
  long sum = 0;
  for (int i : support_.elements()) sum += p.at(i);
  const Rational value(sum);
  if (value < level_) return -1;
  if (value > level_) return 1;
  return 0;
}

bool operator<(const SplitHyperplane& a, const SplitHyperplane& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.support_ != b.support_) return size_lex_less(a.support_, b.support_);
  return a.level_ < b.level_;
}

std::string to_string(const SplitHyperplane& h) {
  std::string out;
  for (int i : h.support().elements()) {
    if (!out.empty()) out += '+';
    out += 'x' + std::to_string(i);
  }
  return out + '=' + to_string(h.level());
}

std::string to_string(SplitVerdict verdict) {
  switch (verdict) {
    case SplitVerdict::kGoodSplit:
      return "good-split";
    case SplitVerdict::kBadSquare:
      return "bad-square";
    case SplitVerdict::kBadHexagon:
      return "bad-hexagon";
    case SplitVerdict::kNotASplit:
      return "not-a-split";
  }
  return "unknown";
}

std::vector<TheoremHyperplane> theorem_family(int n) {
  if (n < 3) throw DomainError("the hyperplane families need n >= 3");
  std::vector<TheoremHyperplane> out;
  auto add = [&](SplitHyperplane h, HyperplaneFamily family, int parameter, int coordinate) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const TheoremHyperplane& t) { return t.hyperplane == h; });
    if (!seen) out.push_back(TheoremHyperplane{std::move(h), family, parameter, coordinate});
  };
  for (int coordinate : {1, n}) {
    for (int r = 2; r <= n - 1; ++r) {
      add(SplitHyperplane(n, Subset::of({coordinate}), r), HyperplaneFamily::kT3, r, coordinate);
    }
  }
  for (int j = 1; j <= n - 2; ++j) {
    add(SplitHyperplane(n, Subset::interval(1, j), j * (j + 1) / 2 + 1), HyperplaneFamily::kT1, j, 0);
  }
  for (int j = 1; j <= n - 2; ++j) {
    // n + (n-1) + ... + (n-j+2) + (n-j): the largest j values with n-j+1 lowered by one.
    const int level = support_range(n, j).second - 1;
    add(SplitHyperplane(n, Subset::interval(1, j), level), HyperplaneFamily::kT2, j, 0);
  }
  std::sort(out.begin(), out.end(), [](const TheoremHyperplane& a, const TheoremHyperplane& b) {
    return a.hyperplane < b.hyperplane;
  });
  return out;
}

std::vector<SplitHyperplane> theorem_hyperplanes(int n) {
  std::vector<SplitHyperplane> out;
  for (auto& t : theorem_family(n)) out.push_back(std::move(t.hyperplane));
  return out;
}

std::optional<TheoremHyperplane> classify(const SplitHyperplane& h) {
  if (h.ground_size() < 3) return std::nullopt;
  for (auto& t : theorem_family(h.ground_size())) {
    if (t.hyperplane == h) return std::move(t);
  }
  return std::nullopt;
}

namespace {

CellPair t1_cells(int n, int j) {
  const Subset a = Subset::interval(1, j - 1).with(j + 1);
  const SetSequences seq = set_sequences(a, n);
  return CellPair{
      BruhatInterval(Permutation::identity(n), (seq.decreasing + seq.longest_without).to_permutation()),
      BruhatInterval((seq.increasing + seq.identity_without).to_permutation(), Permutation::longest(n))};
}

CellPair dual_cells(const CellPair& cells) {
  return CellPair{dual_interval(cells.longest_cell), dual_interval(cells.identity_cell)};
}

CellPair t3_cells(int n, int r, int coordinate) {
  const SetSequences seq = set_sequences(Subset::of({r}), n);
  const ValueSequence single(n, {r});
  if (coordinate == 1) {
    return CellPair{BruhatInterval(Permutation::identity(n), (single + seq.longest_without).to_permutation()),
                    BruhatInterval((single + seq.identity_without).to_permutation(), Permutation::longest(n))};
  }
  return CellPair{BruhatInterval(Permutation::identity(n), (seq.longest_without + single).to_permutation()),
                  BruhatInterval((seq.identity_without + single).to_permutation(), Permutation::longest(n))};
}

}  // namespace

std::optional<CellPair> predicted_cells(const SplitHyperplane& h) {
  const auto tagged = classify(h);
  if (!tagged) return std::nullopt;
  const int n = h.ground_size();
  switch (tagged->family) {
    case HyperplaneFamily::kT1:
      return t1_cells(n, tagged->parameter);
    case HyperplaneFamily::kT2:
      return dual_cells(t1_cells(n, tagged->parameter));
    case HyperplaneFamily::kT3:
      return t3_cells(n, tagged->parameter, tagged->coordinate);
  }
  return std::nullopt;
}

SplitReport check_split(const SplitHyperplane& h) {
  const int n = h.ground_size();
  SplitReport report;
  const auto vertices = permutahedron_vertices(n);
  std::map<Permutation, int> side;
  bool below = false;
  bool above = false;
  for (const auto& p : vertices) {
    const int s = h.side(p);
    side.emplace(p, s);
    below |= s < 0;
    above |= s > 0;
  }
  if (!below || !above) {
    report.detail = "all vertices lie on one closed side";
    return report;
  }
  for (const auto& [p, q] : permutahedron_edges(n)) {
    if (side.at(p) * side.at(q) < 0) {
      report.detail = "edge " + to_string(p) + "-" + to_string(q) + " crosses the hyperplane";
      return report;
    }
  }
  const auto faces = faces_2d(n);
  auto cut = [&](const Face2D& face) {
    bool lo = false;
    bool hi = false;
    for (const auto& v : face.vertices) {
      lo |= side.at(v) < 0;
      hi |= side.at(v) > 0;
    }
    return lo && hi;
  };
  for (const auto& face : faces) {
    if (face.shape == FaceShape::kSquare && cut(face)) {
      report.verdict = SplitVerdict::kBadSquare;
      report.offending_face = face;
      report.detail = "square face " + to_string(BruhatInterval(face.min, face.max)) + " is cut";
      return report;
    }
  }
  for (const auto& face : faces) {
    if (face.shape == FaceShape::kHexagon && cut(face) && side.at(face.min) * side.at(face.max) >= 0) {
      report.verdict = SplitVerdict::kBadHexagon;
      report.offending_face = face;
      report.detail = "hexagon " + to_string(BruhatInterval(face.min, face.max)) +
                      " is cut without separating its min and max";
      return report;
    }
  }
  std::vector<Permutation> closed_below;
  std::vector<Permutation> closed_above;
  for (const auto& [p, s] : side) {
    if (s <= 0) closed_below.push_back(p);
    if (s >= 0) closed_above.push_back(p);
  }
  const auto below_cell = is_bip(closed_below);
  const auto above_cell = is_bip(closed_above);
  if (!below_cell || !above_cell) {
    report.detail = "a closed side is not a Bruhat interval";
    return report;
  }
  const Permutation e = Permutation::identity(n);
  report.cells = below_cell->lo() == e ? CellPair{*below_cell, *above_cell}
                                       : CellPair{*above_cell, *below_cell};
  report.verdict = SplitVerdict::kGoodSplit;
  report.lpfm = {flag_of_interval(report.cells->identity_cell).lpfm,
                 flag_of_interval(report.cells->longest_cell).lpfm};
  return report;
}

SplitHyperplane dual_hyperplane(const SplitHyperplane& h) {
  const SplitReport report = check_split(h);
  if (report.verdict != SplitVerdict::kGoodSplit) {
    throw DomainError(to_string(h) + " is not a good split (" + to_string(report.verdict) + ")");
  }
  const CellPair dual = dual_cells(*report.cells);
  const auto first = bruhat_interval(dual.identity_cell);
  const auto second = bruhat_interval(dual.longest_cell);
  std::vector<Permutation> shared;
  std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                        std::back_inserter(shared));
  const int n = h.ground_size();
  if (shared.empty()) throw DomainError("dual cells do not meet");
  auto sum_over = [](const Permutation& p, Subset s) {
    long total = 0;
    for (int i : s.elements()) total += p.at(i);
    return total;
  };
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t bits = 1; bits + 1 < count; ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (canonical_support(n, s) != s) continue;
    const long level = sum_over(shared.front(), s);
    const bool flat = std::all_of(shared.begin(), shared.end(),
                                  [&](const Permutation& p) { return sum_over(p, s) == level; });
    if (!flat) continue;
    const bool first_below = std::all_of(first.begin(), first.end(),
                                         [&](const Permutation& p) { return sum_over(p, s) <= level; });
    const bool first_above = std::all_of(first.begin(), first.end(),
                                         [&](const Permutation& p) { return sum_over(p, s) >= level; });
    const bool second_below = std::all_of(second.begin(), second.end(),
                                          [&](const Permutation& p) { return sum_over(p, s) <= level; });
    const bool second_above = std::all_of(second.begin(), second.end(),
                                          [&](const Permutation& p) { return sum_over(p, s) >= level; });
    if ((first_below && second_above) || (first_above && second_below)) {
      return SplitHyperplane(n, s, level);
    }
  }
  throw DomainError("no facet-parallel hyperplane separates the dual cells of " + to_string(h));
}

std::vector<SplitHyperplane> exhaustive_scan(int n, ScanLevels levels) {
  if (n < 3) throw DomainError("the scan needs n >= 3");
  std::vector<SplitHyperplane> candidates;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t bits = 1; bits + 1 < count; ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (canonical_support(n, s) != s) continue;
    const auto [lo, hi] = support_range(n, s.size());
    for (int level = lo; level < hi; ++level) {
      if (level > lo) candidates.emplace_back(n, s, Rational(level));
      if (levels == ScanLevels::kHalfIntegers) candidates.emplace_back(n, s, Rational(2 * level + 1, 2));
    }
  }
  std::vector<std::uint8_t> good(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    good[i] = check_split(candidates[i]).verdict == SplitVerdict::kGoodSplit;
  });
  std::vector<SplitHyperplane> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (good[i]) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permsplit
