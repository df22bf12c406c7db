#include "permsplit/verify/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "permsplit/lpm.hpp"
#include "permsplit/matroid.hpp"
#include "permsplit/parallel.hpp"
#include "permsplit/polytope.hpp"
#include "permsplit/splits.hpp"
#include "permsplit/subdivision.hpp"
#include "permsplit/verify/oracles.hpp"

namespace permsplit::verify {

namespace {

using Rng = std::mt19937_64;

class Checker {
 public:
  explicit Checker(CriterionResult& result) : result_(result) {}

  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition) fail(what);
  }
  void fail(const std::string& what) {
    result_.passed = false;
    if (++failures_ <= 10) result_.notes.push_back("FAILED " + what);
  }
  void note(const std::string& line) { result_.notes.push_back(line); }
  long checks() const { return checks_; }

 private:
  CriterionResult& result_;
  long checks_ = 0;
  long failures_ = 0;
};

std::vector<int> sizes(const AcceptanceConfig& config, std::vector<int> wanted) {
  if (!config.only_n) return wanted;
  if (std::find(wanted.begin(), wanted.end(), *config.only_n) != wanted.end()) return {*config.only_n};
  return {};
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out.empty() ? "none" : out;
}

std::set<RationalPoint> as_points(const std::vector<Permutation>& perms) {
  std::set<RationalPoint> out;
  for (const auto& p : perms) out.emplace(p);
  return out;
}

/// Every LatticePathMatroid on [n] of rank k.
std::vector<LatticePathMatroid> all_lpms(int n, int k) {
  std::vector<LatticePathMatroid> out;
  const auto subsets = k_subsets(n, k);
  for (Subset u : subsets) {
    for (Subset l : subsets) {
      if (gale_leq(u, l)) out.emplace_back(n, u, l);
    }
  }
  return out;
}

std::vector<LatticePathMatroid> all_lpms(int n) {
  std::vector<LatticePathMatroid> out;
  for (int k = 0; k <= n; ++k) {
    auto part = all_lpms(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// criterion 1

CriterionResult bruhat_oracle(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 1;
  result.title = "Bruhat order equals cover-digraph reachability";
  Checker check(result);
  const auto ns = sizes(config, {3, 4, 5});
  long pairs = 0;
  for (int n : ns) {
    const oracle::ReachabilityOrder order(n);
    const auto lengths = oracle::coxeter_lengths(n);
    for (const auto& u : order.elements()) {
      check.expect(length(u) == lengths.at(u), "length of " + to_string(u));
      check.expect(bruhat_covers(u) == order.covers(u), "covers of " + to_string(u));
      for (const auto& v : order.elements()) {
        ++pairs;
        if (bruhat_leq(u, v) != order.leq(u, v)) check.fail(to_string(u) + " <= " + to_string(v));
      }
    }
  }
  result.skipped = ns.empty();
  result.summary = "n=" + join(ns) + ", " + std::to_string(pairs) + " pairs";
  return result;
}

// criterion 2

using FlagKey = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

FlagKey key_of(const std::vector<LatticePathMatroid>& flag) {
  FlagKey key;
  for (const auto& m : flag) key.emplace_back(m.upper().bits(), m.lower().bits());
  return key;
}

// Flags M_1 <= ... <= M_n built downward from U_{n,n} by elementary quotients.
void descend(std::vector<LatticePathMatroid>& suffix, std::map<FlagKey, LPFMFlag>& out) {
  const LatticePathMatroid top = suffix.front();
  if (top.rank() == 1) {
    out.emplace(key_of(suffix), LPFMFlag(suffix));
    return;
  }
  for (const auto& pair : good_pairs(top)) {
    suffix.insert(suffix.begin(), elementary_quotient(top, pair));
    descend(suffix, out);
    suffix.erase(suffix.begin());
  }
}

std::vector<LPFMFlag> schubert_flags(int n, Checker& check) {
  std::vector<LPFMFlag> out;
  for (const auto& t : all_permutations(n)) {
    // U_i = the first i entries of t, L_i = {n-i+1, ..., n}
    std::vector<LatticePathMatroid> constituents;
    Subset u;
    for (int i = 1; i <= n; ++i) {
      u = u.with(t.at(i));
      constituents.emplace_back(n, u, Subset::interval(n - i + 1, n));
    }
    try {
      out.emplace_back(constituents);
    } catch (const DomainError& e) {
      check.fail("Schubert flag from " + to_string(t) + ": " + e.what());
    }
  }
  return out;
}

CriterionResult flag_polytopes(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 2;
  result.title = "LPFM flag polytopes are Bruhat interval polytopes";
  Checker check(result);
  Rng rng(config.seed);
  std::vector<std::string> parts;
  for (int n : sizes(config, {3, 4, 5})) {
    const oracle::ReachabilityOrder order(n);
    std::vector<LPFMFlag> flags;
    if (n <= 4) {
      flags = schubert_flags(n, check);
      const std::size_t schubert = flags.size();
      std::map<FlagKey, LPFMFlag> reachable;
      std::vector<LatticePathMatroid> suffix{LatticePathMatroid::uniform(n, n)};
      descend(suffix, reachable);
      for (auto& [key, flag] : reachable) flags.push_back(flag);
      parts.push_back("n=" + std::to_string(n) + ": " + std::to_string(schubert) + " Schubert + " +
                      std::to_string(reachable.size()) + " reachable");
    } else {
      std::map<FlagKey, LPFMFlag> sampled;
      for (int attempt = 0; attempt < 20000 && sampled.size() < 250; ++attempt) {
        std::vector<LatticePathMatroid> suffix{LatticePathMatroid::uniform(n, n)};
        while (suffix.front().rank() > 1) {
          const auto pairs = good_pairs(suffix.front());
          const auto& pair = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
          suffix.insert(suffix.begin(), elementary_quotient(suffix.front(), pair));
        }
        sampled.emplace(key_of(suffix), LPFMFlag(suffix));
      }
      for (auto& [key, flag] : sampled) flags.push_back(flag);
      parts.push_back("n=" + std::to_string(n) + ": " + std::to_string(sampled.size()) + " sampled");
    }
    std::vector<std::uint8_t> ok(flags.size(), 0);
    parallel_for(flags.size(), [&](std::size_t i) {
      const BruhatInterval interval = lpfm_interval(flags[i]);
      const auto matroids = flags[i].set_matroids();
      const auto vertices = flag_polytope_vertices(matroids);
      const std::set<RationalPoint> found(vertices.begin(), vertices.end());
      ok[i] = found == as_points(order.interval(interval.lo(), interval.hi()));
    });
    for (std::size_t i = 0; i < flags.size(); ++i) {
      check.expect(ok[i], "flag with interval " + to_string(lpfm_interval(flags[i])));
    }
  }
  result.skipped = parts.empty();
  for (const auto& p : parts) result.summary += (result.summary.empty() ? "" : "; ") + p;
  return result;
}

// criteria 3 and 4

CriterionResult theorem_cells(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 3;
  result.title = "theorem hyperplanes are good splits with the predicted cells";
  Checker check(result);
  const auto ns = sizes(config, {3, 4, 5});
  long count = 0;
  for (int n : ns) {
    const oracle::ReachabilityOrder order(n);
    for (const auto& h : theorem_hyperplanes(n)) {
      ++count;
      const SplitReport report = check_split(h);
      if (report.verdict != SplitVerdict::kGoodSplit) {
        check.fail(to_string(h) + " verdict " + to_string(report.verdict));
        continue;
      }
      const auto predicted = predicted_cells(h);
      check.expect(predicted && *predicted == *report.cells, "predicted cells of " + to_string(h));
      const auto part = oracle::vertex_partition(n, h.support(), static_cast<long>(numerator(h.level())));
      const auto& c = *report.cells;
      const auto below = order.interval(c.identity_cell.lo(), c.identity_cell.hi());
      const auto above = order.interval(c.longest_cell.lo(), c.longest_cell.hi());
      check.expect((below == part.below && above == part.above) || (below == part.above && above == part.below),
                   "cells of " + to_string(h) + " against the vertex partition");
    }
    if (n == 4) {
      const std::vector<SplitHyperplane> expected{
          SplitHyperplane(4, Subset::of({1, 2}), 4), SplitHyperplane(4, Subset::of({1, 2}), 6),
          SplitHyperplane(4, Subset::of({1}), 2),    SplitHyperplane(4, Subset::of({1}), 3),
          SplitHyperplane(4, Subset::of({4}), 2),    SplitHyperplane(4, Subset::of({4}), 3)};
      auto got = theorem_hyperplanes(4);
      auto want = expected;
      std::sort(want.begin(), want.end());
      check.expect(got == want, "n=4 hyperplane list");
    }
  }
  result.skipped = ns.empty();
  result.summary = "n=" + join(ns) + ", " + std::to_string(count) + " hyperplanes";
  return result;
}

CriterionResult classification(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 4;
  result.title = "exhaustive scan equals the theorem families";
  Checker check(result);
  const auto ns = sizes(config, {3, 4, 5});
  const std::map<int, std::size_t> expected_count{{3, 2}, {4, 6}, {5, 10}};
  std::string counts;
  for (int n : ns) {
    const auto scan = exhaustive_scan(n);
    check.expect(scan == theorem_hyperplanes(n), "scan equals theorem list at n=" + std::to_string(n));
    check.expect(scan.size() == expected_count.at(n), "scan size at n=" + std::to_string(n));
    const oracle::ReachabilityOrder order(n);
    std::vector<SplitHyperplane> brute;
    for (std::uint32_t bits = 1; bits + 1 < (std::uint32_t{1} << n); ++bits) {
      const Subset s = Subset::from_bits(bits);
      const auto [lo, hi] = support_range(n, s.size());
      for (long level = lo; level <= hi; ++level) {
        if (oracle::is_good_split(order, s, level)) brute.emplace_back(n, s, level);
      }
    }
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    check.expect(scan == brute, "scan equals the brute-force oracle at n=" + std::to_string(n));
    counts += (counts.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(scan.size());
    if (n == 4) {
      check.expect(check_split(SplitHyperplane(4, Subset::of({1, 2}), 5)).verdict == SplitVerdict::kBadSquare,
                   "x1+x2=5 is bad-square");
      check.expect(check_split(SplitHyperplane(4, Subset::of({3}), 3)).verdict == SplitVerdict::kBadHexagon,
                   "x3=3 is bad-hexagon");
    }
  }
  result.skipped = ns.empty();
  result.summary = "good splits per n {" + counts + "}";
  return result;
}

// criterion 5

CriterionResult duality(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 5;
  result.title = "duality of splits";
  Checker check(result);
  const auto ns = sizes(config, {3, 4, 5});
  long count = 0;
  for (int n : ns) {
    for (const auto& h : exhaustive_scan(n)) {
      ++count;
      const SplitHyperplane d = dual_hyperplane(h);
      check.expect(dual_hyperplane(d) == h, "involution at " + to_string(h));
      const auto cells = *check_split(h).cells;
      const auto dual_cells = *check_split(d).cells;
      check.expect(dual_cells.identity_cell == dual_interval(cells.longest_cell) &&
                       dual_cells.longest_cell == dual_interval(cells.identity_cell),
                   "dual cells of " + to_string(h));
      const auto tag = classify(h);
      const auto dual_tag = classify(d);
      if (!tag || !dual_tag) {
        check.fail("unclassified split " + to_string(h));
        continue;
      }
      if (tag->family == HyperplaneFamily::kT1) {
        check.expect(dual_tag->family == HyperplaneFamily::kT2 && dual_tag->parameter == tag->parameter,
                     "T1 -> T2 at " + to_string(h));
      } else if (tag->family == HyperplaneFamily::kT2) {
        check.expect(dual_tag->family == HyperplaneFamily::kT1 && dual_tag->parameter == tag->parameter,
                     "T2 -> T1 at " + to_string(h));
      } else {
        check.expect(dual_tag->family == HyperplaneFamily::kT3 && dual_tag->coordinate == tag->coordinate &&
                         dual_tag->parameter == n - tag->parameter + 1,
                     "x_i=r -> x_i=n-r+1 at " + to_string(h));
      }
    }
  }
  const bool examples = !config.only_n || *config.only_n == 6;
  if (examples) {
    const auto e6 = Permutation::identity(6);
    const auto w6 = Permutation::longest(6);
    check.expect(dual_interval(BruhatInterval(e6, parse_permutation("316542"))) ==
                     BruhatInterval(parse_permutation("461235"), w6),
                 "[e,316542]* = [461235,w]");
    check.expect(dual_interval(BruhatInterval(parse_permutation("132456"), w6)) ==
                     BruhatInterval(e6, parse_permutation("645321")),
                 "[132456,w]* = [e,645321]");
  }
  result.skipped = ns.empty() && !examples;
  result.summary = "n=" + join(ns) + ", " + std::to_string(count) + " splits" +
                   (examples ? ", two S_6 interval examples" : "");
  return result;
}

// criterion 6

CriterionResult poset_four(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 6;
  result.title = "the poset of split subdivisions of Pi_4";
  Checker check(result);
  if (!sizes(config, {4}).empty()) {
    const SubdivisionPoset poset = build_poset(4);
    const auto minimal = poset.minimal();
    const auto maximal = poset.maximal();
    check.expect(minimal.size() == 6, "6 minimal elements (found " + std::to_string(minimal.size()) + ")");
    check.expect(maximal.size() == 2, "2 maximal elements (found " + std::to_string(maximal.size()) + ")");
    std::string finest;
    for (int i : maximal) {
      std::string hs;
      for (const auto& h : poset.elements[i].hyperplanes) hs += (hs.empty() ? "" : " & ") + to_string(h);
      finest += "\n    " + hs + " (" + std::to_string(poset.elements[i].cells.size()) + " cells)";
    }
    check.note("info: maximal elements by refinement:" + finest);
    check.note("info: elements with the most cells: " + std::to_string(poset.top_rank().size()));

    const auto outcome = subdivision_from_hyperplanes(
        4, {SplitHyperplane(4, Subset::of({1, 2}), 6), SplitHyperplane(4, Subset::of({1}), 2),
            SplitHyperplane(4, Subset::of({4}), 3)});
    std::vector<BruhatInterval> want;
    for (auto [lo, hi] : std::vector<std::pair<const char*, const char*>>{
             {"1234", "2413"}, {"1243", "2431"}, {"2134", "4213"}, {"2143", "4231"}, {"2413", "4321"}}) {
      want.emplace_back(parse_permutation(lo), parse_permutation(hi));
    }
    std::vector<BruhatInterval> got;
    if (outcome.accepted()) {
      for (const auto& cell : outcome.subdivision->cells) got.push_back(cell.interval);
    }
    check.expect(got == want, "five cells of x1+x2=6, x1=2, x4=3");
    const auto rejected = subdivision_from_hyperplanes(
        4, {SplitHyperplane(4, Subset::of({1, 2}), 6), SplitHyperplane(4, Subset::of({4}), 2)});
    check.expect(rejected.rejection && rejected.rejection->reason == RejectionReason::kNewVertex,
                 "x1+x2=6, x4=2 rejected for a new vertex");
    result.summary = std::to_string(poset.elements.size()) + " elements, " + std::to_string(minimal.size()) +
                     " minimal, " + std::to_string(maximal.size()) + " maximal";
  } else {
    result.skipped = true;
  }
  return result;
}

// criterion 7

SetMatroid random_matrix_matroid(Rng& rng, int rows, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> data(rows, std::vector<Rational>(n));
  for (auto& row : data) {
    for (auto& x : row) x = entry(rng);
  }
  return matroid_from_rational_matrix(RationalMatrix(data));
}

CriterionResult quotient_criteria(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 7;
  result.title = "the three quotient criteria agree";
  Checker check(result);
  const auto ns = sizes(config, {1, 2, 3, 4, 5});
  std::atomic<long> lpm_pairs{0};
  std::mutex mutex;
  for (int n : ns) {
    std::vector<SetMatroid> matroids;
    for (const auto& m : all_lpms(n)) matroids.push_back(to_set_matroid(m));
    parallel_for(matroids.size(), [&](std::size_t i) {
      for (const auto& other : matroids) {
        const bool c1 = is_quotient(matroids[i], other, QuotientCriterion::kCircuits);
        const bool c2 = is_quotient(matroids[i], other, QuotientCriterion::kFlats);
        const bool c3 = is_quotient(matroids[i], other, QuotientCriterion::kBasisExchange);
        ++lpm_pairs;
        if (c1 != c2 || c2 != c3) {
          std::lock_guard lock(mutex);
          check.fail("criteria disagree on an LPM pair at n=" + std::to_string(n));
        }
      }
    });
  }
  const auto random_ns = sizes(config, {1, 2, 3, 4, 5, 6});
  long random_pairs = 0;
  long quotients = 0;
  if (!random_ns.empty()) {
    Rng rng(config.seed + 7);
    for (int trial = 0; trial < 600; ++trial) {
      const int n = random_ns[std::uniform_int_distribution<std::size_t>(0, random_ns.size() - 1)(rng)];
      const int rows = std::uniform_int_distribution<int>(1, n)(rng);
      std::uniform_int_distribution<int> entry(-2, 2);
      std::vector<std::vector<Rational>> data(rows, std::vector<Rational>(n));
      for (auto& row : data) {
        for (auto& x : row) x = entry(rng);
      }
      const RationalMatrix a(data);
      const SetMatroid big = matroid_from_rational_matrix(a);
      const SetMatroid small =
          trial % 2 == 0
              ? matroid_from_rational_matrix(a.top_rows(std::uniform_int_distribution<int>(1, rows)(rng)))
              : random_matrix_matroid(rng, std::uniform_int_distribution<int>(1, n)(rng), n);
      const bool c1 = is_quotient(small, big, QuotientCriterion::kCircuits);
      const bool c2 = is_quotient(small, big, QuotientCriterion::kFlats);
      const bool c3 = is_quotient(small, big, QuotientCriterion::kBasisExchange);
      ++random_pairs;
      quotients += c2;
      check.expect(c1 == c2 && c2 == c3, "criteria disagree on random pair " + std::to_string(trial));
      if (trial % 2 == 0) check.expect(c2, "top rows give a quotient, trial " + std::to_string(trial));
    }
  }
  result.skipped = ns.empty() && random_ns.empty();
  result.summary = std::to_string(lpm_pairs.load()) + " LPM pairs (n=" + join(ns) + "), " +
                   std::to_string(random_pairs) + " random pairs (" + std::to_string(quotients) +
                   " quotients)";
  return result;
}

// criterion 8

CriterionResult good_pair_equivalence(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 8;
  result.title = "good pairs are exactly the elementary quotients";
  Checker check(result);
  const auto ns = sizes(config, {1, 2, 3, 4, 5, 6});
  std::atomic<long> tested{0};
  std::atomic<long> good{0};
  std::mutex mutex;
  for (int n : ns) {
    const auto lpms = all_lpms(n);
    parallel_for(lpms.size(), [&](std::size_t index) {
      const auto& m = lpms[index];
      const SetMatroid big = matroid_from_bases(n, oracle::gale_filter_bases(n, m.upper(), m.lower()));
      for (int u : m.upper().elements()) {
        for (int l : m.lower().elements()) {
          const Subset upper = m.upper().without(u);
          const Subset lower = m.lower().without(l);
          bool quotient = false;
          if (gale_leq(upper, lower)) {
            const SetMatroid small = matroid_from_bases(n, oracle::gale_filter_bases(n, upper, lower));
            quotient = is_quotient(small, big);
          }
          ++tested;
          good += quotient;
          if (is_good_pair(m, u, l) != quotient) {
            std::lock_guard lock(mutex);
            check.fail("M[" + to_string(m.upper()) + "," + to_string(m.lower()) + "] with (" +
                       std::to_string(u) + "," + std::to_string(l) + ")");
          }
        }
      }
    });
  }
  result.skipped = ns.empty();
  result.summary = "n=" + join(ns) + ", " + std::to_string(tested.load()) + " (u,l) pairs, " +
                   std::to_string(good.load()) + " good";
  return result;
}

// criterion 9

CriterionResult exact_kernel(const AcceptanceConfig& config) {
  CriterionResult result;
  result.id = 9;
  result.title = "exact vertex enumeration and basis counts";
  Checker check(result);
  const auto ns = sizes(config, {1, 2, 3, 4, 5});
  for (int n : ns) {
    const auto facets = permutahedron_facets(n);
    const auto found = enumerate_vertices(facets, n);
    const std::set<RationalPoint> got(found.vertices.begin(), found.vertices.end());
    std::vector<Permutation> perms;
    for (const auto& [p, len] : oracle::coxeter_lengths(n)) perms.push_back(p);
    check.expect(got.size() == found.vertices.size() && got == as_points(perms),
                 "vertices of Pi_" + std::to_string(n));
  }
  const bool cut = sizes(config, {4}).size() == 1;
  if (cut) {
    auto constraints = permutahedron_facets(4);
    constraints.push_back(LinearConstraint{Subset::of({1, 2}), Sense::kAtMost, Rational(5)});
    const auto found = enumerate_vertices(constraints, 4);
    const bool fresh = std::any_of(found.vertices.begin(), found.vertices.end(),
                                   [](const RationalPoint& p) { return !p.as_permutation(); });
    check.expect(fresh, "Pi_4 cut at x1+x2 <= 5 has a non-permutation vertex");
    if (!fresh) {
      long permutations = 0;
      for (const auto& p : permutahedron_vertices(4)) permutations += p.at(1) + p.at(2) <= 5;
      check.note("info: the cut has " + std::to_string(found.vertices.size()) + " vertices, all permutations (" +
                 std::to_string(permutations) + " permutations satisfy x1+x2 <= 5)");
      constraints.back().level = Rational(9, 2);
      const auto half = enumerate_vertices(constraints, 4);
      const auto count = std::count_if(half.vertices.begin(), half.vertices.end(),
                                       [](const RationalPoint& p) { return !p.as_permutation(); });
      check.note("info: the cut at x1+x2 <= 9/2 has " + std::to_string(count) + " non-permutation vertices");
    }
  }
  Rng rng(config.seed + 9);
  long samples = 0;
  const int lo_n = config.only_n.value_or(1);
  const int hi_n = config.only_n.value_or(14);
  if (lo_n >= 1 && hi_n <= kMaxMatroidGround) {
    for (; samples < 1000; ++samples) {
      const int n = std::uniform_int_distribution<int>(lo_n, hi_n)(rng);
      const int k = std::uniform_int_distribution<int>(0, n)(rng);
      std::vector<int> values(n);
      for (int i = 0; i < n; ++i) values[i] = i + 1;
      std::shuffle(values.begin(), values.end(), rng);
      std::vector<int> a(values.begin(), values.begin() + k);
      std::shuffle(values.begin(), values.end(), rng);
      std::vector<int> b(values.begin(), values.begin() + k);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<int> upper(k);
      std::vector<int> lower(k);
      for (int i = 0; i < k; ++i) {
        upper[i] = std::min(a[i], b[i]);
        lower[i] = std::max(a[i], b[i]);
      }
      const LatticePathMatroid m(n, Subset::of(upper), Subset::of(lower));
      const long long want = oracle::lattice_path_count(n, m.upper(), m.lower());
      check.expect(static_cast<long long>(lpm_bases(m).size()) == want,
                   "basis count of M[" + to_string(m.upper()) + "," + to_string(m.lower()) + "]");
    }
  }
  result.skipped = ns.empty() && !cut && samples == 0;
  result.summary = "Pi_n for n=" + join(ns) + (cut ? ", x1+x2<=5 cut" : "") + ", " + std::to_string(samples) +
                   " random LPM basis counts";
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  const std::vector<std::function<CriterionResult(const AcceptanceConfig&)>> criteria{
      bruhat_oracle, flag_polytopes,        theorem_cells, classification, duality,
      poset_four,    quotient_criteria,     good_pair_equivalence, exact_kernel};
  std::vector<CriterionResult> out;
  for (const auto& run : criteria) {
    try {
      out.push_back(run(config));
    } catch (const std::exception& e) {
      CriterionResult failed;
  failed.id = static_cast<int>(out.size()) + 1;
  failed.title = "aborted";
      failed.passed = false;
      failed.notes.push_back(std::string("exception: ") + e.what());
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    out << "criterion " << r.id << ": " << status << "  " << r.title;
    if (!r.summary.empty() && !r.skipped) out << " (" << r.summary << ")";
    out << "\n";
    for (const auto& note : r.notes) out << "    " << note << "\n";
  }
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.skipped || r.passed; });
}

}  // namespace permsplit::verify
