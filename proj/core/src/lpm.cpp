#include "permsplit/lpm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

namespace permsplit {

namespace {

int first_gale_failure(Subset upper, Subset lower) {
  const auto u = upper.elements();
  const auto l = lower.elements();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > l[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace

GaleOrderError::GaleOrderError(Subset upper, Subset lower, int index)
    : DomainError("Gale order fails at index " + std::to_string(index) + ": U=" +
                  to_string(upper) + " L=" + to_string(lower)),
      index_(index) {}

LatticePathMatroid::LatticePathMatroid(int n, Subset upper, Subset lower)
    : n_(n), upper_(upper), lower_(lower) {
  if (n < 0 || n > kMaxElement) throw DomainError("ground set size out of range");
  const Subset ground = Subset::full(n);
  if (!upper.is_subset_of(ground) || !lower.is_subset_of(ground)) {
    throw DomainError("U and L must be subsets of [" + std::to_string(n) + "]");
  }
  if (upper.size() != lower.size()) {
    throw DomainError("U and L have different sizes: " + to_string(upper) + " vs " +
                      to_string(lower));
  }
  if (const int index = first_gale_failure(upper, lower); index != 0) {
    throw GaleOrderError(upper, lower, index);
  }
}

LatticePathMatroid LatticePathMatroid::uniform(int k, int n) {
  return LatticePathMatroid(n, Subset::interval(1, k), Subset::interval(n - k + 1, n));
}

std::vector<Subset> lpm_bases(const LatticePathMatroid& m) {
  const auto u = m.upper().elements();
  const auto l = m.lower().elements();
  const int k = m.rank();
  std::vector<Subset> out;
  std::vector<int> path(static_cast<std::size_t>(k));
  // The i-th north step of a basis sits between u_i and l_i.
  std::function<void(int, int)> extend = [&](int step, int previous) {
    if (step == k) {
      out.push_back(Subset::of(path));
      return;
    }
    for (int b = std::max(u[step], previous + 1); b <= l[step]; ++b) {
      path[step] = b;
      extend(step + 1, b);
    }
  };
  extend(0, 0);
  return out;
}

SetMatroid to_set_matroid(const LatticePathMatroid& m) {
  return SetMatroid::trusted(m.ground_size(), lpm_bases(m));
}

bool is_good_pair(const LatticePathMatroid& m, int u, int l) {
  if (!m.upper().contains(u) || !m.lower().contains(l)) return false;
  const auto us = m.upper().elements();
  const auto ls = m.lower().elements();
  const int j = static_cast<int>(std::find(us.begin(), us.end(), u) - us.begin()) + 1;
  const int i = static_cast<int>(std::find(ls.begin(), ls.end(), l) - ls.begin()) + 1;
  return std::max(0, u - l) <= j - i;
}

std::vector<GoodPair> good_pairs(const LatticePathMatroid& m) {
  const auto us = m.upper().elements();
  const auto ls = m.lower().elements();
  std::vector<GoodPair> out;
  for (int j = 1; j <= m.rank(); ++j) {
    for (int i = 1; i <= m.rank(); ++i) {
      const int u = us[j - 1];
      const int l = ls[i - 1];
      if (std::max(0, u - l) <= j - i) out.push_back(GoodPair{u, l, j, i});
    }
  }
  return out;
}

LatticePathMatroid elementary_quotient(const LatticePathMatroid& m, int u, int l) {
  if (!is_good_pair(m, u, l)) {
    throw DomainError("(" + std::to_string(u) + "," + std::to_string(l) +
                      ") is not a good pair of M[" + to_string(m.upper()) + "," +
                      to_string(m.lower()) + "]");
  }
  return LatticePathMatroid(m.ground_size(), m.upper().without(u), m.lower().without(l));
}

LatticePathMatroid elementary_quotient(const LatticePathMatroid& m, const GoodPair& pair) {
  return elementary_quotient(m, pair.u, pair.l);
}

std::optional<std::vector<QuotientStep>> quotient_chain(const LatticePathMatroid& low,
                                                        const LatticePathMatroid& high) {
  if (low.ground_size() != high.ground_size()) {
    throw DomainError("quotient chain between different ground sets");
  }
  if (low.rank() > high.rank()) return std::nullopt;
  const SetMatroid target = to_set_matroid(low);
  if (!is_quotient(target, to_set_matroid(high))) return std::nullopt;

  std::vector<QuotientStep> steps;
  std::set<std::pair<std::uint32_t, std::uint32_t>> dead_ends;

  std::function<bool(const LatticePathMatroid&)> descend = [&](const LatticePathMatroid& current) {
    if (current.rank() == low.rank()) return current == low;
    if (dead_ends.contains({current.upper().bits(), current.lower().bits()})) return false;

    auto pairs = good_pairs(current);
    // Prefer removing steps that the target lacks; ties stay in (j, i) order.
    auto score = [&](const GoodPair& p) {
      return int{!low.upper().contains(p.u)} + int{!low.lower().contains(p.l)};
    };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const GoodPair& a, const GoodPair& b) { return score(a) > score(b); });

    for (const GoodPair& pair : pairs) {
      const LatticePathMatroid next(current.ground_size(), current.upper().without(pair.u),
                                    current.lower().without(pair.l));
      if (!is_quotient(target, to_set_matroid(next))) continue;
      steps.push_back(QuotientStep{pair, next});
      if (descend(next)) return true;
      steps.pop_back();
    }
    dead_ends.insert({current.upper().bits(), current.lower().bits()});
    return false;
  };

  if (!descend(high)) return std::nullopt;
  return steps;
}

bool is_schubert(const LatticePathMatroid& m) {
  return m.lower() == Subset::interval(m.ground_size() - m.rank() + 1, m.ground_size());
}

bool is_dual_schubert(const LatticePathMatroid& m) {
  return m.upper() == Subset::interval(1, m.rank());
}

std::optional<LatticePathMatroid> is_lpm(const SetMatroid& m) {
  const int k = m.rank();
  std::vector<int> lo(static_cast<std::size_t>(k), m.ground_size() + 1);
  std::vector<int> hi(static_cast<std::size_t>(k), 0);
  for (Subset b : m.bases()) {
    const auto e = b.elements();
    for (int i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  }
  // Component-wise extremes of sorted k-sets are strictly increasing, so
  // they are sets again and U <=_G L holds by construction.
  const LatticePathMatroid hull(m.ground_size(), Subset::of(lo), Subset::of(hi));
  if (lpm_bases(hull) != m.bases()) return std::nullopt;
  return hull;
}

LPFMFlag::LPFMFlag(std::vector<LatticePathMatroid> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw DomainError("a flag needs at least one constituent");
  const int n = constituents_.front().ground_size();
  if (static_cast<int>(constituents_.size()) == n - 1) {
    constituents_.push_back(LatticePathMatroid::uniform(n, n));
  }
  if (static_cast<int>(constituents_.size()) != n) {
    throw DomainError("a full flag on [" + std::to_string(n) + "] has " + std::to_string(n) +
                      " constituents, got " + std::to_string(constituents_.size()));
  }
  for (int i = 0; i < n; ++i) {
    const auto& m = constituents_[i];
    if (m.ground_size() != n) throw DomainError("flag constituents on different ground sets");
    if (m.rank() != i + 1) {
      throw DomainError("constituent " + std::to_string(i + 1) + " has rank " +
                        std::to_string(m.rank()));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!is_quotient(to_set_matroid(constituents_[i]), to_set_matroid(constituents_[i + 1]))) {
      throw DomainError("constituent " + std::to_string(i + 1) + " is not a quotient of constituent " +
                        std::to_string(i + 2));
    }
  }
}

std::vector<SetMatroid> LPFMFlag::set_matroids() const {
  std::vector<SetMatroid> out;
  out.reserve(constituents_.size());
  for (const auto& m : constituents_) out.push_back(to_set_matroid(m));
  return out;
}

BruhatInterval lpfm_interval(const LPFMFlag& flag) {
  const int n = flag.ground_size();
  std::vector<Subset> lower_chain;
  std::vector<Subset> upper_chain;
  for (const auto& m : flag.constituents()) {
    lower_chain.push_back(m.lower());
    upper_chain.push_back(m.upper());
  }
  return BruhatInterval(bruhat_permutation_of_chain(lower_chain, n),
                        bruhat_permutation_of_chain(upper_chain, n));
}

IntervalFlag flag_of_interval(const BruhatInterval& interval) {
  const int n = interval.size();
  std::vector<std::vector<Subset>> bases(static_cast<std::size_t>(n));
  for (const auto& z : bruhat_interval(interval)) {
    const auto chain = chain_of_permutation(z);
    for (int i = 0; i < n; ++i) bases[i].push_back(chain[i]);
  }
  IntervalFlag out;
  out.lpfm = true;
  for (int i = 0; i < n; ++i) {
    out.constituents.push_back(matroid_from_bases(n, std::move(bases[i])));
    if (!is_lpm(out.constituents.back())) out.lpfm = false;
  }
  for (int i = 0; out.lpfm && i + 1 < n; ++i) {
    if (!is_quotient(out.constituents[i], out.constituents[i + 1])) out.lpfm = false;
  }
  return out;
}

}  // namespace permsplit
