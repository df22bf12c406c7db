#include "permsplit/verify/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace permsplit::oracle {

namespace {

std::vector<Permutation> every_permutation(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

Permutation swap_positions(const Permutation& p, int i, int j) {
  std::vector<int> values(p.entries().begin(), p.entries().end());
  std::swap(values[i], values[j]);
  return Permutation(values);
}

}  // namespace

std::map<Permutation, int> coxeter_lengths(int n) {
  std::map<Permutation, int> length;
  std::deque<Permutation> queue;
  const Permutation e = Permutation::identity(n);
  length.emplace(e, 0);
  queue.push_back(e);
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      Permutation q = swap_positions(p, i, i + 1);
      if (length.emplace(q, length.at(p) + 1).second) queue.push_back(std::move(q));
    }
  }
  return length;
}

ReachabilityOrder::ReachabilityOrder(int n) : elements_(every_permutation(n)) {
  for (int i = 0; i < size(); ++i) index_.emplace(elements_[i], i);
  const auto length = coxeter_lengths(n);
  covers_.resize(elements_.size());
  for (int a = 0; a < size(); ++a) {
    const Permutation& p = elements_[a];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Permutation q = swap_positions(p, i, j);
        if (length.at(q) == length.at(p) + 1) covers_[a].push_back(index(q));
      }
    }
  }
  reach_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
  for (int a = 0; a < size(); ++a) {
    std::vector<int> stack{a};
    reach_[a][a] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : covers_[x]) {
        if (!reach_[a][y]) {
          reach_[a][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
}

int ReachabilityOrder::index(const Permutation& p) const { return index_.at(p); }

bool ReachabilityOrder::leq(const Permutation& u, const Permutation& v) const {
  return reach_[index(u)][index(v)];
}

std::vector<Permutation> ReachabilityOrder::covers(const Permutation& u) const {
  std::vector<Permutation> out;
  for (int y : covers_[index(u)]) out.push_back(elements_[y]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> ReachabilityOrder::interval(const Permutation& u, const Permutation& v) const {
  std::vector<Permutation> out;
  for (const auto& p : elements_) {
    if (leq(u, p) && leq(p, v)) out.push_back(p);
  }
  return out;
}

long long lattice_path_count(int n, Subset upper, Subset lower) {
  const auto u = upper.elements();
  const auto l = lower.elements();
  const std::size_t k = u.size();
  if (k == 0) return 1;
  // ways[x]: choices of b_1 < ... < b_i with b_i = x
  std::vector<long long> ways(n + 1, 0);
  for (int x = u[0]; x <= l[0]; ++x) ways[x] = 1;
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<long long> next(n + 1, 0);
    long long prefix = 0;
    for (int x = 1; x <= n; ++x) {
      if (x >= u[i] && x <= l[i]) next[x] = prefix;
      prefix += ways[x];
    }
    ways = std::move(next);
  }
  return std::accumulate(ways.begin(), ways.end(), 0LL);
}

std::vector<Subset> gale_filter_bases(int n, Subset upper, Subset lower) {
  const auto u = upper.elements();
  const auto l = lower.elements();
  std::vector<Subset> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (s.size() != static_cast<int>(u.size())) continue;
    const auto b = s.elements();
    bool inside = true;
    for (std::size_t i = 0; i < b.size() && inside; ++i) inside = u[i] <= b[i] && b[i] <= l[i];
    if (inside) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.elements() < b.elements(); });
  return out;
}

VertexPartition vertex_partition(int n, Subset support, long level) {
  VertexPartition out;
  std::map<Permutation, long> value;
  for (const auto& p : every_permutation(n)) {
    long sum = 0;
    for (int i = 1; i <= n; ++i) {
      if (support.contains(i)) sum += p.at(i);
    }
    value.emplace(p, sum);
    if (sum <= level) out.below.push_back(p);
    if (sum >= level) out.above.push_back(p);
    out.strictly_below |= sum < level;
    out.strictly_above |= sum > level;
  }
  for (const auto& [p, sum] : value) {
    for (int k = 1; k < n; ++k) {
      // swap the values k and k+1
      std::vector<int> values(p.entries().begin(), p.entries().end());
      for (int& x : values) x = x == k ? k + 1 : x == k + 1 ? k : x;
      const long other = value.at(Permutation(values));
      if ((sum - level) * (other - level) < 0) out.edge_crossed = true;
    }
  }
  return out;
}

bool is_good_split(const ReachabilityOrder& order, Subset support, long level) {
  const int n = order.elements().front().size();
  const VertexPartition part = vertex_partition(n, support, level);
  if (!part.strictly_below || !part.strictly_above || part.edge_crossed) return false;
  auto is_interval = [&](const std::vector<Permutation>& points) {
    std::vector<Permutation> lows;
    std::vector<Permutation> highs;
    for (const auto& p : points) {
      bool low = true;
      bool high = true;
      for (const auto& q : points) {
        if (q == p) continue;
        low &= !order.leq(q, p);
        high &= !order.leq(p, q);
      }
      if (low) lows.push_back(p);
      if (high) highs.push_back(p);
    }
    return lows.size() == 1 && highs.size() == 1 && order.interval(lows[0], highs[0]) == points;
  };
  return is_interval(part.below) && is_interval(part.above);
}

}  // namespace permsplit::oracle
