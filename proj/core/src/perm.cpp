#include "permsplit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "permsplit/error.hpp"

namespace permsplit {

namespace {

bool is_bijection(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw DomainError("permutations of different sizes: " + std::to_string(u.size()) +
                      " vs " + std::to_string(v.size()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  if (!is_bijection(entries_)) {
    std::string shown;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) shown += ',';
      shown += std::to_string(entries_[i]);
    }
    throw DomainError("not a permutation: " + shown);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
  const auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw DomainError("value " + std::to_string(value) + " not present");
  return static_cast<int>(it - entries_.begin()) + 1;
}

ValueSequence::ValueSequence(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("value sequence entries must be distinct values of [" +
                        std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

ValueSequence operator+(const ValueSequence& a, const ValueSequence& b) {
  if (a.n_ != b.n_ && !a.empty() && !b.empty()) {
    throw DomainError("concatenating sequences over different ground sets");
  }
  std::vector<int> joined = a.values_;
  joined.insert(joined.end(), b.values_.begin(), b.values_.end());
  return ValueSequence(std::max(a.n_, b.n_), std::move(joined));
}

Permutation ValueSequence::to_permutation() const {
  if (static_cast<int>(values_.size()) != n_) {
    throw DomainError("sequence " + to_string(*this) + " is not a full permutation of [" +
                      std::to_string(n_) + "]");
  }
  return Permutation(values_);
}

BruhatInterval::BruhatInterval(Permutation lo, Permutation hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!bruhat_leq(lo_, hi_)) {
    throw DomainError("not a Bruhat interval: " + to_string(lo_) + " is not below " +
                      to_string(hi_));
  }
}

int length(const Permutation& p) {
  const auto e = p.entries();
  int inversions = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] > e[j]) ++inversions;
    }
  }
  return inversions;
}

std::vector<Permutation> bruhat_covers(const Permutation& p) {
  const int base = length(p);
  std::vector<int> work(p.entries().begin(), p.entries().end());
  std::vector<Permutation> covers;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = i + 1; j < work.size(); ++j) {
      if (work[i] > work[j]) continue;
      std::swap(work[i], work[j]);
      Permutation candidate(work);
      if (length(candidate) == base + 1) covers.push_back(std::move(candidate));
      std::swap(work[i], work[j]);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  const int n = u.size();
  std::vector<int> prefix_u;
  std::vector<int> prefix_v;
  prefix_u.reserve(static_cast<std::size_t>(n));
  prefix_v.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    prefix_u.insert(std::upper_bound(prefix_u.begin(), prefix_u.end(), u.at(k)), u.at(k));
    prefix_v.insert(std::upper_bound(prefix_v.begin(), prefix_v.end(), v.at(k)), v.at(k));
    for (int i = 0; i < k; ++i) {
      if (prefix_u[i] > prefix_v[i]) return false;
    }
  }
  return true;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  if (!bruhat_leq(u, v)) {
    throw DomainError("empty interval: " + to_string(u) + " is not below " + to_string(v));
  }
  std::vector<Permutation> out;
  for (auto& z : all_permutations(u.size())) {
    if (bruhat_leq(u, z) && bruhat_leq(z, v)) out.push_back(std::move(z));
  }
  return out;
}

std::vector<Permutation> bruhat_interval(const BruhatInterval& interval) {
  return bruhat_interval(interval.lo(), interval.hi());
}

Permutation dual_permutation(const Permutation& t) {
  const int n = t.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[j - 1] = n - t.at(j) + 1;
  return Permutation(std::move(out));
}

BruhatInterval dual_interval(const BruhatInterval& interval) {
  return BruhatInterval(dual_permutation(interval.hi()), dual_permutation(interval.lo()));
}

SetSequences set_sequences(Subset values, int n) {
  if (!values.is_subset_of(Subset::full(n))) {
    throw DomainError("set " + to_string(values) + " is not inside [" + std::to_string(n) + "]");
  }
  std::vector<int> up = values.elements();
  std::vector<int> down(up.rbegin(), up.rend());
  std::vector<int> id_rest;
  for (int v = 1; v <= n; ++v) {
    if (!values.contains(v)) id_rest.push_back(v);
  }
  std::vector<int> longest_rest(id_rest.rbegin(), id_rest.rend());
  return SetSequences{ValueSequence(n, std::move(up)), ValueSequence(n, std::move(down)),
                      ValueSequence(n, std::move(id_rest)),
                      ValueSequence(n, std::move(longest_rest))};
}

Permutation bruhat_permutation_of_chain(std::span<const Subset> chain, int n) {
  if (static_cast<int>(chain.size()) != n) {
    throw DomainError("a full chain on [" + std::to_string(n) + "] needs " + std::to_string(n) +
                      " sets, got " + std::to_string(chain.size()));
  }
  std::vector<int> point(static_cast<std::size_t>(n), 0);
  Subset previous;
  for (int i = 1; i <= n; ++i) {
    const Subset current = chain[i - 1];
    if (current.size() != i || !previous.is_subset_of(current) ||
        !current.is_subset_of(Subset::full(n))) {
      throw DomainError("malformed chain at step " + std::to_string(i) + ": " +
                        to_string(current));
    }
    const int added = (current - previous).min_element();
    point[added - 1] = n - i + 1;
    previous = current;
  }
  return Permutation(std::move(point));
}

std::vector<Subset> chain_of_permutation(const Permutation& t) {
  const int n = t.size();
  std::vector<Subset> chain;
  chain.reserve(static_cast<std::size_t>(n));
  Subset current;
  for (int i = 1; i <= n; ++i) {
    current = current.with(t.position_of(n - i + 1));
    chain.push_back(current);
  }
  return chain;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

std::string join_values(std::span<const int> values, int n) {
  std::string out;
  const bool digits = n <= 9;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Permutation& p) { return join_values(p.entries(), p.size()); }

std::string to_string(const ValueSequence& s) {
  if (s.empty()) return "";
  return join_values(s.values(), s.ground_size());
}

std::string to_string(const BruhatInterval& interval) {
  return "[" + to_string(interval.lo()) + "," + to_string(interval.hi()) + "]";
}

Permutation parse_permutation(std::string_view text, int n) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
      if (ec != std::errc() || ptr != text.data() + end) {
        throw ParseError("malformed permutation entry at position " + std::to_string(pos), pos);
      }
      values.push_back(value);
      pos = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '1' || text[i] > '9') {
        throw ParseError("malformed permutation digit at position " + std::to_string(i), i);
      }
      values.push_back(text[i] - '0');
    }
  }
  if (values.empty()) throw ParseError("empty permutation", 0);
  if (n > 0 && static_cast<int>(values.size()) != n) {
    throw ParseError("permutation " + std::string(text) + " has length " +
                         std::to_string(values.size()) + ", expected " + std::to_string(n),
                     0);
  }
  if (!is_bijection(values)) {
    throw ParseError("not a permutation: " + std::string(text), 0);
  }
  return Permutation(std::move(values));
}

}  // namespace permsplit
