#include "permsplit/subset.hpp"

#include <algorithm>

#include "permsplit/error.hpp"

namespace permsplit {

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::vector<int>(elements));
}

Subset Subset::of(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) {
    if (e < 1 || e > kMaxElement) {
      throw DomainError("subset element " + std::to_string(e) + " out of range");
    }
    s = s.with(e);
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool size_lex_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

bool gale_leq(Subset a, Subset b) {
  if (a.size() != b.size()) return false;
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

std::string to_string(Subset s) {
  if (s.empty()) return "{}";
  const auto elems = s.elements();
  const bool digits = elems.back() <= 9;
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(elems[i]);
  }
  return out;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Subset::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

}  // namespace permsplit
