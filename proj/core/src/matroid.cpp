#include "permsplit/matroid.hpp"

#include <algorithm>
#include <string>

namespace permsplit {

namespace {

void sort_lex(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) { return lex_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void sort_size_lex(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), size_lex_less);
}

/// Relabels a set on [n] \ {e} onto [n-1].
Subset squeeze(Subset s, int e) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << (e - 1)) - 1);
  const std::uint32_t high = (s.bits() >> e) << (e - 1);
  return Subset::from_bits(low | high);
}

void require_same_ground(const SetMatroid& a, const SetMatroid& b) {
  if (a.ground_size() != b.ground_size()) {
    throw DomainError("matroids on different ground sets: [" + std::to_string(a.ground_size()) +
                      "] vs [" + std::to_string(b.ground_size()) + "]");
  }
}

}  // namespace

ExchangeAxiomError::ExchangeAxiomError(Subset b1, Subset b2, int x)
    : DomainError("exchange axiom fails: B1=" + to_string(b1) + " B2=" + to_string(b2) +
                  " x=" + std::to_string(x)),
      first_(b1),
      second_(b2),
      element_(x) {}

SetMatroid::SetMatroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
  if (n < 0 || n > kMaxMatroidGround) {
    throw DomainError("ground set size " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxMatroidGround) + "]");
  }
  if (bases_.empty()) throw DomainError("a matroid needs at least one basis");
  sort_lex(bases_);
  rank_ = bases_.front().size();
  const Subset ground = Subset::full(n);
  for (Subset b : bases_) {
    if (!b.is_subset_of(ground)) {
      throw DomainError("basis " + to_string(b) + " is not inside [" + std::to_string(n) + "]");
    }
    if (b.size() != rank_) {
      throw DomainError("bases of different sizes: " + to_string(bases_.front()) + " and " +
                        to_string(b));
    }
  }

  const std::size_t count = std::size_t{1} << n;
  auto tables = std::make_shared<Tables>();
  tables->basis.assign(count, 0);
  tables->rank.assign(count, 0);
  std::vector<std::uint8_t> independent(count, 0);
  for (Subset b : bases_) {
    tables->basis[b.bits()] = 1;
    independent[b.bits()] = 1;
  }
  // Supersets have larger masks, so a downward sweep sees them first.
  for (std::size_t s = count; s-- > 0;) {
    if (independent[s]) continue;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (!(s & bit) && independent[s | bit]) {
        independent[s] = 1;
        break;
      }
    }
  }
  for (std::size_t s = 0; s < count; ++s) {
    if (independent[s]) {
      tables->rank[s] = static_cast<std::uint8_t>(Subset::from_bits(static_cast<std::uint32_t>(s)).size());
      continue;
    }
    std::uint8_t best = 0;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (s & bit) best = std::max(best, tables->rank[s & ~bit]);
    }
    tables->rank[s] = best;
  }
  tables_ = std::move(tables);
}

SetMatroid SetMatroid::trusted(int n, std::vector<Subset> bases) {
  return SetMatroid(n, std::move(bases));
}

bool SetMatroid::is_basis(Subset s) const {
  return s.is_subset_of(Subset::full(n_)) && tables_->basis[s.bits()] != 0;
}

bool SetMatroid::is_independent(Subset s) const { return rank_of(s) == s.size(); }

int SetMatroid::rank_of(Subset s) const {
  return tables_->rank[(s & Subset::full(n_)).bits()];
}

bool SetMatroid::is_flat(Subset s) const {
  const int r = rank_of(s);
  for (int e = 1; e <= n_; ++e) {
    if (!s.contains(e) && rank_of(s.with(e)) == r) return false;
  }
  return true;
}

SetMatroid matroid_from_bases(int n, std::vector<Subset> bases) {
  SetMatroid m = SetMatroid::trusted(n, std::move(bases));
  const auto& all = m.bases();
  for (Subset b1 : all) {
    for (Subset b2 : all) {
      for (int x : (b1 - b2).elements()) {
        bool found = false;
        for (int y : (b2 - b1).elements()) {
          if (m.is_basis(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) throw ExchangeAxiomError(b1, b2, x);
      }
    }
  }
  return m;
}

SetMatroid uniform_matroid(int k, int n) { return SetMatroid::trusted(n, k_subsets(n, k)); }

std::vector<Subset> circuits(const SetMatroid& m) {
  std::vector<Subset> out;
  const std::uint32_t count = std::uint32_t{1} << m.ground_size();
  for (std::uint32_t bits = 1; bits < count; ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (m.is_independent(s)) continue;
    bool minimal = true;
    for (int e : s.elements()) {
      if (!m.is_independent(s.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  sort_size_lex(out);
  return out;
}

std::vector<Subset> flats(const SetMatroid& m) {
  std::vector<Subset> out;
  const std::uint32_t count = std::uint32_t{1} << m.ground_size();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    if (m.is_flat(Subset::from_bits(bits))) out.push_back(Subset::from_bits(bits));
  }
  sort_size_lex(out);
  return out;
}

SetMatroid dual_matroid(const SetMatroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(b.complement(m.ground_size()));
  return SetMatroid::trusted(m.ground_size(), std::move(bases));
}

SetMatroid delete_element(const SetMatroid& m, int e) {
  if (e < 1 || e > m.ground_size()) throw DomainError("element " + std::to_string(e) + " not in ground set");
  std::vector<Subset> avoiding;
  for (Subset b : m.bases()) {
    if (!b.contains(e)) avoiding.push_back(squeeze(b, e));
  }
  if (avoiding.empty()) {
    // e is a coloop: deletion equals contraction.
    for (Subset b : m.bases()) avoiding.push_back(squeeze(b.without(e), e));
  }
  return SetMatroid::trusted(m.ground_size() - 1, std::move(avoiding));
}

SetMatroid contract_element(const SetMatroid& m, int e) {
  if (e < 1 || e > m.ground_size()) throw DomainError("element " + std::to_string(e) + " not in ground set");
  std::vector<Subset> through;
  for (Subset b : m.bases()) {
    if (b.contains(e)) through.push_back(squeeze(b.without(e), e));
  }
  if (through.empty()) {
    // e is a loop: contraction equals deletion.
    for (Subset b : m.bases()) through.push_back(squeeze(b, e));
  }
  return SetMatroid::trusted(m.ground_size() - 1, std::move(through));
}

namespace {

bool quotient_by_circuits(const SetMatroid& m, const SetMatroid& n) {
  const auto m_circuits = circuits(m);
  for (Subset c : circuits(n)) {
    Subset covered;
    for (Subset small : m_circuits) {
      if (small.is_subset_of(c)) covered = covered | small;
    }
    if (covered != c) return false;
  }
  return true;
}

bool quotient_by_flats(const SetMatroid& m, const SetMatroid& n) {
  const std::uint32_t count = std::uint32_t{1} << m.ground_size();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (m.is_flat(s) && !n.is_flat(s)) return false;
  }
  return true;
}

// For every basis B of N and p outside B there must be a basis B' of M
// inside B whose fundamental circuit for p lies in that of B:
// B' - q + p in B(M) implies B - q + p in B(N) for every q in B'.
bool quotient_by_exchange(const SetMatroid& m, const SetMatroid& n) {
  const Subset ground = Subset::full(n.ground_size());
  for (Subset b : n.bases()) {
    for (int p : (ground - b).elements()) {
      bool witnessed = false;
      for (Subset inner : m.bases()) {
        if (!inner.is_subset_of(b)) continue;
        bool ok = true;
        for (int q : inner.elements()) {
          if (m.is_basis(inner.without(q).with(p)) && !n.is_basis(b.without(q).with(p))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

}  // namespace

bool is_quotient(const SetMatroid& m, const SetMatroid& n, QuotientCriterion criterion) {
  require_same_ground(m, n);
  switch (criterion) {
    case QuotientCriterion::kCircuits:
      return quotient_by_circuits(m, n);
    case QuotientCriterion::kFlats:
      return quotient_by_flats(m, n);
    case QuotientCriterion::kBasisExchange:
      return quotient_by_exchange(m, n);
  }
  throw DomainError("unknown quotient criterion");
}

SetMatroid matroid_from_rational_matrix(const RationalMatrix& a) {
  const int n = a.cols();
  const int r = a.rank();
  std::vector<Subset> bases;
  for (Subset candidate : k_subsets(n, r)) {
    std::vector<int> cols;
    for (int e : candidate.elements()) cols.push_back(e - 1);
    if (a.columns(cols).rank() == r) bases.push_back(candidate);
  }
  return SetMatroid::trusted(n, std::move(bases));
}

}  // namespace permsplit
