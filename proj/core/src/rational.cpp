#include "permsplit/rational.hpp"

#include <utility>

#include "permsplit/error.hpp"

namespace permsplit {

namespace {

bool valid_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  if (!valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational denominator in '" + std::string(text) + "'",
                     slash + 1);
  }
  const std::string num_text(num.front() == '+' ? num.substr(1) : num);
  const boost::multiprecision::mpz_int p(num_text);
  const boost::multiprecision::mpz_int q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  return Rational(p, q);
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DomainError("matrix rows differ in length");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

int RationalMatrix::rank() const {
  RationalMatrix work = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < cols_; ++c) std::swap(work(pivot, c), work(rank, c));
    }
    for (int r = rank + 1; r < rows_; ++r) {
      if (work(r, col) == 0) continue;
      const Rational factor = work(r, col) / work(rank, col);
      for (int c = col; c < cols_; ++c) work(r, c) -= factor * work(rank, c);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::columns(const std::vector<int>& cols) const {
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, cols[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::top_rows(int count) const {
  RationalMatrix out(count, cols_);
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  }
  return out;
}

}  // namespace permsplit
