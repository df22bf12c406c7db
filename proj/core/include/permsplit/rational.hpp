#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace permsplit {

/// Exact rational scalar (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;

/// Accepts "p/q", "p" and an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the value is an integer.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  /// Throws DomainError when rows have different lengths.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  /// Rank by exact Gaussian elimination.
  int rank() const;
  /// Submatrix on the given (0-based) columns, all rows kept.
  RationalMatrix columns(const std::vector<int>& cols) const;
  /// Top `count` rows.
  RationalMatrix top_rows(int count) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace permsplit
