#include <algorithm>
#include <cctype>
#include <charconv>

#include "permsplit/cli/cli.hpp"
#include "permsplit/error.hpp"

namespace permsplit::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long number() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"",
                     pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SplitHyperplane parse_hyperplane(std::string_view text, int n) {
  Cursor cursor(text);
  Subset support;
  auto add = [&](long index, std::size_t at) {
    if (index < 1 || index > n) {
      throw ParseError("index " + std::to_string(index) + " outside [1," + std::to_string(n) + "] at position " +
                           std::to_string(at),
                       at);
    }
    if (support.contains(static_cast<int>(index))) {
      throw ParseError("repeated index " + std::to_string(index) + " at position " + std::to_string(at), at);
    }
    support = support.with(static_cast<int>(index));
  };
  cursor.expect('x');
  if (cursor.accept('_')) {
    cursor.expect('{');
    do {
      cursor.skip_space();
      const std::size_t at = cursor.position();
      add(cursor.number(), at);
    } while (cursor.accept(','));
    cursor.expect('}');
  } else {
    do {
      if (!support.empty()) cursor.expect('x');
      cursor.skip_space();
      const std::size_t at = cursor.position();
      add(cursor.number(), at);
    } while (cursor.accept('+'));
  }
  cursor.expect('=');
  cursor.skip_space();
  const std::size_t level_at = cursor.position();
  Rational level(cursor.number());
  if (cursor.accept('/')) {
    const std::size_t denominator_at = cursor.position();
    const long denominator = cursor.number();
    if (denominator == 0) throw ParseError("zero denominator at position " + std::to_string(denominator_at), denominator_at);
    level /= denominator;
  }
  if (!cursor.done()) cursor.fail("unexpected trailing text");
  try {
    return SplitHyperplane(n, support, level);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " at position " + std::to_string(level_at), level_at);
  }
}

Subset parse_subset(std::string_view text) {
  Cursor cursor(text);
  if (cursor.done()) return Subset();
  if (cursor.accept('{')) {
    cursor.expect('}');
    if (!cursor.done()) cursor.fail("unexpected trailing text");
    return Subset();
  }
  std::vector<int> elements;
  const bool commas = text.find(',') != std::string_view::npos;
  auto push = [&](long value, std::size_t at) {
    if (value < 1 || value > kMaxElement) {
      throw ParseError("element " + std::to_string(value) + " out of range at position " + std::to_string(at), at);
    }
    elements.push_back(static_cast<int>(value));
  };
  if (commas) {
    do {
      cursor.skip_space();
      const std::size_t at = cursor.position();
      push(cursor.number(), at);
    } while (cursor.accept(','));
    if (!cursor.done()) cursor.fail("unexpected trailing text");
  } else {
    cursor.skip_space();
    for (std::size_t i = cursor.position(); i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected a digit at position " + std::to_string(i), i);
      }
      push(text[i] - '0', i);
    }
  }
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (std::find(elements.begin(), elements.begin() + i, elements[i]) != elements.begin() + i) {
      throw ParseError("repeated element " + std::to_string(elements[i]), 0);
    }
  }
  return Subset::of(elements);
}

}  // namespace permsplit::cli
