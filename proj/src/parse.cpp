#include <cctype>
#include <string>

#include "sforge/errors.hpp"
#include "sforge/gf2poly.hpp"

namespace sforge {
namespace {

std::string join_expected(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += items[i];
  }
  return out;
}

std::string build_message(std::size_t offset, const std::vector<std::string>& expected, const std::string& found) {
  return "parse error at offset " + std::to_string(offset) + ": expected " + join_expected(expected) +
         "; found " + found;
}

// Largest total degree an expression may reach; guards against a^99999999.
constexpr unsigned long kMaxDegree = 1UL << 16;

class Parser {
 public:
  Parser(std::string_view text, std::span<const Variable> vars) : text_(text), vars_(vars) {}

  GradedPoly run() {
    GradedPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) {
      std::vector<std::string> expected{"'+'", "'*'"};
      append_factor_starts(expected);
      expected.emplace_back("end of input");
      fail(expected);
    }
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  const Variable* variable_at() {
    skip_space();
    if (pos_ >= text_.size()) return nullptr;
    for (const Variable& v : vars_) {
      if (v.name == text_[pos_]) return &v;
    }
    return nullptr;
  }

  bool factor_starts() { return variable_at() != nullptr || at('(') || at('1') || at('0'); }

  void append_factor_starts(std::vector<std::string>& out) const {
    for (const Variable& v : vars_) out.push_back(std::string("'") + v.name + "'");
    out.emplace_back("'('");
    out.emplace_back("'1'");
    out.emplace_back("'0'");
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected) {
    skip_space();
    const std::string found =
        pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : std::string("end of input");
    throw ParseError(pos_, expected, found);
  }

  static unsigned long top_degree(const GradedPoly& p) {
    return p.is_zero() ? 0UL : static_cast<unsigned long>(p.max_degree());
  }

  GradedPoly expression() {
    GradedPoly sum = term();
    while (at('+')) {
      ++pos_;
      sum += term();
    }
    return sum;
  }

  GradedPoly term() {
    GradedPoly product = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        product = checked_product(product, factor());
      } else if (factor_starts()) {
        product = checked_product(product, factor());
      } else {
        return product;
      }
    }
  }

  GradedPoly checked_product(const GradedPoly& x, const GradedPoly& y) {
    if (top_degree(x) + top_degree(y) > kMaxDegree) fail({"expression of degree at most " + std::to_string(kMaxDegree)});
    return x * y;
  }

  GradedPoly factor() {
    if (const Variable* v = variable_at()) {
      ++pos_;
      if (!at('^')) return v->image;
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e * static_cast<unsigned long>(v->image.degree()) > kMaxDegree) {
          pos_ = start;
          fail({"exponent keeping the degree at most " + std::to_string(kMaxDegree)});
        }
        ++pos_;
      }
      if (pos_ == start) fail({"unsigned integer"});
      return v->image.pow(static_cast<unsigned>(e));
    }
    if (at('(')) {
      ++pos_;
      GradedPoly inner = expression();
      if (!at(')')) fail({"'+'", "'*'", "')'"});
      ++pos_;
      return inner;
    }
    if (at('1')) {
      ++pos_;
      return GradedPoly::one();
    }
    if (at('0')) {
      ++pos_;
      return GradedPoly{};
    }
    std::vector<std::string> expected;
    append_factor_starts(expected);
    fail(expected);
  }

  std::string_view text_;
  std::span<const Variable> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(build_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

GradedPoly parse(std::string_view text, std::span<const Variable> variables) {
  return Parser(text, variables).run();
}

GradedPoly parse(std::string_view text) {
  static const Variable ab[] = {{'a', HomPoly::a()}, {'b', HomPoly::b()}};
  return parse(text, ab);
}

}  // namespace sforge
