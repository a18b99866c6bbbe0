#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sforge/bitvec.hpp"

namespace sforge {

/// Homogeneous polynomial in F2[a,b]. Bit i of the coefficient vector is the
/// coefficient of a^i * b^(degree - i), so the vector holds degree + 1 bits.
///
/// A zero polynomial still carries a degree tag, but all zeros compare equal.
class HomPoly {
 public:
  /// The zero polynomial in degree 0.
  HomPoly() : HomPoly(0) {}

  static HomPoly zero(int degree) { return HomPoly(degree); }
  static HomPoly one() { return monomial(0, 0); }
  static HomPoly monomial(int a_exp, int b_exp);
  static HomPoly from_bits(BitVec coeffs);
  static HomPoly from_a_exponents(int degree, std::span<const int> a_exps);
  static HomPoly a() { return monomial(1, 0); }
  static HomPoly b() { return monomial(0, 1); }

  int degree() const { return degree_; }
  bool is_zero() const { return bits_.none(); }
  bool coeff(int a_exp) const { return bits_.test(static_cast<std::size_t>(a_exp)); }
  const BitVec& bits() const { return bits_; }
  std::size_t term_count() const { return bits_.count(); }
  /// Exponents of a with nonzero coefficient, ascending.
  std::vector<int> a_exponents() const;

  /// Frobenius: spreads bit i to bit 2i.
  HomPoly squared() const;
  HomPoly pow(unsigned exponent) const;

  HomPoly& operator+=(const HomPoly& other);

  friend bool operator==(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator+(HomPoly p, const HomPoly& q) { return p += q; }
  friend HomPoly operator*(const HomPoly& p, const HomPoly& q);

 private:
  explicit HomPoly(int degree);

  int degree_;
  BitVec bits_;
};

/// Greatest common divisor; gcd(p, 0) = p and gcd(0, 0) = 0.
HomPoly gcd(const HomPoly& p, const HomPoly& q);

/// The unique q with q*q == p, or nullopt when p is not a square.
std::optional<HomPoly> sqrt(const HomPoly& p);

/// Quotient p / d; throws NotDivisible when d does not divide p.
HomPoly exact_div(const HomPoly& p, const HomPoly& d);
std::optional<HomPoly> try_exact_div(const HomPoly& p, const HomPoly& d);
bool divides(const HomPoly& d, const HomPoly& p);

/// Image of p under the linear substitution a -> image_a, b -> image_b.
/// Both images must be homogeneous of degree 1.
HomPoly substitute(const HomPoly& p, const HomPoly& image_a, const HomPoly& image_b);

/// Finite sum of homogeneous components with distinct degrees. Zero
/// components are never stored.
class GradedPoly {
 public:
  GradedPoly() = default;
  GradedPoly(const HomPoly& p);  // NOLINT(google-explicit-constructor)

  static GradedPoly one() { return GradedPoly(HomPoly::one()); }

  const std::map<int, HomPoly>& components() const { return components_; }
  /// Component of the given degree (zero when absent).
  HomPoly component(int degree) const;

  bool is_zero() const { return components_.empty(); }
  bool is_homogeneous() const { return components_.size() <= 1; }
  int min_degree() const;
  int max_degree() const;
  /// The single component; throws PreconditionViolated when inhomogeneous.
  HomPoly as_homogeneous() const;

  GradedPoly squared() const;
  GradedPoly pow(unsigned exponent) const;

  GradedPoly& operator+=(const HomPoly& p);
  GradedPoly& operator+=(const GradedPoly& other);

  friend bool operator==(const GradedPoly& x, const GradedPoly& y) = default;
  friend GradedPoly operator+(GradedPoly x, const GradedPoly& y) { return x += y; }
  friend GradedPoly operator*(const GradedPoly& x, const GradedPoly& y);

 private:
  std::map<int, HomPoly> components_;
};

/// One named indeterminate of the expression grammar and its image in F2[a,b].
struct Variable {
  char name;
  HomPoly image;
};

/// Parses an expression over the given variables, evaluating it in F2[a,b].
/// Throws ParseError with a byte offset and the expected tokens.
GradedPoly parse(std::string_view text, std::span<const Variable> variables);
/// Parses an expression over a and b.
GradedPoly parse(std::string_view text);

/// Canonical text: descending degree, then descending a-exponent; "0" for zero.
std::string format(const GradedPoly& p);
std::string format(const HomPoly& p);

}  // namespace sforge
