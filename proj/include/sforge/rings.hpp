#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sforge/gf2poly.hpp"

namespace sforge {

/// The three ambient rings: F2[a,b], H*(BA4) = F2[a,b]^C3 presented as
/// F2[u,v,w]/(u^3+v^2+vw+w^2), and the Dickson algebra F2[u,v].
enum class RingId { AB, A4, SO3 };

enum class Group { C3, GL2 };

std::string_view ring_name(RingId ring);
/// Accepts "ab", "a4", "so3".
std::optional<RingId> ring_from_name(std::string_view name);

HomPoly embed_u();  // a^2+ab+b^2
HomPoly embed_v();  // a^2b+ab^2
HomPoly embed_w();  // a^3+a^2b+b^3

/// a -> b, b -> a+b.
HomPoly apply_phi(const HomPoly& p);
/// a <-> b.
HomPoly apply_swap(const HomPoly& p);

bool is_invariant(Group group, const HomPoly& p);
bool is_invariant(Group group, const GradedPoly& p);

/// u^i v^j w^e with e in {0, 1}.
struct UvwMonomial {
  int u = 0;
  int v = 0;
  int w = 0;

  int degree() const { return 2 * u + 3 * v + 3 * w; }
  friend bool operator==(const UvwMonomial&, const UvwMonomial&) = default;
};

/// Canonical order: descending degree, descending u-exponent, w-free first.
bool canonical_less(const UvwMonomial& x, const UvwMonomial& y);

HomPoly embed(const UvwMonomial& m);

/// Element of one of the rings. Always holds the image in F2[a,b]; for A4 and
/// SO3 it also holds the normal form q + q'w as a sorted monomial list.
class RingElem {
 public:
  RingElem() = default;

  /// Lifts p into the ring; throws NotInvariant when p is not in its image.
  static RingElem from_ab(RingId ring, const GradedPoly& p);
  /// Sum of the given monomials (repeats cancel). Throws RingMismatch when
  /// w appears in SO3 or the ring is AB.
  static RingElem from_monomials(RingId ring, std::vector<UvwMonomial> monomials);
  static RingElem one(RingId ring);
  static RingElem u(RingId ring);
  static RingElem v(RingId ring);
  static RingElem w();

  RingId ring() const { return ring_; }
  const GradedPoly& ab() const { return ab_; }
  /// Normal-form monomials in canonical order; empty for AB.
  const std::vector<UvwMonomial>& uvw() const { return uvw_; }

  bool is_zero() const { return ab_.is_zero(); }
  bool is_homogeneous() const { return ab_.is_homogeneous(); }
  /// Degree of a nonzero homogeneous element.
  int degree() const { return ab_.as_homogeneous().degree(); }
  HomPoly homogeneous_ab() const { return ab_.as_homogeneous(); }

  RingElem squared() const;
  RingElem pow(unsigned exponent) const;

  friend bool operator==(const RingElem& x, const RingElem& y) { return x.ring_ == y.ring_ && x.ab_ == y.ab_; }
  friend RingElem operator+(const RingElem& x, const RingElem& y);
  friend RingElem operator*(const RingElem& x, const RingElem& y);

 private:
  friend RingElem lift(RingId ring, const GradedPoly& p);

  RingElem(RingId ring, GradedPoly ab, std::vector<UvwMonomial> uvw)
      : ring_(ring), ab_(std::move(ab)), uvw_(std::move(uvw)) {}

  RingId ring_ = RingId::AB;
  GradedPoly ab_;
  std::vector<UvwMonomial> uvw_;
};

GradedPoly embed(const RingElem& e);
RingElem lift(RingId ring, const GradedPoly& p);

std::size_t graded_dimension(RingId ring, int degree);
std::vector<RingElem> graded_basis(RingId ring, int degree);
/// Monomials u^i v^j w^e of the given degree in canonical order.
std::vector<UvwMonomial> uvw_basis(RingId ring, int degree);

/// Indeterminates of the ring's expression grammar with their images.
std::vector<Variable> ring_variables(RingId ring);
RingElem parse_elem(RingId ring, std::string_view text);
std::string format(const RingElem& e);
std::string format(const UvwMonomial& m);

}  // namespace sforge
