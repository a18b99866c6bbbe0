#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sforge/gf2linalg.hpp"
#include "sforge/rings.hpp"

namespace sforge {

/// Ideal generated by two nonzero homogeneous elements of positive degree.
/// The generators are stored with lo() of degree <= hi(); equal degrees are
/// ordered by their formatted text.
class Ideal2 {
 public:
  Ideal2(const RingElem& g1, const RingElem& g2);

  RingId ring() const { return lo_.ring(); }
  const RingElem& lo() const { return lo_; }
  const RingElem& hi() const { return hi_; }
  const HomPoly& lo_ab() const { return lo_ab_; }
  const HomPoly& hi_ab() const { return hi_ab_; }
  /// (deg lo, deg hi).
  std::pair<int, int> degrees() const { return {lo_ab_.degree(), hi_ab_.degree()}; }

 private:
  RingElem lo_;
  RingElem hi_;
  HomPoly lo_ab_;
  HomPoly hi_ab_;
};

/// "<lo; hi>"
std::string to_string(const Ideal2& ideal);

/// lambda * lo + mu * hi == target, in F2[a,b].
struct MembershipCertificate {
  GradedPoly lambda;
  GradedPoly mu;
};

/// Degree-by-degree membership in <X, Y> inside F2[a,b]. Each degree's
/// elimination is built on first use and kept.
class MembershipEngine {
 public:
  MembershipEngine(HomPoly x, HomPoly y);

  std::optional<MembershipCertificate> certificate(const HomPoly& target);
  bool contains(const HomPoly& target);
  /// Whether every component of total_sq(X) and total_sq(Y) lies in the ideal.
  bool steenrod_closed();
  /// Dimension of the ideal's degree-d piece.
  std::size_t dimension(int degree);

 private:
  const EchelonBasis& slice(int degree);

  HomPoly x_;
  HomPoly y_;
  std::map<int, EchelonBasis> slices_;
};

/// Throws RingMismatch when target and ideal live in different rings and
/// PreconditionViolated when target is inhomogeneous.
std::optional<MembershipCertificate> member(const RingElem& target, const Ideal2& ideal);

bool is_coprime(const Ideal2& ideal);
bool is_coprime(const HomPoly& x, const HomPoly& y);
bool is_steenrod_closed(const Ideal2& ideal);
bool is_steenrod_closed(const HomPoly& x, const HomPoly& y);
bool equal(const Ideal2& i, const Ideal2& j);
/// <lo^2; hi^2>
Ideal2 square_ideal(const Ideal2& ideal);

/// Whether <v^k X, Y> is Steenrod closed, for a closed ideal <X, Y> with X and
/// Y coprime. Throws PreconditionViolated otherwise. The Ideal2 form uses
/// X = lo, Y = hi.
bool vk_extension_closed(int k, const HomPoly& x, const HomPoly& y);
bool vk_extension_closed(int k, const Ideal2& ideal);

/// A C3-invariant q with Sq^1(q) = p, when one exists.
std::optional<RingElem> sq1_preimage(const RingElem& p);

}  // namespace sforge
