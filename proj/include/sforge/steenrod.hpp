#pragma once

#include "sforge/gf2poly.hpp"

namespace sforge {

/// Total Steenrod square: the ring endomorphism of F2[a,b] with
/// a -> a + a^2 and b -> b + b^2. Components lie in degrees deg p .. 2 deg p.
GradedPoly total_sq(const HomPoly& p);
GradedPoly total_sq(const GradedPoly& p);

/// Sq^i(p), the degree deg(p) + i component of total_sq(p).
HomPoly sq(int i, const HomPoly& p);
/// Componentwise Sq^i.
GradedPoly sq(int i, const GradedPoly& p);

HomPoly sq1(const HomPoly& p);
GradedPoly sq1(const GradedPoly& p);

/// The unique decomposition p = k1^2 + a*ka^2 + b*kb^2 + ab*kab^2.
struct KappaQuadruple {
  HomPoly k1;
  HomPoly ka;
  HomPoly kb;
  HomPoly kab;

  friend bool operator==(const KappaQuadruple&, const KappaQuadruple&) = default;
};

KappaQuadruple kappa(const HomPoly& p);
/// k1^2 + a*ka^2 + b*kb^2 + ab*kab^2.
HomPoly reassemble(const KappaQuadruple& k);

}  // namespace sforge
