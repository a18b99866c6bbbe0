#include "sforge/steenrod.hpp"

#include <vector>

namespace sforge {
namespace {

// Below this degree the square is expanded monomial by monomial; above it the
// input is split by kappa and rebuilt from squares of half-degree pieces.
constexpr int kDirectDegree = 24;

GradedPoly total_sq_direct(const HomPoly& p) {
  const int d = p.degree();
  std::vector<BitVec> comps;
  comps.reserve(static_cast<std::size_t>(d) + 1);
  for (int r = 0; r <= d; ++r) comps.emplace_back(static_cast<std::size_t>(d + r) + 1);
  // Sq(a^i b^j) = sum over r in i, s in j (as bit subsets) of a^(i+r) b^(j+s).
  for (int i : p.a_exponents()) {
    const unsigned j = static_cast<unsigned>(d - i);
    const unsigned ui = static_cast<unsigned>(i);
    for (unsigned r = ui;; r = (r - 1) & ui) {
      for (unsigned s = j;; s = (s - 1) & j) {
        comps[r + s].flip(ui + r);
        if (s == 0) break;
      }
      if (r == 0) break;
    }
  }
  GradedPoly out;
  for (auto& c : comps) {
    if (c.any()) out += HomPoly::from_bits(std::move(c));
  }
  return out;
}

}  // namespace

GradedPoly total_sq(const HomPoly& p) {
  if (p.degree() <= kDirectDegree || p.is_zero()) return total_sq_direct(p);
  const KappaQuadruple k = kappa(p);
  static const GradedPoly sq_a = GradedPoly(HomPoly::a()) + GradedPoly(HomPoly::monomial(2, 0));
  static const GradedPoly sq_b = GradedPoly(HomPoly::b()) + GradedPoly(HomPoly::monomial(0, 2));
  GradedPoly out = total_sq(k.k1).squared();
  if (!k.ka.is_zero()) out += sq_a * total_sq(k.ka).squared();
  if (!k.kb.is_zero()) out += sq_b * total_sq(k.kb).squared();
  if (!k.kab.is_zero()) out += sq_a * sq_b * total_sq(k.kab).squared();
  return out;
}

GradedPoly total_sq(const GradedPoly& p) {
  GradedPoly out;
  for (const auto& [deg, c] : p.components()) out += total_sq(c);
  return out;
}

HomPoly sq(int i, const HomPoly& p) {
  const int d = p.degree();
  if (i < 0 || i > d) return HomPoly::zero(d + (i < 0 ? 0 : i));
  if (i == 0) return p;
  if (i == d) return p.squared();
  if (i == 1) return sq1(p);
  return total_sq(p).component(d + i);
}

GradedPoly sq(int i, const GradedPoly& p) {
  GradedPoly out;
  for (const auto& [deg, c] : p.components()) out += sq(i, c);
  return out;
}

HomPoly sq1(const HomPoly& p) {
  const int d = p.degree();
  BitVec out(static_cast<std::size_t>(d) + 2);
  for (int i : p.a_exponents()) {
    if (i % 2 != 0) out.flip(static_cast<std::size_t>(i) + 1);
    if ((d - i) % 2 != 0) out.flip(static_cast<std::size_t>(i));
  }
  return HomPoly::from_bits(std::move(out));
}

GradedPoly sq1(const GradedPoly& p) { return sq(1, p); }

KappaQuadruple kappa(const HomPoly& p) {
  const int d = p.degree();
  std::vector<int> e1, ea, eb, eab;
  for (int i : p.a_exponents()) {
    const bool odd_a = i % 2 != 0;
    const bool odd_b = (d - i) % 2 != 0;
    if (!odd_a && !odd_b) e1.push_back(i / 2);
    if (odd_a && !odd_b) ea.push_back(i / 2);
    if (!odd_a && odd_b) eb.push_back(i / 2);
    if (odd_a && odd_b) eab.push_back(i / 2);
  }
  auto slot = [](int degree, const std::vector<int>& exps) {
    return degree < 0 ? HomPoly::zero(0) : HomPoly::from_a_exponents(degree, exps);
  };
  const bool even = d % 2 == 0;
  return {slot(even ? d / 2 : -1, e1), slot(even ? -1 : (d - 1) / 2, ea),
          slot(even ? -1 : (d - 1) / 2, eb), slot(even ? d / 2 - 1 : -1, eab)};
}

HomPoly reassemble(const KappaQuadruple& k) {
  const HomPoly a = HomPoly::a();
  const HomPoly b = HomPoly::b();
  HomPoly out = k.k1.squared();
  out += a * k.ka.squared();
  out += b * k.kb.squared();
  out += a * b * k.kab.squared();
  return out;
}

}  // namespace sforge
