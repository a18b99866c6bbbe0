#include "sforge/ideals.hpp"

#include "sforge/errors.hpp"
#include "sforge/steenrod.hpp"

namespace sforge {
namespace {

HomPoly checked_generator(const RingElem& g) {
  if (g.is_zero()) throw PreconditionViolated("ideal generators must be nonzero");
  if (!g.is_homogeneous()) throw PreconditionViolated("ideal generator " + format(g) + " is not homogeneous");
  HomPoly h = g.homogeneous_ab();
  if (h.degree() <= 0) throw PreconditionViolated("ideal generators must have positive degree");
  return h;
}

// Tagged rows x * a^r b^s occupy tags [0, nx), rows y * a^r b^s tags [nx, nx+ny).
int cofactor_degree(int target, const HomPoly& g) { return target - g.degree(); }

}  // namespace

Ideal2::Ideal2(const RingElem& g1, const RingElem& g2) {
  if (g1.ring() != g2.ring()) throw RingMismatch("ideal generators live in different rings");
  HomPoly h1 = checked_generator(g1);
  HomPoly h2 = checked_generator(g2);
  bool swap = h1.degree() > h2.degree();
  if (h1.degree() == h2.degree()) swap = format(g2) < format(g1);
  lo_ = swap ? g2 : g1;
  hi_ = swap ? g1 : g2;
  lo_ab_ = swap ? h2 : h1;
  hi_ab_ = swap ? h1 : h2;
}

std::string to_string(const Ideal2& ideal) { return "<" + format(ideal.lo()) + "; " + format(ideal.hi()) + ">"; }

MembershipEngine::MembershipEngine(HomPoly x, HomPoly y) : x_(std::move(x)), y_(std::move(y)) {}

const EchelonBasis& MembershipEngine::slice(int degree) {
  auto it = slices_.find(degree);
  if (it != slices_.end()) return it->second;
  const int cx = cofactor_degree(degree, x_);
  const int cy = cofactor_degree(degree, y_);
  const std::size_t nx = cx >= 0 ? static_cast<std::size_t>(cx) + 1 : 0;
  const std::size_t ny = cy >= 0 ? static_cast<std::size_t>(cy) + 1 : 0;
  const std::size_t ncols = static_cast<std::size_t>(degree) + 1;
  EchelonBasis basis(ncols, nx + ny);
  auto add_rows = [&](const HomPoly& g, std::size_t count, std::size_t tag0) {
    for (std::size_t r = 0; r < count; ++r) {
      BitVec row(ncols);
      row.xor_shifted(g.bits(), r);
      basis.insert_unit(std::move(row), tag0 + r);
    }
  };
  add_rows(x_, nx, 0);
  add_rows(y_, ny, nx);
  return slices_.emplace(degree, std::move(basis)).first->second;
}

std::optional<MembershipCertificate> MembershipEngine::certificate(const HomPoly& target) {
  const int d = target.degree();
  if (target.is_zero()) return MembershipCertificate{};
  const EchelonBasis& basis = slice(d);
  auto red = basis.reduce(target.bits());
  if (red.residual.any()) return std::nullopt;
  const int cx = cofactor_degree(d, x_);
  const int cy = cofactor_degree(d, y_);
  const std::size_t nx = cx >= 0 ? static_cast<std::size_t>(cx) + 1 : 0;
  BitVec lam(nx > 0 ? nx : 1);
  BitVec mu(cy >= 0 ? static_cast<std::size_t>(cy) + 1 : 1);
  for (std::size_t t = red.combination.find_first(); t != BitVec::npos; t = red.combination.find_next(t + 1)) {
    if (t < nx) {
      lam.set(t);
    } else {
      mu.set(t - nx);
    }
  }
  MembershipCertificate cert;
  if (lam.any()) cert.lambda = HomPoly::from_bits(std::move(lam));
  if (mu.any()) cert.mu = HomPoly::from_bits(std::move(mu));
  return cert;
}

bool MembershipEngine::contains(const HomPoly& target) {
  if (target.is_zero()) return true;
  return slice(target.degree()).in_span(target.bits());
}

bool MembershipEngine::steenrod_closed() {
  for (const HomPoly* g : {&x_, &y_}) {
    const GradedPoly image = total_sq(*g);
    for (const auto& [deg, c] : image.components()) {
      if (!contains(c)) return false;
    }
  }
  return true;
}

std::size_t MembershipEngine::dimension(int degree) { return slice(degree).rank(); }

std::optional<MembershipCertificate> member(const RingElem& target, const Ideal2& ideal) {
  if (target.ring() != ideal.ring()) throw RingMismatch("target and ideal live in different rings");
  if (!target.is_homogeneous()) throw PreconditionViolated("membership target must be homogeneous");
  if (target.is_zero()) return MembershipCertificate{};
  MembershipEngine engine(ideal.lo_ab(), ideal.hi_ab());
  return engine.certificate(target.homogeneous_ab());
}

bool is_coprime(const HomPoly& x, const HomPoly& y) { return gcd(x, y) == HomPoly::one(); }

bool is_coprime(const Ideal2& ideal) { return is_coprime(ideal.lo_ab(), ideal.hi_ab()); }

bool is_steenrod_closed(const HomPoly& x, const HomPoly& y) { return MembershipEngine(x, y).steenrod_closed(); }

bool is_steenrod_closed(const Ideal2& ideal) { return is_steenrod_closed(ideal.lo_ab(), ideal.hi_ab()); }

bool equal(const Ideal2& i, const Ideal2& j) {
  if (i.ring() != j.ring()) throw RingMismatch("cannot compare ideals of different rings");
  MembershipEngine in_i(i.lo_ab(), i.hi_ab());
  MembershipEngine in_j(j.lo_ab(), j.hi_ab());
  return in_i.contains(j.lo_ab()) && in_i.contains(j.hi_ab()) && in_j.contains(i.lo_ab()) &&
         in_j.contains(i.hi_ab());
}

Ideal2 square_ideal(const Ideal2& ideal) { return Ideal2(ideal.lo().squared(), ideal.hi().squared()); }

bool vk_extension_closed(int k, const HomPoly& x, const HomPoly& y) {
  if (k < 1) throw PreconditionViolated("vk_extension_closed needs k >= 1");
  if (!is_coprime(x, y)) throw PreconditionViolated("vk_extension_closed needs coprime generators");
  MembershipEngine engine(x, y);
  if (!engine.steenrod_closed()) throw PreconditionViolated("vk_extension_closed needs a Steenrod closed ideal");
  const HomPoly vk = embed_v().pow(static_cast<unsigned>(k));
  MembershipEngine extension(vk, y);
  const GradedPoly image = total_sq(y);
  for (const auto& [deg, c] : image.components()) {
    const auto cert = engine.certificate(c);
    for (const auto& [ldeg, lc] : cert->lambda.components()) {
      if (!extension.contains(lc)) return false;
    }
  }
  return true;
}

bool vk_extension_closed(int k, const Ideal2& ideal) { return vk_extension_closed(k, ideal.lo_ab(), ideal.hi_ab()); }

std::optional<RingElem> sq1_preimage(const RingElem& p) {
  if (!p.is_homogeneous()) throw PreconditionViolated("sq1_preimage needs a homogeneous element");
  if (p.is_zero()) return RingElem::from_ab(p.ring(), GradedPoly{});
  const HomPoly target = p.homogeneous_ab();
  const int d = target.degree();
  if (d == 0) return std::nullopt;
  const RingId ring = p.ring() == RingId::AB ? RingId::A4 : p.ring();
  const std::vector<RingElem> basis = graded_basis(ring, d - 1);
  EchelonBasis images(static_cast<std::size_t>(d) + 1, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) images.insert_unit(sq1(basis[i].homogeneous_ab()).bits(), i);
  const auto red = images.reduce(target.bits());
  if (red.residual.any()) return std::nullopt;
  GradedPoly q;
  for (std::size_t i = red.combination.find_first(); i != BitVec::npos; i = red.combination.find_next(i + 1)) {
    q += basis[i].homogeneous_ab();
  }
  return RingElem::from_ab(p.ring(), q);
}

}  // namespace sforge
