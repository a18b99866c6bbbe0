#include "sforge/rings.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "sforge/errors.hpp"
#include "sforge/gf2linalg.hpp"

namespace sforge {
namespace {

// Echelon form of the embedded monomial basis in one degree; tags index basis.
struct Solver {
  std::vector<UvwMonomial> basis;
  EchelonBasis echelon;
};

std::shared_ptr<const Solver> solver_for(RingId ring, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<RingId, int>, std::shared_ptr<const Solver>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({ring, degree});
    if (it != cache.end()) return it->second;
  }
  std::vector<UvwMonomial> basis = uvw_basis(ring, degree);
  EchelonBasis echelon(static_cast<std::size_t>(degree) + 1, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    [[maybe_unused]] const bool independent = echelon.insert_unit(embed(basis[i]).bits(), i);
  }
  auto solver = std::make_shared<const Solver>(Solver{std::move(basis), std::move(echelon)});
  std::lock_guard lock(mutex);
  return cache.try_emplace({ring, degree}, std::move(solver)).first->second;
}

// XOR-style merge of two canonical monomial lists.
std::vector<UvwMonomial> sym_diff(const std::vector<UvwMonomial>& x, const std::vector<UvwMonomial>& y) {
  std::vector<UvwMonomial> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && canonical_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || canonical_less(y[j], x[i])) {
      out.push_back(y[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

// Sorts canonically and drops monomials that occur an even number of times.
std::vector<UvwMonomial> cancel_pairs(std::vector<UvwMonomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  std::vector<UvwMonomial> out;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 != 0) out.push_back(monomials[i]);
    i = j;
  }
  return out;
}

// Product of normal forms, reducing w^2 = u^3 + v^2 + vw.
std::vector<UvwMonomial> multiply_normal_forms(const std::vector<UvwMonomial>& x, const std::vector<UvwMonomial>& y) {
  std::set<std::tuple<int, int, int>> acc;
  auto toggle = [&acc](int u, int v, int w) {
    auto [it, inserted] = acc.emplace(u, v, w);
    if (!inserted) acc.erase(it);
  };
  for (const UvwMonomial& m : x) {
    for (const UvwMonomial& n : y) {
      const int u = m.u + n.u;
      const int v = m.v + n.v;
      if (m.w + n.w < 2) {
        toggle(u, v, m.w + n.w);
      } else {
        toggle(u + 3, v, 0);
        toggle(u, v + 2, 0);
        toggle(u, v + 1, 1);
      }
    }
  }
  std::vector<UvwMonomial> out;
  out.reserve(acc.size());
  for (const auto& [u, v, w] : acc) out.push_back({u, v, w});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::string_view ring_name(RingId ring) {
  switch (ring) {
    case RingId::AB:
      return "ab";
    case RingId::A4:
      return "a4";
    case RingId::SO3:
      return "so3";
  }
  return "?";
}

std::optional<RingId> ring_from_name(std::string_view name) {
  if (name == "ab") return RingId::AB;
  if (name == "a4") return RingId::A4;
  if (name == "so3") return RingId::SO3;
  return std::nullopt;
}

HomPoly embed_u() {
  static const int exps[] = {0, 1, 2};
  return HomPoly::from_a_exponents(2, exps);
}

HomPoly embed_v() {
  static const int exps[] = {1, 2};
  return HomPoly::from_a_exponents(3, exps);
}

HomPoly embed_w() {
  static const int exps[] = {0, 2, 3};
  return HomPoly::from_a_exponents(3, exps);
}

HomPoly apply_phi(const HomPoly& p) { return substitute(p, HomPoly::b(), HomPoly::a() + HomPoly::b()); }

HomPoly apply_swap(const HomPoly& p) {
  std::vector<int> exps;
  for (int e : p.a_exponents()) exps.push_back(p.degree() - e);
  return HomPoly::from_a_exponents(p.degree(), exps);
}

bool is_invariant(Group group, const HomPoly& p) {
  if (apply_phi(p) != p) return false;
  return group == Group::C3 || apply_swap(p) == p;
}

bool is_invariant(Group group, const GradedPoly& p) {
  return std::all_of(p.components().begin(), p.components().end(),
                     [group](const auto& kv) { return is_invariant(group, kv.second); });
}

bool canonical_less(const UvwMonomial& x, const UvwMonomial& y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  if (x.u != y.u) return x.u > y.u;
  return x.w < y.w;
}

HomPoly embed(const UvwMonomial& m) {
  HomPoly out = embed_u().pow(static_cast<unsigned>(m.u));
  if (m.v != 0) out = out * embed_v().pow(static_cast<unsigned>(m.v));
  if (m.w != 0) out = out * embed_w().pow(static_cast<unsigned>(m.w));
  return out;
}

RingElem RingElem::from_ab(RingId ring, const GradedPoly& p) { return lift(ring, p); }

RingElem RingElem::from_monomials(RingId ring, std::vector<UvwMonomial> monomials) {
  if (ring == RingId::AB) throw RingMismatch("u,v,w monomials need ring a4 or so3");
  GradedPoly ab;
  for (const UvwMonomial& m : monomials) {
    if (m.u < 0 || m.v < 0 || m.w < 0 || m.w > 1) {
      throw PreconditionViolated("normal-form monomial needs nonnegative exponents and w-exponent at most 1");
    }
    if (ring == RingId::SO3 && m.w != 0) throw RingMismatch("w is not an element of so3");
    ab += embed(m);
  }
  return RingElem(ring, std::move(ab), cancel_pairs(std::move(monomials)));
}

RingElem RingElem::one(RingId ring) {
  if (ring == RingId::AB) return RingElem(ring, GradedPoly::one(), {});
  return from_monomials(ring, {UvwMonomial{}});
}

RingElem RingElem::u(RingId ring) {
  if (ring == RingId::AB) return RingElem(ring, embed_u(), {});
  return from_monomials(ring, {UvwMonomial{1, 0, 0}});
}

RingElem RingElem::v(RingId ring) {
  if (ring == RingId::AB) return RingElem(ring, embed_v(), {});
  return from_monomials(ring, {UvwMonomial{0, 1, 0}});
}

RingElem RingElem::w() { return from_monomials(RingId::A4, {UvwMonomial{0, 0, 1}}); }

RingElem RingElem::squared() const {
  if (ring_ == RingId::AB) return RingElem(ring_, ab_.squared(), {});
  // Cross terms cancel, so only the squares of the monomials survive.
  std::vector<UvwMonomial> doubled;
  doubled.reserve(uvw_.size());
  for (const UvwMonomial& m : uvw_) doubled.push_back({2 * m.u, 2 * m.v, m.w});
  std::vector<UvwMonomial> out;
  for (const UvwMonomial& m : doubled) {
    if (m.w == 0) {
      out.push_back(m);
    } else {
      out.push_back({m.u + 3, m.v, 0});
      out.push_back({m.u, m.v + 2, 0});
      out.push_back({m.u, m.v + 1, 1});
    }
  }
  return RingElem(ring_, ab_.squared(), cancel_pairs(std::move(out)));
}

RingElem RingElem::pow(unsigned exponent) const {
  RingElem result = one(ring_);
  RingElem base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base.squared();
  }
  return result;
}

RingElem operator+(const RingElem& x, const RingElem& y) {
  if (x.ring_ != y.ring_) throw RingMismatch("cannot add elements of different rings");
  return RingElem(x.ring_, x.ab_ + y.ab_, sym_diff(x.uvw_, y.uvw_));
}

RingElem operator*(const RingElem& x, const RingElem& y) {
  if (x.ring_ != y.ring_) throw RingMismatch("cannot multiply elements of different rings");
  GradedPoly ab = x.ab_ * y.ab_;
  if (x.ring_ == RingId::AB) return RingElem(x.ring_, std::move(ab), {});
  return RingElem(x.ring_, std::move(ab), multiply_normal_forms(x.uvw_, y.uvw_));
}

GradedPoly embed(const RingElem& e) { return e.ab(); }

RingElem lift(RingId ring, const GradedPoly& p) {
  if (ring == RingId::AB) return RingElem(ring, p, {});
  std::vector<UvwMonomial> monomials;
  for (const auto& [deg, c] : p.components()) {
    const auto solver = solver_for(ring, deg);
    const auto red = solver->echelon.reduce(c.bits());
    if (red.residual.any()) {
      throw NotInvariant(format(c) + " is not an element of " + std::string(ring_name(ring)));
    }
    for (std::size_t i = red.combination.find_first(); i != BitVec::npos; i = red.combination.find_next(i + 1)) {
      monomials.push_back(solver->basis[i]);
    }
  }
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  return RingElem(ring, p, std::move(monomials));
}

std::vector<UvwMonomial> uvw_basis(RingId ring, int degree) {
  if (ring == RingId::AB) throw PreconditionViolated("ring ab has no u,v,w basis");
  std::vector<UvwMonomial> out;
  const int wmax = ring == RingId::A4 ? 1 : 0;
  for (int w = 0; w <= wmax; ++w) {
    for (int v = 0; 3 * v + 3 * w <= degree; ++v) {
      const int rest = degree - 3 * v - 3 * w;
      if (rest % 2 == 0) out.push_back({rest / 2, v, w});
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::size_t graded_dimension(RingId ring, int degree) {
  if (degree < 0) return 0;
  if (ring == RingId::AB) return static_cast<std::size_t>(degree) + 1;
  return uvw_basis(ring, degree).size();
}

std::vector<RingElem> graded_basis(RingId ring, int degree) {
  std::vector<RingElem> out;
  if (degree < 0) return out;
  if (ring == RingId::AB) {
    for (int i = degree; i >= 0; --i) out.push_back(lift(ring, HomPoly::monomial(i, degree - i)));
    return out;
  }
  for (const UvwMonomial& m : uvw_basis(ring, degree)) out.push_back(RingElem::from_monomials(ring, {m}));
  return out;
}

std::vector<Variable> ring_variables(RingId ring) {
  switch (ring) {
    case RingId::AB:
      return {{'a', HomPoly::a()}, {'b', HomPoly::b()}};
    case RingId::A4:
      return {{'u', embed_u()}, {'v', embed_v()}, {'w', embed_w()}};
    case RingId::SO3:
      return {{'u', embed_u()}, {'v', embed_v()}};
  }
  return {};
}

RingElem parse_elem(RingId ring, std::string_view text) {
  const std::vector<Variable> vars = ring_variables(ring);
  return lift(ring, parse(text, vars));
}

std::string format(const UvwMonomial& m) {
  std::string out;
  auto factor = [&out](char var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  factor('u', m.u);
  factor('v', m.v);
  factor('w', m.w);
  return out.empty() ? "1" : out;
}

std::string format(const RingElem& e) {
  if (e.ring() == RingId::AB) return format(e.ab());
  if (e.uvw().empty()) return "0";
  std::string out;
  for (const UvwMonomial& m : e.uvw()) {
    if (!out.empty()) out += '+';
    out += format(m);
  }
  return out;
}

}  // namespace sforge
