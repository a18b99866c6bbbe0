#include "sforge/gf2poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sforge/errors.hpp"

namespace sforge {
namespace {

// Univariate helpers: a BitVec read as a polynomial in t, bit i = coeff of t^i.

BitVec trimmed(const BitVec& p) {
  const std::size_t last = p.find_last();
  BitVec out = p;
  out.resize(last == BitVec::npos ? 0 : last + 1);
  return out;
}

// Returns (quotient, remainder).
std::pair<BitVec, BitVec> udivmod(const BitVec& num, const BitVec& den) {
  const BitVec d = trimmed(den);
  assert(d.size() > 0);
  const std::size_t dd = d.size() - 1;
  BitVec r = trimmed(num);
  BitVec q(r.size() >= d.size() ? r.size() - dd : 0);
  for (std::size_t top = r.find_last(); top != BitVec::npos && top >= dd; top = r.find_last()) {
    q.set(top - dd);
    r.xor_shifted(d, top - dd);
  }
  return {std::move(q), trimmed(r)};
}

BitVec ugcd(BitVec x, BitVec y) {
  x = trimmed(x);
  y = trimmed(y);
  while (y.size() > 0) {
    BitVec r = udivmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace

HomPoly::HomPoly(int degree) : degree_(degree), bits_(static_cast<std::size_t>(degree) + 1) {
  assert(degree >= 0);
}

HomPoly HomPoly::monomial(int a_exp, int b_exp) {
  HomPoly p(a_exp + b_exp);
  p.bits_.set(static_cast<std::size_t>(a_exp));
  return p;
}

HomPoly HomPoly::from_bits(BitVec coeffs) {
  assert(coeffs.size() >= 1);
  HomPoly p(static_cast<int>(coeffs.size()) - 1);
  p.bits_ = std::move(coeffs);
  return p;
}

HomPoly HomPoly::from_a_exponents(int degree, std::span<const int> a_exps) {
  HomPoly p(degree);
  for (int e : a_exps) {
    assert(e >= 0 && e <= degree);
    p.bits_.flip(static_cast<std::size_t>(e));
  }
  return p;
}

std::vector<int> HomPoly::a_exponents() const {
  std::vector<int> out;
  for (std::size_t i = bits_.find_first(); i != BitVec::npos; i = bits_.find_next(i + 1)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

HomPoly HomPoly::squared() const {
  HomPoly out(2 * degree_);
  for (std::size_t i = bits_.find_first(); i != BitVec::npos; i = bits_.find_next(i + 1)) out.bits_.set(2 * i);
  return out;
}

HomPoly HomPoly::pow(unsigned exponent) const {
  HomPoly result = one();
  HomPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base.squared();
  }
  return result;
}

HomPoly& HomPoly::operator+=(const HomPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (degree_ != other.degree_) {
    std::ostringstream msg;
    msg << "cannot add homogeneous polynomials of degrees " << degree_ << " and " << other.degree_;
    throw DegreeMismatch(msg.str());
  }
  bits_ ^= other.bits_;
  return *this;
}

bool operator==(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.degree_ == q.degree_ && p.bits_ == q.bits_;
}

HomPoly operator*(const HomPoly& p, const HomPoly& q) {
  HomPoly out(p.degree_ + q.degree_);
  const HomPoly& sparse = p.term_count() <= q.term_count() ? p : q;
  const HomPoly& dense = &sparse == &p ? q : p;
  const BitVec& sb = sparse.bits_;
  for (std::size_t i = sb.find_first(); i != BitVec::npos; i = sb.find_next(i + 1)) {
    out.bits_.xor_shifted(dense.bits_, i);
  }
  return out;
}

HomPoly gcd(const HomPoly& p, const HomPoly& q) {
  if (q.is_zero()) return p;
  if (p.is_zero()) return q;
  // p = a^s * b^(deg - h) * core(a, b), where core has nonzero a^0 and top terms.
  auto split = [](const HomPoly& x) {
    const std::size_t s = x.bits().find_first();
    const std::size_t h = x.bits().find_last();
    BitVec core(h - s + 1);
    for (std::size_t i = s; i <= h; i = x.bits().find_next(i + 1)) {
      core.set(i - s);
      if (i == h) break;
    }
    return std::tuple{static_cast<int>(s), x.degree() - static_cast<int>(h), std::move(core)};
  };
  auto [sp, tp, cp] = split(p);
  auto [sq, tq, cq] = split(q);
  const BitVec g = ugcd(std::move(cp), std::move(cq));
  const HomPoly core = HomPoly::from_bits(g);
  return HomPoly::monomial(std::min(sp, sq), std::min(tp, tq)) * core;
}

std::optional<HomPoly> sqrt(const HomPoly& p) {
  if (p.is_zero()) return HomPoly::zero(p.degree() / 2);
  if (p.degree() % 2 != 0) return std::nullopt;
  std::vector<int> exps;
  for (int e : p.a_exponents()) {
    if (e % 2 != 0) return std::nullopt;
    exps.push_back(e / 2);
  }
  return HomPoly::from_a_exponents(p.degree() / 2, exps);
}

std::optional<HomPoly> try_exact_div(const HomPoly& p, const HomPoly& d) {
  if (d.is_zero()) throw PreconditionViolated("exact_div: division by zero");
  const int qdeg = p.degree() - d.degree();
  if (p.is_zero()) return HomPoly::zero(std::max(qdeg, 0));
  if (qdeg < 0) return std::nullopt;
  auto [q, r] = udivmod(p.bits(), d.bits());
  if (r.size() != 0) return std::nullopt;
  if (q.find_last() != BitVec::npos && q.find_last() > static_cast<std::size_t>(qdeg)) return std::nullopt;
  q.resize(static_cast<std::size_t>(qdeg) + 1);
  return HomPoly::from_bits(std::move(q));
}

HomPoly exact_div(const HomPoly& p, const HomPoly& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw NotDivisible("exact_div: " + format(d) + " does not divide " + format(p));
  return *std::move(q);
}

bool divides(const HomPoly& d, const HomPoly& p) { return try_exact_div(p, d).has_value(); }

HomPoly substitute(const HomPoly& p, const HomPoly& image_a, const HomPoly& image_b) {
  if (image_a.degree() != 1 || image_b.degree() != 1) {
    throw PreconditionViolated("substitute: images must be homogeneous of degree 1");
  }
  const int d = p.degree();
  std::vector<HomPoly> apow{HomPoly::one()};
  std::vector<HomPoly> bpow{HomPoly::one()};
  for (int i = 1; i <= d; ++i) {
    apow.push_back(apow.back() * image_a);
    bpow.push_back(bpow.back() * image_b);
  }
  HomPoly out = HomPoly::zero(d);
  for (int e : p.a_exponents()) out += apow[static_cast<std::size_t>(e)] * bpow[static_cast<std::size_t>(d - e)];
  return out;
}

GradedPoly::GradedPoly(const HomPoly& p) {
  if (!p.is_zero()) components_.emplace(p.degree(), p);
}

HomPoly GradedPoly::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? HomPoly::zero(degree) : it->second;
}

int GradedPoly::min_degree() const {
  if (is_zero()) throw PreconditionViolated("min_degree of zero polynomial");
  return components_.begin()->first;
}

int GradedPoly::max_degree() const {
  if (is_zero()) throw PreconditionViolated("max_degree of zero polynomial");
  return components_.rbegin()->first;
}

HomPoly GradedPoly::as_homogeneous() const {
  if (!is_homogeneous()) throw PreconditionViolated("polynomial is not homogeneous: " + format(*this));
  return is_zero() ? HomPoly::zero(0) : components_.begin()->second;
}

GradedPoly GradedPoly::squared() const {
  GradedPoly out;
  for (const auto& [deg, c] : components_) out.components_.emplace(2 * deg, c.squared());
  return out;
}

GradedPoly GradedPoly::pow(unsigned exponent) const {
  GradedPoly result = one();
  GradedPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base.squared();
  }
  return result;
}

GradedPoly& GradedPoly::operator+=(const HomPoly& p) {
  if (p.is_zero()) return *this;
  auto [it, inserted] = components_.try_emplace(p.degree(), p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) components_.erase(it);
  }
  return *this;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  for (const auto& [deg, c] : other.components_) *this += c;
  return *this;
}

GradedPoly operator*(const GradedPoly& x, const GradedPoly& y) {
  GradedPoly out;
  for (const auto& [dx, cx] : x.components_) {
    for (const auto& [dy, cy] : y.components_) out += cx * cy;
  }
  return out;
}

namespace {

void append_term(std::string& out, int a_exp, int b_exp) {
  if (!out.empty()) out += '+';
  if (a_exp == 0 && b_exp == 0) {
    out += '1';
    return;
  }
  auto factor = [&out](char var, int e, bool first) {
    if (e == 0) return;
    if (!first) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  factor('a', a_exp, true);
  factor('b', b_exp, a_exp == 0);
}

void append_hom(std::string& out, const HomPoly& p) {
  const BitVec& bits = p.bits();
  for (std::size_t i = bits.find_last(); i != BitVec::npos; i = (i == 0 ? BitVec::npos : i - 1)) {
    if (bits.test(i)) append_term(out, static_cast<int>(i), p.degree() - static_cast<int>(i));
  }
}

}  // namespace

std::string format(const HomPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  append_hom(out, p);
  return out;
}

std::string format(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.components().rbegin(); it != p.components().rend(); ++it) append_hom(out, it->second);
  return out;
}

}  // namespace sforge
