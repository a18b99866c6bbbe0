#include "oracles.hpp"

#include <map>

namespace oracle {

Poly from(const sforge::HomPoly& p) {
  Poly out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i)) out.emplace(i, p.degree() - i);
  }
  return out;
}

Poly from(const sforge::GradedPoly& p) {
  Poly out;
  for (const auto& [deg, c] : p.components()) {
    for (const auto& m : from(c)) out.insert(m);
  }
  return out;
}

sforge::GradedPoly to_graded(const Poly& p) {
  sforge::GradedPoly out;
  for (const auto& [i, j] : p) out += sforge::HomPoly::monomial(i, j);
  return out;
}

void toggle(Poly& p, int i, int j) {
  auto [it, inserted] = p.emplace(i, j);
  if (!inserted) p.erase(it);
}

Poly add(const Poly& x, const Poly& y) {
  Poly out = x;
  for (const auto& [i, j] : y) toggle(out, i, j);
  return out;
}

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [i1, j1] : x) {
    for (const auto& [i2, j2] : y) toggle(out, i1 + i2, j1 + j2);
  }
  return out;
}

bool binom_odd(int n, int k) {
  static std::vector<std::vector<bool>> rows{{true}};
  if (k < 0 || k > n) return false;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<bool> next(prev.size() + 1, false);
    next.front() = next.back() = true;
    for (std::size_t r = 1; r < prev.size(); ++r) next[r] = prev[r - 1] != prev[r];
    rows.push_back(std::move(next));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Poly total_sq(const Poly& p) {
  Poly out;
  for (const auto& [i, j] : p) {
    for (int r = 0; r <= i; ++r) {
      if (!binom_odd(i, r)) continue;
      for (int s = 0; s <= j; ++s) {
        if (binom_odd(j, s)) toggle(out, i + r, j + s);
      }
    }
  }
  return out;
}

Poly substitute(const Poly& p, const Poly& image_a, const Poly& image_b) {
  Poly out;
  for (const auto& [i, j] : p) {
    Poly term{{0, 0}};
    for (int r = 0; r < i; ++r) term = mul(term, image_a);
    for (int s = 0; s < j; ++s) term = mul(term, image_b);
    out = add(out, term);
  }
  return out;
}

bool divides(const Poly& d, const Poly& p) {
  if (d.empty()) return p.empty();
  // Lead term: largest a-exponent.
  const auto lead = *d.rbegin();
  Poly rem = p;
  while (!rem.empty()) {
    const auto top = *rem.rbegin();
    if (top.first < lead.first || top.second < lead.second) return false;
    Poly shift{{top.first - lead.first, top.second - lead.second}};
    rem = add(rem, mul(shift, d));
  }
  return true;
}

int gcd_degree(const Poly& p, const Poly& q, int dp, int dq) {
  for (int e = std::min(dp, dq); e > 0; --e) {
    for (unsigned long mask = 1; mask < (1UL << (e + 1)); ++mask) {
      Poly cand;
      for (int i = 0; i <= e; ++i) {
        if ((mask >> i) & 1UL) cand.emplace(i, e - i);
      }
      if (divides(cand, p) && divides(cand, q)) return e;
    }
  }
  return 0;
}

std::size_t rank(std::vector<std::vector<bool>> rows) {
  std::size_t r = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != r && rows[k][c]) {
        for (std::size_t t = 0; t < ncols; ++t) rows[k][t] = rows[k][t] != rows[r][t];
      }
    }
    ++r;
  }
  return r;
}

bool in_span(const std::vector<std::vector<bool>>& rows, const std::vector<bool>& v) {
  auto with = rows;
  with.push_back(v);
  return rank(with) == rank(rows);
}

std::vector<bool> dense(const Poly& p, int d) {
  std::vector<bool> out(static_cast<std::size_t>(d) + 1, false);
  for (const auto& [i, j] : p) {
    if (i + j == d) out[static_cast<std::size_t>(i)] = true;
  }
  return out;
}

std::size_t c3_fixed_dimension(int d) {
  const Poly a_img{{0, 1}};
  const Poly b_img{{1, 0}, {0, 1}};
  std::vector<std::vector<bool>> rows;
  for (int i = 0; i <= d; ++i) {
    const Poly m{{i, d - i}};
    rows.push_back(dense(add(substitute(m, a_img, b_img), m), d));
  }
  return static_cast<std::size_t>(d) + 1 - rank(rows);
}

}  // namespace oracle
