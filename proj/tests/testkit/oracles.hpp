#pragma once

// Deliberately slow reference implementations. None of them touch the packed
// bit-vector code paths: polynomials are plain sets of exponent pairs.

#include <set>
#include <utility>
#include <vector>

#include "sforge/gf2poly.hpp"

namespace oracle {

/// Set of (a-exponent, b-exponent); presence means coefficient 1.
using Poly = std::set<std::pair<int, int>>;

Poly from(const sforge::HomPoly& p);
Poly from(const sforge::GradedPoly& p);
sforge::GradedPoly to_graded(const Poly& p);

void toggle(Poly& p, int i, int j);
Poly add(const Poly& x, const Poly& y);
Poly mul(const Poly& x, const Poly& y);

/// Binomial coefficient mod 2 by Pascal's triangle.
bool binom_odd(int n, int k);

/// Total square expanded through binomial coefficients.
Poly total_sq(const Poly& p);
/// a -> image_a, b -> image_b by repeated multiplication.
Poly substitute(const Poly& p, const Poly& image_a, const Poly& image_b);

/// Schoolbook division of homogeneous polynomials; returns false when a
/// remainder is left.
bool divides(const Poly& d, const Poly& p);
/// Degree of a greatest common divisor, found by testing every candidate
/// divisor degree from the top. Only for small degrees.
int gcd_degree(const Poly& p, const Poly& q, int dp, int dq);

/// Rank of a dense GF(2) matrix (rows of equal length).
std::size_t rank(std::vector<std::vector<bool>> rows);
/// Whether v is a GF(2) combination of rows.
bool in_span(const std::vector<std::vector<bool>>& rows, const std::vector<bool>& v);

/// Dimension of the subspace of degree-d polynomials fixed by a -> b, b -> a+b.
std::size_t c3_fixed_dimension(int d);

/// Dense coefficient row of a homogeneous polynomial of degree d
/// (entry i is the coefficient of a^i b^(d-i)).
std::vector<bool> dense(const Poly& p, int d);

}  // namespace oracle
