#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sforge/ideals.hpp"
#include "sforge/rings.hpp"

namespace sforge {

/// <v^k, u^l>
struct Fibered {
  int k = 1;
  int l = 1;
  friend bool operator==(const Fibered&, const Fibered&) = default;
};

/// <x_n, y_n>
struct Twisted {
  int n = 1;
  friend bool operator==(const Twisted&, const Twisted&) = default;
};

/// <v^i x_n^(2^m), x_(n+1)^(2^(m-1))>
struct Mixed {
  int i = 0;
  int n = 1;
  int m = 1;
  friend bool operator==(const Mixed&, const Mixed&) = default;
};

using IdealClass = std::variant<Fibered, Twisted, Mixed>;

/// Unordered degree pair, stored with lo <= hi.
struct DegreePair {
  int lo = 0;
  int hi = 0;

  static DegreePair of(int d1, int d2) { return d1 <= d2 ? DegreePair{d1, d2} : DegreePair{d2, d1}; }
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

constexpr int kDefaultTwistedCap = 12;

/// Largest power of two dividing l, as an exponent.
int two_adic_valuation(long long l);

/// Empty when valid, else the violated inequality.
std::optional<std::string> validity_error(const IdealClass& c);
bool is_valid(const IdealClass& c);
/// Throws InvalidParameters when c is not valid.
void validate(const IdealClass& c);

/// (deg X, deg Y) in the order of the family's generators.
std::pair<long long, long long> generator_degrees(const IdealClass& c);
DegreePair degrees(const IdealClass& c);
/// Other descriptors naming the same ideal; only Fibered{1,1} and Twisted{1}.
std::vector<IdealClass> aliases(const IdealClass& c);

/// "fibered", "twisted" or "mixed".
std::string family_name(const IdealClass& c);
/// "k=1,l=2", "n=3", "i=1,n=1,m=2".
std::string params_string(const IdealClass& c);
/// "Fibered{k=1,l=2}" etc.
std::string to_string(const IdealClass& c);

/// (x_n, y_n) in H*(BA4). Throws InvalidParameters for n < 1 and CapExceeded
/// for n > cap.
std::pair<RingElem, RingElem> twisted_pair(int n, int cap = kDefaultTwistedCap);
/// mu_0 = 1, mu_n = (1+u+v) mu_(n-1)^2 + x_n^2.
RingElem mu(int n, int cap = kDefaultTwistedCap);

/// (X, Y) as listed in the family's definition.
std::pair<RingElem, RingElem> family_generators(const IdealClass& c);
Ideal2 build(const IdealClass& c);

/// Closed forms of (x_n, y_n) in F2[a,b]:
/// x_n = sum_{i=0}^{m} a^i b^(m-i) and y_n = ab (a^m + b^m)/(a + b), m = 2^(n+1) - 2.
std::pair<GradedPoly, GradedPoly> explicit_twisted(int n);

/// Sq(X) = alpha X + beta Y, Sq(Y) = gamma X + delta Y.
struct SqCoefficients {
  RingElem alpha;
  RingElem beta;
  RingElem gamma;
  RingElem delta;
};

SqCoefficients sq_coefficients(const IdealClass& c);

/// The Steenrod closed parameter ideal with degrees {d1, d2}, if any.
std::optional<IdealClass> classify_degrees(long long d1, long long d2);
/// Every class with both degrees <= max_degree, Twisted{1} folded into
/// Fibered{1,1}, sorted by (lo, hi).
std::vector<IdealClass> classification_list(int max_degree);

/// The v-free part of a normal form: its canonical representative modulo v.
RingElem reduce_mod_v(const RingElem& e);

}  // namespace sforge
