#include "sforge/families.hpp"

#include <algorithm>
#include <mutex>

#include "sforge/errors.hpp"

namespace sforge {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr long long pow2(int e) { return 1LL << e; }

// Exponent e with 2^e == x, or -1.
int log2_exact(long long x) {
  if (x <= 0 || (x & (x - 1)) != 0) return -1;
  return __builtin_ctzll(static_cast<unsigned long long>(x));
}

RingElem a4_one() { return RingElem::one(RingId::A4); }
RingElem a4_u() { return RingElem::u(RingId::A4); }
RingElem a4_v() { return RingElem::v(RingId::A4); }
RingElem one_plus_u_plus_v() { return a4_one() + a4_u() + a4_v(); }

struct TwistedCache {
  std::mutex mutex;
  std::vector<std::pair<RingElem, RingElem>> pairs;  // pairs[n-1] = (x_n, y_n)
  std::vector<RingElem> mus;                          // mus[n] = mu_n
};

TwistedCache& twisted_cache() {
  static TwistedCache cache;
  return cache;
}

void check_twisted_index(int n, int cap, int lowest) {
  if (n < lowest) throw InvalidParameters("twisted index n must be >= " + std::to_string(lowest));
  if (n > cap) {
    throw CapExceeded("twisted index " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace

int two_adic_valuation(long long l) {
  if (l == 0) return 0;
  return __builtin_ctzll(static_cast<unsigned long long>(l));
}

std::optional<std::string> validity_error(const IdealClass& c) {
  return std::visit(
      Overloaded{
          [](const Fibered& f) -> std::optional<std::string> {
            if (f.l < 1) return "fibered: l >= 1 required";
            if (f.k < 1) return "fibered: k >= 1 required";
            const int t = two_adic_valuation(f.l);
            if (f.k > pow2(t)) return "fibered: k <= 2^v2(l) = " + std::to_string(pow2(t)) + " required";
            return std::nullopt;
          },
          [](const Twisted& t) -> std::optional<std::string> {
            if (t.n < 1) return "twisted: n >= 1 required";
            return std::nullopt;
          },
          [](const Mixed& x) -> std::optional<std::string> {
            if (x.m < 1) return "mixed: m >= 1 required";
            if (x.n < 1) return "mixed: n >= 1 required";
            if (x.m >= 62) return "mixed: m too large";
            const long long bound = pow2(x.m - 1);
            if (x.n == 1 && !(1 <= x.i && x.i < bound)) {
              return "mixed: n = 1 requires 1 <= i < 2^(m-1) = " + std::to_string(bound);
            }
            if (x.n >= 2 && !(0 <= x.i && x.i < bound)) {
              return "mixed: n >= 2 requires 0 <= i < 2^(m-1) = " + std::to_string(bound);
            }
            return std::nullopt;
          },
      },
      c);
}

bool is_valid(const IdealClass& c) { return !validity_error(c).has_value(); }

void validate(const IdealClass& c) {
  if (auto err = validity_error(c)) throw InvalidParameters(*err);
}

std::pair<long long, long long> generator_degrees(const IdealClass& c) {
  return std::visit(Overloaded{
                        [](const Fibered& f) { return std::pair{3LL * f.k, 2LL * f.l}; },
                        [](const Twisted& t) { return std::pair{pow2(t.n + 1) - 2, pow2(t.n + 1) - 1}; },
                        [](const Mixed& x) {
                          return std::pair{3LL * x.i + pow2(x.m + x.n + 1) - pow2(x.m + 1),
                                           pow2(x.m + x.n + 1) - pow2(x.m)};
                        },
                    },
                    c);
}

DegreePair degrees(const IdealClass& c) {
  const auto [x, y] = generator_degrees(c);
  return DegreePair::of(static_cast<int>(x), static_cast<int>(y));
}

std::vector<IdealClass> aliases(const IdealClass& c) {
  if (c == IdealClass{Fibered{1, 1}}) return {Twisted{1}};
  if (c == IdealClass{Twisted{1}}) return {Fibered{1, 1}};
  return {};
}

std::string family_name(const IdealClass& c) {
  static const char* names[] = {"fibered", "twisted", "mixed"};
  return names[c.index()];
}

std::string params_string(const IdealClass& c) {
  return std::visit(Overloaded{
                        [](const Fibered& f) { return "k=" + std::to_string(f.k) + ",l=" + std::to_string(f.l); },
                        [](const Twisted& t) { return "n=" + std::to_string(t.n); },
                        [](const Mixed& x) {
                          return "i=" + std::to_string(x.i) + ",n=" + std::to_string(x.n) +
                                 ",m=" + std::to_string(x.m);
                        },
                    },
                    c);
}

std::string to_string(const IdealClass& c) {
  std::string name = family_name(c);
  name[0] = static_cast<char>(name[0] - 'a' + 'A');
  return name + "{" + params_string(c) + "}";
}

std::pair<RingElem, RingElem> twisted_pair(int n, int cap) {
  check_twisted_index(n, cap, 1);
  TwistedCache& cache = twisted_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.pairs.empty()) cache.pairs.emplace_back(a4_u(), a4_v());
  while (static_cast<int>(cache.pairs.size()) < n) {
    const auto& [x, y] = cache.pairs.back();
    const RingElem x2 = x.squared();
    cache.pairs.emplace_back(a4_u() * x2 + y.squared(), a4_v() * x2);
  }
  return cache.pairs[static_cast<std::size_t>(n) - 1];
}

RingElem mu(int n, int cap) {
  check_twisted_index(n, cap, 0);
  if (n >= 1) twisted_pair(n, cap);
  TwistedCache& cache = twisted_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.mus.empty()) cache.mus.push_back(a4_one());
  while (static_cast<int>(cache.mus.size()) <= n) {
    const std::size_t k = cache.mus.size();
    const RingElem& x = cache.pairs[k - 1].first;
    cache.mus.push_back(one_plus_u_plus_v() * cache.mus.back().squared() + x.squared());
  }
  return cache.mus[static_cast<std::size_t>(n)];
}

std::pair<RingElem, RingElem> family_generators(const IdealClass& c) {
  validate(c);
  return std::visit(
      Overloaded{
          [](const Fibered& f) {
            return std::pair{a4_v().pow(static_cast<unsigned>(f.k)), a4_u().pow(static_cast<unsigned>(f.l))};
          },
          [](const Twisted& t) { return twisted_pair(t.n); },
          [](const Mixed& x) {
            const RingElem xn = twisted_pair(x.n).first;
            const RingElem xn1 = twisted_pair(x.n + 1).first;
            return std::pair{a4_v().pow(static_cast<unsigned>(x.i)) * xn.pow(static_cast<unsigned>(pow2(x.m))),
                             xn1.pow(static_cast<unsigned>(pow2(x.m - 1)))};
          },
      },
      c);
}

Ideal2 build(const IdealClass& c) {
  const auto [x, y] = family_generators(c);
  return Ideal2(x, y);
}

std::pair<GradedPoly, GradedPoly> explicit_twisted(int n) {
  if (n < 1) throw InvalidParameters("twisted index n must be >= 1");
  if (n > 30) throw CapExceeded("explicit_twisted index too large");
  const int m = static_cast<int>(pow2(n + 1)) - 2;
  std::vector<int> all(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) all[static_cast<std::size_t>(i)] = i;
  const HomPoly x = HomPoly::from_a_exponents(m, all);
  all.pop_back();
  const HomPoly y = HomPoly::monomial(1, 1) * HomPoly::from_a_exponents(m - 1, all);
  return {x, y};
}

SqCoefficients sq_coefficients(const IdealClass& c) {
  validate(c);
  return std::visit(
      Overloaded{
          [](const Fibered& f) {
            const int t = two_adic_valuation(f.l);
            const long long odd = f.l >> t;
            const unsigned p = static_cast<unsigned>(pow2(t));
            const RingElem zero = RingElem::from_ab(RingId::A4, GradedPoly{});
            const RingElem up = a4_u().pow(p);
            const RingElem base = up + up.squared();
            RingElem gamma = zero;
            for (long long j = 0; j <= odd - 1; ++j) {
              if ((j & odd) != j) continue;  // binomial(odd, j) is even
              gamma = gamma + base.pow(static_cast<unsigned>(j)) *
                                  a4_v().pow(static_cast<unsigned>(p * (odd - j) - static_cast<long long>(f.k)));
            }
            return SqCoefficients{one_plus_u_plus_v().pow(static_cast<unsigned>(f.k)), zero, gamma,
                                  (up + a4_one()).pow(static_cast<unsigned>(odd))};
          },
          [](const Twisted& t) {
            const auto [x, y] = twisted_pair(t.n);
            const RingElem m = mu(t.n - 1);
            return SqCoefficients{m + x, m, a4_v() * m, (a4_u() + a4_one()) * m + x + y};
          },
          [](const Mixed& x) {
            const unsigned big = static_cast<unsigned>(pow2(x.m));
            const unsigned half = static_cast<unsigned>(pow2(x.m - 1));
            const unsigned i = static_cast<unsigned>(x.i);
            const RingElem xn = twisted_pair(x.n).first;
            const RingElem mu_prev = mu(x.n - 1).pow(big);
            const RingElem mu_half = mu(x.n).pow(half);
            const RingElem v = a4_v();
            const RingElem y = twisted_pair(x.n + 1).first.pow(half);
            const RingElem alpha =
                one_plus_u_plus_v().pow(i) * (mu_prev + xn.pow(big) + mu_prev * a4_u().pow(half));
            const RingElem beta = (v + a4_u() * v + v.squared()).pow(i) * mu_prev;
            const RingElem gamma = mu_half * v.pow(half - i);
            return SqCoefficients{alpha, beta, gamma, mu_half + y};
          },
      },
      c);
}

std::optional<IdealClass> classify_degrees(long long d1, long long d2) {
  if (d1 < 1 || d2 < 1) return std::nullopt;
  const std::pair<long long, long long> orders[] = {{d1, d2}, {d2, d1}};
  for (const auto& [dx, dy] : orders) {
    if (dx % 3 == 0 && dy % 2 == 0 && dx / 3 < (1LL << 30) && dy / 2 < (1LL << 30)) {
      const IdealClass f = Fibered{static_cast<int>(dx / 3), static_cast<int>(dy / 2)};
      if (is_valid(f)) return f;
    }
  }
  const long long lo = std::min(d1, d2);
  const int e = log2_exact(lo + 2);
  if (std::max(d1, d2) == lo + 1 && e >= 2) return Twisted{e - 1};
  for (const auto& [dx, dy] : orders) {
    // dy = 2^m (2^(n+1) - 1), dx = 3i + 2^(m+1) (2^n - 1).
    const int m = two_adic_valuation(dy);
    if (m < 1 || m > 40) continue;
    const int e = log2_exact((dy >> m) + 1);
    if (e < 2) continue;
    const int n = e - 1;
    const long long rest = dx - pow2(m + 1) * (pow2(n) - 1);
    if (rest < 0 || rest % 3 != 0 || rest / 3 >= (1LL << 30)) continue;
    const IdealClass c = Mixed{static_cast<int>(rest / 3), n, m};
    if (is_valid(c)) return c;
  }
  return std::nullopt;
}

std::vector<IdealClass> classification_list(int max_degree) {
  std::vector<IdealClass> out;
  for (int k = 1; 3 * k <= max_degree; ++k) {
    for (int l = 1; 2 * l <= max_degree; ++l) {
      if (is_valid(Fibered{k, l})) out.emplace_back(Fibered{k, l});
    }
  }
  for (int n = 2; pow2(n + 1) - 1 <= max_degree; ++n) out.emplace_back(Twisted{n});
  for (int n = 1; pow2(n + 2) - 2 <= max_degree; ++n) {
    for (int m = 1; pow2(m + n + 1) - pow2(m) <= max_degree; ++m) {
      for (int i = 0; i < pow2(m - 1); ++i) {
        const Mixed c{i, n, m};
        if (is_valid(c) && generator_degrees(c).first <= max_degree) out.emplace_back(c);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const IdealClass& x, const IdealClass& y) {
    const DegreePair dx = degrees(x);
    const DegreePair dy = degrees(y);
    if (dx != dy) return dx < dy;
    return x.index() < y.index();
  });
  return out;
}

RingElem reduce_mod_v(const RingElem& e) {
  if (e.ring() == RingId::AB) throw RingMismatch("reduce_mod_v needs ring a4 or so3");
  std::vector<UvwMonomial> kept;
  for (const UvwMonomial& m : e.uvw()) {
    if (m.v == 0) kept.push_back(m);
  }
  return RingElem::from_monomials(e.ring(), std::move(kept));
}

}  // namespace sforge
