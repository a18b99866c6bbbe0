#include "sforge/verify.hpp"

#include <algorithm>
#include <mutex>

#include "sforge/errors.hpp"
#include "sforge/gf2linalg.hpp"
#include "sforge/parallel.hpp"

namespace sforge {
namespace {

RingElem combination(const std::vector<RingElem>& basis, unsigned long mask) {
  RingElem out = RingElem::from_ab(RingId::A4, GradedPoly{});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((mask >> i) & 1UL) out = out + basis[i];
  }
  return out;
}

// Basis of a complement of X * A4_(d2 - d1) inside A4_d2.
std::vector<RingElem> coset_basis(const HomPoly& x, int d2) {
  const std::vector<RingElem> top = graded_basis(RingId::A4, d2);
  const std::vector<RingElem> cof = graded_basis(RingId::A4, d2 - x.degree());
  EchelonBasis span(static_cast<std::size_t>(d2) + 1, 1);
  const BitVec no_tag(1);
  for (const RingElem& c : cof) span.insert((x * c.homogeneous_ab()).bits(), no_tag);
  std::vector<RingElem> out;
  for (const RingElem& t : top) {
    if (span.insert(t.homogeneous_ab().bits(), no_tag)) out.push_back(t);
  }
  return out;
}

std::vector<Ideal2> search_degree_pair(int d1, int d2) {
  std::vector<Ideal2> found;
  const std::vector<RingElem> xs = graded_basis(RingId::A4, d1);
  if (xs.empty() || graded_dimension(RingId::A4, d2) == 0) return found;
  for (unsigned long xm = 1; xm < (1UL << xs.size()); ++xm) {
    const RingElem x = combination(xs, xm);
    const HomPoly xab = x.homogeneous_ab();
    const std::vector<RingElem> ys = coset_basis(xab, d2);
    for (unsigned long ym = 1; ym < (1UL << ys.size()); ++ym) {
      const RingElem y = combination(ys, ym);
      const HomPoly yab = y.homogeneous_ab();
      if (!is_coprime(xab, yab) || !is_steenrod_closed(xab, yab)) continue;
      Ideal2 ideal(x, y);
      const bool seen = std::any_of(found.begin(), found.end(), [&](const Ideal2& j) { return equal(j, ideal); });
      if (!seen) found.push_back(std::move(ideal));
    }
  }
  return found;
}

bool ideal_less(const Ideal2& x, const Ideal2& y) {
  if (x.degrees() != y.degrees()) return x.degrees() < y.degrees();
  return to_string(x) < to_string(y);
}

}  // namespace

std::vector<Ideal2> brute_force_enumerate(int max_degree, int cap) {
  if (max_degree > cap) {
    throw CapExceeded("brute force limited to degree " + std::to_string(cap) + ", asked for " +
                      std::to_string(max_degree));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int d1 = 1; d1 <= max_degree; ++d1) {
    for (int d2 = d1; d2 <= max_degree; ++d2) pairs.emplace_back(d1, d2);
  }
  std::vector<std::vector<Ideal2>> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) { results[i] = search_degree_pair(pairs[i].first, pairs[i].second); });
  std::vector<Ideal2> out;
  for (auto& r : results) {
    for (auto& ideal : r) out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

CrossCheckReport cross_check(int max_degree, int cap) {
  CrossCheckReport report;
  report.max_degree = max_degree;
  const std::vector<Ideal2> searched = brute_force_enumerate(max_degree, cap);
  const std::vector<IdealClass> classes = classification_list(max_degree);
  report.brute_force_count = searched.size();
  report.classified_count = classes.size();
  std::vector<bool> matched(searched.size(), false);
  for (const IdealClass& c : classes) {
    switch (c.index()) {
      case 0:
        ++report.counts.fibered;
        break;
      case 1:
        ++report.counts.twisted;
        break;
      default:
        ++report.counts.mixed;
    }
    for (const IdealClass& alias : aliases(c)) {
      if (std::holds_alternative<Twisted>(alias)) ++report.counts.twisted_alias;
    }
    const Ideal2 built = build(c);
    bool hit = false;
    for (std::size_t i = 0; i < searched.size(); ++i) {
      if (!matched[i] && searched[i].degrees() == built.degrees() && equal(searched[i], built)) {
        matched[i] = true;
        hit = true;
        break;
      }
    }
    if (!hit) report.discrepancies.push_back({"missing_from_search", degrees(c), to_string(c) + " " + to_string(built)});
  }
  for (std::size_t i = 0; i < searched.size(); ++i) {
    if (!matched[i]) {
      const auto [lo, hi] = searched[i].degrees();
      report.discrepancies.push_back({"unclassified_in_search", DegreePair::of(lo, hi), to_string(searched[i])});
    }
  }
  report.equal = report.discrepancies.empty();
  return report;
}

std::string realizability_name(Realizability r) {
  switch (r) {
    case Realizability::Realizable:
      return "realizable";
    case Realizability::Unknown:
      return "unknown";
    case Realizability::NotRealizable:
      return "not_realizable";
  }
  return "?";
}

Realizability realizability_status(const IdealClass& c) {
  validate(c);
  if (c == IdealClass{Twisted{1}}) return Realizability::Realizable;
  if (const auto* f = std::get_if<Fibered>(&c)) {
    if (f->k <= 8) return Realizability::Realizable;
    if (f->k == f->l && (f->k & (f->k - 1)) == 0 && f->k >= 16) return Realizability::NotRealizable;
  }
  return Realizability::Unknown;
}

std::string feasibility_status_name(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Impossible:
      return "Impossible";
    case FeasibilityStatus::KnownProduct:
      return "KnownProduct";
    case FeasibilityStatus::KnownSphereBundle:
      return "KnownSphereBundle";
    case FeasibilityStatus::Open:
      return "Open";
  }
  return "?";
}

std::optional<FeasibilityMode> feasibility_mode_from_name(const std::string& name) {
  if (name == "product") return FeasibilityMode::HomotopyProduct;
  if (name == "cohomology") return FeasibilityMode::CohomologyProduct;
  if (name == "integral") return FeasibilityMode::Integral;
  return std::nullopt;
}

std::string feasibility_mode_name(FeasibilityMode mode) {
  switch (mode) {
    case FeasibilityMode::HomotopyProduct:
      return "product";
    case FeasibilityMode::CohomologyProduct:
      return "cohomology";
    case FeasibilityMode::Integral:
      return "integral";
  }
  return "?";
}

FeasibilityVerdict feasibility(int n, int m, FeasibilityMode mode) {
  FeasibilityVerdict verdict;
  auto impossible = [&verdict](std::string reason) {
    verdict.status = FeasibilityStatus::Impossible;
    verdict.reasons.push_back(std::move(reason));
    return verdict;
  };
  if (n < 1 || m < 1) throw PreconditionViolated("sphere dimensions must be positive");
  if (n == m) return impossible("equal-dimensions");
  if (std::min(n, m) == 1) return impossible("circle-factor");
  const std::optional<IdealClass> c = classify_degrees(static_cast<long long>(n) + 1, static_cast<long long>(m) + 1);
  if (!c) return impossible("no-closed-parameter-ideal");
  verdict.ideal = *c;
  if (std::holds_alternative<Twisted>(*c)) {
    if (mode == FeasibilityMode::Integral) return impossible("integral-bockstein-obstruction");
    if (mode == FeasibilityMode::HomotopyProduct) return impossible("twisted-power-obstruction");
    verdict.status = FeasibilityStatus::Open;
    return verdict;
  }
  if (const auto* f = std::get_if<Fibered>(&*c)) {
    const bool diagonal = f->k == f->l && (f->k & (f->k - 1)) == 0;
    if (diagonal) {
      if (mode == FeasibilityMode::HomotopyProduct) return impossible("twisted-power-obstruction");
      if (f->k >= 16) return impossible("diagonal-fibered-not-realizable");
      if (mode == FeasibilityMode::CohomologyProduct) {
        verdict.status = FeasibilityStatus::KnownSphereBundle;
        verdict.reasons.emplace_back("fibered-sphere-bundle");
        return verdict;
      }
      verdict.status = FeasibilityStatus::Open;
      verdict.notes.emplace_back("periodic-complex-for-large-l");
      return verdict;
    }
    if (f->k <= 8) {
      verdict.status = FeasibilityStatus::KnownProduct;
      verdict.reasons.emplace_back("fibered-product-of-spheres");
      return verdict;
    }
    verdict.status = FeasibilityStatus::Open;
    verdict.notes.emplace_back("periodic-complex-for-large-l");
    return verdict;
  }
  verdict.status = FeasibilityStatus::Open;
  return verdict;
}

std::vector<TableRow> appendix_table(int max_degree) {
  std::vector<TableRow> rows;
  for (const IdealClass& c : classification_list(max_degree)) {
    rows.push_back({degrees(c), c, aliases(c), realizability_status(c)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    if (x.degrees.hi != y.degrees.hi) return x.degrees.hi < y.degrees.hi;
    return x.degrees.lo < y.degrees.lo;
  });
  return rows;
}

}  // namespace sforge
