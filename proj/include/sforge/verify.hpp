#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/families.hpp"
#include "sforge/ideals.hpp"

namespace sforge {

constexpr int kDefaultBruteForceCap = 20;

/// Every Steenrod closed parameter ideal of H*(BA4) with both degrees at most
/// max_degree, by exhaustive search, sorted by (lo, hi, text). Throws
/// CapExceeded above cap.
std::vector<Ideal2> brute_force_enumerate(int max_degree, int cap = kDefaultBruteForceCap);

struct FamilyCounts {
  int fibered = 0;
  int twisted = 0;
  /// Twisted descriptors that coincide with a fibered one.
  int twisted_alias = 0;
  int mixed = 0;
  friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

struct Discrepancy {
  /// "missing_from_search" or "unclassified_in_search".
  std::string kind;
  DegreePair degrees;
  std::string witness;
};

struct CrossCheckReport {
  int max_degree = 0;
  bool equal = false;
  std::size_t brute_force_count = 0;
  std::size_t classified_count = 0;
  FamilyCounts counts;
  std::vector<Discrepancy> discrepancies;
};

CrossCheckReport cross_check(int max_degree, int cap = kDefaultBruteForceCap);

enum class Realizability { Realizable, Unknown, NotRealizable };
std::string realizability_name(Realizability r);
Realizability realizability_status(const IdealClass& c);

enum class FeasibilityMode { HomotopyProduct, CohomologyProduct, Integral };
enum class FeasibilityStatus { Impossible, KnownProduct, KnownSphereBundle, Open };
std::string feasibility_status_name(FeasibilityStatus s);
/// Accepts "product", "cohomology", "integral".
std::optional<FeasibilityMode> feasibility_mode_from_name(const std::string& name);
std::string feasibility_mode_name(FeasibilityMode mode);

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::Open;
  std::vector<std::string> reasons;
  std::optional<IdealClass> ideal;
  std::vector<std::string> notes;
};

/// Whether A4 can act freely on a finite complex modelled on S^n x S^m, in
/// the sense selected by mode.
FeasibilityVerdict feasibility(int n, int m, FeasibilityMode mode);

struct TableRow {
  DegreePair degrees;
  IdealClass family;
  std::vector<IdealClass> aliases;
  Realizability realizability = Realizability::Unknown;
};

/// One row per class of classification_list, ordered by (hi, lo).
std::vector<TableRow> appendix_table(int max_degree);

}  // namespace sforge
