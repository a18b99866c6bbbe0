#include "sforge/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace sforge {
namespace {

nlohmann::json params_json(const IdealClass& c) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fibered>) {
          return {{"k", x.k}, {"l", x.l}};
        } else if constexpr (std::is_same_v<T, Twisted>) {
          return {{"n", x.n}};
        } else {
          return {{"i", x.i}, {"n", x.n}, {"m", x.m}};
        }
      },
      c);
}

std::string csv_params(const IdealClass& c) {
  std::string p = params_string(c);
  std::replace(p.begin(), p.end(), ',', ';');
  return p;
}

}  // namespace

nlohmann::json to_json(const Ideal2& ideal) {
  const auto [lo, hi] = ideal.degrees();
  return {{"ring", std::string(ring_name(ideal.ring()))},
          {"generators", {format(ideal.lo()), format(ideal.hi())}},
          {"degrees", {lo, hi}}};
}

nlohmann::json to_json(const IdealClass& c) {
  const DegreePair d = degrees(c);
  nlohmann::json alias_list = nlohmann::json::array();
  for (const IdealClass& a : aliases(c)) alias_list.push_back({{"type", family_name(a)}, {"params", params_json(a)}});
  return {{"type", family_name(c)}, {"params", params_json(c)}, {"degrees", {d.lo, d.hi}}, {"aliases", alias_list}};
}

nlohmann::json to_json(const TableRow& row) {
  return {{"degrees", {row.degrees.lo, row.degrees.hi}},
          {"family", to_json(row.family)},
          {"realizability", realizability_name(row.realizability)}};
}

nlohmann::json to_json(const FeasibilityVerdict& verdict) {
  nlohmann::json out = {{"status", feasibility_status_name(verdict.status)},
                        {"reasons", verdict.reasons},
                        {"notes", verdict.notes}};
  out["ideal"] = verdict.ideal ? to_json(*verdict.ideal) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const CrossCheckReport& report) {
  nlohmann::json disc = nlohmann::json::array();
  for (const Discrepancy& d : report.discrepancies) {
    disc.push_back({{"kind", d.kind}, {"degrees", {d.degrees.lo, d.degrees.hi}}, {"witness", d.witness}});
  }
  return {{"max_degree", report.max_degree},
          {"equal", report.equal},
          {"brute_force_count", report.brute_force_count},
          {"classified_count", report.classified_count},
          {"counts",
           {{"fibered", report.counts.fibered},
            {"twisted", report.counts.twisted},
            {"twisted_alias", report.counts.twisted_alias},
            {"mixed", report.counts.mixed}}},
          {"discrepancies", disc}};
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "deg_lo,deg_hi,family,params,realizability,aliases\n";
  for (const TableRow& row : rows) {
    out << row.degrees.lo << ',' << row.degrees.hi << ',' << family_name(row.family) << ','
        << csv_params(row.family) << ',' << realizability_name(row.realizability) << ',';
    for (std::size_t i = 0; i < row.aliases.size(); ++i) {
      if (i != 0) out << '|';
      out << family_name(row.aliases[i]) << '(' << csv_params(row.aliases[i]) << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sforge
