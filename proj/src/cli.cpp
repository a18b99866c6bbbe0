#include "sforge/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>

#include "sforge/errors.hpp"
#include "sforge/families.hpp"
#include "sforge/ideals.hpp"
#include "sforge/serialize.hpp"
#include "sforge/steenrod.hpp"
#include "sforge/verify.hpp"

namespace sforge {
namespace {

// Raised for malformed arguments that CLI11 cannot see (e.g. the ideal text).
struct UsageError : Error {
  using Error::Error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

RingId ring_arg(const std::string& name) {
  auto r = ring_from_name(name);
  if (!r) throw UsageError("unknown ring '" + name + "' (expected ab, a4 or so3)");
  return *r;
}

Ideal2 ideal_arg(RingId ring, const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos || text.find(';', sep + 1) != std::string::npos) {
    throw UsageError("--ideal takes exactly two expressions separated by ';'");
  }
  return Ideal2(parse_elem(ring, text.substr(0, sep)), parse_elem(ring, text.substr(sep + 1)));
}

// The classified ideal that equals the given one, if any.
std::optional<IdealClass> matching_class(const Ideal2& ideal) {
  if (ideal.ring() == RingId::AB) return std::nullopt;
  const auto [lo, hi] = ideal.degrees();
  auto c = classify_degrees(lo, hi);
  if (!c) return std::nullopt;
  const auto [x, y] = family_generators(*c);
  const Ideal2 built(RingElem::from_ab(ideal.ring(), x.ab()), RingElem::from_ab(ideal.ring(), y.ab()));
  if (!equal(built, ideal)) return std::nullopt;
  return c;
}

int cmd_check(const std::string& ring_text, const std::string& ideal_text, const std::string& fmt, bool strict,
              std::ostream& out) {
  const Ideal2 ideal = ideal_arg(ring_arg(ring_text), ideal_text);
  const bool parameter = is_coprime(ideal);
  const bool closed = is_steenrod_closed(ideal);
  const std::optional<IdealClass> c = parameter && closed ? matching_class(ideal) : std::nullopt;
  const auto [lo, hi] = ideal.degrees();
  if (fmt == "json") {
    nlohmann::json j = {{"ideal", to_json(ideal)}, {"parameter", parameter}, {"steenrod_closed", closed}};
    j["class"] = c ? to_json(*c) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "ring: " << ring_name(ideal.ring()) << '\n'
        << "ideal: " << to_string(ideal) << '\n'
        << "degrees: " << lo << ' ' << hi << '\n'
        << "parameter: " << yes_no(parameter) << '\n'
        << "steenrod_closed: " << yes_no(closed) << '\n';
    if (ideal.ring() != RingId::AB) out << "class: " << (c ? to_string(*c) : "none") << '\n';
  }
  return strict && !(parameter && closed) ? 1 : 0;
}

std::string alias_text(const IdealClass& c) {
  std::string out;
  for (const IdealClass& a : aliases(c)) out += (out.empty() ? "" : ",") + to_string(a);
  return out.empty() ? "none" : out;
}

int cmd_classify(long long d1, long long d2, const std::string& fmt, bool strict, std::ostream& out) {
  const auto c = classify_degrees(d1, d2);
  if (fmt == "json") {
    out << (c ? to_json(*c) : nlohmann::json(nullptr)).dump(2) << '\n';
  } else if (!c) {
    out << "class: none\n";
  } else {
    const DegreePair d = degrees(*c);
    out << "class: " << to_string(*c) << '\n'
        << "degrees: " << d.lo << ' ' << d.hi << '\n'
        << "aliases: " << alias_text(*c) << '\n'
        << "ideal: " << to_string(build(*c)) << '\n'
        << "realizability: " << realizability_name(realizability_status(*c)) << '\n';
  }
  return strict && !c ? 1 : 0;
}

int cmd_enumerate(int max_degree, bool brute, const std::string& fmt, std::ostream& out) {
  if (brute) {
    const std::vector<Ideal2> found = brute_force_enumerate(max_degree);
    if (fmt == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const Ideal2& ideal : found) {
        nlohmann::json e = to_json(ideal);
        const auto c = matching_class(ideal);
        e["class"] = c ? to_json(*c) : nlohmann::json(nullptr);
        j.push_back(e);
      }
      out << j.dump(2) << '\n';
    } else if (fmt == "csv") {
      out << "deg_lo,deg_hi,family,params,realizability,aliases,generator_lo,generator_hi\n";
      for (const Ideal2& ideal : found) {
        const auto c = matching_class(ideal);
        const std::string generators = format(ideal.lo()) + ',' + format(ideal.hi());
        if (!c) {
          out << ideal.degrees().first << ',' << ideal.degrees().second << ",none,,,," << generators << '\n';
          continue;
        }
        const std::string row = table_csv({TableRow{degrees(*c), *c, aliases(*c), realizability_status(*c)}});
        out << row.substr(row.find('\n') + 1, row.size() - row.find('\n') - 2) << ',' << generators << '\n';
      }
    } else {
      for (const Ideal2& ideal : found) {
        const auto c = matching_class(ideal);
        out << std::setw(4) << ideal.degrees().first << ' ' << std::setw(4) << ideal.degrees().second << "  "
            << std::left << std::setw(24) << (c ? to_string(*c) : "none") << std::right << ' ' << to_string(ideal)
            << '\n';
      }
    }
    return 0;
  }
  const auto rows = appendix_table(max_degree);
  std::vector<TableRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TableRow& x, const TableRow& y) { return x.degrees < y.degrees; });
  if (fmt == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const TableRow& r : sorted) j.push_back(to_json(r.family));
    out << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    out << table_csv(sorted);
  } else {
    for (const TableRow& r : sorted) {
      out << std::setw(4) << r.degrees.lo << ' ' << std::setw(4) << r.degrees.hi << "  " << std::left
          << std::setw(24) << to_string(r.family) << std::right << ' ' << to_string(build(r.family)) << '\n';
    }
  }
  return 0;
}

int cmd_feasible(int n, int m, const std::string& mode_text, const std::string& fmt, bool strict,
                 std::ostream& out) {
  const auto mode = feasibility_mode_from_name(mode_text);
  if (!mode) throw UsageError("unknown mode '" + mode_text + "' (expected product, cohomology or integral)");
  const FeasibilityVerdict v = feasibility(n, m, *mode);
  if (fmt == "json") {
    out << to_json(v).dump(2) << '\n';
  } else {
    auto join = [](const std::vector<std::string>& items) {
      std::string s;
      for (const auto& x : items) s += (s.empty() ? "" : ",") + x;
      return s.empty() ? std::string("none") : s;
    };
    out << "status: " << feasibility_status_name(v.status) << '\n'
        << "ideal: " << (v.ideal ? to_string(*v.ideal) : "none") << '\n'
        << "reasons: " << join(v.reasons) << '\n'
        << "notes: " << join(v.notes) << '\n';
  }
  return strict && v.status == FeasibilityStatus::Impossible ? 1 : 0;
}

int cmd_table(int max_degree, const std::string& fmt, std::ostream& out) {
  const auto rows = appendix_table(max_degree);
  if (fmt == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const TableRow& r : rows) j.push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    out << table_csv(rows);
  }
  return 0;
}

int cmd_sq(const std::string& ring_text, const std::string& expr, std::optional<int> i, const std::string& fmt,
           std::ostream& out) {
  const RingId ring = ring_arg(ring_text);
  const RingElem p = parse_elem(ring, expr);
  if (!p.is_homogeneous()) throw UsageError("sq takes a homogeneous expression");
  const GradedPoly image = i ? sq(*i, p.ab()) : total_sq(p.ab());
  const RingElem result = lift(ring, image);
  if (fmt == "json") {
    nlohmann::json j = {{"ring", std::string(ring_name(ring))}, {"input", format(p)}, {"result", format(result)}};
    j["i"] = i ? nlohmann::json(*i) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << format(result) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steenrod closed parameter ideals of H*(BA4), H*(BSO(3)) and F2[a,b]", "sforge"};
  app.require_subcommand(1, 1);

  std::string ring = "a4";
  std::string ideal_text;
  std::string fmt = "text";
  std::string expr;
  std::string mode = "product";
  bool strict = false;
  bool brute = false;
  std::vector<long long> degree_pair;
  std::vector<int> spheres;
  int max_degree = 0;
  std::optional<int> sq_index;

  const auto rings = CLI::IsMember({"ab", "a4", "so3"});

  auto* check = app.add_subcommand("check", "Decide whether an ideal is a Steenrod closed parameter ideal");
  check->add_option("--ring", ring, "ab, a4 or so3")->check(rings)->capture_default_str();
  check->add_option("--ideal", ideal_text, "two generators separated by ';', e.g. \"v^2; u^4\"")->required();
  check->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  check->add_flag("--strict", strict, "exit 1 unless the ideal is a Steenrod closed parameter ideal");

  auto* classify = app.add_subcommand("classify", "Find the Steenrod closed parameter ideal with given degrees");
  classify->add_option("--degrees", degree_pair, "two positive degrees")->expected(2)->required()->check(
      CLI::PositiveNumber);
  classify->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  classify->add_flag("--strict", strict, "exit 1 when no ideal exists");

  auto* enumerate = app.add_subcommand("enumerate", "List the classified ideals up to a degree");
  enumerate->add_option("--max-degree", max_degree)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--brute-force", brute, "search exhaustively instead of using the classification");
  enumerate->add_option("--format", fmt)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

  auto* feasible = app.add_subcommand("feasible", "Free A4 actions on a product of two spheres");
  feasible->add_option("--spheres", spheres, "sphere dimensions N M")->expected(2)->required()->check(
      CLI::PositiveNumber);
  feasible->add_option("--mode", mode)
      ->check(CLI::IsMember({"product", "cohomology", "integral"}))
      ->capture_default_str();
  feasible->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  feasible->add_flag("--strict", strict, "exit 1 when the action is impossible");

  std::string table_fmt = "csv";
  auto* table = app.add_subcommand("table", "Table of classified ideals with realizability");
  table->add_option("--max-degree", max_degree)->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_fmt)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  auto* sqc = app.add_subcommand("sq", "Apply the total square or Sq^i");
  sqc->add_option("--ring", ring)->check(rings)->capture_default_str();
  sqc->add_option("--expr", expr)->required();
  sqc->add_option("--i", sq_index, "apply only Sq^i")->check(CLI::NonNegativeNumber);
  sqc->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::vector<const char*> argv{"sforge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(ring, ideal_text, fmt, strict, out);
    if (classify->parsed()) return cmd_classify(degree_pair[0], degree_pair[1], fmt, strict, out);
    if (enumerate->parsed()) return cmd_enumerate(max_degree, brute, fmt, out);
    if (feasible->parsed()) return cmd_feasible(spheres[0], spheres[1], mode, fmt, strict, out);
    if (table->parsed()) return cmd_table(max_degree, table_fmt, out);
    if (sqc->parsed()) return cmd_sq(ring, expr, sq_index, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sforge
