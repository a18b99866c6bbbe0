#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "sforge/cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sforge::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliCheck, ClosedFiberedIdeal) {
  const auto r = run({"check", "--ring", "a4", "--ideal", "v^2; u^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "parameter: yes"));
  EXPECT_TRUE(contains(r.out, "steenrod_closed: yes"));
  EXPECT_TRUE(contains(r.out, "class: Fibered{k=2,l=4}"));
}

TEST(CliCheck, NotClosedUnderStrict) {
  const auto plain = run({"check", "--ring", "a4", "--ideal", "v^3; u^2"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_TRUE(contains(plain.out, "steenrod_closed: no"));
  EXPECT_EQ(run({"check", "--ring", "a4", "--ideal", "v^3; u^2", "--strict"}).code, 1);
  EXPECT_EQ(run({"check", "--ring", "a4", "--ideal", "v^2; u^4", "--strict"}).code, 0);
}

TEST(CliCheck, KnownIdeals) {
  EXPECT_TRUE(contains(run({"check", "--ideal", "u; v"}).out, "steenrod_closed: yes"));
  EXPECT_TRUE(contains(run({"check", "--ideal", "v; v*u"}).out, "parameter: no"));
  EXPECT_TRUE(contains(run({"check", "--ideal", "u^3+v^2; v*u^2"}).out, "class: Twisted{n=2}"));
  EXPECT_TRUE(contains(run({"check", "--ideal", "v*u^4; u^6+v^4"}).out, "class: Mixed{i=1,n=1,m=2}"));
  EXPECT_TRUE(contains(run({"check", "--ring", "so3", "--ideal", "u; v"}).out, "steenrod_closed: yes"));
  EXPECT_TRUE(contains(run({"check", "--ring", "ab", "--ideal", "a^2; b^3+a^2*b"}).out, "parameter: yes"));
}

TEST(CliCheck, Json) {
  const auto r = run({"check", "--ideal", "v^2; u^4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["steenrod_closed"], true);
  EXPECT_EQ(j["parameter"], true);
}

TEST(CliClassify, Examples) {
  EXPECT_TRUE(contains(run({"classify", "--degrees", "3", "4"}).out, "class: Fibered{k=1,l=2}"));
  EXPECT_TRUE(contains(run({"classify", "--degrees", "6", "7"}).out, "class: Twisted{n=2}"));
  const auto none = run({"classify", "--degrees", "10", "16"});
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(contains(none.out, "class: none"));
  EXPECT_EQ(run({"classify", "--degrees", "10", "16", "--strict"}).code, 1);
  const auto j = nlohmann::json::parse(run({"classify", "--degrees", "12", "11", "--format", "json"}).out);
  EXPECT_EQ(j["type"], "mixed");
}

TEST(CliEnumerate, ClassificationAndSearchAgree) {
  const auto listed = run({"enumerate", "--max-degree", "7", "--format", "json"});
  const auto searched = run({"enumerate", "--max-degree", "7", "--brute-force", "--format", "json"});
  ASSERT_EQ(listed.code, 0);
  ASSERT_EQ(searched.code, 0);
  const auto a = nlohmann::json::parse(listed.out);
  const auto b = nlohmann::json::parse(searched.out);
  ASSERT_EQ(a.size(), 5U);
  ASSERT_EQ(b.size(), 5U);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i]["degrees"], b[i]["degrees"]);
  EXPECT_EQ(nlohmann::json::parse(run({"enumerate", "--max-degree", "2", "--format", "json"}).out).size(), 0U);
  EXPECT_EQ(nlohmann::json::parse(run({"enumerate", "--max-degree", "3", "--brute-force", "--format", "json"}).out)
                .size(),
            1U);
}

TEST(CliEnumerate, CsvHeader) {
  const auto r = run({"enumerate", "--max-degree", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "deg_lo,deg_hi,family,params,realizability,aliases\n2,3,fibered,k=1;l=1,realizable,twisted(n=1)\n");
  const auto b = run({"enumerate", "--max-degree", "3", "--brute-force", "--format", "csv"});
  EXPECT_EQ(b.out,
            "deg_lo,deg_hi,family,params,realizability,aliases,generator_lo,generator_hi\n"
            "2,3,fibered,k=1;l=1,realizable,twisted(n=1),u,v\n");
}

TEST(CliFeasible, Examples) {
  const auto product = run({"feasible", "--spheres", "2", "3", "--mode", "product"});
  EXPECT_EQ(product.code, 0);
  EXPECT_TRUE(contains(product.out, "status: KnownProduct"));
  const auto circle = run({"feasible", "--spheres", "1", "5", "--mode", "cohomology"});
  EXPECT_TRUE(contains(circle.out, "status: Impossible"));
  EXPECT_TRUE(contains(circle.out, "circle-factor"));
  const auto gap = run({"feasible", "--spheres", "9", "15", "--mode", "product"});
  EXPECT_TRUE(contains(gap.out, "no-closed-parameter-ideal"));
  EXPECT_EQ(run({"feasible", "--spheres", "9", "15", "--mode", "product", "--strict"}).code, 1);
  const auto j = nlohmann::json::parse(run({"feasible", "--spheres", "3", "5", "--mode", "cohomology", "--format", "json"}).out);
  EXPECT_EQ(j["status"], "KnownSphereBundle");
}

TEST(CliTable, CsvRows) {
  const auto r = run({"table", "--max-degree", "60"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "2,3,fibered,k=1;l=1,realizable,twisted(n=1)\n"));
  EXPECT_TRUE(contains(r.out, "32,48,fibered,k=16;l=16,not_realizable,\n"));
  EXPECT_TRUE(contains(r.out, "11,12,mixed,i=1;n=1;m=2,unknown,\n"));
}

TEST(CliTable, Json) {
  const auto j = nlohmann::json::parse(run({"table", "--max-degree", "7", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 5U);
  EXPECT_EQ(j[0]["realizability"], "realizable");
}

TEST(CliSq, Examples) {
  EXPECT_EQ(run({"sq", "--ring", "a4", "--expr", "u", "--i", "1"}).out, "v\n");
  EXPECT_EQ(run({"sq", "--ring", "a4", "--expr", "u"}).out, "u^2+v+u\n");
  EXPECT_EQ(run({"sq", "--ring", "ab", "--expr", "a"}).out, "a^2+a\n");
  EXPECT_EQ(run({"sq", "--ring", "ab", "--expr", "1"}).out, "1\n");
  EXPECT_EQ(run({"sq", "--ring", "ab", "--expr", "a^2*b", "--i", "5"}).out, "0\n");
  EXPECT_EQ(run({"sq", "--ring", "ab", "--expr", "a^2*b", "--i", "3"}).out, "a^4*b^2\n");
  EXPECT_EQ(run({"sq", "--ring", "ab", "--expr", "a^2+a*b+b^2", "--i", "1"}).out, "a^2*b+a*b^2\n");
  EXPECT_EQ(run({"sq", "--ring", "so3", "--expr", "u", "--i", "1"}).out, "v\n");
}

TEST(CliErrors, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"check", "--ring", "zz", "--ideal", "u; v"}).code, 2);
  EXPECT_EQ(run({"check", "--ideal", "u"}).code, 2);
  const auto parse = run({"check", "--ideal", "u+; v"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_TRUE(contains(parse.err, "offset"));
  EXPECT_EQ(run({"check", "--ring", "so3", "--ideal", "u; w"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--max-degree", "30", "--brute-force"}).code, 2);
  EXPECT_EQ(run({"feasible", "--spheres", "2", "3", "--mode", "loose"}).code, 2);
  EXPECT_EQ(run({"sq", "--ring", "a4", "--expr", "u+v"}).code, 2);
}

TEST(CliDeterminism, RepeatedRunsIdentical) {
  const auto first = run({"enumerate", "--max-degree", "16", "--brute-force", "--format", "json"});
  const auto second = run({"enumerate", "--max-degree", "16", "--brute-force", "--format", "json"});
  EXPECT_EQ(first.out, second.out);
}

TEST(CliDeterminism, IndependentOfThreadCount) {
  ::setenv("STEENROD_FORGE_THREADS", "1", 1);
  const auto serial = run({"enumerate", "--max-degree", "18", "--brute-force", "--format", "csv"});
  ::setenv("STEENROD_FORGE_THREADS", "5", 1);
  const auto threaded = run({"enumerate", "--max-degree", "18", "--brute-force", "--format", "csv"});
  ::unsetenv("STEENROD_FORGE_THREADS");
  EXPECT_EQ(serial.out, threaded.out);
  EXPECT_EQ(serial.code, 0);
}

}  // namespace
