#include <gtest/gtest.h>

#include "testkit/properties.hpp"

namespace {

void expect_all(const std::vector<props::Result>& results) {
  ASSERT_FALSE(results.empty());
  for (const props::Result& r : results) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << "/" << r.cases << " failed, first: " << r.first_failure;
  }
}

constexpr std::size_t kCases = 400;

TEST(Properties, Gf2Poly) {
  props::Rng rng(11);
  expect_all(props::gf2poly_suite(rng, kCases));
}

TEST(Properties, Steenrod) {
  props::Rng rng(12);
  expect_all(props::steenrod_suite(rng, kCases));
}

TEST(Properties, Rings) {
  props::Rng rng(13);
  expect_all(props::rings_suite(rng, kCases));
}

TEST(Properties, Ideals) {
  props::Rng rng(14);
  expect_all(props::ideals_suite(rng, kCases));
}

}  // namespace
