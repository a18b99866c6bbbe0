#include <gtest/gtest.h>

#include "sforge/errors.hpp"
#include "sforge/families.hpp"
#include "sforge/ideals.hpp"
#include "sforge/steenrod.hpp"
#include "testkit/oracles.hpp"

using namespace sforge;

namespace {

RingElem a4(const char* text) { return parse_elem(RingId::A4, text); }
RingElem ab(const char* text) { return parse_elem(RingId::AB, text); }

bool verifies(const MembershipCertificate& c, const Ideal2& ideal, const RingElem& target) {
  return c.lambda * ideal.lo().ab() + c.mu * ideal.hi().ab() == target.ab();
}

TEST(Ideal2, OrdersGeneratorsByDegree) {
  const Ideal2 i(a4("v"), a4("u"));
  EXPECT_EQ(i.lo(), a4("u"));
  EXPECT_EQ(i.degrees(), std::make_pair(2, 3));
  EXPECT_EQ(to_string(i), "<u; v>");
}

TEST(Ideal2, RejectsBadGenerators) {
  EXPECT_THROW(Ideal2(a4("u"), parse_elem(RingId::SO3, "v")), RingMismatch);
  EXPECT_THROW(Ideal2(a4("u"), a4("0")), PreconditionViolated);
  EXPECT_THROW(Ideal2(a4("u"), a4("1")), PreconditionViolated);
  EXPECT_THROW(Ideal2(a4("u+v"), a4("v")), PreconditionViolated);
}

TEST(Member, Examples) {
  EXPECT_FALSE(member(a4("v"), Ideal2(a4("u"), a4("u^2"))).has_value());
  const Ideal2 uv(a4("u"), a4("v"));
  const auto c = member(a4("u^3"), uv);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->lambda, a4("u^2").ab());
  EXPECT_TRUE(c->mu.is_zero());
  const RingElem w2 = a4("w^2");
  const auto cw = member(w2, uv);
  ASSERT_TRUE(cw.has_value());
  EXPECT_EQ(oracle::add(oracle::mul(oracle::from(cw->lambda), oracle::from(uv.lo().ab())),
                        oracle::mul(oracle::from(cw->mu), oracle::from(uv.hi().ab()))),
            oracle::from(w2.ab()));
  EXPECT_THROW(member(parse_elem(RingId::SO3, "u"), uv), RingMismatch);
}

TEST(Member, PrimeIdealOfAllPositiveDegrees) {
  const Ideal2 uv(a4("u"), a4("v"));
  for (int d = 2; d <= 18; ++d) {
    for (const RingElem& e : graded_basis(RingId::A4, d)) {
      const auto c = member(e, uv);
      const bool expected = !(e == RingElem::w());
      ASSERT_EQ(c.has_value(), expected) << format(e);
      if (c) EXPECT_TRUE(verifies(*c, uv, e));
    }
  }
  EXPECT_FALSE(member(a4("w"), uv).has_value());
}

TEST(Coprime, Examples) {
  EXPECT_TRUE(is_coprime(Ideal2(a4("u"), a4("v"))));
  EXPECT_FALSE(is_coprime(Ideal2(a4("v"), a4("v*u"))));
  const auto [x2, y2] = twisted_pair(2);
  EXPECT_TRUE(is_coprime(Ideal2(x2, y2)));
}

TEST(SteenrodClosed, Examples) {
  EXPECT_FALSE(is_steenrod_closed(Ideal2(a4("v^3"), a4("u^2"))));
  EXPECT_TRUE(is_steenrod_closed(Ideal2(a4("v^2"), a4("u^4"))));
  EXPECT_TRUE(is_steenrod_closed(Ideal2(a4("u"), a4("v"))));
  EXPECT_FALSE(is_steenrod_closed(Ideal2(a4("u"), a4("w"))));
  EXPECT_TRUE(is_steenrod_closed(Ideal2(ab("a"), ab("b"))));
}

TEST(Equal, Examples) {
  EXPECT_TRUE(equal(Ideal2(a4("u"), a4("v")), Ideal2(a4("v"), a4("u"))));
  EXPECT_FALSE(equal(Ideal2(a4("u"), a4("u^2")), Ideal2(a4("u"), a4("v"))));
  EXPECT_TRUE(equal(Ideal2(ab("a^2"), ab("b^3")), Ideal2(ab("a^2"), ab("b^3+a^2*b"))));
  EXPECT_FALSE(equal(Ideal2(ab("a^2"), ab("b^3")), Ideal2(ab("a^2"), ab("b^3+a*b^2"))));
}

TEST(SquareIdeal, Examples) {
  const Ideal2 uv(a4("u"), a4("v"));
  const Ideal2 sq = square_ideal(uv);
  EXPECT_EQ(sq.lo(), a4("u^2"));
  EXPECT_EQ(sq.hi(), a4("v^2"));
  EXPECT_TRUE(equal(square_ideal(sq), Ideal2(a4("u^4"), a4("v^4"))));
  const auto [x2, y2] = twisted_pair(2);
  EXPECT_TRUE(is_steenrod_closed(square_ideal(Ideal2(x2, y2))));
}

TEST(SquareIdeal, PreservesAndReflectsPredicates) {
  const auto classes = classification_list(30);
  for (const IdealClass& c : classes) {
    const Ideal2 ideal = build(c);
    const Ideal2 sq = square_ideal(ideal);
    EXPECT_TRUE(is_coprime(sq)) << to_string(c);
    EXPECT_TRUE(is_steenrod_closed(sq)) << to_string(c);
  }
  const Ideal2 bad(a4("v^3"), a4("u^2"));
  EXPECT_FALSE(is_steenrod_closed(square_ideal(bad)));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      EXPECT_FALSE(equal(square_ideal(build(classes[i])), square_ideal(build(classes[j]))));
    }
  }
}

TEST(VkExtension, Examples) {
  const Ideal2 base(a4("v"), a4("u^2"));
  EXPECT_TRUE(vk_extension_closed(1, base));
  EXPECT_FALSE(vk_extension_closed(2, base));
  const auto [x2, y2] = twisted_pair(2);
  const auto [x3, y3] = twisted_pair(3);
  EXPECT_TRUE(vk_extension_closed(1, Ideal2(x2.squared(), x3)));
}

TEST(VkExtension, DegreesFifteenFourteenGiveTheTwistedIdeal) {
  const auto [x2, y2] = twisted_pair(2);
  const auto [x3, y3] = twisted_pair(3);
  const Ideal2 extended(RingElem::v(RingId::A4) * x2.squared(), x3);
  EXPECT_EQ(extended.hi(), y3);
  EXPECT_TRUE(is_steenrod_closed(extended));
  EXPECT_TRUE(equal(extended, build(Twisted{3})));
}

TEST(VkExtension, AgreesWithDirectCheck) {
  for (int l = 2; l <= 8; ++l) {
    const RingElem ul = RingElem::u(RingId::A4).pow(static_cast<unsigned>(l));
    for (int k = 1; k <= 8; ++k) {
      const bool direct = is_steenrod_closed(Ideal2(RingElem::v(RingId::A4).pow(static_cast<unsigned>(k) + 1), ul));
      EXPECT_EQ(vk_extension_closed(k, Ideal2(RingElem::v(RingId::A4), ul)), direct) << k << " " << l;
    }
  }
  EXPECT_FALSE(vk_extension_closed(1, embed_v(), embed_u()));
  EXPECT_FALSE(is_steenrod_closed(Ideal2(a4("v^2"), a4("u"))));
}

TEST(VkExtension, Preconditions) {
  EXPECT_THROW(vk_extension_closed(1, Ideal2(a4("v^3"), a4("u^2"))), PreconditionViolated);
  EXPECT_THROW(vk_extension_closed(1, Ideal2(a4("v"), a4("v*u"))), PreconditionViolated);
  EXPECT_THROW(vk_extension_closed(0, Ideal2(a4("v"), a4("u^2"))), PreconditionViolated);
}

TEST(LowerGenerator, UniqueInItsDegree) {
  for (const IdealClass& c : classification_list(40)) {
    const Ideal2 ideal = build(c);
    MembershipEngine engine(ideal.lo_ab(), ideal.hi_ab());
    EXPECT_EQ(engine.dimension(ideal.degrees().first), 1U) << to_string(c);
  }
}

TEST(MembershipEngine, DimensionMatchesSpanOracle) {
  const HomPoly x = a4("u^3+v*w").homogeneous_ab();
  const HomPoly y = a4("v^2+u^3+w*v").homogeneous_ab() * a4("u").homogeneous_ab() + a4("w^2*u").homogeneous_ab();
  MembershipEngine engine(x, y);
  for (int d = 0; d <= 20; ++d) {
    std::vector<std::vector<bool>> rows;
    for (int s = 0; s <= d - x.degree(); ++s) rows.push_back(oracle::dense(oracle::from(x * HomPoly::monomial(s, d - x.degree() - s)), d));
    for (int s = 0; s <= d - y.degree(); ++s) rows.push_back(oracle::dense(oracle::from(y * HomPoly::monomial(s, d - y.degree() - s)), d));
    EXPECT_EQ(engine.dimension(d), oracle::rank(rows)) << d;
  }
}

TEST(Sq1Preimage, FindsInvariantPreimage) {
  const RingElem v = a4("v");
  const auto pre = sq1_preimage(v);
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(sq1(pre->homogeneous_ab()), v.homogeneous_ab());
  EXPECT_FALSE(sq1_preimage(a4("u")).has_value());
}

}  // namespace
