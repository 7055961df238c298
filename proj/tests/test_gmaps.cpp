#include <gtest/gtest.h>

#include "support.hpp"

using namespace moorecat;
using mc_test::pl;
using mc_test::q;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-2").str(), "-2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_THROW(Rational::parse("1/0"), validation_error);
  EXPECT_THROW(Rational::parse("abc"), validation_error);
  EXPECT_THROW(Rational::parse("1/"), validation_error);
}

TEST(Length, RejectsNonPositive) {
  EXPECT_THROW(Length(0), validation_error);
  EXPECT_THROW(Length(-1, 2), validation_error);
  EXPECT_EQ((Length(1, 2) + Length(3, 2)).value(), q(2));
}

TEST(PLMap, IdentityHasTwoBreaks) {
  const PLMap id = identity(Length(1));
  ASSERT_EQ(id.breaks().size(), 2u);
  EXPECT_EQ(id, pl({{0, 0}, {1, 1}}));
}

TEST(PLMap, CollinearBreaksAreMerged) {
  EXPECT_EQ(pl({{0, 0}, {1, 1}, {2, 2}}), identity(Length(2)));
  EXPECT_EQ(pl({{0, 0}, {1, 2}, {2, 5}, {3, 6}}).breaks().size(), 4u);
}

TEST(PLMap, RejectsBadBreaks) {
  EXPECT_THROW(pl({{0, 0}}), validation_error);
  EXPECT_THROW(pl({{1, 0}, {2, 2}}), validation_error);
  EXPECT_THROW(pl({{0, 0}, {1, 1}, {1, 2}}), validation_error);
  EXPECT_THROW(pl({{0, 0}, {1, 2}, {2, 1}}), validation_error);
  EXPECT_THROW(pl({{0, 0}, {1, 0}, {2, 2}}), validation_error);
}

TEST(Eval, FrozenValues) {
  EXPECT_EQ(eval(mu(Length(2)), 1), q(1, 2));
  EXPECT_EQ(eval(identity(Length(3)), q(7, 5)), q(7, 5));
  EXPECT_EQ(eval(pl({{0, 0}, {1, 2}, {3, 3}}), 2), q(5, 2));
  EXPECT_EQ(eval(mu(Length(3)), 2), q(2, 3));
}

TEST(Eval, OutOfDomain) {
  EXPECT_THROW(eval(identity(Length(1)), 2), domain_error);
  EXPECT_THROW(eval(identity(Length(1)), -1), domain_error);
}

TEST(Inverse, SwapsCoordinates) {
  EXPECT_EQ(inverse(pl({{0, 0}, {1, 2}, {3, 3}})), pl({{0, 0}, {2, 1}, {3, 3}}));
  const PLMap f = pl({{0, 0}, {1, 2}, {3, 3}});
  EXPECT_EQ(compose(f, inverse(f)), identity(Length(3)));
}

TEST(Compose, AppliesFirstArgumentFirst) {
  const PLMap f = mu(Length(2));
  const PLMap g = pl({{0, 0}, {q(1, 2), q(3, 2)}, {1, 2}});
  EXPECT_EQ(compose(f, g), pl({{0, 0}, {1, q(3, 2)}, {2, 2}}));
}

TEST(Compose, LengthMismatch) {
  EXPECT_THROW(compose(identity(Length(1)), identity(Length(2))), composition_error);
}

TEST(Compose, MuInverseIsIdentity) {
  for (int l = 1; l <= 5; ++l) EXPECT_EQ(compose(mu(Length(l)), inverse(mu(Length(l)))), identity(Length(l)));
  EXPECT_EQ(mu(Length(1)), identity(Length(1)));
}

TEST(Tensor, Concatenates) {
  EXPECT_EQ(tensor_map(pl({{0, 0}, {1, 2}}), pl({{0, 0}, {2, 1}})), pl({{0, 0}, {1, 2}, {3, 3}}));
}

TEST(Decompose, FrozenSplit) {
  const auto [f1, f2] = decompose_map(pl({{0, 0}, {1, q(3, 2)}, {2, 2}}), Length(3, 2), Length(1, 2));
  EXPECT_EQ(f1, pl({{0, 0}, {1, q(3, 2)}}));
  EXPECT_EQ(f2, pl({{0, 0}, {1, q(1, 2)}}));
  EXPECT_EQ(tensor_map(f1, f2), pl({{0, 0}, {1, q(3, 2)}, {2, 2}}));
}

TEST(Decompose, SplitMustSumToCodomain) {
  EXPECT_THROW(decompose_map(identity(Length(2)), Length(1), Length(2)), split_error);
}

TEST(Shift, FrozenRightShift) {
  EXPECT_EQ(shift_right(Length(1), mu(Length(2))), pl({{0, 0}, {2, 1}, {3, 2}}));
  EXPECT_EQ(shift_left(Length(2), identity(Length(3))), identity(Length(5)));
}

TEST(Segment, RestrictsToInterval) {
  const PLMap f = pl({{0, 0}, {1, 2}, {3, 3}});
  EXPECT_EQ(segment(f, 0, 1), pl({{0, 0}, {1, 2}}));
  EXPECT_EQ(segment(f, 1, 3), pl({{0, 0}, {2, 1}}));
}

TEST(RandomMaps, AreValidAndDeterministic) {
  Rng a(11), b(11);
  const RandomProfile p;
  for (int i = 0; i < 50; ++i) {
    const PLMap f = random_map(a, Length(2), Length(3), p);
    EXPECT_EQ(f, random_map(b, Length(2), Length(3), p));
    EXPECT_EQ(f.dom(), Length(2));
    EXPECT_EQ(f.cod(), Length(3));
  }
}
