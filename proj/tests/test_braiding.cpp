#include <gtest/gtest.h>

#include "support.hpp"

using namespace moorecat;
using mc_test::pl;
using mc_test::q;

TEST(Braid2, SwapsHalves) {
  EXPECT_EQ(braid2(pl({{0, 0}, {1, 2}, {2, 3}})), pl({{0, 0}, {1, 1}, {2, 3}}));
  EXPECT_EQ(braid2(identity(Length(2))), identity(Length(2)));
  EXPECT_THROW(braid2(identity(Length(3))), braid_error);
}

TEST(BraidMap, DirectSwapOfTensor) {
  const PLMap f1 = pl({{0, 0}, {q(1, 3), q(2, 3)}, {1, 1}});
  const PLMap id1 = identity(Length(1));
  EXPECT_EQ(braid_map(tensor_map(f1, id1), Length(1), Length(1)), tensor_map(id1, f1));
  EXPECT_EQ(braid_map_via_mu(tensor_map(f1, id1), Length(1), Length(1)), tensor_map(id1, f1));
  EXPECT_THROW(braid_map(tensor_map(f1, id1), Length(1), Length(2)), braid_error);
}

TEST(BraidMap, InvolutionAndMuFormula) {
  Rng rng(17);
  const RandomProfile p;
  for (int i = 0; i < 100; ++i) {
    const Length l1 = random_length(rng, p);
    const Length l2 = random_length(rng, p);
    const PLMap psi = random_map_to(rng, l1 + l2, p);
    const PLMap b = braid_map(psi, l1, l2);
    EXPECT_EQ(braid_map(b, l2, l1), psi);
    EXPECT_EQ(b, braid_map_via_mu(psi, l1, l2));
  }
}

TEST(BraidClass, SymmetricInputSwapsLabels) {
  const PSpacePtr d = lawcheck::unit_free_space();
  const TensorClass c = canonicalize(RawTriple{{d, d}, identity(Length(2)),
                                               {Element::free("c1", identity(Length(1)), "u"),
                                                Element::free("c1", identity(Length(1)), "u")}});
  EXPECT_EQ(braid_class(c), c);
  EXPECT_EQ(braid_class(braid_class(c)), c);
}

TEST(BraidClass, NonBinaryRejected) {
  const PSpacePtr d = lawcheck::unit_free_space();
  const Element x = Element::free("c1", identity(Length(1)), "u");
  const TensorClass c = canonicalize(RawTriple{{d, d, d}, identity(Length(3)), {x, x, x}});
  EXPECT_THROW(braid_class(c), braid_error);
}

TEST(Witness, FixtureIsUnequal) {
  const PSpacePtr d = lawcheck::unit_free_space();
  const PLMap omega = pl({{0, 0}, {q(1, 2), 1}, {2, 2}});
  const NaturalityWitness w = naturality_witness(d, d, omega);
  EXPECT_FALSE(w.equal);
  EXPECT_NE(w.lhs, w.rhs);

  const auto [w1, w2] = decompose_map(omega, Length(1), Length(1));
  const TensorSpace ts = tensor_space(d, d);
  EXPECT_EQ(to_closed_form(ts, w.lhs)->map, tensor_map(w1, w2));
  EXPECT_EQ(to_closed_form(ts, w.rhs)->map, tensor_map(w2, w1));
  EXPECT_EQ(tensor_map(w1, w2), omega);
}

TEST(Witness, IdentityOmegaCommutes) {
  const PSpacePtr d = lawcheck::unit_free_space();
  EXPECT_TRUE(naturality_witness(d, d, identity(Length(2))).equal);
}

TEST(Witness, ConstConstHasNone) {
  const PSpacePtr k = make_space({Cell::constant("k", {"a"})});
  EXPECT_TRUE(naturality_witness(k, k).equal);
}

TEST(NaiveSwap, FixtureDisagreesButBraidAgrees) {
  const NaiveSwapReport r = naive_swap_check(lawcheck::naive_swap_fixture());
  EXPECT_FALSE(r.welldefined);
  EXPECT_TRUE(r.braid_agrees);
}

TEST(NaiveSwap, TrivialRewriteIsConsistent) {
  const PSpacePtr d = lawcheck::unit_free_space();
  const Element x = Element::free("c1", identity(Length(1)), "u");
  const NaiveSwapReport r = naive_swap_check(RawTriple{{d, d}, identity(Length(2)), {x, x}});
  EXPECT_TRUE(r.welldefined);
  EXPECT_TRUE(r.braid_agrees);
}
