#include <gtest/gtest.h>

#include "support.hpp"

using namespace moorecat;
using mc_test::pl;
using mc_test::q;

namespace {

PSpacePtr free_space(const std::string& id, std::int64_t arity, std::vector<std::string> labels) {
  return make_space({Cell::free(id, Length(arity), std::move(labels))});
}

PSpacePtr const_space(const std::string& id, std::vector<std::string> labels) {
  return make_space({Cell::constant(id, std::move(labels))});
}

}  // namespace

TEST(Canonicalize, IdentityRepresentativeHasOneBoundary) {
  const PSpacePtr d = free_space("a", 2, {"u"});
  const PSpacePtr e = free_space("b", 3, {"v"});
  const TensorClass c = canonicalize(RawTriple{{d, e}, identity(Length(5)),
                                               {Element::free("a", identity(Length(2)), "u"),
                                                Element::free("b", identity(Length(3)), "v")}});
  ASSERT_EQ(c.slots.size(), 2u);
  const auto& s1 = std::get<FreeSlot>(c.slots[0]);
  const auto& s2 = std::get<FreeSlot>(c.slots[1]);
  EXPECT_EQ(s1.end, q(2));
  EXPECT_EQ(s2.start, q(2));
  EXPECT_EQ(s1.map, identity(Length(2)));
  EXPECT_EQ(s2.map, identity(Length(3)));
}

TEST(Canonicalize, RelationRewriteGivesSameClass) {
  const PSpacePtr d = free_space("a", 1, {"u"});
  const PLMap phi1 = pl({{0, 0}, {1, q(1, 3)}, {2, 1}});
  const PLMap phi2 = pl({{0, 0}, {q(1, 2), q(3, 4)}, {1, 1}});
  const PLMap psi = pl({{0, 0}, {1, q(5, 2)}, {2, 3}});
  const RawTriple lhs{{d, d}, psi, {Element::free("a", phi1, "u"), Element::free("a", phi2, "u")}};
  const RawTriple rhs{{d, d}, compose(psi, tensor_map(phi1, phi2)),
                      {Element::free("a", identity(Length(1)), "u"), Element::free("a", identity(Length(1)), "u")}};
  EXPECT_EQ(canonicalize(lhs), canonicalize(rhs));
}

TEST(Canonicalize, ConstConstCollapsesToLabels) {
  const PSpacePtr d = const_space("k", {"a"});
  const PSpacePtr e = const_space("m", {"b"});
  const RawTriple bent{{d, e}, pl({{0, 0}, {1, 2}, {3, 3}}),
                       {Element::constant("k", Length(2), "a"), Element::constant("m", Length(1), "b")}};
  const RawTriple flat{{d, e}, identity(Length(3)),
                       {Element::constant("k", Length(1), "a"), Element::constant("m", Length(2), "b")}};
  EXPECT_EQ(canonicalize(bent), canonicalize(flat));
}

TEST(Canonicalize, InconsistentLengths) {
  const PSpacePtr d = free_space("a", 1, {"u"});
  const RawTriple bad{{d, d}, identity(Length(3)),
                      {Element::free("a", identity(Length(1)), "u"), Element::free("a", identity(Length(1)), "u")}};
  EXPECT_THROW(canonicalize(bad), representative_error);
}

TEST(Canonicalize, Idempotent) {
  Rng rng(5);
  const RandomProfile p;
  for (int i = 0; i < 100; ++i) {
    const auto fs = random_factors(rng, 2, p);
    const TensorClass c = canonicalize(random_raw_triple(rng, fs, p));
    EXPECT_EQ(canonicalize(representative(c)), c);
  }
}

TEST(RestrictClass, IdentityAndFunctor) {
  Rng rng(8);
  const RandomProfile p;
  for (int i = 0; i < 100; ++i) {
    const auto fs = random_factors(rng, 2, p);
    const RawTriple r = random_raw_triple(rng, fs, p);
    const TensorClass c = canonicalize(r);
    EXPECT_EQ(restrict_class(c, identity(c.length)), c);
    const PLMap w = random_map_to(rng, c.length, p);
    const PLMap w2 = random_map_to(rng, w.dom(), p);
    EXPECT_EQ(restrict_class(restrict_class(c, w), w2), restrict_class(c, compose(w2, w)));
    EXPECT_EQ(restrict_class(c, w), canonicalize(RawTriple{r.factors, compose(w, r.psi), r.parts}));
  }
}

TEST(RestrictClass, LengthMismatch) {
  const PSpacePtr d = free_space("a", 1, {"u"});
  const TensorClass c = canonicalize(RawTriple{{d, d}, identity(Length(2)),
                                               {Element::free("a", identity(Length(1)), "u"),
                                                Element::free("a", identity(Length(1)), "u")}});
  EXPECT_THROW(restrict_class(c, identity(Length(3))), action_error);
}

TEST(Associate, RegroupsOnly) {
  Rng rng(13);
  const RandomProfile p;
  const auto fs = random_factors(rng, 3, p);
  const TensorClass c = canonicalize(random_raw_triple(rng, fs, p));
  EXPECT_EQ(c.grouping.str(), "((x x) x)");
  const TensorClass a = associate(c);
  EXPECT_EQ(a.grouping.str(), "(x (x x))");
  EXPECT_EQ(a.slots, c.slots);
  EXPECT_EQ(associate_inverse(a), c);
}

TEST(Associate, BadPath) {
  Rng rng(13);
  const RandomProfile p;
  const auto fs = random_factors(rng, 2, p);
  const TensorClass c = canonicalize(random_raw_triple(rng, fs, p));
  EXPECT_THROW(associate(c), grouping_error);
}

TEST(Grouping, ParseRoundTrip) {
  const Grouping g = Grouping::parse("((x x) (x x))");
  EXPECT_EQ(g.leaves(), 4u);
  EXPECT_EQ(g.str(), "((x x) (x x))");
  EXPECT_THROW(Grouping::parse("(x x"), grouping_error);
}

TEST(Collapse, IdentityIsNeutral) {
  const PLMap psi = pl({{0, 0}, {1, q(1, 2)}, {3, 4}});
  EXPECT_EQ(collapse_right(psi, identity(Length(1))), psi);
  EXPECT_EQ(collapse_left(psi, identity(Length(1))), psi);
}

TEST(Collapse, MatchesShiftedComposite) {
  const PLMap psi = pl({{0, 0}, {1, q(1, 2)}, {3, 4}});
  const PLMap phi = pl({{0, 0}, {2, 1}, {3, 5}});
  EXPECT_EQ(collapse_right(psi, phi), compose(psi, shift_right(Length(1), phi)));
  EXPECT_EQ(collapse_left(psi, phi), compose(psi, shift_left(Length(1), phi)));
  EXPECT_THROW(collapse_right(psi, identity(Length(4))), collapse_error);
}

TEST(TensorSpace, ClosedForms) {
  const TensorSpace ff = tensor_space(free_space("a", 1, {"u"}), free_space("b", 2, {"v"}));
  const PSpacePtr closed = ff.closed_space();
  ASSERT_EQ(closed->cells().size(), 1u);
  const Cell& c = closed->cells()[0];
  EXPECT_TRUE(c.is_free());
  EXPECT_EQ(*c.arity, Length(3));
  EXPECT_EQ(c.labels, std::vector<std::string>{"(u,v)"});

  const TensorSpace kk = tensor_space(const_space("k", {"u"}), const_space("m", {"v"}));
  const PSpacePtr kclosed = kk.closed_space();
  const Cell& ck = kclosed->cells()[0];
  EXPECT_FALSE(ck.is_free());
  EXPECT_EQ(ck.labels, std::vector<std::string>{"(u,v)"});

  const TensorSpace mixed = tensor_space(free_space("a", 1, {"u"}), const_space("m", {"v"}));
  EXPECT_FALSE(mixed.fully_closed());
  EXPECT_THROW(mixed.closed_space(), validation_error);
}

TEST(TensorSpace, ClosedFormBijectionIsNatural) {
  Rng rng(21);
  const RandomProfile p;
  for (int i = 0; i < 50; ++i) {
    const auto fs = random_factors(rng, 2, p, {CellMix::FreeOnly, 2, 2});
    const TensorSpace ts = tensor_space(fs[0], fs[1]);
    const TensorClass c = canonicalize(random_raw_triple(rng, fs, p));
    const auto x = to_closed_form(ts, c);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(from_closed_form(ts, *x), c);
    const PLMap w = random_map_to(rng, c.length, p);
    EXPECT_EQ(to_closed_form(ts, restrict_class(c, w)), restrict(*x, w));
  }
}

TEST(ColimitTensor, FrozenCardinalities) {
  const auto w1 = colimit_tensor_check(free_space("a", 1, {"a"}), free_space("b", 1, {"b"}));
  EXPECT_TRUE(w1.bijective);
  ASSERT_EQ(w1.tensor_points.size(), 1u);
  EXPECT_EQ(w1.tensor_points[0].label, "(a,b)");

  const auto w2 = colimit_tensor_check(const_space("k", {"a", "b"}), const_space("m", {"c"}));
  EXPECT_TRUE(w2.bijective);
  EXPECT_EQ(w2.tensor_points.size(), 2u);
}

TEST(ColimitTensor, MixedClassifierCompatibility) {
  Rng rng(34);
  const RandomProfile p;
  const PSpacePtr d = free_space("a", 2, {"u", "v"});
  const PSpacePtr e = const_space("k", {"x", "y"});
  std::vector<RawTriple> samples;
  for (int i = 0; i < 20; ++i) samples.push_back(random_raw_triple(rng, {d, e}, p));
  const auto w = colimit_tensor_check(d, e, samples);
  EXPECT_TRUE(w.bijective);
  EXPECT_TRUE(w.compatible);
  EXPECT_EQ(w.sampled, 20u);
}

TEST(ApplyTensorMorphism, FreePairPullsBackAlongTensor) {
  const PSpacePtr d = free_space("a", 1, {"u"});
  const PSpacePtr f = free_space("w", 2, {"w"});
  const PLMap y = pl({{0, 0}, {1, q(1, 2)}, {2, 2}});
  const TensorMorphism m = TensorMorphism::make(d, d, f, {{{{"a", "u"}, {"a", "u"}}, Element::free("w", y, "w")}});
  const PLMap phi1 = pl({{0, 0}, {2, q(1, 2)}, {3, 1}});
  const PLMap phi2 = pl({{0, 0}, {1, 1}});
  const TensorClass c = canonicalize(RawTriple{{d, d}, identity(Length(4)),
                                               {Element::free("a", phi1, "u"), Element::free("a", phi2, "u")}});
  EXPECT_EQ(apply(m, c), restrict(Element::free("w", y, "w"), tensor_map(phi1, phi2)));
}
