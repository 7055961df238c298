#include <gtest/gtest.h>

#include "support.hpp"

using namespace moorecat;
using mc_test::pl;
using mc_test::q;

namespace {

PSpacePtr free1(const std::string& label = "u") { return make_space({Cell::free("c1", Length(1), {label})}); }

}  // namespace

TEST(Space, RejectsMalformedCells) {
  EXPECT_THROW(make_space({}), validation_error);
  EXPECT_THROW(Cell::free("a", Length(1), {}), validation_error);
  EXPECT_THROW(Cell::constant("a", {"x", "x"}), validation_error);
  EXPECT_THROW(make_space({Cell::constant("a", {"x"}), Cell::constant("a", {"y"})}), validation_error);
}

TEST(Restrict, IdentityActsTrivially) {
  const Element x = Element::free("c1", pl({{0, 0}, {1, q(1, 3)}, {2, 1}}), "u");
  EXPECT_EQ(restrict(x, identity(Length(2))), x);
}

TEST(Restrict, FreeCellByMu) {
  const Element x = Element::free("c1", identity(Length(1)), "u");
  const Element y = restrict(x, mu(Length(2)));
  EXPECT_EQ(y.length, Length(2));
  EXPECT_EQ(*y.map, mu(Length(2)));
}

TEST(Restrict, ConstCellChangesOnlyLength) {
  const Element x = Element::constant("k", Length(3), "a");
  const Element y = restrict(x, pl({{0, 0}, {1, 2}, {5, 3}}));
  EXPECT_EQ(y.label, "a");
  EXPECT_EQ(y.cell, "k");
  EXPECT_EQ(y.length, Length(5));
  EXPECT_FALSE(y.map.has_value());
}

TEST(Restrict, LengthMismatch) {
  EXPECT_THROW(restrict(Element::constant("k", Length(3), "a"), identity(Length(2))), action_error);
}

TEST(Restrict, ContravariantActionLaw) {
  const Element x = Element::free("c1", pl({{0, 0}, {1, q(1, 4)}, {2, 1}}), "u");
  const PLMap w = pl({{0, 0}, {q(1, 2), q(3, 2)}, {3, 2}});
  const PLMap w2 = pl({{0, 0}, {1, 2}, {2, 3}});
  EXPECT_EQ(restrict(restrict(x, w), w2), restrict(x, compose(w2, w)));
}

TEST(Apply, IdentityMorphism) {
  const PSpacePtr d = make_space({Cell::free("c1", Length(2), {"a", "b"}), Cell::constant("k", {"z"})});
  const GenMorphism id = GenMorphism::identity(d);
  const Element x = Element::free("c1", pl({{0, 0}, {1, q(1, 2)}, {3, 2}}), "b");
  EXPECT_EQ(apply(id, x), x);
  const Element z = Element::constant("k", Length(7), "z");
  EXPECT_EQ(apply(id, z), z);
}

TEST(Apply, FreeGeneratorPullsBack) {
  const PSpacePtr d = free1();
  const PSpacePtr f = make_space({Cell::free("w", Length(2), {"w"})});
  const PLMap psi = pl({{0, 0}, {q(1, 2), q(3, 2)}, {1, 2}});
  const GenMorphism m = GenMorphism::make(d, f, {{{"c1", "u"}, Element::free("w", psi, "w")}});
  const PLMap phi = pl({{0, 0}, {2, q(1, 3)}, {3, 1}});
  const Element out = apply(m, Element::free("c1", phi, "u"));
  EXPECT_EQ(out.length, Length(3));
  EXPECT_EQ(out.label, "w");
  EXPECT_EQ(*out.map, compose(phi, psi));
}

TEST(Apply, WrongSource) {
  const GenMorphism id = GenMorphism::identity(free1());
  EXPECT_THROW(apply(id, Element::constant("nope", Length(1), "u")), morphism_error);
}

TEST(Apply, ConstToFreeIsRejected) {
  const PSpacePtr d = make_space({Cell::constant("k", {"a"})});
  EXPECT_THROW(GenMorphism::make(d, free1(), {{{"k", "a"}, Element::free("c1", identity(Length(1)), "u")}}),
               morphism_error);
}

TEST(Apply, NaturalitySquare) {
  Rng rng(3);
  const RandomProfile p;
  for (int i = 0; i < 100; ++i) {
    const PSpacePtr d = random_space(rng, p);
    const PSpacePtr f = random_target_space(rng, p);
    const GenMorphism m = random_gen_morphism(rng, d, f, p);
    const Element x = random_element(rng, *d, p);
    const PLMap w = random_map_to(rng, x.length, p);
    EXPECT_EQ(apply(m, restrict(x, w)), restrict(apply(m, x), w));
  }
}

TEST(Colimit, LabelsPerCell) {
  const PSpacePtr d = make_space({Cell::free("c", Length(1), {"a", "b"})});
  const Colimit c = colimit(d);
  ASSERT_EQ(c.points.size(), 2u);
  EXPECT_EQ(c.classify(Element::free("c", pl({{0, 0}, {1, q(1, 5)}, {4, 1}}), "a")), (ColimitPoint{"c", "a"}));

  EXPECT_EQ(colimit(make_space({Cell::constant("k", {"c"})})).points.size(), 1u);
  const PSpacePtr two = make_space({Cell::free("c", Length(1), {"a", "b"}), Cell::constant("k", {"c"})});
  EXPECT_EQ(colimit(two).points.size(), 3u);
}

TEST(Curry, CanonicalIsoUnfolds) {
  const Length a(2), b(3);
  const PSpacePtr d = make_space({Cell::free("d", a, {"u"})});
  const PSpacePtr e = make_space({Cell::free("e", b, {"v"})});
  const PSpacePtr f = make_space({Cell::free("f", a + b, {"w"})});
  const TensorMorphism m = TensorMorphism::make(d, e, f, {{{{"d", "u"}, {"e", "v"}}, Element::free("f", identity(a + b), "w")}});

  const Transpose t = curry_left(m);
  const GenMorphism& g = t.at({"d", "u"});
  ASSERT_TRUE(g.shift.has_value());
  EXPECT_EQ(g.shift->side, ShiftSide::Left);
  EXPECT_EQ(g.shift->amount, a);
  EXPECT_EQ(std::get<Element>(g.assignment.at({"e", "v"})), Element::free("f", identity(a + b), "w"));

  const PLMap phi = pl({{0, 0}, {1, 2}, {4, 3}});
  const Element out = apply(g, Element::free("e", phi, "v"));
  EXPECT_EQ(out.length, Length(6));
  EXPECT_EQ(*out.map, shift_left(a, phi));

  EXPECT_EQ(uncurry_left(d, e, f, t), m);
  EXPECT_EQ(uncurry_right(d, e, f, curry_right(m)), m);
}

TEST(Curry, ConstGeneratorsHaveNoTranspose) {
  const PSpacePtr d = make_space({Cell::constant("k", {"a"})});
  const PSpacePtr f = make_space({Cell::constant("z", {"z"})});
  const TensorMorphism m = TensorMorphism::make(d, free1(), f, {{{{"k", "a"}, {"c1", "u"}}, ConstTarget{"z", "z"}}});
  EXPECT_THROW(curry_left(m), transpose_error);
  EXPECT_NO_THROW(curry_right(m));
  EXPECT_EQ(uncurry_right(d, free1(), f, curry_right(m)), m);
}
