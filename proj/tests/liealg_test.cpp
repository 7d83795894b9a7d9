#include <gtest/gtest.h>

#include <random>

#include "lieq/catalog.hpp"
#include "lieq/liealg.hpp"

using namespace lieq;

namespace {

std::vector<Vec> table(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& b) {
  std::vector<Vec> t(n * n, Vec(n, Int(0)));
  for (const auto& [i, j, v] : b) t[i * n + j] = v;
  return t;
}

Vec random_element(std::mt19937& rng, const LieAlgebra& g) {
  Vec x(g.dim());
  for (auto& c : x) c = static_cast<int>(rng() % 11) - 5;
  return x;
}

bool has_issue(const ValidationReport& r, const std::string& kind) {
  for (const auto& i : r.issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST(LieAlgebra, CatalogEntriesValidate) {
  for (const auto& e : catalog::entries()) {
    const LieAlgebra g = e.make();
    EXPECT_TRUE(g.validate().ok()) << e.name;
  }
}

TEST(LieAlgebra, JacobiNegativeControl) {
  // [x,y] = y, [y,z] = x: the Jacobi sum of x, y, z is -x
  const LieAlgebra bad({0, 0, 0}, table(3, {{0, 1, {0, 1, 0}}, {1, 2, {1, 0, 0}}}), 0, "broken");
  const ValidationReport r = bad.validate();
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.issues[0].kind, "JacobiViolation");
  EXPECT_EQ(r.issues[0].witness, (Vec{-1, 0, 0}));
  EXPECT_THROW(LieAlgebra::from_presentation(3, {}, 0, table(3, {{0, 1, {0, 1, 0}}, {1, 2, {1, 0, 0}}}), "broken"),
               ValidationError);
}

TEST(LieAlgebra, TorsionIncompatibleBracket) {
  // x of order 2, y free, [x,y] = y would force 2y = 0
  const LieAlgebra bad({2, 0}, table(2, {{0, 1, {0, 1}}}), 0, "bad");
  EXPECT_TRUE(has_issue(bad.validate(), "TorsionIncompatible"));
  const LieAlgebra good({2, 0}, table(2, {{0, 1, {1, 0}}}), 0, "good");
  EXPECT_TRUE(good.validate().ok());
}

TEST(LieAlgebra, RelationsCombineWithTheBaseRing) {
  // over Z/6, 4x = 0 and 6x = 0 together give 2x = 0
  EXPECT_EQ(LieAlgebra::from_presentation(1, {{4}}, 6, {}, "g").orders(), (Vec{2}));
  EXPECT_EQ(LieAlgebra::from_presentation(1, {{3}}, 6, {}, "g").orders(), (Vec{3}));
  EXPECT_EQ(LieAlgebra::from_presentation(2, {}, 6, {}, "g").orders(), (Vec{6, 6}));
}

TEST(LieAlgebra, BracketsMustRespectRelations) {
  // 2x = 0 but [x,y] = y has infinite order
  EXPECT_THROW(LieAlgebra::from_presentation(2, {{2, 0}}, 0, table(2, {{0, 1, {0, 1}}}), "g"), ValidationError);
}

TEST(LieAlgebra, PresentationsAreCanonicalized) {
  // Z^2 / <(2, 4)> is Z/2 + Z with the bracket forced to zero
  const LieAlgebra g = LieAlgebra::from_presentation(2, {{2, 4}}, 0, {}, "g");
  EXPECT_EQ(g.module().invariant_factors(), (Vec{2, 0}));
  EXPECT_TRUE(g.is_abelian());
}

TEST(LieAlgebra, BracketIsAlternatingBilinearAndJacobi) {
  std::mt19937 rng(17);
  for (const LieAlgebra& g : {catalog::sl2(5), catalog::n4(0), catalog::heisenberg(2), catalog::sl2(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Vec x = random_element(rng, g), y = random_element(rng, g), z = random_element(rng, g);
      ASSERT_TRUE(g.is_zero(add(g.bracket(x, y), g.bracket(y, x))));
      ASSERT_TRUE(g.is_zero(g.bracket(x, x)));
      ASSERT_TRUE(g.equal(g.bracket(add(x, y), z), add(g.bracket(x, z), g.bracket(y, z))));
      const Vec j = add(add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))),
                        g.bracket(z, g.bracket(x, y)));
      ASSERT_TRUE(g.is_zero(j)) << g.name();
    }
  }
}

TEST(Centers, ClassicalAndQCenters) {
  const LieAlgebra h = catalog::heisenberg(0);
  const Submodule z = center(h);
  EXPECT_EQ(z.invariant_factors(), (Vec{0}));
  EXPECT_TRUE(z.contains({0, 0, 1}));
  EXPECT_FALSE(z.contains({1, 0, 0}));
  EXPECT_TRUE(center(catalog::sl2(5)).is_zero());
  EXPECT_TRUE(q_center(h, 2).is_zero());
  const LieAlgebra z2 = catalog::abelian({2});
  EXPECT_TRUE(q_center(z2, 2).is_whole());
  EXPECT_TRUE(q_center(z2, 3).is_zero());
  EXPECT_TRUE(q_center(z2, 0).is_whole());
}

TEST(Ideals, HashProductAndPerfection) {
  const LieAlgebra h = catalog::heisenberg(0);
  EXPECT_EQ(derived_subalgebra(h).submodule().invariant_factors(), (Vec{0}));
  const Ideal h2 = hash_product(h, Ideal::whole(h), 2);
  EXPECT_TRUE(h2.contains({2, 0, 0}));
  EXPECT_TRUE(h2.contains({0, 0, 1}));
  EXPECT_FALSE(h2.contains({1, 0, 0}));
  EXPECT_TRUE(is_q_perfect(catalog::sl2(5), 0));
  EXPECT_TRUE(is_q_perfect(catalog::abelian({2}), 1));
  EXPECT_FALSE(is_q_perfect(catalog::abelian({2}), 2));
  EXPECT_FALSE(is_q_perfect(h, 0));
}

TEST(Ideals, RejectsNonIdeals) {
  const LieAlgebra h = catalog::heisenberg(0);
  EXPECT_THROW(Ideal(h, {{1, 0, 0}}), NotAnIdeal);
  EXPECT_NO_THROW(Ideal(h, {{0, 0, 1}}));
  const Ideal i(h, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(i.size(), 2u);
}

TEST(Quotients, HeisenbergModCenterIsAbelianRankTwo) {
  const LieAlgebra h = catalog::heisenberg(0);
  const QuotientAlgebra q = quotient_algebra(h, Ideal(h, center(h).generators()));
  EXPECT_EQ(q.algebra.module().invariant_factors(), (Vec{0, 0}));
  EXPECT_TRUE(q.algebra.is_abelian());
  EXPECT_TRUE(q.projection.validate().ok());
  EXPECT_TRUE(q.projection.hom().is_surjective());
  EXPECT_EQ(q.projection.kernel(), center(h));
}

TEST(Homomorphisms, BracketPreservationIsChecked) {
  const LieAlgebra h = catalog::heisenberg(0);
  const LieAlgebra a = catalog::abelian({0, 0, 0});
  EXPECT_TRUE(LieHom(h, h, IntMatrix::identity(3)).validate().ok());
  const ValidationReport r = LieHom(h, a, IntMatrix::identity(3)).validate();
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].kind, "BracketNotPreserved");
}

TEST(Derivations, RanksOfKnownExamples) {
  EXPECT_EQ(derivations(catalog::heisenberg(2)).algebra.module().invariant_factors(), (Vec(6, Int(2))));
  EXPECT_EQ(derivations(catalog::abelian({0})).algebra.module().invariant_factors(), (Vec{0}));
  const LieAlgebra h = catalog::heisenberg(0);
  const DerivationAlgebra D = derivations(h);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(D.contains(inner_derivation(h, h.basis(i))));
  EXPECT_TRUE(D.algebra.validate().ok());
}

TEST(Derivations, InnerQDerivationsSequence) {
  for (const LieAlgebra& m : {catalog::heisenberg(0), catalog::sl2(5), catalog::abelian({2, 4})})
    for (int q : {0, 2}) {
      const InnerDerivations d = inner_q_derivations(m, q);
      EXPECT_TRUE(d.exact) << m.name() << " q=" << q;
      EXPECT_TRUE(validate_q_crossed(d.crossed).ok()) << m.name() << " q=" << q;
    }
  const InnerDerivations d = inner_q_derivations(catalog::heisenberg(0), 0);
  EXPECT_EQ(d.algebra.module().invariant_factors(), (Vec{0, 0}));
}

TEST(CrossedModules, ValidatorCatchesABrokenAction) {
  const LieAlgebra h = catalog::heisenberg(0);
  const LieHom id(h, h, IntMatrix::identity(3));
  std::vector<Vec> good(9), bad(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      good[i * 3 + j] = h.bracket_basis(i, j);
      bad[i * 3 + j] = zero_vec(3);
    }
  EXPECT_TRUE(validate_q_crossed({id, LieAction(h, h, good), 0}).ok());
  EXPECT_FALSE(validate_q_crossed({id, LieAction(h, h, bad), 0}).ok());
}

TEST(SpecExamples, JacobiFailureOfARankThreeTable) {
  // [e1,e2] = e3, [e1,e3] = e1
  const LieAlgebra bad({0, 0, 0}, table(3, {{0, 1, {0, 0, 1}}, {0, 2, {1, 0, 0}}}), 0, "bad");
  EXPECT_TRUE(has_issue(bad.validate(), "JacobiViolation"));
}

TEST(SpecExamples, CentersIdealsAndPerfection) {
  const LieAlgebra h2 = catalog::heisenberg(2);
  const Submodule z = q_center(h2, 2);
  EXPECT_EQ(z.invariant_factors(), (Vec{2}));
  EXPECT_TRUE(z.contains({0, 0, 1}));
  const LieAlgebra a = catalog::abelian({0, 2});
  EXPECT_TRUE(q_center(a, 0).is_whole());
  EXPECT_TRUE(hash_product(a, Ideal::whole(a), 0).is_zero());
  const LieAlgebra Z = catalog::abelian({0});
  const Ideal twoZ = hash_product(Z, Ideal::whole(Z), 2);
  EXPECT_TRUE(twoZ.contains({2}));
  EXPECT_FALSE(twoZ.contains({1}));
  EXPECT_TRUE(is_q_perfect(catalog::abelian({3}), 2));
  EXPECT_FALSE(is_q_perfect(a, 0));
  const LieAlgebra s = catalog::sl2(5);
  EXPECT_TRUE(quotient_algebra(s, Ideal::whole(s)).algebra.module().is_trivial());
  EXPECT_EQ(quotient_algebra(s, Ideal::zero(s)).algebra.module().invariant_factors(), s.module().invariant_factors());
}

TEST(SpecExamples, DerivationsAgainstEnumeration) {
  EXPECT_EQ(derivations(catalog::abelian({2})).algebra.module().invariant_factors(), (Vec{2}));
  // every 3x3 matrix over Z/2, rows = images of basis vectors
  const LieAlgebra h = catalog::heisenberg(2);
  std::size_t count = 0;
  for (unsigned bits = 0; bits < 512; ++bits) {
    IntMatrix D(3, 3);
    for (std::size_t k = 0; k < 9; ++k) D(k / 3, k % 3) = (bits >> k) & 1u;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i)
      for (std::size_t j = 0; j < 3 && ok; ++j) {
        const Vec lhs = h.bracket_basis(i, j) * D;
        const Vec rhs = add(h.bracket(D.row(i), h.basis(j)), h.bracket(h.basis(i), D.row(j)));
        ok = h.equal(lhs, rhs);
      }
    count += ok;
  }
  const auto order = derivations(h).algebra.module().order();
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(Int(static_cast<unsigned long>(count)), *order);
}

TEST(SpecExamples, InnerQDerivations) {
  EXPECT_TRUE(inner_q_derivations(catalog::abelian({0, 0}), 0).algebra.module().is_trivial());
  EXPECT_EQ(inner_q_derivations(catalog::abelian({0}), 2).algebra.module().invariant_factors(), (Vec{0}));
}

TEST(SpecExamples, CrossedModuleConditionThree) {
  // d: Z/2 -> 0 with trivial action fails (iii) at q = 3 since 3 * 1 != 0 in Z/2
  const LieAlgebra z2 = catalog::abelian({2});
  const LieAlgebra zero = catalog::abelian({});
  const QCrossedModule xm{LieHom(z2, zero, IntMatrix(1, 0)), LieAction(zero, z2, {}), 3};
  const ValidationReport r = validate_q_crossed(xm);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].kind, "ConditionFailed(iii)");
  EXPECT_TRUE(validate_q_crossed({LieHom(z2, zero, IntMatrix(1, 0)), LieAction(zero, z2, {}), 2}).ok());
}
