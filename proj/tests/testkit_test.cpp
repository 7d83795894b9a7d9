#include <gtest/gtest.h>

#include "lieq/capability.hpp"
#include "lieq/catalog.hpp"
#include "lieq/qtensor.hpp"
#include "lieq/testkit.hpp"

using namespace lieq;
using namespace lieq::testkit;

namespace {

Vec gamma_closed_form(const std::vector<long>& orders, long ring) {
  Vec d;
  for (long o : orders) d.push_back(o);
  return gamma(FpModule::diagonal(d), ring).invariant_factors();
}

}  // namespace

TEST(Enumeration, MixedRadixIsBijective) {
  const FiniteEnumeration E({2, 3, 4});
  EXPECT_EQ(E.size(), 24u);
  for (std::size_t i = 0; i < E.size(); ++i) EXPECT_EQ(E.index(E.element(i)), i);
  EXPECT_THROW(FiniteEnumeration::of({0}), TooLarge);
}

TEST(Quotient, Examples) {
  EXPECT_EQ(brute_module_quotient({2, 4}, {}), (Vec{2, 4}));
  EXPECT_EQ(brute_module_quotient({4}, {{2}}), (Vec{2}));
  EXPECT_EQ(brute_module_quotient({6}, {{3}}), (Vec{3}));
  EXPECT_EQ(brute_module_quotient({4, 4}, {{1, 1}}), (Vec{4}));
}

TEST(Product, ZModTwoAtQTwo) {
  const LieAlgebra g = catalog::abelian({2});
  EXPECT_EQ(BruteProduct(g, 2, Kind::tensor).invariant_factors(), (Vec{2, 2}));
  EXPECT_EQ(BruteProduct(g, 2, Kind::exterior).invariant_factors(), (Vec{2}));
}

TEST(Gamma, Examples) {
  EXPECT_EQ(brute_gamma({2}), (Vec{4}));
  EXPECT_EQ(brute_gamma({3}), (Vec{3}));
  EXPECT_EQ(brute_gamma({}), (Vec{}));
}

TEST(Gamma, ClosedFormAgreesUpToOrderSixteen) {
  for (const auto& A : finite_abelian_groups(16)) {
    EXPECT_EQ(brute_gamma(A), gamma_closed_form(A, 0)) << A.size();
    EXPECT_EQ(brute_gamma(A, 2), gamma_closed_form(A, 2));
  }
}

TEST(Bilinear, AbelianSquaresAgree) {
  for (const auto& A : finite_abelian_groups(16)) {
    if (A.empty()) continue;
    Vec d;
    for (long o : A) d.push_back(o);
    const FpModule M = FpModule::diagonal(d);
    EXPECT_EQ(brute_bilinear_square(A, false), tensor_square_ab(M).module.invariant_factors());
    EXPECT_EQ(brute_bilinear_square(A, true), exterior_square_ab(M).module.invariant_factors());
  }
}

TEST(Center, Examples) {
  const LieAlgebra zero = catalog::abelian({}, 0, "zero");
  EXPECT_EQ(brute_center(zero, 2, CenterKind::exterior).size(), 1u);
  const LieAlgebra g = catalog::abelian({2});
  EXPECT_EQ(brute_center(g, 2, CenterKind::exterior), (std::vector<Small>{{0}}));
  EXPECT_EQ(brute_center(g, 2, CenterKind::ellis_exterior).size(), 2u);
}

TEST(Center, MatchesThePipelineOnSmallAlgebras) {
  for (long p : {2, 3})
    for (const LieAlgebra& g : small_algebras(p))
      for (long q : {0, 2, 3}) {
        const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
        const std::pair<CenterKind, Submodule> cases[] = {
            {CenterKind::tensor, product_center(T, true)},
            {CenterKind::exterior, product_center(E, true)},
            {CenterKind::ellis_tensor, product_center(T, false)},
            {CenterKind::ellis_exterior, product_center(E, false)}};
        for (const auto& [kind, sub] : cases) {
          const auto brute = brute_center(g, q, kind);
          mpz_class order = 1;
          for (const auto& f : sub.invariant_factors()) order *= f;
          EXPECT_EQ(mpz_class(static_cast<unsigned long>(brute.size())), order) << g.name() << " q=" << q;
          for (const auto& x : brute) {
            Vec v;
            for (long c : x) v.push_back(c);
            EXPECT_TRUE(sub.contains(v)) << g.name();
          }
        }
      }
}

TEST(Oracle, PipelineMatchesEnumeration) {
  for (long p : {2, 3})
    for (const LieAlgebra& g : small_algebras(p))
      for (long q = 0; q <= 4; ++q) {
        EXPECT_EQ(BruteProduct(g, q, Kind::tensor).invariant_factors(),
                  q_tensor_square(g, q).module().invariant_factors())
            << g.name() << " q=" << q;
        EXPECT_EQ(BruteProduct(g, q, Kind::exterior).invariant_factors(),
                  q_exterior_square(g, q).module().invariant_factors())
            << g.name() << " q=" << q;
      }
}

TEST(Oracle, CatalogEntriesThatFit) {
  for (const char* name : {"Z/2", "Z/6", "(Z/2)^2", "(Z/3)^2", "heisenberg(Z/2)"})
    for (long q : {0, 2, 3}) {
      const LieAlgebra g = *catalog::find(name);
      EXPECT_EQ(BruteProduct(g, q, Kind::tensor).invariant_factors(),
                q_tensor_square(g, q).module().invariant_factors())
          << name << " q=" << q;
      EXPECT_EQ(BruteProduct(g, q, Kind::exterior).invariant_factors(),
                q_exterior_square(g, q).module().invariant_factors())
          << name << " q=" << q;
    }
}

TEST(Oracle, SmallAlgebrasAreComplete) {
  EXPECT_EQ(small_algebras(2).size(), 6u);
  EXPECT_EQ(small_algebras(3).size(), 11u);
  for (const auto& g : small_algebras(3)) EXPECT_TRUE(g.validate().ok());
}
