#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/errors.hpp"
#include "spochar/superspace.hpp"

using namespace spochar;

TEST_CASE("supercommutative multiplication")
{
  SuperSpace V(Algebra(2, 3));
  SuperElement a = V.word({V.xi(1), V.xi(2)});
  SuperElement b = V.word({V.xi(2), V.xi(1)});
  CHECK(a == scaled(b, -1));
  CHECK(V.word({V.xi(1), V.xi(1)}).empty());
  CHECK(V.word({V.x(1), V.xbar(1)}) == V.word({V.xbar(1), V.x(1)}));
  CHECK(V.derivative(V.xi(2), a) == scaled(V.generator(V.xi(1)), -1));
}

TEST_CASE("dimensions")
{
  SuperSpace V(Algebra(1, 5));
  for (int k = 0; k <= 5; ++k)
    CHECK(V.dimension(k) == V.monomials(k).size());
  CHECK(V.dimension(3) == 70);
}

TEST_CASE("root vectors")
{
  SuperSpace V(Algebra(1, 3));
  CHECK(V.even_dimension() == 6);
  CHECK(V.odd_dimension() == 6);
  SuperSpace U(Algebra(2, 4));
  CHECK(U.even_dimension() == 16);
  CHECK(U.odd_dimension() == 16);
  for (const auto &r : U.roots())
    for (const auto &m : U.monomials(3)) {
      SuperElement f;
      add_term(f, m, 1);
      CHECK(U.laplacian(U.apply(U.root_vector(r), f)) == U.apply(U.root_vector(r), U.laplacian(f)));
    }
}

TEST_CASE("the Laplacian is onto")
{
  for (int m = 1; m <= 2; ++m)
    for (int k = 2; k <= 5; ++k) {
      SuperSpace V(Algebra(1, 2 * m + 1));
      auto basis = kernel_basis(V, k);
      CHECK(basis.size() == V.dimension(k) - V.dimension(k - 2));
    }
}

TEST_CASE("kernel sizes")
{
  CHECK(kernel_basis(SuperSpace(Algebra(1, 3)), 1).size() == 5);
  CHECK(kernel_basis(SuperSpace(Algebra(1, 3)), 2).size() == 12);
  CHECK(kernel_basis(SuperSpace(Algebra(1, 5)), 3).size() == 63);
}

TEST_CASE("single singular vector for spo(2|5)")
{
  SuperSpace V(Algebra(1, 5));
  for (int k = 2; k <= 4; ++k) {
    auto rep = irreducibility_report(V, k);
    REQUIRE(rep.singular.size() == 1);
    SuperElement expect = V.word({V.xi(1)});
    for (int i = 1; i < k; ++i)
      expect = V.left_multiply(V.x(1), expect);
    CHECK(rep.singular[0].vector == expect);
    CHECK(rep.structure == KernelStructure::Irreducible);
  }
}

TEST_CASE("invariant in degree two of spo(4|4)")
{
  SuperSpace V(Algebra(2, 4));
  auto rep = irreducibility_report(V, 2);
  CHECK(rep.structure == KernelStructure::TrivialSubmodule);
  REQUIRE(rep.singular.size() == 2);
  bool found = false;
  for (const auto &s : rep.singular)
    found = found || s.invariant;
  CHECK(found);
  CHECK(irreducibility_report(V, 3).structure == KernelStructure::Irreducible);
}

TEST_CASE("irreducible kernels")
{
  for (int k = 1; k <= 2; ++k)
    CHECK(irreducibility_report(SuperSpace(Algebra(3, 3)), k).structure == KernelStructure::Irreducible);
}

TEST_CASE("tensor with the natural module")
{
  auto t = tensor_with_natural(SuperSpace(Algebra(1, 3)), 2);
  CHECK(t.dim == 60);
  CHECK_FALSE(t.direct_sum);
  CHECK(tensor_with_natural(SuperSpace(Algebra(1, 5)), 2).direct_sum);
}

TEST_CASE("dimension guard")
{
  CHECK_THROWS_AS(kernel_basis(SuperSpace(Algebra(4, 9)), 6, 1000), InvalidInput);
}
