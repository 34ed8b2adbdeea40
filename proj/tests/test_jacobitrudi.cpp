#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/charformulas.hpp"
#include "spochar/jacobitrudi.hpp"

using namespace spochar;

TEST_CASE("power series")
{
  Algebra a(1, 3);
  auto t = PowerTable::for_algebra(a);
  CHECK(t->p(0) == LaurentPoly::constant(a.lattice(), 1));
  CHECK(t->p(-1).is_zero());
  CHECK(t->p(1).evaluate_at_one() == 5);
  CHECK(t->p(2).evaluate_at_one() == 12);
  CHECK(t->e(1) == t->p(1));
  CHECK(t->e(2).evaluate_at_one() == 13);
  CHECK(PowerTable::for_algebra(Algebra(1, 5))->e(3).evaluate_at_one() == 70);
}

TEST_CASE("p and e series are inverse")
{
  for (auto alg : {Algebra(1, 3), Algebra(2, 4)}) {
    auto t = PowerTable::for_algebra(alg);
    for (int r = 1; r <= 6; ++r) {
      LaurentPoly s(alg.lattice());
      for (int i = 0; i <= r; ++i)
        s += mpz_class(i % 2 ? -1 : 1) * t->p(r - i) * t->e(i);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("Jacobi-Trudi characters")
{
  Algebra a(1, 3);
  auto t = PowerTable::for_algebra(a);
  CHECK(jt_character(Partition({1}), a) == t->p(1));
  CHECK(jt_character_e(Partition({1}), a) == t->p(1));
  CHECK(jt_character(Partition({2, 1}), a).evaluate_at_one() == 35);
  CHECK(jt_character(Partition({1, 1}), a) == t->e(2) - t->e(0));
  CHECK(jt_character_e(Partition({1, 1}), a) == t->e(2) - t->e(0));
  Partition p32 = sharp_inverse(Weight::parse(a, "3d1+2e1"), a);
  CHECK(jt_character(p32, a).evaluate_at_one() == 101);
}

TEST_CASE("p and e forms agree")
{
  for (auto alg : {Algebra(1, 3), Algebra(2, 3)})
    for (int k = 0; k <= 5; ++k)
      for (const auto &p : partitions_of(k))
        if (p[alg.n() + 1] <= alg.m())
          CHECK(jt_character(p, alg) == jt_character_e(p, alg));
}

TEST_CASE("identity suite")
{
  for (int n = 1; n <= 2; ++n)
    for (const auto &c : identity_suite(n, 10)) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.holds);
    }
}
