#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spochar/errors.hpp"
#include "spochar/laurent.hpp"

using namespace spochar;

namespace {

const Lattice L11{1, 1};

LaurentPoly mono(std::initializer_list<int> e, long c = 1) { return LaurentPoly::monomial(L11, ExponentVector(e), c); }
LaurentPoly one() { return LaurentPoly::constant(L11, 1); }

LaurentPoly random_poly(std::mt19937 &rng)
{
  std::uniform_int_distribution<int> ex(-6, 6), co(-5, 5), len(0, 20);
  std::vector<LaurentPoly::Term> t;
  for (int i = len(rng); i > 0; --i)
    t.emplace_back(ExponentVector{2 * ex(rng), 2 * ex(rng)}, co(rng));
  return LaurentPoly::from_terms(L11, std::move(t));
}

} // namespace

TEST_CASE("addition")
{
  CHECK((mono({2, 0}) + (-mono({2, 0}))).is_zero());
  LaurentPoly a = one() + mono({0, 2});
  CHECK(a + a == LaurentPoly::constant(L11, 2) + mono({0, 2}, 2));
}

TEST_CASE("multiplication")
{
  CHECK(mono({2, 0}) * mono({-2, 0}) == one());
  LaurentPoly a = one() + mono({2, 0});
  CHECK(a * a == one() + mono({2, 0}, 2) + mono({4, 0}));
}

TEST_CASE("exact division")
{
  CHECK(exact_div(one() - mono({4, 0}), one() - mono({2, 0})) == one() + mono({2, 0}));
  CHECK_THROWS_AS(exact_div(one() + mono({2, 0}), one() - mono({2, 0})), NotDivisible);
  CHECK_THROWS(exact_div(one(), LaurentPoly(L11)));
}

TEST_CASE("evaluate at one")
{
  LaurentPoly nat = mono({2, 0}) + mono({-2, 0}) + mono({0, 2}) + one() + mono({0, -2});
  CHECK(nat.evaluate_at_one() == 5);
  CHECK(LaurentPoly(L11).evaluate_at_one() == 0);
}

TEST_CASE("half integral exponents")
{
  LaurentPoly h = mono({1, -1}) + mono({-1, 1});
  CHECK(h * h == mono({2, -2}) + LaurentPoly::constant(L11, 2) + mono({-2, 2}));
  CHECK(h.to_string().find("1/2d1") != std::string::npos);
}

TEST_CASE("rational sum telescopes")
{
  ExponentVector md{-2, 0};
  std::vector<BinomialFactor> den{{-1, md}};
  std::vector<SignedRational> terms{{1, FactoredRational(one(), den)}, {-1, FactoredRational(mono({-2, 0}), den)}};
  CHECK(rational_weyl_sum(terms) == one());
  std::vector<SignedRational> single{{1, FactoredRational(one() + mono({2, 0}), {})}};
  CHECK(rational_weyl_sum(single) == one() + mono({2, 0}));
}

TEST_CASE("ring axioms on random instances")
{
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero())
      CHECK(exact_div(a * b, b) == a);
  }
}
