#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/charformulas.hpp"
#include "spochar/errors.hpp"
#include "spochar/jacobitrudi.hpp"

using namespace spochar;

namespace {

Weight W(const Algebra &a, const std::string &s) { return Weight::parse(a, s); }

LaurentPoly euler(const Algebra &a, const std::string &par, const std::string &mod)
{
  Parabolic p = Parabolic::parse(a, par);
  return euler_character(p, levi_character(p, LeviModule::parse(a, mod)));
}

} // namespace

TEST_CASE("denominators of spo(2|3)")
{
  Algebra a(1, 3);
  Denominators d = denominators(a);
  CHECK(d.D1.evaluate_at_one() == 8);
  Lattice L = a.lattice();
  auto m = [&](std::initializer_list<int> e) { return LaurentPoly::monomial(L, ExponentVector(e)); };
  CHECK(d.D0 == (m({2, 0}) - m({-2, 0})) * (m({0, 1}) - m({0, -1})));
  for (const auto &w : weyl_group(a)) {
    CHECK(w.apply(d.D0) == w.sign() * d.D0);
    CHECK(w.apply(d.D1) == d.D1);
  }
}

TEST_CASE("Kac characters")
{
  Algebra a(1, 3);
  CHECK(kac_character(a, W(a, "1d1")).evaluate_at_one() == 4);
  CHECK(kac_character(a, Weight::zero(a)).evaluate_at_one() == -4);
  CHECK(kac_character(a, W(a, "3d1+2e1")).evaluate_at_one() == 100);
  CHECK(kac_character(a, W(a, "2d1+1e1")).evaluate_at_one() == 36);
  for (auto alg : {Algebra(1, 3), Algebra(2, 3), Algebra(1, 4)}) {
    Weight w = sharp(Partition({2, 1}), alg);
    LaurentPoly k = kac_character(alg, w);
    CHECK(k == kac_character_rational(alg, w));
    CHECK(is_weyl_invariant(alg, k));
  }
}

TEST_CASE("vdim product formula")
{
  Algebra a(1, 3);
  CHECK(vdim_formula(a, W(a, "1d1")) == 4);
  CHECK(vdim_formula(a, Weight::zero(a)) == -4);
  for (int l = 3; l <= 6; ++l) {
    Weight w = Weight::delta(a, 1).scaled(l) + Weight::epsilon(a, 1).scaled(l - 1);
    CHECK(vdim_formula(a, w) == 4 * (2 * l - 1) * (2 * l - 1));
    CHECK(vdim_formula(a, w) == kac_character(a, w).evaluate_at_one());
  }
}

TEST_CASE("Levi characters")
{
  Algebra a(1, 4);
  Parabolic p = Parabolic::parse(a, "remove=e1+e2");
  Lattice L = a.lattice();
  auto m = [&](std::initializer_list<int> e) { return LaurentPoly::monomial(L, ExponentVector(e)); };
  CHECK(levi_character(p, LeviModule::natural()).ch == m({2, 0, 0}) + m({0, 2, 0}) + m({0, 0, 2}));
  CHECK(levi_character(p, LeviModule::hook_schur(Partition({1}))).ch == levi_character(p, LeviModule::natural()).ch);
  Algebra b(1, 6);
  Parabolic q = Parabolic::parse(b, "remove=e2+e3");
  CHECK(levi_character(q, LeviModule::sym_power(2)).ch.evaluate_at_one() == 7);
}

TEST_CASE("Euler characters of gl(1|m) parabolics")
{
  Algebra a(1, 4);
  CHECK(euler(a, "remove=e1+e2", "trivial") == LaurentPoly::constant(a.lattice(), 2));
  CHECK(euler(a, "remove=e1+e2", "natural") == jt_character(Partition({1}), a));
  Algebra b(1, 6);
  CHECK(euler(b, "remove=e2+e3", "trivial") == LaurentPoly::constant(b.lattice(), 2));
  CHECK(euler(b, "remove=e2+e3", "natural") == mpz_class(2) * jt_character(Partition({1}), b));
  CHECK(euler(b, "remove=e2+e3", "sym2") == sym_power_char(b, 2));
}

TEST_CASE("Euler character of the Borel is the Kac character")
{
  Algebra a(1, 3);
  for (const char *w : {"0", "1d1", "2d1+1e1", "3d1"})
    CHECK(euler(a, "borel", "1d:" + std::string(w)) == kac_character(a, W(a, w)));
}

TEST_CASE("bad input")
{
  Algebra a(1, 3);
  CHECK_THROWS_AS(Parabolic::parse(a, "remove=d1+d2"), InvalidInput);
  CHECK_THROWS_AS(LeviModule::parse(a, "bogus"), InvalidInput);
}
