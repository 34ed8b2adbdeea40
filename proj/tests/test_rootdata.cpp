#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/errors.hpp"
#include "spochar/rootdata.hpp"

using namespace spochar;

namespace {

Weight W(const Algebra &a, const std::string &s) { return Weight::parse(a, s); }

bool contains(const std::vector<Root> &roots, const Weight &w)
{
  for (const auto &r : roots)
    if (r.weight == w)
      return true;
  return false;
}

} // namespace

TEST_CASE("bilinear form")
{
  Algebra a(1, 3);
  CHECK(bilinear_form(Weight::delta(a, 1), Weight::delta(a, 1)) == 1);
  CHECK(bilinear_form(Weight::epsilon(a, 1), Weight::epsilon(a, 1)) == -1);
  Weight iso = Weight::delta(a, 1) + Weight::epsilon(a, 1);
  CHECK(bilinear_form(iso, iso) == 0);
}

TEST_CASE("positive roots of spo(2|3)")
{
  Algebra a(1, 3);
  RootSystem rs = positive_roots(a);
  CHECK(rs.even_positive.size() == 2);
  CHECK(contains(rs.even_positive, W(a, "2d1")));
  CHECK(contains(rs.even_positive, W(a, "1e1")));
  CHECK(rs.odd_positive.size() == 3);
  CHECK(contains(rs.odd_positive, W(a, "1d1")));
  CHECK(rs.isotropic_positive.size() == 2);
  CHECK(contains(rs.isotropic_positive, W(a, "1d1-1e1")));
  CHECK(contains(rs.isotropic_positive, W(a, "1d1+1e1")));
}

TEST_CASE("positive roots of spo(2|4)")
{
  Algebra a(1, 4);
  RootSystem rs = positive_roots(a);
  CHECK(rs.even_positive.size() == 3);
  CHECK(contains(rs.even_positive, W(a, "1e1-1e2")));
  CHECK(contains(rs.even_positive, W(a, "1e1+1e2")));
  CHECK(rs.isotropic_positive.size() == 4);
  CHECK(rs.odd_positive.size() == 4);
  for (const auto &r : rs.isotropic_positive)
    CHECK(bilinear_form(r.weight, r.weight) == 0);
}

TEST_CASE("rho")
{
  Algebra a(1, 3);
  CHECK(rho(a) == W(a, "-1/2d1+1/2e1"));
  CHECK(rho0(a) == W(a, "1d1+1/2e1"));
  Algebra b(1, 4);
  CHECK(rho(b) == W(b, "-1d1+1e1"));
  for (auto alg : {Algebra(1, 3), Algebra(2, 3), Algebra(2, 4), Algebra(3, 5)})
    CHECK(rho(alg) == rho_closed_form(alg));
}

TEST_CASE("dominance")
{
  Algebra a(1, 4);
  CHECK_FALSE(is_dominant(a, W(a, "1d1+1e1+1e2")));
  CHECK(is_dominant(a, W(a, "2d1+1e1+1e2")));
  CHECK(is_dominant(a, Weight::zero(a)));
}

TEST_CASE("sharp")
{
  Algebra a(1, 5);
  CHECK(sharp(Partition({2, 1, 1}), a) == W(a, "2d1+2e1"));
  CHECK(sharp(Partition(), a) == Weight::zero(a));
  Algebra b(1, 3);
  for (int k = 0; k < 6; ++k)
    CHECK(sharp(Partition(k ? std::vector<int>{k} : std::vector<int>{}), b) == Weight::delta(b, 1).scaled(k));
}

TEST_CASE("sharp is a bijection onto dominant weights")
{
  for (auto alg : {Algebra(1, 3), Algebra(2, 3), Algebra(1, 5)})
    for (int k = 0; k <= 8; ++k)
      for (const auto &p : partitions_of(k)) {
        if (p[alg.n() + 1] > alg.m())
          continue;
        Weight w = sharp(p, alg);
        CHECK(is_dominant(alg, w));
        CHECK(sharp_inverse(w, alg) == p);
      }
}

TEST_CASE("Weyl group")
{
  CHECK(weyl_group(Algebra(1, 3)).size() == 4);
  CHECK(weyl_group(Algebra(2, 3)).size() == 16);
  CHECK(WeylElement::identity(Algebra(2, 3)).sign() == 1);
  Algebra a(2, 4);
  RootSystem rs = positive_roots(a);
  for (const auto &w : weyl_group(a))
    for (const auto &r : rs.all_positive()) {
      Weight img = w.apply(r.weight);
      CHECK(bilinear_form(img, img) == bilinear_form(r.weight, r.weight));
      CHECK((contains(rs.all_positive(), img) || contains(rs.all_positive(), -img)));
    }
}

TEST_CASE("parsing")
{
  Algebra a = Algebra::parse("4|3");
  CHECK(a.n() == 2);
  CHECK(a.m() == 1);
  CHECK(a.odd());
  CHECK(a.spec() == "4|3");
  CHECK_THROWS_AS(Algebra::parse("3|3"), InvalidInput);
  CHECK_THROWS_AS(Weight::parse(a, "2x1"), InvalidInput);
  Weight w = W(a, "2d1+1d2|1e1");
  CHECK(Weight::parse(a, w.to_string()) == w);
  CHECK(w.bar_notation() == "(2,1|1)");
  CHECK(Partition::parse("2,1,1").to_string() == "2,1,1");
  CHECK_THROWS_AS(Partition::parse("1,2"), InvalidInput);
}
