#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/blocks.hpp"
#include "spochar/charformulas.hpp"
#include "spochar/errors.hpp"
#include "spochar/json_io.hpp"

using namespace spochar;

TEST_CASE("Laurent polynomial round trip")
{
  Algebra a(1, 3);
  LaurentPoly k = kac_character(a, Weight::parse(a, "2d1+1e1"));
  json j = to_json(k);
  CHECK(j["n"] == 1);
  CHECK(j["m"] == 1);
  CHECK(j["terms"][0]["coef"].is_string());
  CHECK(laurent_from_json(j) == k);
  CHECK(laurent_from_json(json::parse(j.dump())) == k);
}

TEST_CASE("terms are sorted")
{
  Algebra a(2, 4);
  json j = to_json(kac_character(a, Weight::zero(a)));
  for (std::size_t i = 1; i < j["terms"].size(); ++i) {
    auto e0 = j["terms"][i - 1]["exp"].get<std::vector<int>>();
    auto e1 = j["terms"][i]["exp"].get<std::vector<int>>();
    CHECK(grlex_compare(ExponentVector::from_doubled(e0), ExponentVector::from_doubled(e1)) < 0);
  }
}

TEST_CASE("big coefficients")
{
  Lattice L{1, 1};
  mpz_class big("123456789012345678901234567890");
  LaurentPoly p = LaurentPoly::monomial(L, ExponentVector{2, -1}, big);
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(integer_from_json(integer_json(big)) == big);
  CHECK(integer_from_json(json(-4)) == -4);
}

TEST_CASE("weights and decompositions")
{
  Algebra a(1, 3);
  Weight w = Weight::parse(a, "3d1+2e1");
  CHECK(weight_from_json(a, to_json(w)) == w);
  VirtualDecomposition d = decompose(a, kac_character(a, Weight::parse(a, "1d1")), Basis::Irreducible);
  VirtualDecomposition e = decomposition_from_json(a, json::parse(to_json(d).dump()));
  CHECK(e.factors == d.factors);
  CHECK(e.remainder == d.remainder);
  CHECK(to_json(d)["remainder_zero"] == true);
}

TEST_CASE("malformed input")
{
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"n":1})")), InvalidInput);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"n":1,"m":1,"terms":[{"exp":[1],"coef":"2"}]})")), InvalidInput);
}
