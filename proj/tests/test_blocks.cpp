#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spochar/blocks.hpp"
#include "spochar/charformulas.hpp"

using namespace spochar;

namespace {

const Algebra A(1, 3);

Weight W(int a, int b) { return Weight::delta(A, 1).scaled(a) + Weight::epsilon(A, 1).scaled(b); }

bool has(const VirtualDecomposition &d, int a, int b, long mult) { return d.multiplicity(W(a, b)) == mult; }

} // namespace

TEST_CASE("typicality")
{
  for (int l = 1; l <= 5; ++l)
    CHECK_FALSE(is_typical(A, W(l, l - 1)));
  CHECK_FALSE(is_typical(A, W(0, 0)));
  CHECK(is_typical(A, W(2, 0)));
  CHECK(is_typical(A, W(3, 1)));
}

TEST_CASE("linkage")
{
  CHECK(same_central_character(A, W(2, 0), W(2, 0)).linked);
  CHECK(same_central_character(A, W(1, 0), W(0, 0)).linked);
  for (int l = 2; l <= 5; ++l)
    CHECK(same_central_character(A, W(l + 1, l), W(l, l - 1)).linked);
  CHECK_FALSE(same_central_character(A, W(2, 0), W(1, 0)).linked);
}

TEST_CASE("irreducible dimensions")
{
  CHECK(irr_char_spo23(1, 0).evaluate_at_one() == 5);
  CHECK(irr_char_spo23(2, 1).evaluate_at_one() == 30);
  CHECK(irr_char_spo23(3, 2).evaluate_at_one() == 70);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      if (is_dominant(A, W(a, b)))
        CHECK(irr_char_spo23(a, b).nonnegative());
}

TEST_CASE("Kac decompositions")
{
  auto d = decompose(A, kac_character(A, W(2, 1)), Basis::Irreducible);
  CHECK(d.complete());
  CHECK(d.factors.size() == 3);
  CHECK(has(d, 2, 1, 1));
  CHECK(has(d, 1, 0, 1));
  CHECK(has(d, 0, 0, 1));
  auto e = decompose(A, kac_character(A, W(1, 0)), Basis::Irreducible);
  CHECK(e.factors.size() == 2);
  CHECK(has(e, 1, 0, 1));
  CHECK(has(e, 0, 0, -1));
  CHECK(reconstruct(A, d) == kac_character(A, W(2, 1)));
  CHECK(block_violations(A, d).empty());
}

TEST_CASE("tensor products with the natural module")
{
  auto d = decompose(A, irr_char_spo23(1, 0) * irr_char_spo23(1, 0), Basis::Irreducible);
  CHECK(d.complete());
  CHECK(d.factors.size() == 3);
  CHECK(has(d, 2, 0, 1));
  CHECK(has(d, 1, 1, 1));
  CHECK(has(d, 0, 0, 1));
  TensorRow r = tensor_row(2, 1);
  CHECK(r.matches);
  CHECK(as_weight_mults(r.computed) == std::vector<WeightMult>{{3, 1, 1}, {2, 2, 1}, {2, 1, 1}});
}

TEST_CASE("the (3|1) row differs from the printed rule")
{
  TensorRow r = tensor_row(3, 1);
  CHECK(r.computed.complete());
  CHECK_FALSE(r.matches);
  CHECK(reconstruct(A, r.computed).evaluate_at_one() == 300);
}
