#pragma once

// Typicality, linkage, the spo(2|3) irreducible characters and
// decomposition of virtual characters.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spochar/laurent.hpp"
#include "spochar/rootdata.hpp"

namespace spochar {

bool is_typical(const Algebra &alg, const Weight &lambda);

struct Linkage {
  bool linked = false;
  // not linked within max_depth, but the search space was not exhausted
  bool inconclusive = false;
  int depth = -1; // number of isotropic shifts used when linked
  int max_depth = 0;
};

int default_linkage_depth(const Algebra &alg);

// chi_lambda == chi_mu, searched over chains of isotropic shifts
Linkage same_central_character(const Algebra &alg, const Weight &lambda, const Weight &mu,
                               std::optional<int> max_depth = std::nullopt);

// ch L(a|b) for spo(2|3); memoised
LaurentPoly irr_char_spo23(int a, int b);

enum class Basis { Irreducible, Kac };

// K(nu), or ch L(nu) where known: typical nu on any algebra, every
// dominant nu on spo(2|3).  Kac characters of different dominant weights can
// coincide up to sign (K(0|0) = -K(1|0) on spo(2|3)), so a Kac
// decomposition stops with a remainder at such weights.
LaurentPoly basis_character(const Algebra &alg, const Weight &nu, Basis basis);

struct VirtualDecomposition {
  Basis basis = Basis::Irreducible;
  // in the order peeled, i.e. descending graded-lex
  std::vector<std::pair<Weight, mpz_class>> factors;
  LaurentPoly remainder;

  bool complete() const { return remainder.is_zero(); }
  mpz_class multiplicity(const Weight &w) const;
  // "[L(2|1)] + [L(1|0)] - [L(0|0)]"
  std::string to_string() const;
};

VirtualDecomposition decompose(const Algebra &alg, const LaurentPoly &chi, Basis basis);

// sum mult * basis character + remainder
LaurentPoly reconstruct(const Algebra &alg, const VirtualDecomposition &d);

// pairs of weights in one decomposition that are not linked
std::vector<std::pair<Weight, Weight>> block_violations(const Algebra &alg, const VirtualDecomposition &d);

// ---------------------------------------------------------------------------
// L(a|b) x L(1|0) for spo(2|3)

struct WeightMult {
  int a = 0, b = 0;
  int mult = 0;
  friend bool operator==(const WeightMult &, const WeightMult &) = default;
};

struct PrintedRule {
  int family = 0;     // 1 atypical, 2 small typical, 3 (l|l), 4 (l+2|l), 5 generic
  std::vector<WeightMult> terms;
};

// the printed formula that applies to (a|b), following the family order
// 1, 2, 3, 4 (for l >= 2), 5
PrintedRule printed_tensor_rule(int a, int b);
// the (l+2|l) formula at any l >= 0, as printed
std::vector<WeightMult> printed_family4(int l);

struct TensorRow {
  int a = 0, b = 0;
  VirtualDecomposition computed;
  PrintedRule printed;
  bool matches = false;
};

TensorRow tensor_row(int a, int b);
// all dominant (a|b) with a, b <= lmax
std::vector<TensorRow> tensor_table(int lmax);

std::vector<WeightMult> as_weight_mults(const VirtualDecomposition &d);

// ---------------------------------------------------------------------------
// Euler characters from hook Schur Levi modules

struct ConjectureRow {
  Partition lambda;
  Weight weight;
  LaurentPoly euler;
  // leading term of the Euler character sits at the weight with a nonzero
  // coefficient
  bool leading_at_weight = false;
  std::optional<VirtualDecomposition> irr; // spo(2|3) only
  bool close_to_zero = false;
  std::optional<bool> pattern_matches;     // spo(2|3) only
};

struct ConjectureReport {
  Algebra algebra = Algebra(1, 3);
  int bound = 0;
  int cutoff = 2;
  std::vector<ConjectureRow> rows;
  std::size_t rank = 0;          // of the coefficient matrix of the Euler characters
  bool independent = false;      // rank == rows.size()
  bool triangular = false;       // every row has leading_at_weight
  bool pattern_holds = false;    // every row away from zero matches
};

// spo(2n|2m+1), parabolic removing e_m, partitions with |lambda| <= bound
ConjectureReport conjecture_check(const Algebra &alg, int bound, int cutoff = 2);

} // namespace spochar
