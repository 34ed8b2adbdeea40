#pragma once

// Weyl denominators, Kac and Euler characters, Levi module characters.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spochar/laurent.hpp"
#include "spochar/rootdata.hpp"

namespace spochar {

struct Denominators {
  LaurentPoly D0; // prod over even positive roots of (e^{a/2} - e^{-a/2})
  LaurentPoly D1; // prod over odd positive roots of (e^{a/2} + e^{-a/2})
  FactoredPolynomial D0_factored;
  FactoredPolynomial D1_factored;
};

Denominators denominators(const Algebra &alg);

// A connected piece of the Levi Dynkin diagram.
struct LeviComponent {
  enum class Type { GL, OrthoSymplectic };
  Type type = Type::GL;
  std::vector<std::size_t> simple_indices; // into positive_roots(alg).simple
  // GL: the signed coordinates c_1..c_{k+1} with simple roots c_i - c_{i+1}.
  // OrthoSymplectic: the positive coordinates involved.
  std::vector<Weight> coordinates;
  std::vector<Parity> parities;
  bool has_zero_weight = false; // natural module has the weight 0 (odd)

  std::string describe() const; // "gl(1|2)", "spo(2|3)", "so(3)"
  int even_dim() const;
  int odd_dim() const;
};

class Parabolic {
public:
  // removes the listed simple roots (indices into the standard simple system)
  Parabolic(const Algebra &alg, std::vector<std::size_t> removed);
  static Parabolic borel(const Algebra &alg);
  static Parabolic whole(const Algebra &alg);
  static Parabolic removing(const Algebra &alg, const std::vector<Weight> &roots);
  static Parabolic retaining(const Algebra &alg, const std::vector<Weight> &roots);
  // "borel", "g", or "remove=e1+e2,d1-e1" / "retain=d1-e1"
  static Parabolic parse(const Algebra &alg, const std::string &text);

  const Algebra &algebra() const { return alg_; }
  const std::vector<std::size_t> &removed() const { return removed_; }
  std::vector<std::size_t> retained() const;
  const std::vector<Root> &levi_even_positive() const { return even_; }
  const std::vector<Root> &levi_odd_positive() const { return odd_; }
  const std::vector<LeviComponent> &components() const { return components_; }
  bool levi_is_even() const { return odd_.empty(); }

  std::string describe() const; // e.g. "remove=e1+e2 (levi gl(1|2))"

private:
  Algebra alg_;
  std::vector<std::size_t> removed_;
  std::vector<Root> even_;
  std::vector<Root> odd_;
  std::vector<LeviComponent> components_;
};

struct LeviModule {
  enum class Kind { OneDimensional, Natural, SymPower, ExtPower, HookSchur, Irreducible, Explicit };
  Kind kind = Kind::OneDimensional;
  std::optional<Weight> weight;     // OneDimensional: the weight; Irreducible: highest weight
  int power = 0;                    // SymPower / ExtPower
  Partition partition;              // HookSchur
  std::optional<LaurentPoly> explicit_character;
  std::optional<std::size_t> component; // defaults to the unique nontrivial one
  std::optional<Weight> twist;      // tensor with the one-dimensional e^twist

  static LeviModule one_dimensional(Weight w);
  static LeviModule natural();
  static LeviModule sym_power(int k);
  static LeviModule ext_power(int k);
  static LeviModule hook_schur(Partition p);
  static LeviModule irreducible(Weight highest);
  static LeviModule explicit_char(LaurentPoly ch);
  LeviModule twisted(Weight w) const;

  // "trivial", "natural", "sym2", "ext3", "hook:2,1", "irr:<weight>",
  // "1d:<weight>", with an optional "@<weight>" twist suffix
  static LeviModule parse(const Algebra &alg, const std::string &text);
  std::string describe() const;
};

struct LeviCharacter {
  LaurentPoly ch;
  LeviModule tag;
};

LeviCharacter levi_character(const Parabolic &p, const LeviModule &tag);

// coefficient of z^r in prod_even (1 - x z)^{-1} prod_odd (1 + y z) when
// `symmetric`, and in the dual product otherwise; all r <= max_r
std::vector<LaurentPoly> power_series(Lattice lattice, const std::vector<ExponentVector> &even,
                                      const std::vector<ExponentVector> &odd, int max_r, bool symmetric);

// K(lambda) = D1 * sum_w sign(w) e^{w(lambda+rho)} / D0, divided in one step
LaurentPoly kac_character(const Algebra &alg, const Weight &lambda);
// the same through the rational Weyl sum machinery
LaurentPoly kac_character_rational(const Algebra &alg, const Weight &lambda);

LaurentPoly euler_character(const Parabolic &p, const LeviCharacter &M);

enum class VdimDenominator { Classical, Paper };

// 2^{|odd positive|} prod_{even a > 0} (a, lambda+rho) / (a, X), with
// X = rho_0 (Classical) or lambda + rho_0 (Paper)
mpq_class vdim_formula(const Algebra &alg, const Weight &lambda,
                       VdimDenominator reading = VdimDenominator::Classical);

// coordinates of a weight in the simple root basis
std::vector<mpq_class> simple_root_coordinates(const Algebra &alg, const Weight &w);

} // namespace spochar
