#pragma once

// The supersymmetric exterior algebra of the natural module as
// polynomials in x_i, xb_i, x_0 tensored with a Grassmann algebra in xi_j,
// xib_j; the Laplacian, root vector operators and kernel analysis.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "spochar/laurent.hpp"
#include "spochar/rootdata.hpp"

namespace spochar {

inline constexpr std::size_t kMaxCommuting = 9; // 2m + 1 with m <= 4
inline constexpr int kMaxGrassmann = 16;        // 2n with n <= 8

// commuting exponents in the order x_1..x_m, xb_1..xb_m, x_0, then
// occupation bits xi_1..xi_n, xib_1..xib_n
struct SuperMonomial {
  std::array<std::uint8_t, kMaxCommuting> e{};
  std::uint32_t bits = 0;
  friend auto operator<=>(const SuperMonomial &, const SuperMonomial &) = default;
};

using SuperElement = std::map<SuperMonomial, mpq_class>;

void add_term(SuperElement &el, const SuperMonomial &m, const mpq_class &c);
SuperElement operator+(const SuperElement &a, const SuperElement &b);
SuperElement scaled(const SuperElement &a, const mpq_class &c);

// sum of coefficient * g_a d/dg_b
struct FirstOrderOperator {
  std::vector<std::tuple<int, int, mpq_class>> terms;
  ExponentVector weight; // doubled
  Parity parity = Parity::Even;
};

class SuperSpace {
public:
  explicit SuperSpace(const Algebra &alg);

  const Algebra &algebra() const { return alg_; }
  int commuting() const { return c_; }     // 2m (+1)
  int grassmann() const { return 2 * n_; }
  int generators() const { return c_ + 2 * n_; }
  bool is_grassmann(int g) const { return g >= c_; }
  ExponentVector generator_weight(int g) const;
  std::string generator_name(int g) const;

  // generator indices
  int x(int i) const { return i - 1; }
  int xbar(int i) const { return m_ + i - 1; }
  int x0() const;
  int xi(int j) const { return c_ + j - 1; }
  int xibar(int j) const { return c_ + n_ + j - 1; }

  int degree(const SuperMonomial &m) const;
  ExponentVector weight(const SuperMonomial &m) const;
  std::vector<SuperMonomial> monomials(int degree) const; // sorted
  std::size_t dimension(int degree) const;

  SuperElement one() const;
  SuperElement generator(int g) const;
  // product of generators in the given order, e.g. {xi(1), xibar(1)}
  SuperElement word(const std::vector<int> &gens) const;
  SuperElement multiply(const SuperElement &a, const SuperElement &b) const;

  // left multiplication and left derivative by one generator
  SuperElement left_multiply(int g, const SuperElement &a) const;
  SuperElement derivative(int g, const SuperElement &a) const;

  SuperElement apply(const FirstOrderOperator &op, const SuperElement &a) const;
  SuperElement laplacian(const SuperElement &a) const;

  // root vectors of the algebra realised as first order operators,
  // normalised on the term with the smallest (derivative, multiplier)
  // generator pair
  const FirstOrderOperator &root_vector(const Weight &root) const;
  const std::vector<FirstOrderOperator> &cartan() const { return cartan_; }
  const std::vector<Weight> &roots() const { return roots_; } // all, positive and negative
  std::size_t even_dimension() const;
  std::size_t odd_dimension() const;

  std::string to_string(const SuperElement &a) const;

private:
  FirstOrderOperator solve_operator(const ExponentVector &weight, std::size_t &nullity) const;

  Algebra alg_;
  int n_, m_, c_;
  std::vector<Weight> roots_;
  std::vector<FirstOrderOperator> root_ops_;
  std::vector<FirstOrderOperator> cartan_;
};

struct KernelVector {
  Weight weight;
  SuperElement vector;
};

// basis of ker(Delta) in degree k, weight space by weight space
std::vector<KernelVector> kernel_basis(const SuperSpace &V, int k, std::size_t max_dim = 20000);

struct SingularVector {
  Weight weight;
  SuperElement vector;
  bool dominant = false;
  bool invariant = false; // also killed by the negative root vectors
};

std::vector<SingularVector> singular_vectors(const SuperSpace &V, int k, std::size_t max_dim = 20000);

enum class KernelStructure { Irreducible, TrivialSubmodule, Reducible, Inconclusive };

std::string to_string(KernelStructure s);

struct KernelReport {
  int degree = 0;
  std::size_t dim_source = 0; // dim of degree k
  std::size_t dim_target = 0; // dim of degree k-2
  std::size_t kernel_dim = 0;
  bool surjective = false;
  LaurentPoly kernel_character;
  std::vector<SingularVector> singular;
  std::size_t cyclic_span = 0; // dim of U(n-) applied to the top singular vector
  bool cyclic_checked = false;
  KernelStructure structure = KernelStructure::Inconclusive;
  std::string summary;
};

KernelReport irreducibility_report(const SuperSpace &V, int k, std::size_t max_dim = 20000,
                                   bool check_cyclic = true);

// ker(Delta) in degree k tensored with the natural module (degree 1),
// decomposed through its singular vectors and the submodules they generate
struct TensorSummand {
  Weight weight;              // of the singular vector
  std::size_t span = 0;       // dim of the submodule it generates
  LaurentPoly character;      // of that submodule
};

struct TensorReport {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<TensorSummand> summands; // one per singular vector, descending weight
  std::size_t sum_dim = 0;             // dim of the sum of the generated submodules
  // the generated submodules are independent and fill the tensor product;
  // then each is irreducible and the product is their direct sum
  bool direct_sum = false;
  std::string summary;
};

TensorReport tensor_with_natural(const SuperSpace &V, int k, std::size_t max_dim = 20000);

} // namespace spochar
