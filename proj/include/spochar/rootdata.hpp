#pragma once

// Root data of spo(2n|l), l = 2m or 2m+1, in the delta/epsilon basis.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "spochar/laurent.hpp"

namespace spochar {

class Algebra {
public:
  // spo(2n|ell) with n >= 1 and ell >= 3
  Algebra(int n, int ell);
  // Degenerate cases used as internal oracles: ell = 0 (sp(2n)) and
  // ell = 1 (spo(2n|1)) are accepted in addition to ell >= 3.
  static Algebra oracle(int n, int ell);
  // "2|3" -> spo(2|3)
  static Algebra parse(const std::string &text);

  int n() const { return n_; }
  int m() const { return m_; }
  int ell() const { return 2 * m_ + (odd_ ? 1 : 0); }
  bool odd() const { return odd_; }
  std::size_t rank() const { return static_cast<std::size_t>(n_ + m_); }
  Lattice lattice() const { return {n_, m_}; }

  std::string spec() const;  // "2|3"
  std::string name() const;  // "spo(2|3)"

  friend bool operator==(const Algebra &, const Algebra &) = default;

private:
  Algebra() = default;
  int n_ = 1;
  int m_ = 1;
  bool odd_ = true;
};

// A point of the half-integral weight lattice, stored doubled.
class Weight {
public:
  Weight() = default;
  Weight(const Algebra &alg, ExponentVector doubled);
  // integer coefficients a_1..a_n | b_1..b_m
  static Weight from_coefficients(const Algebra &alg, const std::vector<int> &a, const std::vector<int> &b);
  static Weight zero(const Algebra &alg);
  static Weight delta(const Algebra &alg, int i); // 1-based
  static Weight epsilon(const Algebra &alg, int j); // 1-based
  // "2d1+1d2|1e1", "1/2d1-e1", "0"
  static Weight parse(const Algebra &alg, const std::string &text);

  int n() const { return n_; }
  const ExponentVector &doubled() const { return v_; }
  // same algebra, new coordinates
  Weight with_doubled(ExponentVector v) const
  {
    if (v.size() != v_.size())
      throw DimensionMismatch();
    Weight r = *this;
    r.v_ = std::move(v);
    return r;
  }
  std::size_t size() const { return v_.size(); }
  bool integral() const { return v_.integral(); }
  // coefficient of delta_i (1-based) times two
  int delta_doubled(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
  int epsilon_doubled(int j) const { return v_[static_cast<std::size_t>(n_ + j - 1)]; }
  // integer coefficient; throws when half-integral
  int delta_coeff(int i) const;
  int epsilon_coeff(int j) const;

  Weight &operator+=(const Weight &o);
  Weight &operator-=(const Weight &o);
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  Weight operator-() const;
  Weight scaled(int k) const;

  friend bool operator==(const Weight &a, const Weight &b) { return a.n_ == b.n_ && a.v_ == b.v_; }

  std::string to_string() const;       // parseable form
  std::string bar_notation() const;    // "(2|1)", "(1,1|0)"

private:
  int n_ = 0;
  ExponentVector v_;
};

struct WeightGrlexLess {
  bool operator()(const Weight &a, const Weight &b) const
  {
    return grlex_compare(a.doubled(), b.doubled()) < 0;
  }
};

enum class Parity { Even, Odd };

struct Root {
  Weight weight;
  Parity parity = Parity::Even;
  bool positive = true;
};

struct RootSystem {
  std::vector<Root> even_positive;
  std::vector<Root> odd_positive;
  std::vector<Root> isotropic_positive; // subset of odd_positive
  std::vector<Root> simple;             // distinguished simple system, diagram order
  std::vector<Root> all_positive() const;
};

// (e_i,e_j) = -delta_ij, (d_i,e_j) = 0, (d_i,d_j) = delta_ij
mpq_class bilinear_form(const Weight &a, const Weight &b);

RootSystem positive_roots(const Algebra &alg);

Weight rho(const Algebra &alg);   // graded half sum
Weight rho0(const Algebra &alg);  // half sum of even positive roots
Weight rho1(const Algebra &alg);  // half sum of odd positive roots
// the closed-form expression for rho, kept separate as a cross-check
Weight rho_closed_form(const Algebra &alg);

// Finite-dimensionality condition on highest weights, including the hook
// clause.  Throws InvalidInput on half-integral weights.
bool is_dominant(const Algebra &alg, const Weight &lambda);

// ---------------------------------------------------------------------------
// partitions

class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts); // validated, trailing zeros dropped
  static Partition parse(const std::string &text); // "2,1,1"; "" or "0" is empty

  const std::vector<int> &parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // lambda_i with 1-based i, zero past the end
  int operator[](int i) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  friend auto operator<=>(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
};

// all partitions of k, in reverse lexicographic order
std::vector<Partition> partitions_of(int k);

// lambda -> lambda^sharp; requires lambda_{n+1} <= m
Weight sharp(const Partition &lambda, const Algebra &alg);
// inverse of sharp on dominant weights with b_m >= 0
Partition sharp_inverse(const Weight &lambda, const Algebra &alg);

// ---------------------------------------------------------------------------
// Weyl group

// w(e_i) = sign[i] * e_{image[i]} on one block of coordinates
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> sign;

  int determinant() const;
  SignedPermutation compose(const SignedPermutation &inner) const; // this o inner
  friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
};

class WeylElement {
public:
  WeylElement() = default;
  WeylElement(SignedPermutation sp, SignedPermutation so);
  static WeylElement identity(const Algebra &alg);

  const SignedPermutation &sp_part() const { return sp_; }
  const SignedPermutation &so_part() const { return so_; }
  // (-1)^{length}; equal to the determinant of the action
  int sign() const { return sign_; }

  ExponentVector apply(const ExponentVector &v) const;
  Weight apply(const Weight &w) const;
  LaurentPoly apply(const LaurentPoly &p) const;

  WeylElement operator*(const WeylElement &o) const; // this o o
  friend bool operator==(const WeylElement &a, const WeylElement &b)
  {
    return a.sp_ == b.sp_ && a.so_ == b.so_;
  }

private:
  SignedPermutation sp_;
  SignedPermutation so_;
  int sign_ = 1;
};

// All elements of W = W(C_n) x W(B_m) (odd) or W(C_n) x W(D_m) (even).
// Order: lexicographic in (sp permutation, sp sign mask, so permutation,
// so sign mask); permutations in std::next_permutation order, sign masks
// ascending with bit i flipping coordinate i.
const std::vector<WeylElement> &weyl_group(const Algebra &alg);

// the reflection in an even root
WeylElement reflection(const Algebra &alg, const Weight &root);

// Weyl group orbit representative: sorted absolute values in each block
// (with the D_m sign parity kept when no epsilon coordinate vanishes).
ExponentVector weyl_canonical(const Algebra &alg, const ExponentVector &v);

// sum_w sign(w) e^{w(v)}
LaurentPoly alternant(const Algebra &alg, const ExponentVector &v);
LaurentPoly alternant(const std::vector<WeylElement> &group, Lattice lattice, const ExponentVector &v);

bool is_weyl_invariant(const Algebra &alg, const LaurentPoly &p);

} // namespace spochar
