#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients on
// the half-integral weight lattice.  Exponents are stored doubled, so the
// monomial e^{delta_1/2} has exponent vector (1, 0, ...).

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spochar/errors.hpp"

namespace spochar {

inline constexpr std::size_t kMaxVars = 12;

class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size);
  ExponentVector(std::initializer_list<int> doubled);
  static ExponentVector from_doubled(std::span<const int> doubled);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int &operator[](std::size_t i) { return e_[i]; }
  std::span<const int> doubled() const { return {e_.data(), size_}; }

  // sum of the doubled entries
  int degree() const;
  bool is_zero() const;
  bool integral() const;

  ExponentVector &operator+=(const ExponentVector &o);
  ExponentVector &operator-=(const ExponentVector &o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector &b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector &b) { return a -= b; }
  ExponentVector operator-() const;
  ExponentVector scaled(int k) const;

  friend bool operator==(const ExponentVector &a, const ExponentVector &b)
  {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

private:
  std::array<int, kMaxVars> e_{};
  std::uint8_t size_ = 0;
};

// Graded-lexicographic order: total degree first, then lexicographic with
// the first coordinate most significant.  Compatible with addition.
std::strong_ordering grlex_compare(const ExponentVector &a, const ExponentVector &b);

struct GrlexLess {
  bool operator()(const ExponentVector &a, const ExponentVector &b) const
  {
    return grlex_compare(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector &v) const { return v.hash(); }
};

// The variable layout of a polynomial: n "delta" coordinates followed by m
// "epsilon" coordinates.  Formal-variable polynomials use m = 0.
struct Lattice {
  int n = 0;
  int m = 0;
  std::size_t size() const { return static_cast<std::size_t>(n + m); }
  friend bool operator==(const Lattice &, const Lattice &) = default;
};

class LaurentPoly {
public:
  using Term = std::pair<ExponentVector, mpz_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(Lattice lattice) : lat_(lattice) {}

  static LaurentPoly constant(Lattice lattice, const mpz_class &c);
  static LaurentPoly monomial(Lattice lattice, const ExponentVector &e, const mpz_class &c = 1);
  // sorts and combines; zero coefficients are dropped
  static LaurentPoly from_terms(Lattice lattice, std::vector<Term> terms);

  Lattice lattice() const { return lat_; }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  mpz_class coefficient(const ExponentVector &e) const;
  // grlex-maximal term; the polynomial must be nonzero
  const Term &leading_term() const;
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  LaurentPoly &operator*=(const mpz_class &c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class &c) { return a *= c; }
  friend LaurentPoly operator*(const mpz_class &c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  // multiplication by the monomial e^shift
  LaurentPoly shifted(const ExponentVector &shift) const;

  // applies an exponent map (e.g. a Weyl group element) and re-sorts
  template <class F>
  LaurentPoly map_exponents(F &&f) const
  {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[e, c] : terms_)
      out.emplace_back(f(e), c);
    return from_terms(lat_, std::move(out));
  }

  mpz_class evaluate_at_one() const;
  bool nonnegative() const;

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
  {
    return a.lat_ == b.lat_ && a.terms_ == b.terms_;
  }

  // human readable, e.g. "2 + e^(d1) - e^(1/2d1-1/2e1)"
  std::string to_string() const;

private:
  void check_lattice(const LaurentPoly &o) const;

  Lattice lat_;
  std::vector<Term> terms_; // ascending grlex, no zero coefficients
};

// Returns r with r*q == p.  Throws NotDivisible when q does not divide p.
LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &q);

inline mpz_class evaluate_at_one(const LaurentPoly &p) { return p.evaluate_at_one(); }

// Text for a single exponent vector in d/e notation, e.g. "1/2d1-e1".
std::string exponent_to_string(const ExponentVector &e, int n);

// ---------------------------------------------------------------------------
// Factored rational expressions

// The factor (1 + sign * e^mu).  Canonical when mu != 0 and the first nonzero
// coordinate of mu is negative.
struct BinomialFactor {
  int sign = 1;
  ExponentVector mu;

  bool canonical() const;
  LaurentPoly expand(Lattice lattice) const;

  friend bool operator==(const BinomialFactor &, const BinomialFactor &) = default;
};

bool operator<(const BinomialFactor &a, const BinomialFactor &b);

// unit * prod(factors), kept unexpanded so shared factors can cancel
struct FactoredPolynomial {
  ExponentVector unit;
  int unit_sign = 1;
  std::vector<BinomialFactor> factors;

  LaurentPoly expand(Lattice lattice) const;
};

// unit_sign * e^unit * numerator / prod(denominator)
class FactoredRational {
public:
  FactoredRational(LaurentPoly numerator, std::vector<BinomialFactor> denominator);

  const LaurentPoly &numerator() const { return numerator_; }
  const std::vector<BinomialFactor> &denominator() const { return denominator_; }
  const ExponentVector &unit() const { return unit_; }
  int unit_sign() const { return unit_sign_; }

  // unit_sign * e^unit * numerator
  LaurentPoly scaled_numerator() const;

private:
  LaurentPoly numerator_;
  std::vector<BinomialFactor> denominator_; // canonical, sorted
  ExponentVector unit_;
  int unit_sign_ = 1;
};

struct SignedRational {
  int sign = 1;
  FactoredRational value;
};

// Brings sign_i * value_i over the least common denominator, multiplies the
// summed numerator by `prefactor` (cancelling shared factors first) and
// exactly divides.  Returns prefactor * sum(terms) as a polynomial; throws
// NotDivisible when that is not a polynomial.
LaurentPoly rational_weyl_sum(std::span<const SignedRational> terms,
                              const FactoredPolynomial *prefactor = nullptr);

} // namespace spochar
