#pragma once

// Symmetric and exterior powers of the natural module and the Jacobi-Trudi
// determinant characters.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "spochar/laurent.hpp"
#include "spochar/rootdata.hpp"

namespace spochar {

// p_r = ch S^r(V) and e_r = ch Lambda^r(V) for the natural module V,
// extended on demand.  Thread safe; one table per algebra.
class PowerTable {
public:
  static std::shared_ptr<PowerTable> for_algebra(const Algebra &alg);

  // zero for r < 0
  LaurentPoly p(int r);
  LaurentPoly e(int r);

  const Algebra &algebra() const { return alg_; }

  explicit PowerTable(const Algebra &alg);

private:
  void ensure(int r);

  Algebra alg_;
  std::vector<LaurentPoly> p_;
  std::vector<LaurentPoly> e_;
  std::mutex mu_;
};

LaurentPoly sym_power_char(const Algebra &alg, int r);
LaurentPoly ext_power_char(const Algebra &alg, int r);

// det(p_{l_i-i+j} + p_{l_i-i-j}) with first column p_{l_i-i}
LaurentPoly jt_character(const Partition &lambda, const Algebra &alg);
// det(e_{u_i-i+j} - e_{u_i-i-j-2}) with u the conjugate partition
LaurentPoly jt_character_e(const Partition &lambda, const Algebra &alg);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

// The Cauchy-type determinant identities behind the Euler/Jacobi-Trudi
// comparison, checked as exact Laurent identities in n variables, and the
// geometric series identity truncated at order N.
std::vector<IdentityCheck> identity_suite(int n, int N = 10);

} // namespace spochar
