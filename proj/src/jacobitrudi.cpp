#include "spochar/jacobitrudi.hpp"

#include <map>
#include <tuple>

#include "spochar/charformulas.hpp"
#include "spochar/linalg.hpp"

namespace spochar {

namespace {

void natural_module_weights(const Algebra &alg, std::vector<ExponentVector> &even,
                            std::vector<ExponentVector> &odd)
{
  for (int i = 1; i <= alg.n(); ++i) {
    even.push_back(Weight::delta(alg, i).doubled());
    even.push_back(-Weight::delta(alg, i).doubled());
  }
  for (int j = 1; j <= alg.m(); ++j) {
    odd.push_back(Weight::epsilon(alg, j).doubled());
    odd.push_back(-Weight::epsilon(alg, j).doubled());
  }
  if (alg.odd())
    odd.push_back(ExponentVector(alg.rank()));
}

} // namespace

PowerTable::PowerTable(const Algebra &alg) : alg_(alg) {}

std::shared_ptr<PowerTable> PowerTable::for_algebra(const Algebra &alg)
{
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::shared_ptr<PowerTable>> tables;
  std::lock_guard lock(mu);
  auto &slot = tables[{alg.n(), alg.m(), alg.odd()}];
  if (!slot)
    slot = std::make_shared<PowerTable>(alg);
  return slot;
}

void PowerTable::ensure(int r)
{
  if (r < static_cast<int>(p_.size()))
    return;
  int top = std::max(r, 2 * static_cast<int>(p_.size()));
  std::vector<ExponentVector> even, odd;
  natural_module_weights(alg_, even, odd);
  p_ = power_series(alg_.lattice(), even, odd, top, true);
  e_ = power_series(alg_.lattice(), even, odd, top, false);
}

LaurentPoly PowerTable::p(int r)
{
  if (r < 0)
    return LaurentPoly(alg_.lattice());
  std::lock_guard lock(mu_);
  ensure(r);
  return p_[static_cast<std::size_t>(r)];
}

LaurentPoly PowerTable::e(int r)
{
  if (r < 0)
    return LaurentPoly(alg_.lattice());
  std::lock_guard lock(mu_);
  ensure(r);
  return e_[static_cast<std::size_t>(r)];
}

LaurentPoly sym_power_char(const Algebra &alg, int r)
{
  return PowerTable::for_algebra(alg)->p(r);
}

LaurentPoly ext_power_char(const Algebra &alg, int r)
{
  return PowerTable::for_algebra(alg)->e(r);
}

namespace {

void check_hook(const Partition &lambda, const Algebra &alg)
{
  if (lambda[alg.n() + 1] > alg.m())
    throw InvalidInput("partition " + lambda.to_string() + " violates the hook condition for " + alg.name());
}

} // namespace

LaurentPoly jt_character(const Partition &lambda, const Algebra &alg)
{
  check_hook(lambda, alg);
  const Lattice lat = alg.lattice();
  const int k = lambda.length();
  if (k == 0)
    return LaurentPoly::constant(lat, 1);
  auto table = PowerTable::for_algebra(alg);
  const auto K = static_cast<std::size_t>(k);
  PolyMatrix m(K, std::vector<LaurentPoly>(K, LaurentPoly(lat)));
  for (int i = 0; i < k; ++i) {
    int a = lambda[i + 1] - i;
    auto row = static_cast<std::size_t>(i);
    m[row][0] = table->p(a);
    for (int j = 1; j < k; ++j)
      m[row][static_cast<std::size_t>(j)] = table->p(a + j) + table->p(a - j);
  }
  return determinant(m, lat);
}

LaurentPoly jt_character_e(const Partition &lambda, const Algebra &alg)
{
  check_hook(lambda, alg);
  const Lattice lat = alg.lattice();
  const Partition mu = lambda.conjugate();
  const int l = mu.length();
  if (l == 0)
    return LaurentPoly::constant(lat, 1);
  auto table = PowerTable::for_algebra(alg);
  const auto L = static_cast<std::size_t>(l);
  PolyMatrix m(L, std::vector<LaurentPoly>(L, LaurentPoly(lat)));
  for (int i = 0; i < l; ++i) {
    int a = mu[i + 1] - i;
    for (int j = 0; j < l; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = table->e(a + j) - table->e(a - j - 2);
  }
  return determinant(m, lat);
}

// ---------------------------------------------------------------------------
// identities

namespace {

struct Vars {
  Lattice lat;
  // x_v^{k/2}
  LaurentPoly half_power(std::size_t v, int k) const
  {
    ExponentVector e(lat.size());
    e[v] = k;
    return LaurentPoly::monomial(lat, e);
  }
  LaurentPoly power(std::size_t v, int k) const { return half_power(v, 2 * k); }
  LaurentPoly one() const { return LaurentPoly::constant(lat, 1); }
  LaurentPoly constant(long c) const { return LaurentPoly::constant(lat, c); }
};

PolyMatrix square(std::size_t k, Lattice lat)
{
  return PolyMatrix(k, std::vector<LaurentPoly>(k, LaurentPoly(lat)));
}

// |u^{n-1}+u^{-n+1}, ..., u+u^{-1}, 1| in variables offset..offset+n-1
LaurentPoly symmetric_u_det(const Vars &x, std::size_t offset, int n)
{
  auto m = square(static_cast<std::size_t>(n), x.lat);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      int d = n - 1 - j;
      auto v = offset + static_cast<std::size_t>(k);
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          d == 0 ? x.one() : x.power(v, d) + x.power(v, -d);
    }
  return determinant(m, x.lat);
}

IdentityCheck cauchy_product(int n)
{
  // variables z_1..z_n, u_1..u_n
  Vars x{{2 * n, 0}};
  auto z = [](int i) { return static_cast<std::size_t>(i); };
  auto u = [n](int k) { return static_cast<std::size_t>(n + k); };
  const auto N = static_cast<std::size_t>(n);
  // A_ik = (1 - z_i u_k)(1 - z_i / u_k); row i times phi_0(z_i)
  auto A = [&](int i, int k) {
    return (x.one() - x.power(z(i), 1) * x.power(u(k), 1)) * (x.one() - x.power(z(i), 1) * x.power(u(k), -1));
  };
  auto B = square(N, x.lat);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      LaurentPoly prod = x.one();
      for (int k2 = 0; k2 < n; ++k2)
        if (k2 != k)
          prod *= A(i, k2);
      B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = prod;
    }
  LaurentPoly lhs = determinant(B, x.lat);

  LaurentPoly zpow = x.one();
  for (int i = 0; i < n; ++i)
    zpow *= x.power(z(i), n - 1);
  auto Z = square(N, x.lat);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j == 0 ? x.one() : x.power(z(i), j) + x.power(z(i), -j);
  LaurentPoly rhs = zpow * symmetric_u_det(x, u(0), n) * determinant(Z, x.lat);
  return {"cauchy-product", lhs == rhs, "terms " + std::to_string(lhs.size())};
}

IdentityCheck u_factorisation(int n)
{
  Vars x{{n, 0}};
  auto m = square(static_cast<std::size_t>(n), x.lat);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      int d = n - j;
      auto v = static_cast<std::size_t>(k);
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = x.power(v, d) - x.power(v, -d);
    }
  LaurentPoly lhs = determinant(m, x.lat);
  LaurentPoly rhs = symmetric_u_det(x, 0, n);
  for (int k = 0; k < n; ++k)
    rhs *= x.power(static_cast<std::size_t>(k), 1) - x.power(static_cast<std::size_t>(k), -1);
  return {"u-difference-factorisation", lhs == rhs, "terms " + std::to_string(lhs.size())};
}

IdentityCheck z_factorisation(int n)
{
  Vars x{{n, 0}};
  const auto N = static_cast<std::size_t>(n);
  auto m = square(N, x.lat);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = static_cast<std::size_t>(i);
      m[v][static_cast<std::size_t>(j)] = x.power(v, -(j + 1)) - x.power(v, j + 1);
    }
  LaurentPoly lhs = determinant(m, x.lat);

  const auto zn = N - 1;
  LaurentPoly rhs = x.power(zn, -1) - x.power(zn, 1);
  for (int i = 0; i + 1 < n; ++i) {
    auto v = static_cast<std::size_t>(i);
    rhs *= x.power(v, -1) * (x.one() - x.power(v, 1) * x.power(zn, 1)) *
           (x.one() - x.power(v, 1) * x.power(zn, -1));
  }
  auto small = square(N - 1, x.lat);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      auto v = static_cast<std::size_t>(i);
      small[v][static_cast<std::size_t>(j)] = x.power(v, j + 1) - x.power(v, -(j + 1));
    }
  rhs *= determinant(small, x.lat);
  return {"z-determinant-factorisation", lhs == rhs, "terms " + std::to_string(lhs.size())};
}

IdentityCheck geometric_series(int N)
{
  // variables u (half powers) and z
  Vars x{{2, 0}};
  const std::size_t u = 0, z = 1;
  LaurentPoly lhs(x.lat);
  for (int l = 0; l <= N; ++l)
    lhs += (x.half_power(u, 2 * l + 1) - x.half_power(u, -(2 * l + 1))) * x.power(z, l - 1);
  LaurentPoly cleared = lhs * (x.one() - x.power(u, 1) * x.power(z, 1)) * (x.one() - x.power(u, -1) * x.power(z, 1));
  LaurentPoly rhs = (x.one() + x.power(z, -1)) * (x.half_power(u, 1) - x.half_power(u, -1));
  // terms of z-degree >= N see the truncation
  std::vector<LaurentPoly::Term> low;
  for (const auto &[e, c] : cleared.terms())
    if (e[z] < 2 * N)
      low.emplace_back(e, c);
  LaurentPoly kept = LaurentPoly::from_terms(x.lat, low);
  return {"geometric-series", kept == rhs, "order " + std::to_string(N)};
}

} // namespace

std::vector<IdentityCheck> identity_suite(int n, int N)
{
  if (n < 1 || n > 4)
    throw InvalidInput("identity suite runs for 1 <= n <= 4");
  if (N < 1)
    throw InvalidInput("truncation order must be positive");
  return {cauchy_product(n), u_factorisation(n), z_factorisation(n), geometric_series(N)};
}

} // namespace spochar
