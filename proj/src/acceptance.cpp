#include "spochar/acceptance.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "spochar/blocks.hpp"
#include "spochar/charformulas.hpp"
#include "spochar/jacobitrudi.hpp"
#include "spochar/superspace.hpp"

namespace spochar {

namespace {

class Checker {
public:
  explicit Checker(CriterionResult &r) : r_(r) {}
  bool operator()(bool ok, const std::string &what)
  {
    ++r_.checks;
    if (!ok)
      r_.failures.push_back(what);
    return ok;
  }
  void note(const std::string &s) { r_.notes.push_back(s); }
  // the last failure is a documented misprint
  void flag_known(bool known)
  {
    if (known)
      ++r_.known_failures;
  }

private:
  CriterionResult &r_;
};

Weight w23(int a, int b)
{
  return Weight::from_coefficients(Algebra(1, 3), {a}, {b});
}

std::string str(const mpz_class &z)
{
  return z.get_str();
}

// --------------------------------------------------------------------------

void euler_goldens(Checker &check)
{
  const Algebra a24(1, 4), a26(1, 6);
  Parabolic p = Parabolic::parse(a24, "remove=e1+e2");
  auto E = [](const Parabolic &q, const LeviModule &m) { return euler_character(q, levi_character(q, m)); };
  auto one24 = LaurentPoly::constant(a24.lattice(), 1);
  check(E(p, LeviModule::one_dimensional(Weight::zero(a24))) == one24 * mpz_class(2), "spo(2|4): E(C) = 2");
  check(E(p, LeviModule::natural()) == sym_power_char(a24, 1), "spo(2|4): E(C^{1|2}) = ch C^{2|4}");
  Weight de = Weight::parse(a24, "d1+e1");
  auto Ede = E(p, LeviModule::hook_schur(Partition({1, 1})));
  check(Ede.leading_term().first == de.doubled(), "spo(2|4): L0(d1+e1) is the second exterior power");
  if (is_typical(a24, de))
    check(Ede == kac_character(a24, de), "spo(2|4): E(L0(d1+e1)) = ch L(d1+e1)");

  Parabolic q = Parabolic::parse(a26, "remove=e2+e3");
  auto one26 = LaurentPoly::constant(a26.lattice(), 1);
  check(E(q, LeviModule::one_dimensional(Weight::zero(a26))) == one26 * mpz_class(2), "spo(2|6): E(C) = 2");
  check(E(q, LeviModule::natural()) == sym_power_char(a26, 1) * mpz_class(2), "spo(2|6): E(C^{1|3}) = 2 ch C^{2|6}");
  check(E(q, LeviModule::sym_power(2)) == sym_power_char(a26, 2), "spo(2|6): E(S^2 C^{1|3}) = ch S^2 C^{2|6}");
}

Parabolic theorem_parabolic(const Algebra &alg)
{
  const int n = alg.n();
  return Parabolic::retaining(alg, {Weight::parse(alg, "d" + std::to_string(n) + "-e1"), Weight::parse(alg, "e1")});
}

Parabolic remark_parabolic(const Algebra &alg)
{
  const int n = alg.n();
  return Parabolic::retaining(alg, {Weight::parse(alg, "d" + std::to_string(n) + "-e1")});
}

void euler_is_jt(Checker &check)
{
  for (int n : {2, 3}) {
    const Algebra alg(n, 3);
    Parabolic p = theorem_parabolic(alg);
    for (int k = 0; k <= 5; ++k)
      for (const auto &lam : partitions_of(k)) {
        if (lam.length() > n - 1)
          continue;
        Weight w = sharp(lam, alg);
        auto E = euler_character(p, levi_character(p, LeviModule::one_dimensional(w)));
        check(E == jt_character(lam, alg), alg.name() + ": E(L0(" + w.to_string() + ")) = D(" + lam.to_string() + ")");
      }
  }
}

void prop_twist(Checker &check)
{
  for (int n : {2, 3}) {
    const Algebra alg(n, 3);
    Parabolic p = theorem_parabolic(alg);
    Parabolic q = remark_parabolic(alg);
    for (int k = 0; k <= 4; ++k)
      for (const auto &lam : partitions_of(k)) {
        if (lam.length() > n - 1)
          continue;
        Weight w = sharp(lam, alg);
        auto E = euler_character(p, levi_character(p, LeviModule::one_dimensional(w)));
        auto Eq = euler_character(q, levi_character(q, LeviModule::one_dimensional(w)));
        check(Eq == E * mpz_class(2), alg.name() + ": E^q(" + w.to_string() + ") = 2 E^p");
        if (lam.length() != n - 1)
          continue;
        Weight t = w + Weight::delta(alg, n);
        auto Et = euler_character(p, levi_character(p, LeviModule::natural().twisted(w)));
        check(Et == kac_character(alg, t) + E, alg.name() + ": E(L0(" + t.to_string() + ")) = K + E(L0(" +
                                                   w.to_string() + "))");
        check(same_central_character(alg, t, w).linked, alg.name() + ": " + t.to_string() + " linked to " + w.to_string());
      }
  }
}

void jt_forms(Checker &check)
{
  for (const Algebra &alg : {Algebra(1, 3), Algebra(2, 3)})
    for (int k = 0; k <= 6; ++k)
      for (const auto &lam : partitions_of(k)) {
        if (lam[alg.n() + 1] > alg.m())
          continue;
        check(jt_character(lam, alg) == jt_character_e(lam, alg), alg.name() + ": p and e forms of D(" + lam.to_string() + ")");
      }
}

void identities(Checker &check)
{
  for (int n : {1, 2})
    for (const auto &r : identity_suite(n, 10))
      check(r.holds, "n=" + std::to_string(n) + " " + r.name + " (" + r.detail + ")");
}

void vdims(Checker &check)
{
  const Algebra a(1, 3);
  auto K = [&](int x, int y) { return kac_character(a, w23(x, y)).evaluate_at_one(); };
  auto D = [&](int x, int y) { return jt_character(sharp_inverse(w23(x, y), a), a); };
  auto L = [](int x, int y) { return irr_char_spo23(x, y); };
  check(K(1, 0) == 4, "vdim K(1|0) = 4, got " + str(K(1, 0)));
  check(K(0, 0) == -4, "vdim K(0|0) = -4, got " + str(K(0, 0)));
  for (int l = 3; l <= 6; ++l) {
    mpz_class want = 4 * (2 * l - 1) * (2 * l - 1);
    check(K(l, l - 1) == want, "vdim K(" + std::to_string(l) + "|" + std::to_string(l - 1) + ") = " + str(want));
    check(K(l, l - 1) == L(l, l - 1).evaluate_at_one() + L(l - 1, l - 2).evaluate_at_one(),
          "vdim K(l|l-1) = dim L(l|l-1) + dim L(l-1|l-2) at l=" + std::to_string(l));
    mpz_class d = D(l, l - 1).evaluate_at_one();
    check(d == want - (l % 2 ? -1 : 1), "vdim D(" + std::to_string(l) + "|" + std::to_string(l - 1) + ") = " + str(d));
  }
  check(D(2, 1).evaluate_at_one() == 35, "vdim D(2|1) = 35");
  check(L(2, 1).evaluate_at_one() + L(1, 0).evaluate_at_one() == 35, "dim L(2|1) + dim L(1|0) = 35");
  check(D(1, 0) == L(1, 0), "D(1|0) = ch L(1|0)");
  for (int k = 1; k <= 5; ++k)
    check(D(1, k - 1).evaluate_at_one() == L(1, k - 1).evaluate_at_one(), "vdim D(1|" + std::to_string(k - 1) + ") = dim L");
  // the closed formula, with rho_0 in the denominator
  for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 0}, {0, 0}, {2, 1}, {3, 2}, {4, 3}, {2, 0}, {3, 1}}) {
    mpq_class f = vdim_formula(a, w23(x, y), VdimDenominator::Classical);
    check(f == mpq_class(K(x, y)), "product formula for vdim K(" + std::to_string(x) + "|" + std::to_string(y) + ")");
  }
  check.note("the printed product formula (lambda + rho_0 below) gives " +
             vdim_formula(a, w23(1, 0), VdimDenominator::Paper).get_str() + " for K(1|0); the rho_0 reading is used");
}

// E(lambda) in the irreducible basis, as (a, b, mult)
std::vector<WeightMult> euler23(const Parabolic &p, int a, int b, bool hook)
{
  const Algebra &alg = p.algebra();
  LeviModule m = hook ? LeviModule::hook_schur(sharp_inverse(w23(a, b), alg)) : LeviModule::irreducible(w23(a, b));
  auto E = euler_character(p, levi_character(p, m));
  auto d = decompose(alg, E, Basis::Irreducible);
  if (!d.complete())
    throw MathError("Euler character did not decompose");
  auto out = as_weight_mults(d);
  std::sort(out.begin(), out.end(), [](const WeightMult &x, const WeightMult &y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

std::vector<WeightMult> sorted(std::vector<WeightMult> v)
{
  std::sort(v.begin(), v.end(), [](const WeightMult &x, const WeightMult &y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return v;
}

void example_families(Checker &check)
{
  const Algebra alg(1, 3);
  Parabolic first = Parabolic::removing(alg, {Weight::parse(alg, "e1")});
  Parabolic second = Parabolic::removing(alg, {Weight::parse(alg, "d1-e1")});
  struct Fam {
    const Parabolic *p;
    bool hook;
    std::string name;
  };
  for (const Fam &f : {Fam{&first, true, "gl(1|1) Levi"}, Fam{&second, false, "gl(1)+so(3) Levi"}}) {
    auto E = [&](int a, int b) { return euler23(*f.p, a, b, f.hook); };
    for (int l = 2; l <= 5; ++l)
      check(E(l + 1, l) == sorted({{l, l - 1, 1}, {l + 1, l, 1}}),
            f.name + ": E(" + std::to_string(l + 1) + "|" + std::to_string(l) + ") = two factors");
    check(E(2, 1) == sorted({{0, 0, 1}, {1, 0, 1}, {2, 1, 1}}), f.name + ": E(2|1)");
    check(E(1, 0) == sorted({{0, 0, -1}, {1, 0, 1}}), f.name + ": E(1|0) = [L(1|0)] - [L(0|0)]");
    if (f.hook)
      check(E(0, 0) == sorted({{0, 0, 2}}), f.name + ": E(0|0) = 2[L(0|0)]");
    else
      check(E(0, 0) == sorted({{0, 0, 1}, {1, 0, -1}}), f.name + ": E(0|0) = [L(0|0)] - [L(1|0)]");
    // E = K except at (0|0) for the first family; E = K = [L] for typical weights
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        Weight w = w23(a, b);
        if (!is_dominant(alg, w) || (f.hook && a == 0 && b == 0))
          continue;
        LeviModule m = f.hook ? LeviModule::hook_schur(sharp_inverse(w, alg)) : LeviModule::irreducible(w);
        auto Ech = euler_character(*f.p, levi_character(*f.p, m));
        bool ok = Ech == kac_character(alg, w);
        if (is_typical(alg, w))
          ok = ok && Ech == irr_char_spo23(a, b);
        check(ok, f.name + ": E(" + std::to_string(a) + "|" + std::to_string(b) + ") = K");
      }
  }
}

void tensor_tables(Checker &check, CriterionResult &r)
{
  std::vector<std::string> mismatched;
  for (const auto &row : tensor_table(5)) {
    std::string cell = "(" + std::to_string(row.a) + "|" + std::to_string(row.b) + ")";
    check(row.computed.complete(), cell + " x (1|0) decomposes with zero remainder");
    if (!check(row.matches, cell + " x (1|0) printed family " + std::to_string(row.printed.family) +
                                ", computed " + row.computed.to_string()))
      mismatched.push_back(cell);
  }
  // (3|1): the printed right hand side has dimension 304, the product 300
  if (mismatched == std::vector<std::string>{"(3|1)"}) {
    auto row = tensor_row(3, 1);
    mpz_class printed = 0;
    for (const auto &t : row.printed.terms)
      printed += t.mult * irr_char_spo23(t.a, t.b).evaluate_at_one();
    mpz_class actual = irr_char_spo23(3, 1).evaluate_at_one() * 5;
    std::vector<WeightMult> corrected{{4, 1, 1}, {3, 2, 1}, {3, 1, 1}, {3, 0, 1}, {2, 1, 2}, {1, 0, 1}, {0, 0, 1}};
    bool fixed = sorted(as_weight_mults(row.computed)) == sorted(corrected);
    r.notes.push_back("(3|1): printed terms have total dimension " + str(printed) + ", dim L(3|1) x L(1|0) = " +
                      str(actual) + "; computed " + row.computed.to_string());
    if (fixed && printed != actual)
      r.known_failures = 1;
  }
}

// (e_k - e_{k-2})
LaurentPoly harmonic(const Algebra &alg, int k)
{
  return ext_power_char(alg, k) - ext_power_char(alg, k - 2);
}

void superspace_checks(Checker &check)
{
  // calibration vector and the coefficient of its xi_1 xib_1 term
  for (int m : {1, 2})
    for (int k = 2; k <= 5; ++k) {
      const Algebra alg(1, 2 * m + 1);
      SuperSpace V(alg);
      auto build = [&](const mpq_class &c) {
        SuperElement v = scaled(V.word({V.xi(1), V.xibar(1)}), c);
        for (int i = 1; i <= m; ++i)
          v = v + scaled(V.word({V.x(i), V.xbar(i)}), -1);
        v = v + scaled(V.word({V.x0(), V.x0()}), mpq_class(-1, 2));
        for (int j = 0; j < k - 2; ++j)
          v = V.left_multiply(V.x(1), v);
        return v;
      };
      check(V.laplacian(build(mpq_class(2 * k + 2 * m - 3, 2))).empty(),
            alg.name() + " k=" + std::to_string(k) + ": Laplacian kills v with coefficient k+m-3/2");
      if (m == 2)
        check(!V.laplacian(build(mpq_class(2 * k - 1, 2))).empty(),
              alg.name() + " k=" + std::to_string(k) + ": coefficient k+n-3/2 is not in the kernel");
    }

  auto dim = [](int n, int l, int k) { return kernel_basis(SuperSpace(Algebra(n, l)), k).size(); };
  check(dim(1, 3, 1) == 5, "spo(2|3) k=1 kernel dimension 5");
  check(dim(1, 3, 2) == 12, "spo(2|3) k=2 kernel dimension 12");
  check(dim(1, 5, 3) == 63, "spo(2|5) k=3 kernel dimension 63");

  {
    SuperSpace V(Algebra(1, 5));
    for (int k = 2; k <= 5; ++k) {
      auto rep = irreducibility_report(V, k);
      bool ok = rep.singular.size() == 1 &&
                rep.singular[0].weight == Weight::parse(V.algebra(), "d1+" + std::to_string(k - 1) + "e1") &&
                rep.structure == KernelStructure::Irreducible;
      check(ok, "spo(2|5) k=" + std::to_string(k) + ": single singular vector d1+(k-1)e1; " + rep.summary);
      check(rep.kernel_character == harmonic(V.algebra(), k), "spo(2|5) k=" + std::to_string(k) + ": kernel character e_k - e_{k-2}");
    }
  }
  for (auto [n, kmax] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
    SuperSpace V(Algebra(n, 3));
    for (int k = 1; k <= kmax; ++k) {
      auto rep = irreducibility_report(V, k);
      check(rep.structure == KernelStructure::Irreducible, rep.summary);
      check(rep.kernel_character == harmonic(V.algebra(), k), V.algebra().name() + " kernel character at k=" + std::to_string(k));
    }
  }
  {
    SuperSpace V(Algebra(2, 4));
    auto rep = irreducibility_report(V, 2);
    SuperElement phi = V.word({V.xi(1), V.xibar(1)}) + V.word({V.xi(2), V.xibar(2)}) +
                       scaled(V.word({V.x(1), V.xbar(1)}) + V.word({V.x(2), V.xbar(2)}), -1);
    bool ok = rep.structure == KernelStructure::TrivialSubmodule && rep.singular.size() == 2 &&
              rep.singular[1].weight == Weight::zero(V.algebra()) &&
              (rep.singular[1].vector == phi || rep.singular[1].vector == scaled(phi, -1));
    check(ok, "spo(4|4) k=2: trivial submodule spanned by phi; " + rep.summary);
    for (int k : {3, 4}) {
      auto r = irreducibility_report(V, k);
      check(r.structure == KernelStructure::Irreducible, r.summary);
    }
  }

  // tensor products with the natural module, decomposed through singular vectors
  for (int m : {1, 2}) {
    const Algebra alg(1, 2 * m + 1);
    SuperSpace V(alg);
    auto p1 = sym_power_char(alg, 1);
    for (int k = 1; k <= 4; ++k) {
      auto rep = tensor_with_natural(V, k);
      Weight top = Weight::parse(alg, "2d1+" + std::to_string(k - 1) + "e1");
      std::vector<Weight> want{top, Weight::parse(alg, "d1+" + std::to_string(k) + "e1"),
                               k == 1 ? Weight::zero(alg) : Weight::parse(alg, "d1+" + std::to_string(k - 2) + "e1")};
      std::vector<LaurentPoly> chars{harmonic(alg, k + 1), k == 1 ? LaurentPoly::constant(alg.lattice(), 1) : harmonic(alg, k - 1)};
      bool ok = rep.direct_sum && rep.summands.size() == 3;
      for (std::size_t i = 0; ok && i < 3; ++i)
        ok = rep.summands[i].weight == want[i];
      ok = ok && rep.summands[1].character == chars[0] && rep.summands[2].character == chars[1];
      LaurentPoly lhs = harmonic(alg, k) * p1;
      if (ok)
        ok = lhs == rep.summands[0].character + chars[0] + chars[1];
      if (ok && is_typical(alg, top))
        ok = rep.summands[0].character == kac_character(alg, top);
      std::string label = alg.name() + (k == 1 ? ": natural x natural" : " k=" + std::to_string(k) + ": L(d1+(k-1)e1) x natural");
      if (check(ok, label + " = three irreducibles; " + rep.summary) || m != 1 || k != 2)
        continue;
      // 2d1+e1 is atypical and linked to d1: the top vector generates L(2|1) extended by L(1|0)
      const Algebra a23(1, 3);
      auto d = decompose(a23, lhs, Basis::Irreducible);
      bool known = rep.summands.size() == 3 && rep.summands[0].character == irr_char_spo23(2, 1) + irr_char_spo23(1, 0) &&
                   d.multiplicity(w23(1, 0)) == 2 && d.multiplicity(w23(2, 1)) == 1 && d.multiplicity(w23(1, 2)) == 1 &&
                   same_central_character(a23, w23(2, 1), w23(1, 0)).linked;
      if (known)
        check.note("spo(2|3) k=2: (e2-e0) p1 = " + d.to_string() + "; the top vector generates a module of dimension " +
                   std::to_string(rep.summands[0].span) + " = dim L(2|1) + dim L(1|0), so the three-summand decomposition fails here");
      check.flag_known(known);
    }
  }

  // spo(4|5): (e2-e0) p1 = L(2d1+d2) + 2 L(d1) + L(d1+d2+e1)
  {
    const Algebra alg(2, 5);
    SuperSpace V(alg);
    auto r2 = irreducibility_report(V, 2), r3 = irreducibility_report(V, 3);
    check(r2.structure == KernelStructure::Irreducible && r3.structure == KernelStructure::Irreducible,
          "spo(4|5): kernels in degree 2 and 3 irreducible");
    auto p1 = sym_power_char(alg, 1);
    LaurentPoly Y = harmonic(alg, 2) * p1 - harmonic(alg, 3) - p1 * mpz_class(2);
    Weight top = Weight::parse(alg, "2d1+d2");
    check(Y.nonnegative() && Y.leading_term().first == top.doubled() && Y.leading_term().second == 1,
          "spo(4|5): remaining character is honest with highest weight 2d1+d2");
    check(is_weyl_invariant(alg, Y), "spo(4|5): remaining character is W-invariant");
    check(same_central_character(alg, top, Weight::delta(alg, 1)).linked, "spo(4|5): 2d1+d2 and d1 are linked");
    auto t = tensor_with_natural(V, 2);
    bool ext = t.summands.size() == 3 && t.summands[0].character == Y + p1 && t.summands[2].weight == Weight::delta(alg, 1) &&
               !t.direct_sum;
    check(ext, "spo(4|5): the top vector generates L(2d1+d2) extended by L(d1); " + t.summary);
    check.note("spo(4|5): multiplicities {2d1+d2: 1, d1: 2, d1+d2+e1: 1}. At the level of characters the extension "
               "between L(2d1+d2) and L(d1) is invisible; it shows only in the module generated by the highest vector");
  }
}

// --------------------------------------------------------------------------
// property suites

LaurentPoly random_poly(std::mt19937 &gen, Lattice lat, int terms)
{
  std::uniform_int_distribution<int> ex(-3, 3), co(-5, 5);
  std::vector<LaurentPoly::Term> t;
  for (int i = 0; i < terms; ++i) {
    ExponentVector e(lat.size());
    for (std::size_t k = 0; k < lat.size(); ++k)
      e[k] = 2 * ex(gen);
    t.emplace_back(e, co(gen));
  }
  return LaurentPoly::from_terms(lat, std::move(t));
}

void properties(Checker &check)
{
  std::mt19937 gen(20240601);
  const Lattice lat{2, 1};
  bool ring = true, div = true;
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_poly(gen, lat, 5), b = random_poly(gen, lat, 4), c = random_poly(gen, lat, 3);
    ring = ring && a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
           (a + b) + c == a + (b + c) && a - a == LaurentPoly(lat);
    if (!b.is_zero())
      div = div && exact_div(a * b, b) == a;
  }
  check(ring, "ring axioms on 25 random triples");
  check(div, "exact_div(a b, b) = a on 25 random pairs");

  const Algebra a23(1, 3);
  struct Emitted {
    std::string name;
    Algebra alg;
    LaurentPoly ch;
  };
  std::vector<Emitted> emitted;
  for (const Algebra &alg : {Algebra(1, 3), Algebra(2, 3), Algebra(1, 4), Algebra(2, 4)})
    for (const char *w : {"0", "d1", "2d1|e1", "3d1|e1"}) {
      Weight lam = Weight::parse(alg, w);
      if (is_dominant(alg, lam))
        emitted.push_back({"K(" + lam.to_string() + ") on " + alg.name(), alg, kac_character(alg, lam)});
    }
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      if (is_dominant(a23, w23(a, b)))
        emitted.push_back({"L(" + std::to_string(a) + "|" + std::to_string(b) + ")", a23, irr_char_spo23(a, b)});
  for (const char *s : {"1", "2,1", "3,1,1", "2,2"})
    emitted.push_back({std::string("D(") + s + ")", Algebra(2, 3), jt_character(Partition::parse(s), Algebra(2, 3))});
  Parabolic p = Parabolic::removing(a23, {Weight::parse(a23, "e1")});
  for (int k = 0; k <= 4; ++k)
    for (const auto &lam : partitions_of(k))
      if (lam[2] <= 1)
        emitted.push_back({"E(" + lam.to_string() + ")", a23,
                           euler_character(p, levi_character(p, LeviModule::hook_schur(lam)))});
  bool inv = true;
  for (const auto &e : emitted)
    if (!is_weyl_invariant(e.alg, e.ch))
      inv = check(false, "W-invariance of " + e.name);
  check(inv, "W-invariance of " + std::to_string(emitted.size()) + " emitted characters");

  bool nonneg = true;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      if (is_dominant(a23, w23(a, b)))
        nonneg = nonneg && irr_char_spo23(a, b).nonnegative();
  check(nonneg, "irreducible characters of spo(2|3) have non-negative coefficients");
  for (int l = 2; l <= 6; ++l)
    check(irr_char_spo23(l, l - 1).evaluate_at_one() == 2 * (4 * l * l - 1), "dim L(l|l-1) = 2(4l^2-1) at l=" + std::to_string(l));

  // block consistency and reconstruction
  std::vector<std::pair<std::string, LaurentPoly>> virt;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      if (is_dominant(a23, w23(a, b)))
        virt.emplace_back("K(" + std::to_string(a) + "|" + std::to_string(b) + ")", kac_character(a23, w23(a, b)));
  for (const auto &e : emitted)
    if (e.name.starts_with("E("))
      virt.emplace_back(e.name, e.ch);
  bool blocks = true, recon = true;
  for (const auto &[name, ch] : virt) {
    auto d = decompose(a23, ch, Basis::Irreducible);
    recon = recon && reconstruct(a23, d) == ch && d.complete();
    if (!block_violations(a23, d).empty())
      blocks = check(false, "block consistency of " + name + " = " + d.to_string());
  }
  for (const auto &row : tensor_table(4))
    recon = recon && reconstruct(a23, row.computed) == irr_char_spo23(row.a, row.b) * irr_char_spo23(1, 0);
  {
    auto d = decompose(a23, kac_character(a23, w23(3, 2)) * mpz_class(3) - irr_char_spo23(2, 0), Basis::Kac);
    recon = recon && reconstruct(a23, d) == kac_character(a23, w23(3, 2)) * mpz_class(3) - irr_char_spo23(2, 0);
  }
  check(blocks, "block consistency of " + std::to_string(virt.size()) + " decompositions");
  check(recon, "reconstruction identity of every decomposition");

  for (const Algebra &alg : {Algebra(1, 3), Algebra(2, 3), Algebra(2, 5), Algebra(1, 4)}) {
    std::set<std::vector<int>> images;
    bool ok = true;
    std::size_t count = 0;
    for (int k = 0; k <= 8; ++k)
      for (const auto &lam : partitions_of(k)) {
        if (lam[alg.n() + 1] > alg.m())
          continue;
        ++count;
        Weight w = sharp(lam, alg);
        auto d = w.doubled().doubled();
        images.insert(std::vector<int>(d.begin(), d.end()));
        ok = ok && is_dominant(alg, w) && sharp_inverse(w, alg) == lam;
      }
    check(ok && images.size() == count, alg.name() + ": sharp is injective into dominant weights on partitions of size <= 8");
  }
}

void conjecture(Checker &check)
{
  auto rep = conjecture_check(Algebra(1, 3), 5);
  check(rep.independent, "Euler characters for |lambda| <= 5 independent: rank " + std::to_string(rep.rank) + " of " +
                             std::to_string(rep.rows.size()));
  check(rep.triangular, "each Euler character has leading term e^{lambda#}");
  check(rep.pattern_holds, "two consecutive atypical factors away from zero");
  for (const auto &row : rep.rows)
    if (row.pattern_matches && !*row.pattern_matches && !row.close_to_zero)
      check(false, "pattern at " + row.weight.bar_notation() + ": " + row.irr->to_string());
  check.note("independence is the rank of the coefficient matrix: K(0|0) = -K(1|0), so Kac characters do not form a basis");
}

const char *titles[kCriteria] = {
    "Euler character goldens",
    "Euler characters equal Jacobi-Trudi characters",
    "twisted natural module identity and E^q = 2 E^p",
    "Jacobi-Trudi p-form equals e-form",
    "determinant and series identities",
    "virtual dimensions",
    "Euler characters of spo(2|3), both maximal parabolics",
    "tensor products with the natural module",
    "Laplacian kernels and singular vectors",
    "property suites",
    "Euler character basis check",
};

} // namespace

CriterionResult run_criterion(int id)
{
  if (id < 1 || id > kCriteria)
    throw InvalidInput("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = titles[id - 1];
  Checker check(r);
  try {
    switch (id) {
    case 1: euler_goldens(check); break;
    case 2: euler_is_jt(check); break;
    case 3: prop_twist(check); break;
    case 4: jt_forms(check); break;
    case 5: identities(check); break;
    case 6: vdims(check); break;
    case 7: example_families(check); break;
    case 8: tensor_tables(check, r); break;
    case 9: superspace_checks(check); break;
    case 10: properties(check); break;
    case 11: conjecture(check); break;
    }
  } catch (const std::exception &e) {
    r.failures.push_back(std::string("exception: ") + e.what());
    r.known_failures = 0;
  }
  r.passed = r.failures.empty();
  r.known_discrepancy = !r.passed && r.failures.size() == r.known_failures;
  return r;
}

std::vector<CriterionResult> run_acceptance()
{
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriteria; ++i)
    out.push_back(run_criterion(i));
  return out;
}

bool acceptance_ok(const std::vector<CriterionResult> &results)
{
  for (const auto &r : results)
    if (!r.passed && !r.known_discrepancy)
      return false;
  return true;
}

std::string format_line(const CriterionResult &r)
{
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " (" << r.checks << " checks";
  if (!r.passed)
    os << ", " << r.failures.size() << " failed" << (r.known_discrepancy ? ", documented paper discrepancy" : "");
  os << ")";
  return os.str();
}

} // namespace spochar
