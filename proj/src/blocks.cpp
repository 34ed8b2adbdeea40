#include "spochar/blocks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "spochar/charformulas.hpp"
#include "spochar/jacobitrudi.hpp"
#include "spochar/linalg.hpp"

namespace spochar {

bool is_typical(const Algebra &alg, const Weight &lambda)
{
  const Weight lr = lambda + rho(alg);
  for (const auto &r : positive_roots(alg).isotropic_positive)
    if (bilinear_form(lr, r.weight) == 0)
      return false;
  return true;
}

int default_linkage_depth(const Algebra &alg)
{
  return std::min(alg.n(), alg.m()) + 1;
}

Linkage same_central_character(const Algebra &alg, const Weight &lambda, const Weight &mu,
                               std::optional<int> max_depth)
{
  Linkage out;
  out.max_depth = max_depth.value_or(default_linkage_depth(alg));
  if (out.max_depth < 0)
    throw InvalidInput("linkage depth must be non-negative");
  const Weight r = rho(alg);
  const ExponentVector target = weyl_canonical(alg, (mu + r).doubled());
  ExponentVector start = weyl_canonical(alg, (lambda + r).doubled());
  if (start == target) {
    out.linked = true;
    out.depth = 0;
    return out;
  }
  std::vector<Weight> steps;
  for (const auto &a : positive_roots(alg).isotropic_positive) {
    steps.push_back(a.weight);
    steps.push_back(-a.weight);
  }
  std::set<ExponentVector, GrlexLess> seen{start};
  std::vector<ExponentVector> frontier{start};
  for (int depth = 1; depth <= out.max_depth && !frontier.empty(); ++depth) {
    std::vector<ExponentVector> next;
    for (const auto &s : frontier) {
      Weight sw(alg, s);
      for (const auto &a : steps) {
        if (bilinear_form(sw, a) != 0)
          continue;
        ExponentVector t = weyl_canonical(alg, (sw + a).doubled());
        if (t == target) {
          out.linked = true;
          out.depth = depth;
          return out;
        }
        if (seen.insert(t).second)
          next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  // further steps remain possible from the last frontier
  out.inconclusive = !frontier.empty();
  return out;
}

// ---------------------------------------------------------------------------
// spo(2|3) irreducibles

namespace {

const Algebra &spo23()
{
  static const Algebra a(1, 3);
  return a;
}

Weight weight23(int a, int b)
{
  return Weight::from_coefficients(spo23(), {a}, {b});
}

LaurentPoly irr23_uncached(int a, int b);

std::mutex irr_mu;
std::map<std::pair<int, int>, LaurentPoly> irr_cache;

} // namespace

LaurentPoly irr_char_spo23(int a, int b)
{
  const Algebra &alg = spo23();
  if (!is_dominant(alg, weight23(a, b)))
    throw InvalidInput("(" + std::to_string(a) + "|" + std::to_string(b) + ") is not dominant for spo(2|3)");
  {
    std::lock_guard lock(irr_mu);
    auto it = irr_cache.find({a, b});
    if (it != irr_cache.end())
      return it->second;
  }
  LaurentPoly ch = irr23_uncached(a, b);
  if (!ch.nonnegative())
    throw MathError("irreducible character of (" + std::to_string(a) + "|" + std::to_string(b) +
                    ") has a negative coefficient");
  std::lock_guard lock(irr_mu);
  irr_cache.emplace(std::make_pair(a, b), ch);
  return ch;
}

namespace {

LaurentPoly irr23_uncached(int a, int b)
{
  const Algebra &alg = spo23();
  const Lattice lat = alg.lattice();
  const LaurentPoly one = LaurentPoly::constant(lat, 1);
  if (a == 0 && b == 0)
    return one;
  if (is_typical(alg, weight23(a, b)))
    return kac_character(alg, weight23(a, b));
  if (a != b + 1)
    throw MathError("unexpected atypical weight for spo(2|3)");
  if (a == 1)
    return kac_character(alg, weight23(1, 0)) + one;
  if (a == 2)
    return kac_character(alg, weight23(2, 1)) - irr_char_spo23(1, 0) - one;
  return kac_character(alg, weight23(a, b)) - irr_char_spo23(a - 1, b - 1);
}

} // namespace

LaurentPoly basis_character(const Algebra &alg, const Weight &nu, Basis basis)
{
  if (basis == Basis::Kac)
    return kac_character(alg, nu);
  if (alg == spo23())
    return irr_char_spo23(nu.delta_coeff(1), nu.epsilon_coeff(1));
  if (is_typical(alg, nu))
    return kac_character(alg, nu);
  throw InvalidInput("the irreducible character of atypical " + nu.to_string() + " on " + alg.name() +
                     " is not available; use the Kac basis");
}

// ---------------------------------------------------------------------------
// decomposition

mpz_class VirtualDecomposition::multiplicity(const Weight &w) const
{
  for (const auto &[v, c] : factors)
    if (v == w)
      return c;
  return 0;
}

std::string VirtualDecomposition::to_string() const
{
  std::ostringstream os;
  const char *sym = basis == Basis::Kac ? "K" : "L";
  bool first = true;
  for (const auto &[w, c] : factors) {
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1)
      os << mag.get_str();
    os << '[' << sym << w.bar_notation() << ']';
    first = false;
  }
  if (first)
    os << '0';
  if (!remainder.is_zero())
    os << " + remainder(" << remainder.to_string() << ')';
  return os.str();
}

VirtualDecomposition decompose(const Algebra &alg, const LaurentPoly &chi, Basis basis)
{
  if (!(chi.lattice() == alg.lattice()))
    throw DimensionMismatch();
  VirtualDecomposition d;
  d.basis = basis;
  LaurentPoly rest = chi;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading_term();
    if (!e.integral())
      break;
    Weight nu(alg, e);
    if (!is_dominant(alg, nu))
      break;
    LaurentPoly b = basis_character(alg, nu, basis);
    const auto &lead = b.leading_term();
    if (!(lead.first == e) || lead.second != 1) {
      if (basis == Basis::Kac)
        break;
      throw MathError("basis character of " + nu.to_string() + " does not have unit leading term");
    }
    mpz_class mult = c;
    rest -= b * mult;
    d.factors.emplace_back(nu, mult);
  }
  d.remainder = rest;
  return d;
}

LaurentPoly reconstruct(const Algebra &alg, const VirtualDecomposition &d)
{
  LaurentPoly r = d.remainder;
  for (const auto &[w, c] : d.factors)
    r += basis_character(alg, w, d.basis) * c;
  return r;
}

std::vector<std::pair<Weight, Weight>> block_violations(const Algebra &alg, const VirtualDecomposition &d)
{
  std::vector<std::pair<Weight, Weight>> bad;
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    for (std::size_t j = i + 1; j < d.factors.size(); ++j)
      if (!same_central_character(alg, d.factors[i].first, d.factors[j].first).linked)
        bad.emplace_back(d.factors[i].first, d.factors[j].first);
  return bad;
}

// ---------------------------------------------------------------------------
// tensor products with the natural module

std::vector<WeightMult> printed_family4(int l)
{
  return {{l + 3, l, 1}, {l + 1, l, 2}, {l + 2, l, 1}, {l, l - 1, 1}, {l + 2, l + 1, 1}, {l + 2, l - 1, 1}};
}

PrintedRule printed_tensor_rule(int a, int b)
{
  const Algebra &alg = spo23();
  if (!is_dominant(alg, weight23(a, b)))
    throw InvalidInput("weight is not dominant for spo(2|3)");
  PrintedRule r;
  bool typical = is_typical(alg, weight23(a, b));
  if (!typical) {
    r.family = 1;
    if (a == 0)
      r.terms = {{1, 0, 1}};
    else if (a == 1)
      r.terms = {{2, 0, 1}, {1, 1, 1}, {0, 0, 1}};
    else
      r.terms = {{a + 1, b, 1}, {a, a, 1}, {a, b, 1}};
    return r;
  }
  if (b <= 1 || a <= 1) {
    r.family = 2;
    if (b == 0 && a == 2)
      r.terms = {{3, 0, 1}, {2, 1, 1}, {1, 0, 2}};
    else if (b == 0)
      r.terms = {{a + 1, 0, 1}, {a, 1, 1}, {a - 1, 0, 1}};
    else if (a == 1 && b == 1)
      r.terms = {{2, 1, 1}, {1, 2, 1}, {1, 0, 2}};
    else if (b == 1 && a == 3)
      r.terms = {{4, 1, 1}, {3, 1, 1}, {3, 0, 1}, {3, 2, 1}, {2, 1, 2}, {1, 0, 2}};
    else if (b == 1)
      r.terms = {{a, 1, 1}, {a + 1, 1, 1}, {a - 1, 1, 1}, {a, 2, 1}, {a, 0, 1}};
    else
      r.terms = {{2, b, 1}, {1, b + 1, 1}, {1, b - 1, 1}};
    return r;
  }
  if (a == b) {
    r.family = 3;
    if (a == 2)
      r.terms = {{3, 2, 1}, {2, 1, 2}, {2, 2, 1}, {1, 2, 1}, {2, 3, 1}, {1, 0, 1}, {0, 0, 1}};
    else
      r.terms = {{a + 1, a, 1}, {a, a - 1, 2}, {a, a, 1}, {a - 1, a, 1}, {a, a + 1, 1}, {a - 1, a - 2, 1}};
    return r;
  }
  if (a == b + 2) {
    r.family = 4;
    r.terms = printed_family4(b);
    return r;
  }
  r.family = 5;
  r.terms = {{a + 1, b, 1}, {a, b, 1}, {a - 1, b, 1}, {a, b + 1, 1}, {a, b - 1, 1}};
  return r;
}

std::vector<WeightMult> as_weight_mults(const VirtualDecomposition &d)
{
  std::vector<WeightMult> out;
  for (const auto &[w, c] : d.factors)
    out.push_back({w.delta_coeff(1), w.epsilon_coeff(1), static_cast<int>(c.get_si())});
  return out;
}

namespace {

std::vector<WeightMult> normalised(std::vector<WeightMult> v)
{
  std::map<std::pair<int, int>, int> acc;
  for (const auto &t : v)
    acc[{t.a, t.b}] += t.mult;
  std::vector<WeightMult> out;
  for (const auto &[k, m] : acc)
    if (m != 0)
      out.push_back({k.first, k.second, m});
  return out;
}

} // namespace

TensorRow tensor_row(int a, int b)
{
  const Algebra &alg = spo23();
  TensorRow row;
  row.a = a;
  row.b = b;
  LaurentPoly prod = irr_char_spo23(a, b) * irr_char_spo23(1, 0);
  row.computed = decompose(alg, prod, Basis::Irreducible);
  if (!row.computed.complete())
    throw MathError("tensor product did not decompose");
  row.printed = printed_tensor_rule(a, b);
  row.matches = normalised(as_weight_mults(row.computed)) == normalised(row.printed.terms);
  return row;
}

std::vector<TensorRow> tensor_table(int lmax)
{
  std::vector<TensorRow> rows;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b)
      if (is_dominant(spo23(), weight23(a, b)))
        rows.push_back(tensor_row(a, b));
  return rows;
}

// ---------------------------------------------------------------------------
// Euler characters of hook Schur modules

ConjectureReport conjecture_check(const Algebra &alg, int bound, int cutoff)
{
  if (!alg.odd())
    throw InvalidInput("the conjecture concerns spo(2n|2m+1)");
  if (bound < 0)
    throw InvalidInput("bound must be non-negative");
  ConjectureReport rep;
  rep.algebra = alg;
  rep.bound = bound;
  rep.cutoff = cutoff;
  Parabolic p = Parabolic::removing(alg, {Weight::epsilon(alg, alg.m())});
  const bool small = alg == spo23();

  for (int k = 0; k <= bound; ++k)
    for (const auto &lam : partitions_of(k)) {
      if (lam[alg.n() + 1] > alg.m())
        continue;
      ConjectureRow row;
      row.lambda = lam;
      row.weight = sharp(lam, alg);
      row.euler = euler_character(p, levi_character(p, LeviModule::hook_schur(lam)));
      const auto &lead = row.euler.leading_term();
      row.leading_at_weight = lead.first == row.weight.doubled() && lead.second != 0;
      if (small) {
        const int a = row.weight.delta_coeff(1), b = row.weight.epsilon_coeff(1);
        row.irr = decompose(alg, row.euler, Basis::Irreducible);
        const bool typical = is_typical(alg, row.weight);
        row.close_to_zero = !typical && a < cutoff + 1;
        std::vector<WeightMult> expect{{a, b, 1}};
        if (!typical && a >= 1)
          expect.push_back({a - 1, std::max(b - 1, 0), 1});
        row.pattern_matches = row.irr->complete() && normalised(as_weight_mults(*row.irr)) == normalised(expect);
      } else {
        row.close_to_zero = k <= cutoff;
      }
      rep.rows.push_back(std::move(row));
    }

  // coefficient matrix over the W-dominant exponents
  std::vector<ExponentVector> cols;
  std::map<ExponentVector, std::size_t, GrlexLess> col_index;
  for (const auto &row : rep.rows)
    for (const auto &[e, c] : row.euler.terms())
      if (weyl_canonical(alg, e) == e && col_index.emplace(e, cols.size()).second)
        cols.push_back(e);
  QMatrix m;
  for (const auto &row : rep.rows) {
    QVector v(cols.size(), 0);
    for (const auto &[e, c] : row.euler.terms())
      if (auto it = col_index.find(e); it != col_index.end())
        v[it->second] = mpq_class(c);
    m.push_back(std::move(v));
  }
  rep.rank = rank(m, cols.size());
  rep.independent = rep.rank == rep.rows.size();
  rep.triangular = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ConjectureRow &r) { return r.leading_at_weight; });
  rep.pattern_holds = true;
  for (const auto &row : rep.rows)
    if (row.pattern_matches && !row.close_to_zero && !*row.pattern_matches)
      rep.pattern_holds = false;
  return rep;
}

} // namespace spochar
