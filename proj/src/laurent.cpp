#include "spochar/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace spochar {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::size_t size)
{
  if (size > kMaxVars)
    throw InvalidInput("too many variables for ExponentVector");
  size_ = static_cast<std::uint8_t>(size);
}

ExponentVector::ExponentVector(std::initializer_list<int> doubled)
    : ExponentVector(doubled.size())
{
  std::copy(doubled.begin(), doubled.end(), e_.begin());
}

ExponentVector ExponentVector::from_doubled(std::span<const int> doubled)
{
  ExponentVector v(doubled.size());
  std::copy(doubled.begin(), doubled.end(), v.e_.begin());
  return v;
}

int ExponentVector::degree() const
{
  int d = 0;
  for (std::size_t i = 0; i < size_; ++i)
    d += e_[i];
  return d;
}

bool ExponentVector::is_zero() const
{
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] != 0)
      return false;
  return true;
}

bool ExponentVector::integral() const
{
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] % 2 != 0)
      return false;
  return true;
}

ExponentVector &ExponentVector::operator+=(const ExponentVector &o)
{
  if (o.size_ != size_)
    throw DimensionMismatch();
  for (std::size_t i = 0; i < size_; ++i)
    e_[i] += o.e_[i];
  return *this;
}

ExponentVector &ExponentVector::operator-=(const ExponentVector &o)
{
  if (o.size_ != size_)
    throw DimensionMismatch();
  for (std::size_t i = 0; i < size_; ++i)
    e_[i] -= o.e_[i];
  return *this;
}

ExponentVector ExponentVector::operator-() const
{
  ExponentVector r = *this;
  for (std::size_t i = 0; i < size_; ++i)
    r.e_[i] = -r.e_[i];
  return r;
}

ExponentVector ExponentVector::scaled(int k) const
{
  ExponentVector r = *this;
  for (std::size_t i = 0; i < size_; ++i)
    r.e_[i] *= k;
  return r;
}

std::size_t ExponentVector::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint32_t>(e_[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering grlex_compare(const ExponentVector &a, const ExponentVector &b)
{
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0)
      return c;
  return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

bool term_less(const LaurentPoly::Term &a, const LaurentPoly::Term &b)
{
  return grlex_compare(a.first, b.first) < 0;
}

} // namespace

LaurentPoly LaurentPoly::constant(Lattice lattice, const mpz_class &c)
{
  return monomial(lattice, ExponentVector(lattice.size()), c);
}

LaurentPoly LaurentPoly::monomial(Lattice lattice, const ExponentVector &e, const mpz_class &c)
{
  if (e.size() != lattice.size())
    throw DimensionMismatch();
  LaurentPoly p(lattice);
  if (c != 0)
    p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Lattice lattice, std::vector<Term> terms)
{
  LaurentPoly p(lattice);
  for (const auto &t : terms)
    if (t.first.size() != lattice.size())
      throw DimensionMismatch();
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else {
      if (!p.terms_.empty() && p.terms_.back().second == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0)
    p.terms_.pop_back();
  return p;
}

void LaurentPoly::check_lattice(const LaurentPoly &o) const
{
  if (!(lat_ == o.lat_))
    throw DimensionMismatch();
}

mpz_class LaurentPoly::coefficient(const ExponentVector &e) const
{
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, 0}, term_less);
  if (it != terms_.end() && it->first == e)
    return it->second;
  return 0;
}

const LaurentPoly::Term &LaurentPoly::leading_term() const
{
  if (terms_.empty())
    throw MathError("leading term of the zero polynomial");
  return terms_.back();
}

ExponentVector LaurentPoly::min_exponents() const
{
  ExponentVector r(lat_.size());
  if (terms_.empty())
    return r;
  r = terms_.front().first;
  for (const auto &[e, c] : terms_)
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = std::min(r[i], e[i]);
  return r;
}

ExponentVector LaurentPoly::max_exponents() const
{
  ExponentVector r(lat_.size());
  if (terms_.empty())
    return r;
  r = terms_.front().first;
  for (const auto &[e, c] : terms_)
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = std::max(r[i], e[i]);
  return r;
}

namespace {

template <bool Subtract>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term> &a,
                                           const std::vector<LaurentPoly::Term> &b)
{
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    int cmp;
    if (i == a.end())
      cmp = 1;
    else if (j == b.end())
      cmp = -1;
    else {
      auto c = grlex_compare(i->first, j->first);
      cmp = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (cmp < 0) {
      out.push_back(*i++);
    } else if (cmp > 0) {
      if constexpr (Subtract)
        out.emplace_back(j->first, -j->second);
      else
        out.push_back(*j);
      ++j;
    } else {
      mpz_class c = Subtract ? mpz_class(i->second - j->second) : mpz_class(i->second + j->second);
      if (c != 0)
        out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
  check_lattice(o);
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
  check_lattice(o);
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
  a.check_lattice(b);
  LaurentPoly r(a.lat_);
  if (a.is_zero() || b.is_zero())
    return r;
  if (b.size() == 1) {
    r = a.shifted(b.terms_[0].first);
    return r *= b.terms_[0].second;
  }
  if (a.size() == 1) {
    r = b.shifted(a.terms_[0].first);
    return r *= a.terms_[0].second;
  }
  std::unordered_map<ExponentVector, mpz_class, ExponentHash> acc;
  acc.reserve(a.size() * 2 + b.size() * 2);
  mpz_class tmp;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      mpz_mul(tmp.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[ea + eb] += tmp;
    }
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto &[e, c] : acc)
    if (c != 0)
      out.emplace_back(e, std::move(c));
  std::sort(out.begin(), out.end(), term_less);
  r.terms_ = std::move(out);
  return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o)
{
  *this = *this * o;
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const mpz_class &c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly r = *this;
  for (auto &t : r.terms_)
    t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector &shift) const
{
  if (shift.size() != lat_.size())
    throw DimensionMismatch();
  LaurentPoly r = *this;
  // grlex is translation invariant, so the order survives
  for (auto &t : r.terms_)
    t.first += shift;
  return r;
}

mpz_class LaurentPoly::evaluate_at_one() const
{
  mpz_class s = 0;
  for (const auto &t : terms_)
    s += t.second;
  return s;
}

bool LaurentPoly::nonnegative() const
{
  return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.second > 0; });
}

std::string exponent_to_string(const ExponentVector &e, int n)
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int d = e[i];
    if (d == 0)
      continue;
    if (d < 0)
      os << '-';
    else if (!first)
      os << '+';
    int a = std::abs(d);
    if (a % 2 == 0) {
      if (a != 2)
        os << a / 2;
    } else {
      os << a << "/2";
    }
    if (static_cast<int>(i) < n)
      os << 'd' << i + 1;
    else
      os << 'e' << static_cast<int>(i) - n + 1;
    first = false;
  }
  if (first)
    return "0";
  return os.str();
}

std::string LaurentPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    mpz_class a = abs(c);
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (e.is_zero()) {
      os << a.get_str();
    } else {
      if (a != 1)
        os << a.get_str();
      os << "e^(" << exponent_to_string(e, lat_.n) << ")";
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// exact division

LaurentPoly exact_div(const LaurentPoly &p, const LaurentPoly &q)
{
  if (!(p.lattice() == q.lattice()))
    throw DimensionMismatch();
  if (q.is_zero())
    throw InvalidInput("division by the zero polynomial");
  const Lattice lat = p.lattice();
  if (p.is_zero())
    return LaurentPoly(lat);
  if (q.size() == 1) {
    const auto &[e, c] = q.terms()[0];
    LaurentPoly r = p.shifted(-e);
    std::vector<LaurentPoly::Term> out;
    out.reserve(r.size());
    for (const auto &[re, rc] : r.terms()) {
      if (!mpz_divisible_p(rc.get_mpz_t(), c.get_mpz_t()))
        throw NotDivisible();
      out.emplace_back(re, mpz_class(rc / c));
    }
    return LaurentPoly::from_terms(lat, std::move(out));
  }

  // Shift both into the ordinary polynomial ring; an exact Laurent quotient
  // then lives there as well, shifted by minp - minq.
  const ExponentVector minp = p.min_exponents();
  const ExponentVector minq = q.min_exponents();
  const LaurentPoly qs = q.shifted(-minq);
  const auto &[lq_exp, lq_coef] = qs.leading_term();

  std::map<ExponentVector, mpz_class, GrlexLess> rem;
  for (const auto &[e, c] : p.terms())
    rem.emplace_hint(rem.end(), e - minp, c);

  std::vector<LaurentPoly::Term> quotient;
  mpz_class tmp;
  while (!rem.empty()) {
    auto last = std::prev(rem.end());
    ExponentVector diff = last->first - lq_exp;
    for (std::size_t i = 0; i < diff.size(); ++i)
      if (diff[i] < 0)
        throw NotDivisible();
    if (!mpz_divisible_p(last->second.get_mpz_t(), lq_coef.get_mpz_t()))
      throw NotDivisible();
    mpz_class c = last->second / lq_coef;
    for (const auto &[e, qc] : qs.terms()) {
      auto [it, inserted] = rem.try_emplace(e + diff, 0);
      mpz_mul(tmp.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
      it->second -= tmp;
      if (it->second == 0)
        rem.erase(it);
    }
    quotient.emplace_back(diff, std::move(c));
  }
  LaurentPoly r = LaurentPoly::from_terms(lat, std::move(quotient));
  return r.shifted(minp - minq);
}

// ---------------------------------------------------------------------------
// factored rationals

bool BinomialFactor::canonical() const
{
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0)
      return mu[i] < 0;
  return false;
}

LaurentPoly BinomialFactor::expand(Lattice lattice) const
{
  LaurentPoly r = LaurentPoly::constant(lattice, 1);
  r += LaurentPoly::monomial(lattice, mu, sign);
  return r;
}

bool operator<(const BinomialFactor &a, const BinomialFactor &b)
{
  if (auto c = grlex_compare(a.mu, b.mu); c != 0)
    return c < 0;
  return a.sign < b.sign;
}

namespace {

// multiplies p by (1 + s e^mu)
void multiply_binomial(LaurentPoly &p, const BinomialFactor &f)
{
  LaurentPoly s = p.shifted(f.mu);
  if (f.sign > 0)
    p += s;
  else
    p -= s;
}

} // namespace

LaurentPoly FactoredPolynomial::expand(Lattice lattice) const
{
  LaurentPoly r = LaurentPoly::monomial(lattice, unit, unit_sign);
  for (const auto &f : factors)
    multiply_binomial(r, f);
  return r;
}

FactoredRational::FactoredRational(LaurentPoly numerator, std::vector<BinomialFactor> denominator)
    : numerator_(std::move(numerator)), unit_(numerator_.lattice().size())
{
  for (auto &f : denominator) {
    if (f.mu.size() != unit_.size())
      throw DimensionMismatch();
    if (f.mu.is_zero())
      throw InvalidInput("denominator factor with zero exponent");
    if (f.sign != 1 && f.sign != -1)
      throw InvalidInput("denominator factor sign must be +1 or -1");
    if (!f.canonical()) {
      // 1/(1 + s e^mu) = s e^{-mu} / (1 + s e^{-mu})
      unit_ -= f.mu;
      unit_sign_ *= f.sign;
      f.mu = -f.mu;
    }
  }
  std::sort(denominator.begin(), denominator.end());
  denominator_ = std::move(denominator);
}

LaurentPoly FactoredRational::scaled_numerator() const
{
  LaurentPoly r = numerator_.shifted(unit_);
  return r *= mpz_class(unit_sign_);
}

LaurentPoly rational_weyl_sum(std::span<const SignedRational> terms, const FactoredPolynomial *prefactor)
{
  if (terms.empty())
    throw InvalidInput("rational_weyl_sum needs at least one term");
  const Lattice lat = terms.front().value.numerator().lattice();

  // least common multiple of the denominators, as a multiset
  std::map<BinomialFactor, int> common;
  for (const auto &t : terms) {
    if (!(t.value.numerator().lattice() == lat))
      throw DimensionMismatch();
    std::map<BinomialFactor, int> counts;
    for (const auto &f : t.value.denominator())
      ++counts[f];
    for (const auto &[f, k] : counts)
      common[f] = std::max(common[f], k);
  }

  LaurentPoly total(lat);
  for (const auto &t : terms) {
    std::map<BinomialFactor, int> missing = common;
    for (const auto &f : t.value.denominator())
      --missing[f];
    LaurentPoly num = t.value.scaled_numerator();
    if (t.sign < 0)
      num = -num;
    for (const auto &[f, k] : missing)
      for (int i = 0; i < k; ++i)
        multiply_binomial(num, f);
    total += num;
  }

  if (prefactor) {
    std::vector<BinomialFactor> leftover;
    for (const auto &f : prefactor->factors) {
      BinomialFactor g = f;
      ExponentVector unit(lat.size());
      int unit_sign = 1;
      if (!g.canonical()) {
        // 1 + s e^mu = s e^mu (1 + s e^{-mu})
        unit += g.mu;
        unit_sign = g.sign;
        g.mu = -g.mu;
      }
      total = total.shifted(unit) * mpz_class(unit_sign);
      auto it = common.find(g);
      if (it != common.end() && it->second > 0)
        --it->second;
      else
        leftover.push_back(g);
    }
    for (const auto &g : leftover)
      multiply_binomial(total, g);
    total = total.shifted(prefactor->unit) * mpz_class(prefactor->unit_sign);
  }

  for (const auto &[f, k] : common)
    for (int i = 0; i < k; ++i)
      total = exact_div(total, f.expand(lat));
  return total;
}

} // namespace spochar
