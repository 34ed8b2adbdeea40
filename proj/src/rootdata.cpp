#include "spochar/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace spochar {

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int n, int ell)
{
  if (n < 1)
    throw InvalidInput("spo(2n|l) needs n >= 1");
  if (ell < 3)
    throw InvalidInput("spo(2n|l) needs l >= 3");
  n_ = n;
  m_ = ell / 2;
  odd_ = ell % 2 == 1;
}

Algebra Algebra::oracle(int n, int ell)
{
  if (ell >= 3)
    return Algebra(n, ell);
  if (n < 1 || (ell != 0 && ell != 1))
    throw InvalidInput("oracle algebras are spo(2n|0) and spo(2n|1)");
  Algebra a;
  a.n_ = n;
  a.m_ = 0;
  a.odd_ = ell == 1;
  return a;
}

Algebra Algebra::parse(const std::string &text)
{
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw InvalidInput("algebra must be written as <2n>|<l>, got '" + text + "'");
  try {
    std::size_t used = 0;
    int two_n = std::stoi(text.substr(0, bar), &used);
    if (used != bar)
      throw InvalidInput("bad algebra '" + text + "'");
    std::string rest = text.substr(bar + 1);
    int ell = std::stoi(rest, &used);
    if (used != rest.size())
      throw InvalidInput("bad algebra '" + text + "'");
    if (two_n % 2 != 0 || two_n < 2)
      throw InvalidInput("the symplectic rank 2n must be a positive even integer");
    return Algebra(two_n / 2, ell);
  } catch (const std::logic_error &) {
    throw InvalidInput("bad algebra '" + text + "'");
  }
}

std::string Algebra::spec() const
{
  return std::to_string(2 * n_) + "|" + std::to_string(ell());
}

std::string Algebra::name() const
{
  return "spo(" + spec() + ")";
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(const Algebra &alg, ExponentVector doubled) : n_(alg.n()), v_(std::move(doubled))
{
  if (v_.size() != alg.rank())
    throw DimensionMismatch();
}

Weight Weight::from_coefficients(const Algebra &alg, const std::vector<int> &a, const std::vector<int> &b)
{
  if (a.size() > static_cast<std::size_t>(alg.n()) || b.size() > static_cast<std::size_t>(alg.m()))
    throw InvalidInput("too many weight coefficients");
  ExponentVector v(alg.rank());
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = 2 * a[i];
  for (std::size_t j = 0; j < b.size(); ++j)
    v[static_cast<std::size_t>(alg.n()) + j] = 2 * b[j];
  return Weight(alg, v);
}

Weight Weight::zero(const Algebra &alg)
{
  return Weight(alg, ExponentVector(alg.rank()));
}

Weight Weight::delta(const Algebra &alg, int i)
{
  if (i < 1 || i > alg.n())
    throw InvalidInput("delta index out of range");
  ExponentVector v(alg.rank());
  v[static_cast<std::size_t>(i - 1)] = 2;
  return Weight(alg, v);
}

Weight Weight::epsilon(const Algebra &alg, int j)
{
  if (j < 1 || j > alg.m())
    throw InvalidInput("epsilon index out of range");
  ExponentVector v(alg.rank());
  v[static_cast<std::size_t>(alg.n() + j - 1)] = 2;
  return Weight(alg, v);
}

Weight Weight::parse(const Algebra &alg, const std::string &text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  ExponentVector v(alg.rank());
  if (s.empty() || s == "0")
    return Weight(alg, v);

  auto fail = [&]() { return InvalidInput("cannot parse weight '" + text + "'"); };
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '|') {
      ++pos;
    } else if (!first && s[pos] != '+' && s[pos] != '-') {
      throw fail();
    }
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    first = false;
    // coefficient: integer or p/2
    long num = 1, den = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos > start)
      num = std::stol(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start)
        throw fail();
      den = std::stol(s.substr(start, pos - start));
    }
    if (den != 1 && den != 2)
      throw InvalidInput("weight coefficients must be integers or halves: '" + text + "'");
    if (pos >= s.size() || (s[pos] != 'd' && s[pos] != 'e'))
      throw fail();
    char kind = s[pos++];
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw fail();
    int idx = std::stoi(s.substr(start, pos - start));
    std::size_t slot;
    if (kind == 'd') {
      if (idx < 1 || idx > alg.n())
        throw InvalidInput("delta index out of range in '" + text + "'");
      slot = static_cast<std::size_t>(idx - 1);
    } else {
      if (idx < 1 || idx > alg.m())
        throw InvalidInput("epsilon index out of range in '" + text + "'");
      slot = static_cast<std::size_t>(alg.n() + idx - 1);
    }
    v[slot] += static_cast<int>(sign * num * (2 / den));
  }
  return Weight(alg, v);
}

int Weight::delta_coeff(int i) const
{
  int d = delta_doubled(i);
  if (d % 2 != 0)
    throw InvalidInput("half-integral weight coefficient");
  return d / 2;
}

int Weight::epsilon_coeff(int j) const
{
  int d = epsilon_doubled(j);
  if (d % 2 != 0)
    throw InvalidInput("half-integral weight coefficient");
  return d / 2;
}

Weight &Weight::operator+=(const Weight &o)
{
  if (o.n_ != n_)
    throw DimensionMismatch();
  v_ += o.v_;
  return *this;
}

Weight &Weight::operator-=(const Weight &o)
{
  if (o.n_ != n_)
    throw DimensionMismatch();
  v_ -= o.v_;
  return *this;
}

Weight Weight::operator-() const
{
  Weight r = *this;
  r.v_ = -r.v_;
  return r;
}

Weight Weight::scaled(int k) const
{
  Weight r = *this;
  r.v_ = r.v_.scaled(k);
  return r;
}

std::string Weight::to_string() const
{
  std::ostringstream os;
  auto coef = [](int d) {
    std::string s = d % 2 == 0 ? std::to_string(std::abs(d) / 2) : std::to_string(std::abs(d)) + "/2";
    return s;
  };
  bool any = false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    int d = v_[i];
    if (d == 0)
      continue;
    if (d < 0)
      os << '-';
    else if (any)
      os << '+';
    os << coef(d) << 'd' << i + 1;
    any = true;
  }
  bool any_e = false;
  for (std::size_t j = static_cast<std::size_t>(n_); j < v_.size(); ++j) {
    int d = v_[j];
    if (d == 0)
      continue;
    if (!any_e && any)
      os << '|';
    else if (any_e && d > 0)
      os << '+';
    if (d < 0)
      os << '-';
    os << coef(d) << 'e' << j - static_cast<std::size_t>(n_) + 1;
    any_e = true;
  }
  if (!any && !any_e)
    return "0";
  return os.str();
}

std::string Weight::bar_notation() const
{
  std::ostringstream os;
  auto put = [&](int d) {
    if (d % 2 == 0)
      os << d / 2;
    else
      os << d << "/2";
  };
  os << '(';
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    if (i)
      os << ',';
    put(v_[i]);
  }
  os << '|';
  for (std::size_t j = static_cast<std::size_t>(n_); j < v_.size(); ++j) {
    if (j > static_cast<std::size_t>(n_))
      os << ',';
    put(v_[j]);
  }
  if (v_.size() == static_cast<std::size_t>(n_))
    os << '-';
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// roots

mpq_class bilinear_form(const Weight &a, const Weight &b)
{
  if (a.n() != b.n() || a.size() != b.size())
    throw DimensionMismatch();
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long t = static_cast<long>(a.doubled()[i]) * b.doubled()[i];
    s += static_cast<int>(i) < a.n() ? t : -t;
  }
  mpq_class r(s, 4);
  r.canonicalize();
  return r;
}

std::vector<Root> RootSystem::all_positive() const
{
  std::vector<Root> r = even_positive;
  r.insert(r.end(), odd_positive.begin(), odd_positive.end());
  return r;
}

RootSystem positive_roots(const Algebra &alg)
{
  const int n = alg.n(), m = alg.m();
  RootSystem rs;
  auto d = [&](int i) { return Weight::delta(alg, i); };
  auto e = [&](int j) { return Weight::epsilon(alg, j); };
  auto even = [&](Weight w) { rs.even_positive.push_back({std::move(w), Parity::Even, true}); };
  auto odd = [&](Weight w, bool isotropic) {
    Root r{std::move(w), Parity::Odd, true};
    rs.odd_positive.push_back(r);
    if (isotropic)
      rs.isotropic_positive.push_back(r);
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      even(d(i) - d(j));
      even(d(i) + d(j));
    }
  for (int i = 1; i <= n; ++i)
    even(d(i).scaled(2));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      even(e(i) - e(j));
      even(e(i) + e(j));
    }
  if (alg.odd())
    for (int i = 1; i <= m; ++i)
      even(e(i));

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      odd(d(i) - e(j), true);
      odd(d(i) + e(j), true);
    }
  if (alg.odd())
    for (int i = 1; i <= n; ++i)
      odd(d(i), false);

  auto simple = [&](Weight w, Parity p) { rs.simple.push_back({std::move(w), p, true}); };
  for (int i = 1; i < n; ++i)
    simple(d(i) - d(i + 1), Parity::Even);
  if (m == 0) {
    if (alg.odd())
      simple(d(n), Parity::Odd);
    else
      simple(d(n).scaled(2), Parity::Even);
  } else {
    simple(d(n) - e(1), Parity::Odd);
    for (int j = 1; j < m; ++j)
      simple(e(j) - e(j + 1), Parity::Even);
    if (alg.odd())
      simple(e(m), Parity::Even);
    else
      simple(e(m - 1) + e(m), Parity::Even);
  }
  return rs;
}

namespace {

Weight half_sum(const Algebra &alg, const std::vector<Root> &roots)
{
  ExponentVector v(alg.rank());
  for (const auto &r : roots)
    v += r.weight.doubled();
  // v is twice the sum, i.e. four times the half sum
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] % 2 != 0)
      throw MathError("half sum of roots is not half-integral");
    v[i] /= 2;
  }
  return Weight(alg, v);
}

} // namespace

Weight rho0(const Algebra &alg)
{
  return half_sum(alg, positive_roots(alg).even_positive);
}

Weight rho1(const Algebra &alg)
{
  return half_sum(alg, positive_roots(alg).odd_positive);
}

Weight rho(const Algebra &alg)
{
  return rho0(alg) - rho1(alg);
}

Weight rho_closed_form(const Algebra &alg)
{
  const int n = alg.n(), m = alg.m();
  ExponentVector v(alg.rank());
  // doubled: (i - m) -> 2i - 2m, (i - m - 1/2) -> 2i - 2m - 1
  for (int i = 1; i <= n; ++i)
    v[static_cast<std::size_t>(n - i)] = 2 * (i - m) - (alg.odd() ? 1 : 0);
  for (int j = 1; j <= m; ++j)
    v[static_cast<std::size_t>(n + j - 1)] = 2 * (m - j) + (alg.odd() ? 1 : 0);
  return Weight(alg, v);
}

bool is_dominant(const Algebra &alg, const Weight &lambda)
{
  if (lambda.size() != alg.rank())
    throw DimensionMismatch();
  if (!lambda.integral())
    throw InvalidInput("dominance is only defined for integral weights, got " + lambda.to_string());
  const int n = alg.n(), m = alg.m();
  std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(m));
  for (int i = 1; i <= n; ++i)
    a[static_cast<std::size_t>(i - 1)] = lambda.delta_coeff(i);
  for (int j = 1; j <= m; ++j)
    b[static_cast<std::size_t>(j - 1)] = lambda.epsilon_coeff(j);

  for (int i = 0; i + 1 < n; ++i)
    if (a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)])
      return false;
  if (a.back() < 0)
    return false;
  if (m > 0) {
    for (int j = 0; j + 2 < m; ++j)
      if (b[static_cast<std::size_t>(j)] < b[static_cast<std::size_t>(j + 1)])
        return false;
    if (alg.odd()) {
      if (m >= 2 && b[static_cast<std::size_t>(m - 2)] < b[static_cast<std::size_t>(m - 1)])
        return false;
      if (b.back() < 0)
        return false;
    } else {
      if (m >= 2 && b[static_cast<std::size_t>(m - 2)] < std::abs(b.back()))
        return false;
    }
    // hook clause: a_n < m forces b_{a_n+1} = ... = b_m = 0
    int an = a.back();
    if (an < m)
      for (int j = an; j < m; ++j)
        if (b[static_cast<std::size_t>(j)] != 0)
          return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// partitions

Partition::Partition(std::vector<int> parts)
{
  while (!parts.empty() && parts.back() == 0)
    parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

Partition Partition::parse(const std::string &text)
{
  std::vector<int> parts;
  std::string tok;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty() || s == "0" || s == "()" || s == "empty")
    return Partition();
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size())
        throw InvalidInput("bad partition '" + text + "'");
      parts.push_back(v);
    } catch (const std::logic_error &) {
      throw InvalidInput("bad partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const
{
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::operator[](int i) const
{
  if (i < 1 || i > length())
    return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const
{
  std::vector<int> c;
  if (parts_.empty())
    return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j)
        ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const
{
  if (parts_.empty())
    return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out)
{
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int k)
{
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

Weight sharp(const Partition &lambda, const Algebra &alg)
{
  const int n = alg.n(), m = alg.m();
  if (lambda[n + 1] > m)
    throw InvalidInput("partition " + lambda.to_string() + " violates the hook condition lambda_{n+1} <= m");
  Partition conj = lambda.conjugate();
  std::vector<int> a, b;
  for (int i = 1; i <= n; ++i)
    a.push_back(lambda[i]);
  for (int j = 1; j <= m; ++j)
    b.push_back(std::max(conj[j] - n, 0));
  return Weight::from_coefficients(alg, a, b);
}

Partition sharp_inverse(const Weight &lambda, const Algebra &alg)
{
  if (!is_dominant(alg, lambda))
    throw InvalidInput("weight " + lambda.to_string() + " is not dominant");
  std::vector<int> parts;
  for (int i = 1; i <= alg.n(); ++i)
    parts.push_back(lambda.delta_coeff(i));
  int bmax = 0;
  for (int j = 1; j <= alg.m(); ++j) {
    if (lambda.epsilon_coeff(j) < 0)
      throw InvalidInput("sharp_inverse needs b_m >= 0");
    bmax = std::max(bmax, lambda.epsilon_coeff(j));
  }
  for (int r = 1; r <= bmax; ++r) {
    int count = 0;
    for (int j = 1; j <= alg.m(); ++j)
      if (lambda.epsilon_coeff(j) >= r)
        ++count;
    parts.push_back(count);
  }
  return Partition(parts);
}

// ---------------------------------------------------------------------------
// Weyl group

int SignedPermutation::determinant() const
{
  int s = 1;
  for (int x : sign)
    s *= x;
  // permutation parity by cycle counting
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      s = -s;
  }
  return s;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation &inner) const
{
  SignedPermutation r;
  r.image.resize(inner.image.size());
  r.sign.resize(inner.image.size());
  for (std::size_t i = 0; i < inner.image.size(); ++i) {
    auto j = static_cast<std::size_t>(inner.image[i]);
    r.image[i] = image[j];
    r.sign[i] = inner.sign[i] * sign[j];
  }
  return r;
}

WeylElement::WeylElement(SignedPermutation sp, SignedPermutation so)
    : sp_(std::move(sp)), so_(std::move(so)), sign_(sp_.determinant() * so_.determinant())
{
}

WeylElement WeylElement::identity(const Algebra &alg)
{
  SignedPermutation sp, so;
  for (int i = 0; i < alg.n(); ++i) {
    sp.image.push_back(i);
    sp.sign.push_back(1);
  }
  for (int j = 0; j < alg.m(); ++j) {
    so.image.push_back(j);
    so.sign.push_back(1);
  }
  return WeylElement(sp, so);
}

ExponentVector WeylElement::apply(const ExponentVector &v) const
{
  const std::size_t n = sp_.image.size();
  if (v.size() != n + so_.image.size())
    throw DimensionMismatch();
  ExponentVector r(v.size());
  for (std::size_t i = 0; i < n; ++i)
    r[static_cast<std::size_t>(sp_.image[i])] = sp_.sign[i] * v[i];
  for (std::size_t j = 0; j < so_.image.size(); ++j)
    r[n + static_cast<std::size_t>(so_.image[j])] = so_.sign[j] * v[n + j];
  return r;
}

Weight WeylElement::apply(const Weight &w) const
{
  return w.with_doubled(apply(w.doubled()));
}

LaurentPoly WeylElement::apply(const LaurentPoly &p) const
{
  return p.map_exponents([this](const ExponentVector &e) { return apply(e); });
}

WeylElement WeylElement::operator*(const WeylElement &o) const
{
  return WeylElement(sp_.compose(o.sp_), so_.compose(o.so_));
}

namespace {

std::vector<WeylElement> build_weyl_group(const Algebra &alg)
{
  const int n = alg.n(), m = alg.m();
  auto block = [](int k, bool even_flips) {
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (even_flips && __builtin_popcount(mask) % 2 != 0)
          continue;
        SignedPermutation sp;
        sp.image = perm;
        for (int i = 0; i < k; ++i)
          sp.sign.push_back((mask >> i) & 1u ? -1 : 1);
        out.push_back(sp);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };
  auto sp_part = block(n, false);
  auto so_part = block(m, !alg.odd());
  std::vector<WeylElement> group;
  group.reserve(sp_part.size() * so_part.size());
  for (const auto &a : sp_part)
    for (const auto &b : so_part)
      group.emplace_back(a, b);
  return group;
}

} // namespace

const std::vector<WeylElement> &weyl_group(const Algebra &alg)
{
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::vector<WeylElement>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(alg.n(), alg.m(), alg.odd());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_weyl_group(alg)).first;
  return it->second;
}

WeylElement reflection(const Algebra &alg, const Weight &root)
{
  mpq_class rr = bilinear_form(root, root);
  if (rr == 0)
    throw InvalidInput("cannot reflect in an isotropic root");
  const int n = alg.n();
  SignedPermutation sp, so;
  sp.image.resize(static_cast<std::size_t>(n));
  sp.sign.resize(static_cast<std::size_t>(n));
  so.image.resize(static_cast<std::size_t>(alg.m()));
  so.sign.resize(static_cast<std::size_t>(alg.m()));
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    ExponentVector basis(alg.rank());
    basis[i] = 2;
    Weight b(alg, basis);
    mpq_class c = 2 * bilinear_form(b, root) / rr;
    // image = b - c * root (doubled)
    ExponentVector img = basis;
    for (std::size_t k = 0; k < img.size(); ++k) {
      mpq_class x = mpq_class(img[k]) - c * root.doubled()[k];
      if (x.get_den() != 1)
        throw MathError("reflection is not a signed permutation");
      img[k] = static_cast<int>(x.get_num().get_si());
    }
    int target = -1, sgn = 0;
    for (std::size_t k = 0; k < img.size(); ++k)
      if (img[k] != 0) {
        if (target >= 0 || std::abs(img[k]) != 2)
          throw MathError("reflection is not a signed permutation");
        target = static_cast<int>(k);
        sgn = img[k] > 0 ? 1 : -1;
      }
    if (target < 0)
      throw MathError("reflection is not a signed permutation");
    bool from_sp = static_cast<int>(i) < n, to_sp = target < n;
    if (from_sp != to_sp)
      throw MathError("reflection mixes the two blocks");
    if (from_sp) {
      sp.image[i] = target;
      sp.sign[i] = sgn;
    } else {
      so.image[i - static_cast<std::size_t>(n)] = target - n;
      so.sign[i - static_cast<std::size_t>(n)] = sgn;
    }
  }
  return WeylElement(sp, so);
}

ExponentVector weyl_canonical(const Algebra &alg, const ExponentVector &v)
{
  const auto n = static_cast<std::size_t>(alg.n());
  const auto m = static_cast<std::size_t>(alg.m());
  ExponentVector r(v.size());
  std::vector<int> a, b;
  for (std::size_t i = 0; i < n; ++i)
    a.push_back(std::abs(v[i]));
  int sign_product = 1;
  bool has_zero = false;
  for (std::size_t j = 0; j < m; ++j) {
    int x = v[n + j];
    b.push_back(std::abs(x));
    if (x == 0)
      has_zero = true;
    else if (x < 0)
      sign_product = -sign_product;
  }
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  if (!alg.odd() && m > 0 && !has_zero && sign_product < 0)
    b.back() = -b.back();
  for (std::size_t i = 0; i < n; ++i)
    r[i] = a[i];
  for (std::size_t j = 0; j < m; ++j)
    r[n + j] = b[j];
  return r;
}

LaurentPoly alternant(const std::vector<WeylElement> &group, Lattice lattice, const ExponentVector &v)
{
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(group.size());
  for (const auto &w : group)
    terms.emplace_back(w.apply(v), w.sign());
  return LaurentPoly::from_terms(lattice, std::move(terms));
}

LaurentPoly alternant(const Algebra &alg, const ExponentVector &v)
{
  return alternant(weyl_group(alg), alg.lattice(), v);
}

bool is_weyl_invariant(const Algebra &alg, const LaurentPoly &p)
{
  // the group is generated by coordinate sign changes and transpositions,
  // but checking every element is cheap at this scale
  for (const auto &w : weyl_group(alg))
    if (!(w.apply(p) == p))
      return false;
  return true;
}

} // namespace spochar
