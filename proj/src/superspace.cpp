#include "spochar/superspace.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "spochar/errors.hpp"
#include "spochar/linalg.hpp"

namespace spochar {

void add_term(SuperElement &el, const SuperMonomial &m, const mpq_class &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = el.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      el.erase(it);
  }
}

SuperElement operator+(const SuperElement &a, const SuperElement &b)
{
  SuperElement r = a;
  for (const auto &[m, c] : b)
    add_term(r, m, c);
  return r;
}

SuperElement scaled(const SuperElement &a, const mpq_class &c)
{
  SuperElement r;
  if (c == 0)
    return r;
  for (const auto &[m, v] : a)
    r.emplace(m, v * c);
  return r;
}

namespace {

int popcount_below(std::uint32_t bits, int b)
{
  return std::popcount(bits & ((1u << b) - 1u));
}

} // namespace

SuperSpace::SuperSpace(const Algebra &alg)
    : alg_(alg), n_(alg.n()), m_(alg.m()), c_(2 * alg.m() + (alg.odd() ? 1 : 0))
{
  if (static_cast<std::size_t>(c_) > kMaxCommuting || 2 * n_ > kMaxGrassmann)
    throw InvalidInput("superspace supports n <= 8 and l <= 9, got " + alg.name());

  RootSystem rs = positive_roots(alg);
  for (const auto &r : rs.all_positive())
    roots_.push_back(r.weight);
  const std::size_t npos = roots_.size();
  for (std::size_t i = 0; i < npos; ++i)
    roots_.push_back(-roots_[i]);

  for (const auto &r : roots_) {
    std::size_t nullity = 0;
    FirstOrderOperator op = solve_operator(r.doubled(), nullity);
    if (nullity != 1)
      throw MathError("root space of " + r.to_string() + " has dimension " + std::to_string(nullity));
    root_ops_.push_back(std::move(op));
  }

  // Cartan part: diagonal operators commuting with the Laplacian
  std::vector<int> gens;
  for (int g = 0; g < generators(); ++g)
    gens.push_back(g);
  QMatrix eqs;
  for (const auto &f : monomials(2)) {
    SuperElement fe;
    fe.emplace(f, 1);
    QVector row;
    for (int g : gens) {
      SuperElement img = laplacian(apply({{{g, g, 1}}, ExponentVector(alg.rank()), Parity::Even}, fe));
      row.push_back(img.empty() ? mpq_class(0) : img.begin()->second);
    }
    eqs.push_back(std::move(row));
  }
  for (const auto &v : nullspace(eqs, gens.size())) {
    FirstOrderOperator h;
    h.weight = ExponentVector(alg.rank());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (v[i] != 0)
        h.terms.emplace_back(gens[i], gens[i], v[i]);
    cartan_.push_back(std::move(h));
  }
  if (cartan_.size() != alg.rank())
    throw MathError("Cartan subalgebra has dimension " + std::to_string(cartan_.size()));
}

int SuperSpace::x0() const
{
  if (!alg_.odd())
    throw InvalidInput(alg_.name() + " has no x_0");
  return 2 * m_;
}

ExponentVector SuperSpace::generator_weight(int g) const
{
  ExponentVector w(alg_.rank());
  if (g < m_)
    w[static_cast<std::size_t>(n_ + g)] = 2;
  else if (g < 2 * m_)
    w[static_cast<std::size_t>(n_ + g - m_)] = -2;
  else if (g < c_)
    ;
  else if (g < c_ + n_)
    w[static_cast<std::size_t>(g - c_)] = 2;
  else
    w[static_cast<std::size_t>(g - c_ - n_)] = -2;
  return w;
}

std::string SuperSpace::generator_name(int g) const
{
  if (g < m_)
    return "x" + std::to_string(g + 1);
  if (g < 2 * m_)
    return "x̄" + std::to_string(g - m_ + 1);
  if (g < c_)
    return "x0";
  if (g < c_ + n_)
    return "ξ" + std::to_string(g - c_ + 1);
  return "ξ̄" + std::to_string(g - c_ - n_ + 1);
}

int SuperSpace::degree(const SuperMonomial &m) const
{
  int d = std::popcount(m.bits);
  for (int i = 0; i < c_; ++i)
    d += m.e[static_cast<std::size_t>(i)];
  return d;
}

ExponentVector SuperSpace::weight(const SuperMonomial &m) const
{
  ExponentVector w(alg_.rank());
  for (int i = 0; i < c_; ++i)
    if (m.e[static_cast<std::size_t>(i)] != 0)
      w += generator_weight(i).scaled(m.e[static_cast<std::size_t>(i)]);
  for (int b = 0; b < 2 * n_; ++b)
    if (m.bits & (1u << b))
      w += generator_weight(c_ + b);
  return w;
}

std::vector<SuperMonomial> SuperSpace::monomials(int degree) const
{
  std::vector<SuperMonomial> out;
  if (degree < 0)
    return out;
  SuperMonomial cur;
  std::function<void(int, int)> commuting = [&](int var, int left) {
    if (var == c_ - 1 || c_ == 0) {
      if (c_ > 0)
        cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
      else if (left != 0)
        return;
      out.push_back(cur);
      if (c_ > 0)
        cur.e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(a);
      commuting(var + 1, left - a);
    }
    cur.e[static_cast<std::size_t>(var)] = 0;
  };
  const std::uint32_t limit = 1u << (2 * n_);
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    int p = std::popcount(bits);
    if (p > degree)
      continue;
    cur = SuperMonomial{};
    cur.bits = bits;
    commuting(0, degree - p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SuperSpace::dimension(int degree) const
{
  if (degree < 0)
    return 0;
  // sum_j C(2n, j) C(c + d - j - 1, d - j)
  auto binom = [](long a, long b) -> mpz_class {
    if (b < 0 || a < b)
      return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  };
  mpz_class total = 0;
  for (int j = 0; j <= std::min(degree, 2 * n_); ++j) {
    int d = degree - j;
    mpz_class sym = c_ == 0 ? mpz_class(d == 0 ? 1 : 0) : binom(c_ + d - 1, d);
    total += binom(2 * n_, j) * sym;
  }
  return total.get_ui();
}

SuperElement SuperSpace::one() const
{
  SuperElement r;
  r.emplace(SuperMonomial{}, 1);
  return r;
}

SuperElement SuperSpace::generator(int g) const
{
  return left_multiply(g, one());
}

SuperElement SuperSpace::word(const std::vector<int> &gens) const
{
  SuperElement r = one();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    r = left_multiply(*it, r);
  return r;
}

SuperElement SuperSpace::multiply(const SuperElement &a, const SuperElement &b) const
{
  SuperElement r;
  for (const auto &[ma, ca] : a)
    for (const auto &[mb, cb] : b) {
      if (ma.bits & mb.bits)
        continue;
      SuperMonomial m;
      for (int i = 0; i < c_; ++i) {
        auto s = static_cast<std::size_t>(i);
        m.e[s] = static_cast<std::uint8_t>(ma.e[s] + mb.e[s]);
      }
      m.bits = ma.bits | mb.bits;
      int swaps = 0;
      for (int bit = 0; bit < 2 * n_; ++bit)
        if (mb.bits & (1u << bit))
          swaps += std::popcount(ma.bits >> (bit + 1));
      mpq_class c = ca * cb;
      add_term(r, m, swaps % 2 ? mpq_class(-c) : c);
    }
  return r;
}

SuperElement SuperSpace::left_multiply(int g, const SuperElement &a) const
{
  SuperElement r;
  if (!is_grassmann(g)) {
    for (const auto &[m, c] : a) {
      SuperMonomial mm = m;
      ++mm.e[static_cast<std::size_t>(g)];
      r.emplace(mm, c);
    }
    return r;
  }
  const int b = g - c_;
  for (const auto &[m, c] : a) {
    if (m.bits & (1u << b))
      continue;
    SuperMonomial mm = m;
    mm.bits |= 1u << b;
    r.emplace(mm, popcount_below(m.bits, b) % 2 ? mpq_class(-c) : c);
  }
  return r;
}

SuperElement SuperSpace::derivative(int g, const SuperElement &a) const
{
  SuperElement r;
  if (!is_grassmann(g)) {
    auto s = static_cast<std::size_t>(g);
    for (const auto &[m, c] : a) {
      if (m.e[s] == 0)
        continue;
      SuperMonomial mm = m;
      --mm.e[s];
      r.emplace(mm, c * m.e[s]);
    }
    return r;
  }
  const int b = g - c_;
  for (const auto &[m, c] : a) {
    if (!(m.bits & (1u << b)))
      continue;
    SuperMonomial mm = m;
    mm.bits &= ~(1u << b);
    r.emplace(mm, popcount_below(m.bits, b) % 2 ? mpq_class(-c) : c);
  }
  return r;
}

SuperElement SuperSpace::apply(const FirstOrderOperator &op, const SuperElement &a) const
{
  SuperElement r;
  for (const auto &[ga, gb, c] : op.terms)
    for (const auto &[m, v] : left_multiply(ga, derivative(gb, a)))
      add_term(r, m, c * v);
  return r;
}

SuperElement SuperSpace::laplacian(const SuperElement &a) const
{
  SuperElement r;
  for (int j = 1; j <= n_; ++j)
    r = r + derivative(xi(j), derivative(xibar(j), a));
  for (int i = 1; i <= m_; ++i)
    r = r + scaled(derivative(x(i), derivative(xbar(i), a)), -1);
  if (alg_.odd())
    r = r + scaled(derivative(x0(), derivative(x0(), a)), mpq_class(-1, 2));
  return r;
}

FirstOrderOperator SuperSpace::solve_operator(const ExponentVector &w, std::size_t &nullity) const
{
  std::vector<std::pair<int, int>> cand; // (derivative, multiplier)
  for (int b = 0; b < generators(); ++b)
    for (int a = 0; a < generators(); ++a)
      if (generator_weight(a) - generator_weight(b) == w)
        cand.emplace_back(b, a);
  std::sort(cand.begin(), cand.end());
  QMatrix eqs;
  for (const auto &f : monomials(2)) {
    SuperElement fe;
    fe.emplace(f, 1);
    QVector row;
    for (auto [b, a] : cand) {
      SuperElement img = laplacian(apply({{{a, b, 1}}, w, Parity::Even}, fe));
      row.push_back(img.empty() ? mpq_class(0) : img.begin()->second);
    }
    eqs.push_back(std::move(row));
  }
  auto ns = nullspace(eqs, cand.size());
  nullity = ns.size();
  FirstOrderOperator op;
  op.weight = w;
  if (ns.size() != 1)
    return op;
  const QVector &v = ns.front();
  std::size_t lead = 0;
  while (v[lead] == 0)
    ++lead;
  const mpq_class scale = 1 / v[lead];
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (v[i] != 0)
      op.terms.emplace_back(cand[i].second, cand[i].first, v[i] * scale);
  auto [b0, a0] = cand[lead];
  op.parity = is_grassmann(a0) == is_grassmann(b0) ? Parity::Even : Parity::Odd;
  return op;
}

const FirstOrderOperator &SuperSpace::root_vector(const Weight &root) const
{
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == root)
      return root_ops_[i];
  throw InvalidInput(root.to_string() + " is not a root of " + alg_.name());
}

std::size_t SuperSpace::even_dimension() const
{
  std::size_t d = cartan_.size();
  for (const auto &op : root_ops_)
    d += op.parity == Parity::Even ? 1 : 0;
  return d;
}

std::size_t SuperSpace::odd_dimension() const
{
  return root_ops_.size() + cartan_.size() - even_dimension();
}

std::string SuperSpace::to_string(const SuperElement &a) const
{
  if (a.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const auto &[m, c] = *it;
    std::string word;
    for (int i = 0; i < c_; ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e == 0)
        continue;
      word += generator_name(i);
      if (e > 1)
        word += "^" + std::to_string(e);
    }
    for (int b = 0; b < 2 * n_; ++b)
      if (m.bits & (1u << b))
        word += generator_name(c_ + b);
    mpq_class mag = abs(c);
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    if (mag != 1 || word.empty())
      os << mag.get_str() << (word.empty() ? "" : "*");
    os << word;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// kernel analysis

namespace {

struct WeightSpaces {
  std::map<ExponentVector, std::vector<SuperMonomial>, GrlexLess> spaces;
  std::map<SuperMonomial, std::size_t> index; // position within its weight space
};

WeightSpaces weight_spaces(const SuperSpace &V, int degree)
{
  WeightSpaces ws;
  for (const auto &m : V.monomials(degree)) {
    auto &sp = ws.spaces[V.weight(m)];
    ws.index[m] = sp.size();
    sp.push_back(m);
  }
  return ws;
}

QVector dense(const WeightSpaces &ws, const ExponentVector &w, const SuperElement &el)
{
  const auto &sp = ws.spaces.at(w);
  QVector v(sp.size());
  for (const auto &[m, c] : el)
    v[ws.index.at(m)] = c;
  return v;
}

// primitive integral multiple with positive leading coefficient
SuperElement normalised(const SuperElement &el)
{
  if (el.empty())
    return el;
  mpz_class den = 1, num = 0;
  for (const auto &[m, c] : el) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  mpq_class s(den, num);
  s.canonicalize();
  if (el.rbegin()->second < 0)
    s = -s;
  return scaled(el, s);
}

void guard(const SuperSpace &V, int k, std::size_t max_dim)
{
  std::size_t d = V.dimension(k);
  if (d > max_dim)
    throw InvalidInput("degree " + std::to_string(k) + " of the superspace of " + V.algebra().name() +
                       " has dimension " + std::to_string(d) + ", above the guard " + std::to_string(max_dim));
}

// incremental echelon basis used for spans
struct Echelon {
  std::vector<std::pair<std::size_t, QVector>> rows;
  bool insert(QVector v)
  {
    for (const auto &[p, r] : rows) {
      if (v[p] == 0)
        continue;
      mpq_class f = v[p];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (r[i] != 0)
          v[i] -= f * r[i];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0)
      ++p;
    if (p == v.size())
      return false;
    mpq_class inv = 1 / v[p];
    for (auto &x : v)
      x *= inv;
    rows.emplace_back(p, std::move(v));
    return true;
  }
};

} // namespace

std::vector<KernelVector> kernel_basis(const SuperSpace &V, int k, std::size_t max_dim)
{
  guard(V, k, max_dim);
  const Algebra &alg = V.algebra();
  WeightSpaces src = weight_spaces(V, k);
  WeightSpaces dst = weight_spaces(V, k - 2);
  std::vector<KernelVector> out;
  for (const auto &[w, mons] : src.spaces) {
    auto it = dst.spaces.find(w);
    std::vector<QVector> ns;
    if (it == dst.spaces.end()) {
      for (std::size_t i = 0; i < mons.size(); ++i) {
        QVector e(mons.size());
        e[i] = 1;
        ns.push_back(std::move(e));
      }
    } else {
      QMatrix a(it->second.size(), QVector(mons.size()));
      for (std::size_t j = 0; j < mons.size(); ++j) {
        SuperElement f;
        f.emplace(mons[j], 1);
        for (const auto &[m, c] : V.laplacian(f))
          a[dst.index.at(m)][j] = c;
      }
      ns = nullspace(std::move(a), mons.size());
    }
    for (const auto &v : ns) {
      SuperElement el;
      for (std::size_t j = 0; j < mons.size(); ++j)
        add_term(el, mons[j], v[j]);
      out.push_back({Weight(alg, w), normalised(el)});
    }
  }
  return out;
}

std::vector<SingularVector> singular_vectors(const SuperSpace &V, int k, std::size_t max_dim)
{
  const Algebra &alg = V.algebra();
  auto basis = kernel_basis(V, k, max_dim);
  std::map<ExponentVector, std::vector<const SuperElement *>, GrlexLess> by_weight;
  for (const auto &kv : basis)
    by_weight[kv.weight.doubled()].push_back(&kv.vector);

  std::vector<const FirstOrderOperator *> raising, lowering;
  const std::size_t npos = V.roots().size() / 2;
  for (std::size_t i = 0; i < V.roots().size(); ++i)
    (i < npos ? raising : lowering).push_back(&V.root_vector(V.roots()[i]));

  std::vector<SingularVector> out;
  for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
    const auto &[w, vecs] = *it;
    std::map<std::pair<std::size_t, SuperMonomial>, std::size_t> rowid;
    QMatrix a;
    for (std::size_t j = 0; j < vecs.size(); ++j)
      for (std::size_t o = 0; o < raising.size(); ++o)
        for (const auto &[m, c] : V.apply(*raising[o], *vecs[j])) {
          auto [pos, fresh] = rowid.try_emplace({o, m}, a.size());
          if (fresh)
            a.emplace_back(vecs.size());
          a[pos->second][j] = c;
        }
    for (const auto &c : nullspace(std::move(a), vecs.size())) {
      SuperElement el;
      for (std::size_t j = 0; j < vecs.size(); ++j)
        if (c[j] != 0)
          el = el + scaled(*vecs[j], c[j]);
      SingularVector s;
      s.weight = Weight(alg, w);
      s.vector = normalised(el);
      s.dominant = is_dominant(alg, s.weight);
      s.invariant = w.is_zero() && std::all_of(lowering.begin(), lowering.end(),
                                               [&](const FirstOrderOperator *f) { return V.apply(*f, s.vector).empty(); });
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string to_string(KernelStructure s)
{
  switch (s) {
  case KernelStructure::Irreducible:
    return "irreducible";
  case KernelStructure::TrivialSubmodule:
    return "reducible with trivial submodule";
  case KernelStructure::Reducible:
    return "reducible";
  case KernelStructure::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

KernelReport irreducibility_report(const SuperSpace &V, int k, std::size_t max_dim, bool check_cyclic)
{
  const Algebra &alg = V.algebra();
  KernelReport rep;
  rep.degree = k;
  rep.dim_source = V.dimension(k);
  rep.dim_target = V.dimension(k - 2);

  auto basis = kernel_basis(V, k, max_dim);
  rep.kernel_dim = basis.size();
  rep.surjective = rep.kernel_dim + rep.dim_target == rep.dim_source;
  std::map<ExponentVector, long, GrlexLess> dims;
  for (const auto &kv : basis)
    ++dims[kv.weight.doubled()];
  std::vector<LaurentPoly::Term> terms;
  for (const auto &[w, d] : dims)
    terms.emplace_back(w, d);
  rep.kernel_character = LaurentPoly::from_terms(alg.lattice(), std::move(terms));
  rep.singular = singular_vectors(V, k, max_dim);

  if (check_cyclic && !rep.singular.empty()) {
    WeightSpaces ws = weight_spaces(V, k);
    std::vector<const FirstOrderOperator *> lowering;
    const std::size_t npos = V.roots().size() / 2;
    for (std::size_t i = npos; i < V.roots().size(); ++i)
      lowering.push_back(&V.root_vector(V.roots()[i]));
    std::map<ExponentVector, Echelon, GrlexLess> spans;
    std::vector<std::pair<ExponentVector, SuperElement>> queue;
    const auto &top = rep.singular.front();
    spans[top.weight.doubled()].insert(dense(ws, top.weight.doubled(), top.vector));
    queue.emplace_back(top.weight.doubled(), top.vector);
    std::size_t total = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto *f : lowering) {
        SuperElement img = V.apply(*f, queue[q].second);
        if (img.empty())
          continue;
        ExponentVector w = queue[q].first + f->weight;
        if (spans[w].insert(dense(ws, w, img))) {
          ++total;
          queue.emplace_back(w, std::move(img));
        }
      }
    }
    rep.cyclic_span = total;
    rep.cyclic_checked = true;
  }

  const std::size_t ns = rep.singular.size();
  if (ns >= 2) {
    bool trivial = ns == 2 && rep.singular[1].invariant && rep.cyclic_checked && rep.cyclic_span == rep.kernel_dim;
    rep.structure = trivial ? KernelStructure::TrivialSubmodule : KernelStructure::Reducible;
  } else if (ns == 1 && rep.cyclic_checked) {
    rep.structure = rep.cyclic_span == rep.kernel_dim ? KernelStructure::Irreducible : KernelStructure::Reducible;
  }

  std::ostringstream os;
  os << "ker Laplacian on degree " << k << " of " << alg.name() << ": dim " << rep.kernel_dim << " ("
     << rep.dim_source << " - " << rep.dim_target << (rep.surjective ? "" : ", Laplacian not surjective") << ")";
  os << "; singular vectors at";
  for (const auto &s : rep.singular)
    os << " " << s.weight.bar_notation() << (s.invariant ? " [invariant]" : "");
  if (rep.cyclic_checked)
    os << "; top vector generates " << rep.cyclic_span;
  os << "; " << to_string(rep.structure);
  rep.summary = os.str();
  return rep;
}

} // namespace spochar

// ---------------------------------------------------------------------------
// tensor product with the natural module

namespace spochar {

namespace {

using TensorKey = std::pair<SuperMonomial, int>;
using TensorElement = std::map<TensorKey, mpq_class>;

void add_tensor(TensorElement &t, const TensorKey &k, const mpq_class &c)
{
  if (c == 0)
    return;
  auto [it, fresh] = t.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      t.erase(it);
  }
}

int generator_of(const SuperSpace &V, const SuperMonomial &m)
{
  if (m.bits)
    return V.commuting() + std::countr_zero(m.bits);
  for (int i = 0; i < V.commuting(); ++i)
    if (m.e[static_cast<std::size_t>(i)])
      return i;
  throw MathError("not a generator");
}

// X(a (x) g) = Xa (x) g + (-1)^{|X||a|} a (x) Xg, |a| the Grassmann degree
TensorElement apply_tensor(const SuperSpace &V, const FirstOrderOperator &X, const TensorElement &t)
{
  TensorElement r;
  for (const auto &[key, c] : t) {
    const auto &[m, g] = key;
    SuperElement a;
    a.emplace(m, 1);
    for (const auto &[m2, c2] : V.apply(X, a))
      add_tensor(r, {m2, g}, c * c2);
    const bool flip = X.parity == Parity::Odd && std::popcount(m.bits) % 2 == 1;
    for (const auto &[m2, c2] : V.apply(X, V.generator(g)))
      add_tensor(r, {m, generator_of(V, m2)}, flip ? mpq_class(-c * c2) : mpq_class(c * c2));
  }
  return r;
}

ExponentVector tensor_weight(const SuperSpace &V, const TensorKey &k)
{
  return V.weight(k.first) + V.generator_weight(k.second);
}

struct TensorBasis {
  std::map<ExponentVector, std::vector<TensorKey>, GrlexLess> spaces;
  std::map<TensorKey, std::size_t> index;
};

QVector dense_tensor(const TensorBasis &tb, const ExponentVector &w, const TensorElement &t)
{
  QVector v(tb.spaces.at(w).size());
  for (const auto &[k, c] : t)
    v[tb.index.at(k)] = c;
  return v;
}

} // namespace

TensorReport tensor_with_natural(const SuperSpace &V, int k, std::size_t max_dim)
{
  const Algebra &alg = V.algebra();
  if (V.dimension(k) * static_cast<std::size_t>(V.generators()) > max_dim)
    throw InvalidInput("tensor product above the dimension guard " + std::to_string(max_dim));
  auto kernel = kernel_basis(V, k, max_dim);

  TensorBasis tb;
  for (const auto &m : V.monomials(k))
    for (int g = 0; g < V.generators(); ++g) {
      TensorKey key{m, g};
      auto &sp = tb.spaces[tensor_weight(V, key)];
      tb.index[key] = sp.size();
      sp.push_back(key);
    }

  // basis of the tensor product by weight
  std::map<ExponentVector, std::vector<TensorElement>, GrlexLess> basis;
  for (const auto &kv : kernel)
    for (int g = 0; g < V.generators(); ++g) {
      TensorElement t;
      for (const auto &[m, c] : kv.vector)
        add_tensor(t, {m, g}, c);
      basis[kv.weight.doubled() + V.generator_weight(g)].push_back(std::move(t));
    }

  std::vector<const FirstOrderOperator *> raising, lowering;
  const std::size_t npos = V.roots().size() / 2;
  for (std::size_t i = 0; i < V.roots().size(); ++i)
    (i < npos ? raising : lowering).push_back(&V.root_vector(V.roots()[i]));

  TensorReport rep;
  rep.degree = k;
  rep.dim = kernel.size() * static_cast<std::size_t>(V.generators());

  std::vector<std::pair<ExponentVector, TensorElement>> singular;
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    const auto &[w, vecs] = *it;
    std::map<std::pair<std::size_t, TensorKey>, std::size_t> rowid;
    QMatrix a;
    for (std::size_t j = 0; j < vecs.size(); ++j)
      for (std::size_t o = 0; o < raising.size(); ++o)
        for (const auto &[key, c] : apply_tensor(V, *raising[o], vecs[j])) {
          auto [pos, fresh] = rowid.try_emplace({o, key}, a.size());
          if (fresh)
            a.emplace_back(vecs.size());
          a[pos->second][j] = c;
        }
    for (const auto &c : nullspace(std::move(a), vecs.size())) {
      TensorElement t;
      for (std::size_t j = 0; j < vecs.size(); ++j)
        for (const auto &[key, v] : vecs[j])
          add_tensor(t, key, c[j] * v);
      singular.emplace_back(w, std::move(t));
    }
  }

  std::map<ExponentVector, Echelon, GrlexLess> total;
  std::size_t span_sum = 0;
  for (const auto &[w0, v0] : singular) {
    std::map<ExponentVector, Echelon, GrlexLess> spans;
    std::vector<std::pair<ExponentVector, TensorElement>> queue{{w0, v0}};
    spans[w0].insert(dense_tensor(tb, w0, v0));
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto *f : lowering) {
        TensorElement img = apply_tensor(V, *f, queue[q].second);
        if (img.empty())
          continue;
        ExponentVector w = queue[q].first + f->weight;
        if (spans[w].insert(dense_tensor(tb, w, img)))
          queue.emplace_back(w, std::move(img));
      }
    TensorSummand s;
    s.weight = Weight(alg, w0);
    s.span = queue.size();
    std::vector<LaurentPoly::Term> terms;
    for (auto &[w, e] : spans) {
      if (!e.rows.empty())
        terms.emplace_back(w, static_cast<long>(e.rows.size()));
      for (auto &row : e.rows)
        total[w].insert(row.second);
    }
    s.character = LaurentPoly::from_terms(alg.lattice(), std::move(terms));
    span_sum += s.span;
    rep.summands.push_back(std::move(s));
  }
  for (const auto &[w, e] : total)
    rep.sum_dim += e.rows.size();
  rep.direct_sum = rep.sum_dim == span_sum && rep.sum_dim == rep.dim;

  std::ostringstream os;
  os << "ker Laplacian on degree " << k << " of " << alg.name() << " tensor natural: dim " << rep.dim
     << "; singular vectors";
  for (const auto &s : rep.summands)
    os << " " << s.weight.bar_notation() << " (generates " << s.span << ")";
  os << "; generated submodules span " << rep.sum_dim << (rep.direct_sum ? ", direct sum of irreducibles" : ", not a direct sum of them");
  rep.summary = os.str();
  return rep;
}

} // namespace spochar
