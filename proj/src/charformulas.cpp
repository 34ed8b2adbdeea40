#include "spochar/charformulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "spochar/linalg.hpp"

namespace spochar {

Denominators denominators(const Algebra &alg)
{
  const auto rs = positive_roots(alg);
  const Lattice lat = alg.lattice();
  Denominators d;
  d.D0_factored.unit = rho0(alg).doubled();
  d.D0_factored.unit_sign = 1;
  for (const auto &r : rs.even_positive)
    d.D0_factored.factors.push_back({-1, -r.weight.doubled()});
  d.D1_factored.unit = rho1(alg).doubled();
  d.D1_factored.unit_sign = 1;
  for (const auto &r : rs.odd_positive)
    d.D1_factored.factors.push_back({1, -r.weight.doubled()});
  d.D0 = d.D0_factored.expand(lat);
  d.D1 = d.D1_factored.expand(lat);
  return d;
}

std::vector<mpq_class> simple_root_coordinates(const Algebra &alg, const Weight &w)
{
  const auto simple = positive_roots(alg).simple;
  const std::size_t r = alg.rank();
  if (simple.size() != r)
    throw MathError("simple roots do not form a basis");
  QMatrix a(r, QVector(r));
  QVector b(r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t s = 0; s < r; ++s)
      a[k][s] = simple[s].weight.doubled()[k];
    b[k] = w.doubled()[k];
  }
  return solve(a, b);
}

// ---------------------------------------------------------------------------
// Levi components

int LeviComponent::even_dim() const
{
  int c = 0;
  for (auto p : parities)
    if (p == Parity::Even)
      ++c;
  return type == Type::GL ? c : 2 * c;
}

int LeviComponent::odd_dim() const
{
  int c = 0;
  for (auto p : parities)
    if (p == Parity::Odd)
      ++c;
  return type == Type::GL ? c : 2 * c + (has_zero_weight ? 1 : 0);
}

std::string LeviComponent::describe() const
{
  std::ostringstream os;
  if (type == Type::GL) {
    os << "gl(" << even_dim() << '|' << odd_dim() << ')';
  } else if (even_dim() == 0) {
    os << "so(" << odd_dim() << ')';
  } else if (odd_dim() == 0) {
    os << "sp(" << even_dim() << ')';
  } else {
    os << "spo(" << even_dim() << '|' << odd_dim() << ')';
  }
  return os.str();
}

namespace {

// index of the single nonzero coordinate and its sign, or -1
std::pair<int, int> signed_basis(const ExponentVector &v)
{
  int idx = -1, sign = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0)
      continue;
    if (idx >= 0 || std::abs(v[k]) != 2)
      return {-1, 0};
    idx = static_cast<int>(k);
    sign = v[k] > 0 ? 1 : -1;
  }
  return {idx, sign};
}

Parity coordinate_parity(const Algebra &alg, int idx)
{
  return idx < alg.n() ? Parity::Even : Parity::Odd;
}

LeviComponent build_component(const Algebra &alg, const std::vector<Root> &simple,
                              std::vector<std::size_t> indices)
{
  std::sort(indices.begin(), indices.end());
  LeviComponent c;
  c.simple_indices = indices;
  const std::size_t last = simple.size() - 1;
  bool has_end = std::find(indices.begin(), indices.end(), last) != indices.end();
  bool osp = false;
  if (has_end) {
    if (alg.odd() || alg.m() == 0)
      osp = true;
    else // fork of the D diagram: both e_{m-1} - e_m and e_{m-1} + e_m
      osp = std::find(indices.begin(), indices.end(), last - 1) != indices.end();
  }

  if (!osp) {
    c.type = LeviComponent::Type::GL;
    const ExponentVector &first = simple[indices.front()].weight.doubled();
    // first simple root is x - y, or e_{m-1} + e_m = e_{m-1} - (-e_m)
    int a = -1;
    for (std::size_t k = 0; k < first.size(); ++k)
      if (first[k] > 0) {
        a = static_cast<int>(k);
        break;
      }
    ExponentVector cur(alg.rank());
    cur[static_cast<std::size_t>(a)] = 2;
    c.coordinates.emplace_back(alg, cur);
    c.parities.push_back(coordinate_parity(alg, a));
    for (auto i : indices) {
      ExponentVector next = cur - simple[i].weight.doubled();
      auto [idx, sgn] = signed_basis(next);
      if (idx < 0)
        throw MathError("Levi component is not a type A chain");
      c.coordinates.emplace_back(alg, next);
      c.parities.push_back(coordinate_parity(alg, idx));
      cur = next;
    }
    return c;
  }

  c.type = LeviComponent::Type::OrthoSymplectic;
  std::vector<int> coords;
  for (auto i : indices) {
    const ExponentVector &v = simple[i].weight.doubled();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0)
        coords.push_back(static_cast<int>(k));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (int k : coords) {
    ExponentVector v(alg.rank());
    v[static_cast<std::size_t>(k)] = 2;
    c.coordinates.emplace_back(alg, v);
    c.parities.push_back(coordinate_parity(alg, k));
  }
  c.has_zero_weight = alg.odd();
  return c;
}

} // namespace

// ---------------------------------------------------------------------------
// Parabolic

Parabolic::Parabolic(const Algebra &alg, std::vector<std::size_t> removed) : alg_(alg)
{
  const auto rs = positive_roots(alg);
  for (auto i : removed)
    if (i >= rs.simple.size())
      throw InvalidInput("simple root index out of range");
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  removed_ = removed;

  auto in_levi = [&](const Weight &w) {
    auto coords = simple_root_coordinates(alg, w);
    for (auto i : removed_)
      if (coords[i] != 0)
        return false;
    return true;
  };
  for (const auto &r : rs.even_positive)
    if (in_levi(r.weight))
      even_.push_back(r);
  for (const auto &r : rs.odd_positive)
    if (in_levi(r.weight))
      odd_.push_back(r);

  // connected components of the retained diagram
  auto kept = retained();
  std::vector<int> comp(kept.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < kept.size(); ++s) {
    if (comp[s] >= 0)
      continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < kept.size(); ++v)
        if (comp[v] < 0 && bilinear_form(rs.simple[kept[u]].weight, rs.simple[kept[v]].weight) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  for (int k = 0; k < ncomp; ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < kept.size(); ++s)
      if (comp[s] == k)
        idx.push_back(kept[s]);
    components_.push_back(build_component(alg, rs.simple, idx));
  }
}

Parabolic Parabolic::borel(const Algebra &alg)
{
  std::vector<std::size_t> all(alg.rank());
  std::iota(all.begin(), all.end(), 0);
  return Parabolic(alg, all);
}

Parabolic Parabolic::whole(const Algebra &alg)
{
  return Parabolic(alg, {});
}

namespace {

std::size_t simple_index(const Algebra &alg, const Weight &w)
{
  const auto simple = positive_roots(alg).simple;
  for (std::size_t i = 0; i < simple.size(); ++i)
    if (simple[i].weight == w)
      return i;
  throw InvalidInput(w.to_string() + " is not a simple root of " + alg.name());
}

} // namespace

Parabolic Parabolic::removing(const Algebra &alg, const std::vector<Weight> &roots)
{
  std::vector<std::size_t> idx;
  for (const auto &w : roots)
    idx.push_back(simple_index(alg, w));
  return Parabolic(alg, idx);
}

Parabolic Parabolic::retaining(const Algebra &alg, const std::vector<Weight> &roots)
{
  std::vector<bool> keep(alg.rank(), false);
  for (const auto &w : roots)
    keep[simple_index(alg, w)] = true;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (!keep[i])
      idx.push_back(i);
  return Parabolic(alg, idx);
}

Parabolic Parabolic::parse(const Algebra &alg, const std::string &text)
{
  if (text == "borel" || text == "b")
    return borel(alg);
  if (text == "g" || text == "whole" || text == "remove=")
    return whole(alg);
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw InvalidInput("parabolic must be 'borel', 'g', 'remove=...' or 'retain=...'");
  std::string key = text.substr(0, eq);
  std::vector<Weight> roots;
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      roots.push_back(Weight::parse(alg, item));
  if (key == "remove")
    return removing(alg, roots);
  if (key == "retain")
    return retaining(alg, roots);
  throw InvalidInput("unknown parabolic key '" + key + "'");
}

std::vector<std::size_t> Parabolic::retained() const
{
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < alg_.rank(); ++i)
    if (!std::binary_search(removed_.begin(), removed_.end(), i))
      r.push_back(i);
  return r;
}

std::string Parabolic::describe() const
{
  const auto simple = positive_roots(alg_).simple;
  std::ostringstream os;
  if (removed_.size() == alg_.rank()) {
    os << "borel";
  } else {
    os << "remove=";
    for (std::size_t k = 0; k < removed_.size(); ++k)
      os << (k ? "," : "") << simple[removed_[k]].weight.to_string();
  }
  os << " (levi ";
  int gl1 = static_cast<int>(alg_.rank());
  bool first = true;
  for (const auto &c : components_) {
    os << (first ? "" : "+") << c.describe();
    first = false;
    gl1 -= static_cast<int>(c.simple_indices.size());
  }
  // each component of rank r uses r + (GL ? 1 : 0) coordinates
  for (const auto &c : components_)
    if (c.type == LeviComponent::Type::GL)
      --gl1;
  if (gl1 > 0) {
    os << (first ? "" : "+") << "gl(1)";
    if (gl1 > 1)
      os << '^' << gl1;
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Levi modules

LeviModule LeviModule::one_dimensional(Weight w)
{
  LeviModule m;
  m.kind = Kind::OneDimensional;
  m.weight = std::move(w);
  return m;
}

LeviModule LeviModule::natural()
{
  LeviModule m;
  m.kind = Kind::Natural;
  return m;
}

LeviModule LeviModule::sym_power(int k)
{
  if (k < 0)
    throw InvalidInput("negative symmetric power");
  LeviModule m;
  m.kind = Kind::SymPower;
  m.power = k;
  return m;
}

LeviModule LeviModule::ext_power(int k)
{
  if (k < 0)
    throw InvalidInput("negative exterior power");
  LeviModule m;
  m.kind = Kind::ExtPower;
  m.power = k;
  return m;
}

LeviModule LeviModule::hook_schur(Partition p)
{
  LeviModule m;
  m.kind = Kind::HookSchur;
  m.partition = std::move(p);
  return m;
}

LeviModule LeviModule::irreducible(Weight highest)
{
  LeviModule m;
  m.kind = Kind::Irreducible;
  m.weight = std::move(highest);
  return m;
}

LeviModule LeviModule::explicit_char(LaurentPoly ch)
{
  LeviModule m;
  m.kind = Kind::Explicit;
  m.explicit_character = std::move(ch);
  return m;
}

LeviModule LeviModule::twisted(Weight w) const
{
  LeviModule m = *this;
  if (m.twist)
    m.twist = *m.twist + w;
  else
    m.twist = std::move(w);
  return m;
}

LeviModule LeviModule::parse(const Algebra &alg, const std::string &text)
{
  std::string body = text;
  std::optional<Weight> tw;
  if (auto at = body.find('@'); at != std::string::npos) {
    tw = Weight::parse(alg, body.substr(at + 1));
    body = body.substr(0, at);
  }
  LeviModule m;
  auto starts = [&](const std::string &p) { return body.rfind(p, 0) == 0; };
  auto int_after = [&](std::size_t k) {
    try {
      std::size_t used = 0;
      std::string s = body.substr(k);
      int v = std::stoi(s, &used);
      if (used != s.size())
        throw InvalidInput("bad Levi module '" + text + "'");
      return v;
    } catch (const std::logic_error &) {
      throw InvalidInput("bad Levi module '" + text + "'");
    }
  };
  if (body == "trivial" || body.empty())
    m = one_dimensional(Weight::zero(alg));
  else if (body == "natural")
    m = natural();
  else if (starts("1d:"))
    m = one_dimensional(Weight::parse(alg, body.substr(3)));
  else if (starts("irr:"))
    m = irreducible(Weight::parse(alg, body.substr(4)));
  else if (starts("hook:"))
    m = hook_schur(Partition::parse(body.substr(5)));
  else if (starts("sym"))
    m = sym_power(int_after(3));
  else if (starts("ext"))
    m = ext_power(int_after(3));
  else
    throw InvalidInput("unknown Levi module '" + text + "'");
  if (tw)
    m = m.twisted(*tw);
  return m;
}

std::string LeviModule::describe() const
{
  std::ostringstream os;
  switch (kind) {
  case Kind::OneDimensional:
    os << (weight && !weight->doubled().is_zero() ? "1d:" + weight->to_string() : "trivial");
    break;
  case Kind::Natural:
    os << "natural";
    break;
  case Kind::SymPower:
    os << "sym" << power;
    break;
  case Kind::ExtPower:
    os << "ext" << power;
    break;
  case Kind::HookSchur:
    os << "hook:" << partition.to_string();
    break;
  case Kind::Irreducible:
    os << "irr:" << weight->to_string();
    break;
  case Kind::Explicit:
    os << "explicit";
    break;
  }
  if (twist)
    os << '@' << twist->to_string();
  return os.str();
}

std::vector<LaurentPoly> power_series(Lattice lattice, const std::vector<ExponentVector> &even,
                                      const std::vector<ExponentVector> &odd, int max_r, bool symmetric)
{
  if (max_r < 0)
    return {};
  std::vector<LaurentPoly> s(static_cast<std::size_t>(max_r) + 1, LaurentPoly(lattice));
  s[0] = LaurentPoly::constant(lattice, 1);
  // 1/(1 - x z): s[r] += x s[r-1], ascending
  auto geometric = [&](const ExponentVector &x) {
    for (std::size_t r = 1; r < s.size(); ++r)
      s[r] += s[r - 1].shifted(x);
  };
  // (1 + x z): s[r] += x s[r-1], descending
  auto linear = [&](const ExponentVector &x) {
    for (std::size_t r = s.size() - 1; r >= 1; --r)
      s[r] += s[r - 1].shifted(x);
  };
  for (const auto &x : even)
    symmetric ? geometric(x) : linear(x);
  for (const auto &y : odd)
    symmetric ? linear(y) : geometric(y);
  return s;
}

namespace {

void require_levi_orthogonal(const Parabolic &p, const Weight &w)
{
  const auto simple = positive_roots(p.algebra()).simple;
  for (auto i : p.retained())
    if (bilinear_form(w, simple[i].weight) != 0)
      throw InvalidInput("e^" + w.to_string() + " is not a one-dimensional module of the Levi subalgebra");
}

const LeviComponent &pick_component(const Parabolic &p, const LeviModule &tag)
{
  const auto &comps = p.components();
  if (tag.component) {
    if (*tag.component >= comps.size())
      throw InvalidInput("Levi component index out of range");
    return comps[*tag.component];
  }
  if (comps.size() != 1)
    throw InvalidInput("Levi module '" + tag.describe() + "' needs a component; the Levi has " +
                       std::to_string(comps.size()) + " simple components");
  return comps.front();
}

// even and odd weights of the natural module of a component
void natural_weights(const LeviComponent &c, std::vector<ExponentVector> &even,
                     std::vector<ExponentVector> &odd)
{
  for (std::size_t k = 0; k < c.coordinates.size(); ++k) {
    auto &dst = c.parities[k] == Parity::Even ? even : odd;
    dst.push_back(c.coordinates[k].doubled());
    if (c.type == LeviComponent::Type::OrthoSymplectic)
      dst.push_back(-c.coordinates[k].doubled());
  }
  if (c.type == LeviComponent::Type::OrthoSymplectic && c.has_zero_weight && !c.coordinates.empty())
    odd.push_back(ExponentVector(c.coordinates.front().size()));
}

std::vector<WeylElement> levi_weyl_group(const Parabolic &p)
{
  const Algebra &alg = p.algebra();
  const auto simple = positive_roots(alg).simple;
  std::vector<WeylElement> gens;
  for (auto i : p.retained())
    gens.push_back(reflection(alg, simple[i].weight));
  std::vector<WeylElement> group{WeylElement::identity(alg)};
  for (std::size_t k = 0; k < group.size(); ++k)
    for (const auto &g : gens) {
      WeylElement h = g * group[k];
      if (std::find(group.begin(), group.end(), h) == group.end())
        group.push_back(h);
    }
  return group;
}

} // namespace

LeviCharacter levi_character(const Parabolic &p, const LeviModule &tag)
{
  const Algebra &alg = p.algebra();
  const Lattice lat = alg.lattice();
  LeviCharacter out{LaurentPoly(lat), tag};
  using Kind = LeviModule::Kind;
  switch (tag.kind) {
  case Kind::OneDimensional: {
    Weight w = tag.weight ? *tag.weight : Weight::zero(alg);
    require_levi_orthogonal(p, w);
    out.ch = LaurentPoly::monomial(lat, w.doubled());
    break;
  }
  case Kind::Natural:
  case Kind::SymPower:
  case Kind::ExtPower: {
    const auto &c = pick_component(p, tag);
    std::vector<ExponentVector> even, odd;
    natural_weights(c, even, odd);
    int r = tag.kind == Kind::Natural ? 1 : tag.power;
    out.ch = power_series(lat, even, odd, r, tag.kind != Kind::ExtPower)[static_cast<std::size_t>(r)];
    break;
  }
  case Kind::HookSchur: {
    const auto &c = pick_component(p, tag);
    if (c.type != LeviComponent::Type::GL)
      throw InvalidInput("hook Schur modules need a general linear Levi component");
    const Partition &lam = tag.partition;
    const int k = lam.length();
    if (lam[c.even_dim() + 1] > c.odd_dim())
      throw InvalidInput("partition " + lam.to_string() + " is outside the hook of " + c.describe());
    std::vector<ExponentVector> even, odd;
    natural_weights(c, even, odd);
    int top = lam.length() == 0 ? 0 : lam[1] + k;
    auto h = power_series(lat, even, odd, top, true);
    PolyMatrix m(static_cast<std::size_t>(k), std::vector<LaurentPoly>(static_cast<std::size_t>(k), LaurentPoly(lat)));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        int r = lam[i] - i + j;
        if (r >= 0)
          m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(r)];
      }
    out.ch = determinant(m, lat);
    break;
  }
  case Kind::Irreducible: {
    if (!p.levi_is_even())
      throw InvalidInput("irreducible Levi modules are only built for even Levi subalgebras");
    const Weight &lam = *tag.weight;
    const auto simple = positive_roots(alg).simple;
    for (auto i : p.retained()) {
      const Weight &a = simple[i].weight;
      mpq_class c = 2 * bilinear_form(lam, a) / bilinear_form(a, a);
      if (c.get_den() != 1 || c < 0)
        throw InvalidInput(lam.to_string() + " is not dominant for the Levi subalgebra");
    }
    ExponentVector twice(alg.rank());
    for (const auto &r : p.levi_even_positive())
      twice += r.weight.doubled();
    ExponentVector rho_l = twice;
    for (std::size_t k = 0; k < rho_l.size(); ++k)
      rho_l[k] /= 2;
    auto group = levi_weyl_group(p);
    LaurentPoly num = alternant(group, lat, lam.doubled() + rho_l);
    LaurentPoly den = alternant(group, lat, rho_l);
    out.ch = exact_div(num, den);
    break;
  }
  case Kind::Explicit:
    if (!tag.explicit_character)
      throw InvalidInput("explicit Levi module without a character");
    if (!(tag.explicit_character->lattice() == lat))
      throw DimensionMismatch();
    out.ch = *tag.explicit_character;
    break;
  }
  if (tag.twist) {
    require_levi_orthogonal(p, *tag.twist);
    out.ch = out.ch.shifted(tag.twist->doubled());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kac and Euler characters

LaurentPoly kac_character(const Algebra &alg, const Weight &lambda)
{
  LaurentPoly num = alternant(alg, (lambda + rho(alg)).doubled());
  num = denominators(alg).D1 * num;
  return exact_div(num, alternant(alg, rho0(alg).doubled()));
}

LaurentPoly kac_character_rational(const Algebra &alg, const Weight &lambda)
{
  Parabolic b = Parabolic::borel(alg);
  return euler_character(b, levi_character(b, LeviModule::one_dimensional(lambda)));
}

LaurentPoly euler_character(const Parabolic &p, const LeviCharacter &M)
{
  const Algebra &alg = p.algebra();
  const Lattice lat = alg.lattice();
  if (!(M.ch.lattice() == lat))
    throw DimensionMismatch();
  if (M.ch.is_zero())
    return LaurentPoly(lat);
  const LaurentPoly top = M.ch.shifted(rho(alg).doubled());
  std::vector<SignedRational> terms;
  const auto &group = weyl_group(alg);
  terms.reserve(group.size());
  for (const auto &w : group) {
    std::vector<BinomialFactor> den;
    for (const auto &r : p.levi_odd_positive())
      den.push_back({1, w.apply(-r.weight.doubled())});
    terms.push_back({w.sign(), FactoredRational(w.apply(top), std::move(den))});
  }
  const auto d = denominators(alg);
  LaurentPoly total = rational_weyl_sum(terms, &d.D1_factored);
  return exact_div(total, alternant(alg, rho0(alg).doubled()));
}

mpq_class vdim_formula(const Algebra &alg, const Weight &lambda, VdimDenominator reading)
{
  const auto rs = positive_roots(alg);
  const Weight lr = lambda + rho(alg);
  const Weight x = reading == VdimDenominator::Classical ? rho0(alg) : lambda + rho0(alg);
  mpq_class v = 1;
  for (std::size_t k = 0; k < rs.odd_positive.size(); ++k)
    v *= 2;
  for (const auto &r : rs.even_positive) {
    mpq_class den = bilinear_form(r.weight, x);
    if (den == 0)
      throw InvalidInput("singular input: (" + r.weight.to_string() + ", " + x.to_string() + ") = 0");
    v *= bilinear_form(r.weight, lr) / den;
  }
  return v;
}

} // namespace spochar
