#include "spochar/json_io.hpp"


namespace spochar {

json integer_json(const mpz_class &z)
{
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json &j)
{
  if (j.is_number_integer())
    return mpz_class(j.get<long>());
  if (j.is_string())
    return mpz_class(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

json to_json(const LaurentPoly &p)
{
  json terms = json::array();
  for (const auto &[e, c] : p.terms()) {
    json exp = json::array();
    for (int v : e.doubled())
      exp.push_back(v);
    terms.push_back({{"exp", exp}, {"coef", c.get_str()}});
  }
  return {{"n", p.lattice().n}, {"m", p.lattice().m}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const json &j)
{
  try {
    Lattice lat{j.at("n").get<int>(), j.at("m").get<int>()};
    std::vector<LaurentPoly::Term> terms;
    for (const auto &t : j.at("terms")) {
      std::vector<int> exp = t.at("exp").get<std::vector<int>>();
      if (exp.size() != lat.size())
        throw InvalidInput("exponent length does not match the lattice");
      terms.emplace_back(ExponentVector::from_doubled(exp), integer_from_json(t.at("coef")));
    }
    return LaurentPoly::from_terms(lat, std::move(terms));
  } catch (const json::exception &e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json to_json(const Weight &w)
{
  return w.to_string();
}

Weight weight_from_json(const Algebra &alg, const json &j)
{
  if (!j.is_string())
    throw InvalidInput("weight must be a string, got " + j.dump());
  return Weight::parse(alg, j.get<std::string>());
}

json to_json(const VirtualDecomposition &d)
{
  json factors = json::array();
  for (const auto &[w, c] : d.factors)
    factors.push_back({{"weight", to_json(w)}, {"bar", w.bar_notation()}, {"mult", integer_json(c)}});
  return {{"basis", d.basis == Basis::Irreducible ? "irr" : "kac"},
          {"factors", factors},
          {"remainder_zero", d.complete()},
          {"remainder", to_json(d.remainder)}};
}

VirtualDecomposition decomposition_from_json(const Algebra &alg, const json &j)
{
  try {
    VirtualDecomposition d;
    std::string b = j.at("basis").get<std::string>();
    if (b != "irr" && b != "kac")
      throw InvalidInput("unknown basis " + b);
    d.basis = b == "irr" ? Basis::Irreducible : Basis::Kac;
    for (const auto &f : j.at("factors"))
      d.factors.emplace_back(weight_from_json(alg, f.at("weight")), integer_from_json(f.at("mult")));
    d.remainder = j.contains("remainder") ? laurent_from_json(j.at("remainder")) : LaurentPoly(alg.lattice());
    if (d.complete() != j.at("remainder_zero").get<bool>())
      throw InvalidInput("remainder_zero disagrees with the remainder");
    return d;
  } catch (const json::exception &e) {
    throw InvalidInput(std::string("malformed decomposition JSON: ") + e.what());
  }
}

} // namespace spochar
