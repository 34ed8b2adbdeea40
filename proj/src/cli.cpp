#include "spochar/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spochar/acceptance.hpp"
#include "spochar/blocks.hpp"
#include "spochar/charformulas.hpp"
#include "spochar/jacobitrudi.hpp"
#include "spochar/json_io.hpp"
#include "spochar/superspace.hpp"

namespace spochar {

namespace fs = std::filesystem;

bool Command::flag(const std::string &name) const
{
  auto it = options.find(name);
  return it != options.end() && it->second != "false";
}

std::string Command::get(const std::string &name, const std::string &fallback) const
{
  auto it = options.find(name);
  return it == options.end() ? fallback : it->second;
}

std::string Command::canonical() const
{
  std::string s = subcommand;
  for (const auto &[k, v] : options) {
    if (k == "cache-dir" || k == "no-cache" || k == "jobs")
      continue;
    s += " " + k + "=" + v;
  }
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// argument parsing

struct OptionSpec {
  const char *name;
  const char *help;
  bool is_flag = false;
};

const std::vector<OptionSpec> common_options = {
    {"algebra", "algebra as <2n>|<l>, default 2|3"},
    {"format", "text, json or latex"},
    {"cache-dir", "result cache directory (env SPOCHAR_CACHE_DIR)"},
    {"no-cache", "neither read nor write the cache", true},
};

struct SubcommandSpec {
  const char *name;
  const char *help;
  std::vector<OptionSpec> options;
};

const std::vector<SubcommandSpec> &subcommands()
{
  static const std::vector<SubcommandSpec> specs = {
      {"kac", "Kac character K(weight)", {{"weight", "highest weight, e.g. 2d1+1e1"}, {"vdim-denominator", "paper or classical"}}},
      {"euler", "Euler character E(parabolic, Levi module)",
       {{"parabolic", "borel, g, remove=<roots> or retain=<roots>"}, {"levi-module", "trivial, natural, symK, extK, hook:<partition>, irr:<w>, 1d:<w>, with @<w> twist"}}},
      {"jt", "Jacobi-Trudi character D(partition)", {{"partition", "comma list, e.g. 2,1"}, {"form", "p (default) or e"}}},
      {"irr", "irreducible character L(weight) where available", {{"weight", "highest weight"}}},
      {"decompose", "decompose a virtual character",
       {{"kac", "decompose K(w)"}, {"irr", "decompose L(w)"}, {"partition", "decompose D(partition)"},
        {"parabolic", "with --levi-module: decompose an Euler character"}, {"levi-module", "Levi module tag"},
        {"basis", "irr (default) or kac"}, {"depth", "linkage depth for the block check"}}},
      {"dim", "dimension or virtual dimension",
       {{"irr", "dim L(w)"}, {"kac", "vdim K(w)"}, {"partition", "vdim D(partition)"}}},
      {"tensor-table", "L(a|b) x L(1|0) on spo(2|3)", {{"lmax", "largest a and b, default 5"}}},
      {"block", "typicality and linkage", {{"weight", "first weight"}, {"with", "second weight"}, {"depth", "search depth"}}},
      {"laplacian", "kernel of the Laplacian on the exterior superalgebra",
       {{"degree", "degree k"}, {"report", "singular vectors and structure", true},
        {"tensor", "decompose the kernel tensor the natural module", true}, {"max-dim", "dimension guard, default 20000"}}},
      {"identities", "determinant and series identities", {{"n", "number of variables, 1..4"}, {"order", "series truncation, default 10"}}},
      {"conjecture-check", "Euler characters of hook Schur Levi modules", {{"bound", "largest |lambda|, default 5"}, {"cutoff", "closeness to zero, default 2"}}},
      {"reproduce-paper", "run every acceptance check", {{"criterion", "run a single criterion"}}},
      {"batch", "run the commands of a file in parallel", {{"file", "one command per line"}, {"jobs", "worker threads"}}},
  };
  return specs;
}

struct ParseState {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
};

std::unique_ptr<CLI::App> build_app(ParseState &st)
{
  auto app = std::make_unique<CLI::App>("exact characters of spo(2n|l)", "spochar");
  app->require_subcommand(1);
  app->set_version_flag("--version", kVersion);
  for (const auto &sc : subcommands()) {
    CLI::App *sub = app->add_subcommand(sc.name, sc.help);
    std::vector<OptionSpec> all = sc.options;
    all.insert(all.end(), common_options.begin(), common_options.end());
    for (const auto &o : all) {
      std::string key = std::string(sc.name) + "/" + o.name;
      if (o.is_flag)
        sub->add_flag(std::string("--") + o.name, st.flags[key], o.help);
      else
        sub->add_option(std::string("--") + o.name, st.values[key], o.help);
    }
  }
  return app;
}

Command collect(const CLI::App &app, ParseState &st)
{
  Command cmd;
  for (const auto *sub : app.get_subcommands()) {
    cmd.subcommand = sub->get_name();
    for (const auto *opt : sub->get_options()) {
      std::string name = opt->get_name(false, true);
      if (name.rfind("--", 0) != 0 || opt->count() == 0)
        continue;
      name = name.substr(2);
      std::string key = cmd.subcommand + "/" + name;
      if (st.flags.count(key))
        cmd.options[name] = st.flags[key] ? "true" : "false";
      else
        cmd.options[name] = st.values[key];
    }
  }
  return cmd;
}

// ---------------------------------------------------------------------------
// output pieces

enum class Format { Text, Json, Latex };

Format parse_format(const std::string &s)
{
  if (s.empty() || s == "text")
    return Format::Text;
  if (s == "json")
    return Format::Json;
  if (s == "latex")
    return Format::Latex;
  throw InvalidInput("unknown format '" + s + "'");
}

int parse_int(const Command &cmd, const std::string &name, int fallback)
{
  std::string v = cmd.get(name);
  if (v.empty())
    return fallback;
  try {
    std::size_t pos = 0;
    int r = std::stoi(v, &pos);
    if (pos != v.size())
      throw InvalidInput("");
    return r;
  } catch (const std::exception &) {
    throw InvalidInput("--" + name + " expects an integer, got '" + v + "'");
  }
}

std::string require(const Command &cmd, const std::string &name)
{
  std::string v = cmd.get(name);
  if (v.empty())
    throw InvalidInput(cmd.subcommand + " needs --" + name);
  return v;
}

std::string latex_rational(int doubled)
{
  if (doubled % 2 == 0)
    return std::to_string(doubled / 2);
  return std::string(doubled < 0 ? "-" : "") + "\\tfrac{" + std::to_string(std::abs(doubled)) + "}{2}";
}

std::string latex_exponent(const ExponentVector &e, int n)
{
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int d = e[i];
    if (d == 0)
      continue;
    std::string sym = static_cast<int>(i) < n ? "\\delta_" + std::to_string(i + 1) : "\\epsilon_" + std::to_string(static_cast<int>(i) - n + 1);
    std::string c = latex_rational(d);
    if (!s.empty() && d > 0)
      s += "+";
    if (c == "1")
      c = "";
    else if (c == "-1")
      c = "-";
    s += c + sym;
  }
  return s.empty() ? "0" : s;
}

std::string latex_poly(const LaurentPoly &p)
{
  if (p.is_zero())
    return "0";
  std::string s;
  const auto &t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto &[e, c] = *it;
    mpz_class mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    bool unit = e.is_zero();
    if (mag != 1 || unit)
      s += mag.get_str();
    if (!unit)
      s += "e^{" + latex_exponent(e, p.lattice().n) + "}";
  }
  return s;
}

std::string latex_decomposition(const VirtualDecomposition &d)
{
  std::string s;
  const char *sym = d.basis == Basis::Kac ? "K" : "L";
  for (const auto &[w, c] : d.factors) {
    mpz_class mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1)
      s += mag.get_str();
    s += std::string("[") + sym + w.bar_notation() + "]";
  }
  if (s.empty())
    s = "0";
  if (!d.complete())
    s += " + (" + latex_poly(d.remainder) + ")";
  return s;
}

struct Result {
  json j;
  std::vector<std::string> text;
  std::vector<std::string> latex; // falls back to text when empty
  int exit_code = kExitOk;
};

std::string render(const Result &r, Format f)
{
  std::string out;
  switch (f) {
  case Format::Json:
    return r.j.dump(2) + "\n";
  case Format::Latex:
    for (const auto &l : r.latex.empty() ? r.text : r.latex)
      out += l + "\n";
    return out;
  case Format::Text:
    for (const auto &l : r.text)
      out += l + "\n";
    return out;
  }
  return out;
}

VdimDenominator vdim_reading(const Command &cmd)
{
  std::string s = cmd.get("vdim-denominator", "classical");
  if (s == "classical")
    return VdimDenominator::Classical;
  if (s == "paper")
    return VdimDenominator::Paper;
  throw InvalidInput("--vdim-denominator expects paper or classical");
}

Basis parse_basis(const Command &cmd)
{
  std::string s = cmd.get("basis", "irr");
  if (s == "irr")
    return Basis::Irreducible;
  if (s == "kac")
    return Basis::Kac;
  throw InvalidInput("--basis expects irr or kac");
}

json character_result(const Algebra &alg, const std::string &kind, const LaurentPoly &ch)
{
  return {{"algebra", alg.spec()}, {"kind", kind}, {"character", to_json(ch)}, {"vdim", integer_json(ch.evaluate_at_one())}};
}

// ---------------------------------------------------------------------------
// subcommands

Result do_kac(const Command &cmd, const Algebra &alg)
{
  Weight w = Weight::parse(alg, require(cmd, "weight"));
  LaurentPoly ch = kac_character(alg, w);
  Result r;
  const VdimDenominator reading = vdim_reading(cmd);
  json formula = nullptr;
  try {
    formula = vdim_formula(alg, w, reading).get_str();
  } catch (const InvalidInput &) {
    // a vanishing denominator under the paper reading
  }
  r.j = {{"algebra", alg.spec()}, {"kind", "kac"}, {"weight", w.to_string()}, {"character", to_json(ch)},
         {"vdim", integer_json(ch.evaluate_at_one())}, {"vdim_formula", formula},
         {"vdim_denominator", cmd.get("vdim-denominator", "classical")}, {"dominant", is_dominant(alg, w)}};
  r.text = {"K(" + w.to_string() + ") on " + alg.name() + " = " + ch.to_string(),
            "vdim " + ch.evaluate_at_one().get_str() + ", product formula " + (formula.is_null() ? "undefined" : formula.get<std::string>())};
  r.latex = {"K" + w.bar_notation() + " = " + latex_poly(ch)};
  return r;
}

Result do_euler(const Command &cmd, const Algebra &alg)
{
  Parabolic p = Parabolic::parse(alg, cmd.get("parabolic", "borel"));
  LeviModule m = LeviModule::parse(alg, cmd.get("levi-module", "trivial"));
  LaurentPoly ch = euler_character(p, levi_character(p, m));
  Result r;
  r.j = {{"algebra", alg.spec()}, {"kind", "euler"}, {"parabolic", p.describe()}, {"levi_module", m.describe()},
         {"character", to_json(ch)}, {"vdim", integer_json(ch.evaluate_at_one())}};
  r.text = {"E(" + p.describe() + ", " + m.describe() + ") on " + alg.name() + " = " + ch.to_string(),
            "vdim " + ch.evaluate_at_one().get_str()};
  r.latex = {"E^{\\mathfrak p}(" + m.describe() + ") = " + latex_poly(ch)};
  return r;
}

Result do_jt(const Command &cmd, const Algebra &alg)
{
  Partition lam = Partition::parse(require(cmd, "partition"));
  std::string form = cmd.get("form", "p");
  if (form != "p" && form != "e")
    throw InvalidInput("--form expects p or e");
  LaurentPoly ch = form == "p" ? jt_character(lam, alg) : jt_character_e(lam, alg);
  Weight w = sharp(lam, alg);
  Result r;
  r.j = {{"algebra", alg.spec()}, {"kind", "jt"}, {"partition", lam.to_string()}, {"weight", w.to_string()},
         {"form", form}, {"character", to_json(ch)}, {"vdim", integer_json(ch.evaluate_at_one())}};
  r.text = {"D(" + lam.to_string() + ") = D" + w.bar_notation() + " on " + alg.name() + " = " + ch.to_string(),
            "vdim " + ch.evaluate_at_one().get_str()};
  r.latex = {"D" + w.bar_notation() + " = " + latex_poly(ch)};
  return r;
}

Result do_irr(const Command &cmd, const Algebra &alg)
{
  Weight w = Weight::parse(alg, require(cmd, "weight"));
  if (!is_dominant(alg, w))
    throw InvalidInput(w.to_string() + " is not dominant for " + alg.name());
  LaurentPoly ch = basis_character(alg, w, Basis::Irreducible);
  Result r;
  r.j = character_result(alg, "irr", ch);
  r.j["weight"] = w.to_string();
  r.j["dim"] = r.j["vdim"];
  r.text = {"L(" + w.to_string() + ") on " + alg.name() + " = " + ch.to_string(), "dim " + ch.evaluate_at_one().get_str()};
  r.latex = {"\\mathrm{ch}\\,L" + w.bar_notation() + " = " + latex_poly(ch)};
  return r;
}

std::pair<std::string, LaurentPoly> source_character(const Command &cmd, const Algebra &alg)
{
  int given = !cmd.get("kac").empty() + !cmd.get("irr").empty() + !cmd.get("partition").empty() +
              (!cmd.get("parabolic").empty() || !cmd.get("levi-module").empty());
  if (given != 1)
    throw InvalidInput(cmd.subcommand + " needs exactly one of --kac, --irr, --partition or --parabolic/--levi-module");
  if (!cmd.get("kac").empty()) {
    Weight w = Weight::parse(alg, cmd.get("kac"));
    return {"K" + w.bar_notation(), kac_character(alg, w)};
  }
  if (!cmd.get("irr").empty()) {
    Weight w = Weight::parse(alg, cmd.get("irr"));
    if (!is_dominant(alg, w))
      throw InvalidInput(w.to_string() + " is not dominant for " + alg.name());
    return {"L" + w.bar_notation(), basis_character(alg, w, Basis::Irreducible)};
  }
  if (!cmd.get("partition").empty()) {
    Partition lam = Partition::parse(cmd.get("partition"));
    return {"D" + sharp(lam, alg).bar_notation(), jt_character(lam, alg)};
  }
  Parabolic p = Parabolic::parse(alg, cmd.get("parabolic", "borel"));
  LeviModule m = LeviModule::parse(alg, cmd.get("levi-module", "trivial"));
  return {"E(" + p.describe() + ", " + m.describe() + ")", euler_character(p, levi_character(p, m))};
}

Result do_decompose(const Command &cmd, const Algebra &alg)
{
  auto [name, ch] = source_character(cmd, alg);
  VirtualDecomposition d = decompose(alg, ch, parse_basis(cmd));
  std::optional<int> depth;
  if (!cmd.get("depth").empty())
    depth = parse_int(cmd, "depth", 0);
  bool consistent = true;
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    for (std::size_t k = i + 1; k < d.factors.size(); ++k)
      if (!same_central_character(alg, d.factors[i].first, d.factors[k].first, depth).linked)
        consistent = false;
  Result r;
  r.j = to_json(d);
  r.j["algebra"] = alg.spec();
  r.j["source"] = name;
  r.j["blocks_consistent"] = consistent;
  r.text = {name + " = " + d.to_string() + (d.complete() ? "" : " + remainder " + d.remainder.to_string())};
  if (!consistent)
    r.text.push_back("warning: factors in different blocks");
  r.latex = {name + " = " + latex_decomposition(d)};
  return r;
}

Result do_dim(const Command &cmd, const Algebra &alg)
{
  auto [name, ch] = source_character(cmd, alg);
  Result r;
  mpz_class d = ch.evaluate_at_one();
  r.j = {{"algebra", alg.spec()}, {"of", name}, {"dim", integer_json(d)}};
  r.text = {d.get_str()};
  return r;
}

json weight_mults_json(const std::vector<WeightMult> &v)
{
  json a = json::array();
  for (const auto &t : v)
    a.push_back({{"weight", "(" + std::to_string(t.a) + "|" + std::to_string(t.b) + ")"}, {"mult", t.mult}});
  return a;
}

Result do_tensor_table(const Command &cmd, const Algebra &alg)
{
  if (!(alg == Algebra(1, 3)))
    throw InvalidInput("tensor tables are computed for spo(2|3)");
  int lmax = parse_int(cmd, "lmax", 5);
  if (lmax < 0 || lmax > 12)
    throw InvalidInput("--lmax must lie in 0..12");
  Result r;
  json rows = json::array();
  for (const auto &row : tensor_table(lmax)) {
    rows.push_back({{"a", row.a}, {"b", row.b}, {"family", row.printed.family}, {"computed", to_json(row.computed)},
                    {"printed", weight_mults_json(row.printed.terms)}, {"matches", row.matches}});
    std::string cell = "(" + std::to_string(row.a) + "|" + std::to_string(row.b) + ")";
    r.text.push_back("[L" + cell + " x L(1|0)] = " + row.computed.to_string() + "   family " +
                     std::to_string(row.printed.family) + (row.matches ? "" : "   differs from the printed rule"));
    r.latex.push_back("[L" + cell + "\\otimes L(1|0)] = " + latex_decomposition(row.computed) + "\\\\");
  }
  r.j = {{"algebra", alg.spec()}, {"lmax", lmax}, {"rows", rows}};
  return r;
}

Result do_block(const Command &cmd, const Algebra &alg)
{
  Weight w = Weight::parse(alg, require(cmd, "weight"));
  Result r;
  r.j = {{"algebra", alg.spec()}, {"weight", w.to_string()}, {"typical", is_typical(alg, w)}};
  r.text = {w.to_string() + (is_typical(alg, w) ? " is typical" : " is atypical")};
  if (!cmd.get("with").empty()) {
    Weight v = Weight::parse(alg, cmd.get("with"));
    std::optional<int> depth;
    if (!cmd.get("depth").empty())
      depth = parse_int(cmd, "depth", 0);
    Linkage l = same_central_character(alg, w, v, depth);
    r.j["with"] = v.to_string();
    r.j["linked"] = l.linked;
    r.j["inconclusive"] = l.inconclusive;
    r.j["depth"] = l.depth;
    r.j["max_depth"] = l.max_depth;
    r.text.push_back(w.to_string() + " and " + v.to_string() + ": " +
                     (l.linked ? "same central character (depth " + std::to_string(l.depth) + ")"
                               : l.inconclusive ? "not linked within depth " + std::to_string(l.max_depth) + " (inconclusive)"
                                                : "different central characters"));
  }
  return r;
}

json singular_json(const SuperSpace &V, const std::vector<SingularVector> &s)
{
  json a = json::array();
  for (const auto &v : s)
    a.push_back({{"weight", v.weight.to_string()}, {"vector", V.to_string(v.vector)}, {"dominant", v.dominant}, {"invariant", v.invariant}});
  return a;
}

Result do_laplacian(const Command &cmd, const Algebra &alg)
{
  int k = parse_int(cmd, "degree", -1);
  if (k < 0)
    throw InvalidInput("laplacian needs --degree k >= 0");
  int guard = parse_int(cmd, "max-dim", 20000);
  if (guard <= 0)
    throw InvalidInput("--max-dim must be positive");
  const auto max_dim = static_cast<std::size_t>(guard);
  SuperSpace V(alg);
  Result r;
  r.j = {{"algebra", alg.spec()}, {"degree", k}};
  if (cmd.flag("tensor")) {
    auto t = tensor_with_natural(V, k, max_dim);
    json s = json::array();
    for (const auto &x : t.summands)
      s.push_back({{"weight", x.weight.to_string()}, {"span", x.span}, {"character", to_json(x.character)}});
    r.j["tensor_dim"] = t.dim;
    r.j["summands"] = s;
    r.j["sum_dim"] = t.sum_dim;
    r.j["direct_sum"] = t.direct_sum;
    r.text = {t.summary};
    return r;
  }
  if (!cmd.flag("report")) {
    auto basis = kernel_basis(V, k, max_dim);
    std::map<ExponentVector, long, GrlexLess> dims;
    for (const auto &kv : basis)
      ++dims[kv.weight.doubled()];
    std::vector<LaurentPoly::Term> terms(dims.begin(), dims.end());
    LaurentPoly ch = LaurentPoly::from_terms(alg.lattice(), std::move(terms));
    r.j["dim_source"] = V.dimension(k);
    r.j["dim_target"] = V.dimension(k - 2);
    r.j["kernel_dim"] = basis.size();
    r.j["kernel_character"] = to_json(ch);
    r.text = {"ker Laplacian on degree " + std::to_string(k) + " of " + alg.name() + ": dim " + std::to_string(basis.size())};
    return r;
  }
  auto rep = irreducibility_report(V, k, max_dim);
  r.j["dim_source"] = rep.dim_source;
  r.j["dim_target"] = rep.dim_target;
  r.j["kernel_dim"] = rep.kernel_dim;
  r.j["surjective"] = rep.surjective;
  r.j["kernel_character"] = to_json(rep.kernel_character);
  r.j["singular_vectors"] = singular_json(V, rep.singular);
  r.j["cyclic_span"] = rep.cyclic_span;
  r.j["structure"] = to_string(rep.structure);
  r.j["summary"] = rep.summary;
  r.text = {rep.summary};
  for (const auto &s : rep.singular)
    r.text.push_back("  " + s.weight.bar_notation() + ": " + V.to_string(s.vector) + (s.invariant ? "  (invariant)" : ""));
  return r;
}

Result do_identities(const Command &cmd, const Algebra &)
{
  int n = parse_int(cmd, "n", 2), order = parse_int(cmd, "order", 10);
  Result r;
  json a = json::array();
  bool all = true;
  for (const auto &c : identity_suite(n, order)) {
    a.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    r.text.push_back(c.name + ": " + (c.holds ? "holds" : "FAILS") + " (" + c.detail + ")");
    all = all && c.holds;
  }
  r.j = {{"n", n}, {"order", order}, {"identities", a}, {"all_hold", all}};
  if (!all)
    r.exit_code = kExitMath;
  return r;
}

Result do_conjecture(const Command &cmd, const Algebra &alg)
{
  auto rep = conjecture_check(alg, parse_int(cmd, "bound", 5), parse_int(cmd, "cutoff", 2));
  Result r;
  json rows = json::array();
  for (const auto &row : rep.rows) {
    json j = {{"partition", row.lambda.to_string()}, {"weight", row.weight.to_string()}, {"euler", to_json(row.euler)},
              {"leading_at_weight", row.leading_at_weight}, {"close_to_zero", row.close_to_zero}};
    if (row.irr)
      j["irr"] = to_json(*row.irr);
    if (row.pattern_matches)
      j["pattern_matches"] = *row.pattern_matches;
    rows.push_back(j);
    std::string line = "lambda=" + (row.lambda.length() ? row.lambda.to_string() : std::string("()")) + "  " +
                       row.weight.bar_notation();
    if (row.irr)
      line += "  E = " + row.irr->to_string();
    if (row.pattern_matches)
      line += std::string(row.close_to_zero ? "  (close to zero)" : "") + (*row.pattern_matches ? "" : "  pattern differs");
    r.text.push_back(line);
  }
  r.j = {{"algebra", alg.spec()}, {"bound", rep.bound}, {"cutoff", rep.cutoff}, {"rows", rows}, {"rank", rep.rank},
         {"independent", rep.independent}, {"triangular", rep.triangular}, {"pattern_holds", rep.pattern_holds}};
  r.text.push_back("rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.rows.size()) +
                   (rep.independent ? ", independent" : ", dependent") + (rep.triangular ? ", triangular" : "") +
                   (rep.pattern_holds ? ", pattern holds away from zero" : ", pattern fails"));
  return r;
}

Result do_reproduce(const Command &cmd, const Algebra &)
{
  std::vector<CriterionResult> results;
  if (!cmd.get("criterion").empty())
    results.push_back(run_criterion(parse_int(cmd, "criterion", 0)));
  else
    results = run_acceptance();
  Result r;
  json a = json::array();
  for (const auto &c : results) {
    a.push_back({{"id", c.id}, {"title", c.title}, {"status", c.passed ? "PASS" : "FAIL"},
                 {"known_discrepancy", c.known_discrepancy}, {"checks", c.checks}, {"failures", c.failures}, {"notes", c.notes}});
    r.text.push_back(format_line(c));
    for (const auto &f : c.failures)
      r.text.push_back("    failed: " + f);
    for (const auto &n : c.notes)
      r.text.push_back("    note: " + n);
    r.latex.push_back(std::to_string(c.id) + " & " + c.title + " & " + (c.passed ? "PASS" : "FAIL") + " \\\\");
  }
  bool ok = acceptance_ok(results);
  r.j = {{"criteria", a}, {"ok", ok}};
  if (!ok)
    r.exit_code = kExitMath;
  return r;
}

// ---------------------------------------------------------------------------
// cache

fs::path cache_dir(const Command &cmd)
{
  std::string d = cmd.get("cache-dir");
  if (d.empty())
    if (const char *env = std::getenv("SPOCHAR_CACHE_DIR"))
      d = env;
  return d.empty() ? fs::path(".spochar-cache") : fs::path(d);
}

std::optional<std::string> cache_read(const fs::path &file, const std::string &canonical)
{
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("version") != kVersion || j.at("command") != canonical)
      return std::nullopt;
    return j.at("output").get<std::string>();
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

void cache_write(const fs::path &dir, const fs::path &file, const std::string &canonical, const std::string &output)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    return;
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmpname;
  tmpname << file.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  fs::path tmp = dir / tmpname.str();
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    json j = {{"version", kVersion}, {"command", canonical}, {"output", output}};
    out << j.dump(2) << "\n";
    if (!out)
      return;
  }
  fs::rename(tmp, file, ec);
  if (ec)
    fs::remove(tmp, ec);
}

// ---------------------------------------------------------------------------
// batch

std::vector<std::string> split_line(const std::string &line)
{
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote)
        quote = 0;
      else
        cur += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token)
        out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += c;
      in_token = true;
    }
  }
  if (quote)
    throw InvalidInput("unterminated quote in '" + line + "'");
  if (in_token)
    out.push_back(cur);
  return out;
}

Outcome run_batch(const Command &cmd)
{
  std::string path = require(cmd, "file");
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    lines.push_back(line.substr(first));
  }
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int jobs = parse_int(cmd, "jobs", static_cast<int>(hw));
  if (jobs < 1)
    throw InvalidInput("--jobs must be positive");

  std::vector<Outcome> outcomes(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      try {
        Command sub = parse_command(split_line(lines[i]));
        if (sub.subcommand == "batch")
          throw InvalidInput("batch files cannot nest batch");
        for (const char *inherit : {"format", "cache-dir", "no-cache", "algebra"})
          if (!sub.options.count(inherit) && cmd.options.count(inherit))
            sub.options[inherit] = cmd.options.at(inherit);
        outcomes[i] = run(sub);
      } catch (const InvalidInput &e) {
        outcomes[i] = {kExitParse, "", std::string("error: ") + e.what() + "\n"};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(lines.size(), 1))); ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();

  Outcome all;
  const Format f = parse_format(cmd.get("format"));
  if (f == Format::Json) {
    json a = json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      json entry = {{"command", lines[i]}, {"exit", outcomes[i].exit_code}};
      try {
        entry["result"] = outcomes[i].output.empty() ? json(nullptr) : json::parse(outcomes[i].output);
      } catch (const std::exception &) {
        entry["result"] = outcomes[i].output;
      }
      if (!outcomes[i].error.empty())
        entry["error"] = outcomes[i].error;
      a.push_back(entry);
    }
    all.output = a.dump(2) + "\n";
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      all.output += "$ " + lines[i] + "\n" + outcomes[i].output;
      all.error += outcomes[i].error;
    }
  }
  for (const auto &o : outcomes)
    all.exit_code = std::max(all.exit_code, o.exit_code);
  return all;
}

Outcome compute(const Command &cmd)
{
  const Format f = parse_format(cmd.get("format"));
  const Algebra alg = Algebra::parse(cmd.get("algebra", "2|3"));
  Result r;
  const std::string &s = cmd.subcommand;
  if (s == "kac")
    r = do_kac(cmd, alg);
  else if (s == "euler")
    r = do_euler(cmd, alg);
  else if (s == "jt")
    r = do_jt(cmd, alg);
  else if (s == "irr")
    r = do_irr(cmd, alg);
  else if (s == "decompose")
    r = do_decompose(cmd, alg);
  else if (s == "dim")
    r = do_dim(cmd, alg);
  else if (s == "tensor-table")
    r = do_tensor_table(cmd, alg);
  else if (s == "block")
    r = do_block(cmd, alg);
  else if (s == "laplacian")
    r = do_laplacian(cmd, alg);
  else if (s == "identities")
    r = do_identities(cmd, alg);
  else if (s == "conjecture-check")
    r = do_conjecture(cmd, alg);
  else if (s == "reproduce-paper")
    r = do_reproduce(cmd, alg);
  else
    throw InvalidInput("unknown subcommand '" + s + "'");
  return {r.exit_code, render(r, f), ""};
}

} // namespace

std::string cache_key(const Command &cmd)
{
  std::uint64_t h = 1469598103934665603ull;
  for (char c : std::string(kVersion) + "\n" + cmd.canonical()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Command parse_command(const std::vector<std::string> &args)
{
  ParseState st;
  auto app = build_app(st);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app->parse(rev);
  } catch (const CLI::ParseError &e) {
    throw InvalidInput(std::string(e.what()).empty() ? "bad arguments" : e.what());
  }
  return collect(*app, st);
}

Outcome run(const Command &cmd)
{
  try {
    if (cmd.subcommand == "batch")
      return run_batch(cmd);
    const bool use_cache = !cmd.flag("no-cache");
    const fs::path dir = cache_dir(cmd);
    const fs::path file = dir / (cache_key(cmd) + ".json");
    const std::string canonical = cmd.canonical();
    if (use_cache)
      if (auto hit = cache_read(file, canonical))
        return {kExitOk, *hit, ""};
    Outcome o = compute(cmd);
    if (use_cache && o.exit_code == kExitOk)
      cache_write(dir, file, canonical, o.output);
    return o;
  } catch (const InvalidInput &e) {
    return {kExitParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const MathError &e) {
    return {kExitMath, "", std::string("math error: ") + e.what() + "\n"};
  }
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  ParseState st;
  auto app = build_app(st);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app->parse(rev);
  } catch (const CLI::CallForHelp &e) {
    out << app->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion &e) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  Outcome o = run(collect(*app, st));
  out << o.output;
  err << o.error;
  return o.exit_code;
}

} // namespace spochar
