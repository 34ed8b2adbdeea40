#pragma once

// JSON forms of the library values, used by the CLI and the cache.

#include <json.hpp>

#include "spochar/blocks.hpp"
#include "spochar/laurent.hpp"
#include "spochar/rootdata.hpp"

namespace spochar {

using json = nlohmann::ordered_json;

// {"n":..,"m":..,"terms":[{"exp":[doubled],"coef":"decimal"}]}
json to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const json &j);

json to_json(const Weight &w); // parseable weight string
Weight weight_from_json(const Algebra &alg, const json &j);

// {"basis":..,"factors":[{"weight":..,"mult":..}],"remainder_zero":..,"remainder":..}
json to_json(const VirtualDecomposition &d);
VirtualDecomposition decomposition_from_json(const Algebra &alg, const json &j);

// mpz as a JSON integer when it fits, otherwise a decimal string
json integer_json(const mpz_class &z);
mpz_class integer_from_json(const json &j);

} // namespace spochar
