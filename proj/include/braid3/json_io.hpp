#pragma once

#include <gmpxx.h>

#include "json.hpp"

#include "braid3/conjugacy.hpp"
#include "braid3/word_problem.hpp"

namespace braid3 {

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that, so nothing silently overflows.
nlohmann::json mpz_json(const mpz_class& z);

// {"rho1":"1/0","rho2":"0/1","eps":0} - projective points as "num/den".
nlohmann::json rho_json(const RhoInvariant& r);

// {"type":"elliptic2"} | {"type":"elliptic3","sign":±1}
// | {"type":"parabolic","s":s} | {"type":"hyperbolic","trace":t,"period":[..]}
nlohmann::json class_json(const ClassInvariant& c);

// class_json plus "eps".
nlohmann::json mu_json(const MuInvariant& m);

}  // namespace braid3
