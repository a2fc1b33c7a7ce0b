#ifndef MAPPELL_IO_HPP
#define MAPPELL_IO_HPP

#include "mappell/appell.hpp"
#include "mappell/verify.hpp"

#include <json.hpp>

namespace mappell {

/// Rationals travel as "p/q" strings, never floats.
nlohmann::json rational_to_json(const Rational &r);
Rational rational_from_json(const nlohmann::json &j);

/// Polynomial with an explicit basis tag: {"basis":"ff","omega":"w",
/// "coeffs":[...]} or {"basis":"monomial","coeffs":[...]}.
nlohmann::json poly_to_json(const FFPoly &p, bool monomial = false);
FFPoly poly_from_json(const nlohmann::json &j);

/// Seed file: {"omega": "p/q", "arity": r, "order": N, "coeffs": nested
/// row-major arrays of rational strings with extent order+1 per dimension}.
nlohmann::json seed_to_json(const AppellSeed &seed);
AppellSeed seed_from_json(const nlohmann::json &j);
AppellSeed load_seed_file(const std::string &path);

nlohmann::json record_to_json(const ResultRecord &rec);

} // namespace mappell

#endif
