#pragma once

#include <string>

#include <json.hpp>

#include "obstruct/goeritz.hpp"
#include "obstruct/lattice.hpp"
#include "obstruct/manifolds.hpp"
#include "obstruct/repvar.hpp"

/// JSON forms of library results.  Objects have sorted keys and rationals
/// are "p/q" strings, so equal inputs serialize byte-identically.
namespace obstruct::report {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

Json to_json(const Rational& r);
Json to_json(const lattice::Embedding& e);
Json to_json(const GramMatrix& g);
Json to_json(const mf::TorusKnot& k);
Json to_json(const mf::Splice& y);
Json to_json(const mf::IntegralResult& r);
Json to_json(const mf::Manifold& m);
Json to_json(const mf::CableSlope& s);
Json to_json(const mf::Verdict& v);
Json to_json(const repvar::IrrepWitness& w);

/// {"schema", "version", "command", "inputs", "result"}.
Json envelope(const std::string& command, Json inputs, Json result);

} // namespace obstruct::report
