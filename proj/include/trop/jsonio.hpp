#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "trop/complex.hpp"
#include "trop/decompose.hpp"
#include "trop/reciprocal.hpp"
#include "trop/rigidity.hpp"
#include "trop/tropcurve.hpp"

namespace trop {

using Json = nlohmann::json;

// Rationals travel as decimal-free strings "p" or "p/q"; plain JSON
// integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// { "ambient_dim": d, "dim": k,
//   "ridges": [{"id", "point": ["p/q",...], "basis": [[...],...]}],
//   "faces":  [{"id", "point", "basis", "ridges": [ridge ids]}],
//   "normals": {"ridge id": [[ints],...]},          optional
//   "dual_graph": {"regions": [...], "edges": [...]} optional }
Complex complex_from_json(const Json& j);
Json complex_to_json(const Complex& c);

// {"face id": "p/q", ...}; missing faces are zero.
std::map<std::string, Rational> weighting_from_json(const Json& j);
Json weighting_to_json(const Complex& c, const RatVec& values);

// {"dim": d, "vertices": {"id": ["p/q", ...]}, "edges": [["u","v"], ...]}
Framework framework_from_json(const Json& j);
Json framework_to_json(const Framework& fw);

// {"regions": [ids], "edges": [{"u","v","face_id","x_vector": [ints]}]}
DualGraph dualgraph_from_json(const Json& j, const Complex& c);

Json curve_to_json(const Curve& c);
Json certificate_to_json(const ExtremalityCertificate& cert);
Json decomposition_to_json(const Complex& c, const Decomposition& d);
Json structure_report_to_json(const StructureReport& rep);

}  // namespace trop
