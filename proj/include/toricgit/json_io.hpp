#pragma once

// JSON (de)serialization for the library types plus the built-in datasets.
// Conventions, applied uniformly: index lists (maximal cones, primitive
// collections, orbit-subset witnesses) are 1-based in JSON and 0-based in
// the C++ API; rationals travel as "p/q" strings; orbit supports are lists
// of coordinate names, not indices.

#include <string>
#include <vector>

#include <json.hpp>

#include "toricgit/blowup.hpp"
#include "toricgit/fan.hpp"
#include "toricgit/normal_form.hpp"
#include "toricgit/torus_action.hpp"

namespace toricgit {

using nlohmann::json;

// {"rank": r, "coords": [names], "weights": [[r ints] per coordinate]}
json action_to_json(const TorusAction& A);
TorusAction action_from_json(const json& j);

// {"support": [coordinate names]}
json orbit_to_json(const TorusAction& A, const OrbitClass& O);
OrbitClass orbit_from_json(const TorusAction& A, const json& j);

// {"orbits": [orbit...], "intersection_dim": n,
//  "subset_witnesses": [{"subset": [1-based orbit indices], "chi": [ints]}]}
json certificate_to_json(const TorusAction& A, const std::vector<OrbitClass>& orbits,
                         const NonQPCertificate& cert);

struct ParsedCertificate {
  std::vector<OrbitClass> orbits;
  Eigen::Index intersection_dim = 0;
  std::vector<SubsetWitness> subset_witnesses;
};
ParsedCertificate certificate_from_json(const TorusAction& A, const json& j);

// {"rank": n, "rays": [[n ints] per ray], "max_cones": [[1-based ray indices]]}
json fan_to_json(const Fan& F);
Fan fan_from_json(const json& j);

// {"num_vars": N, "degrees": [[k ints] per variable],
//  "primitive_collections": [[1-based variable indices]]}
json cox_to_json(const CoxPresentation& P);
CoxPresentation cox_from_json(const json& j);

// {"s":, "t":, "d":, "h": [[{"monomial exponents": [t ints], "coeff": "p/q"}] per i]}
json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j);

// Input to normalization: {"s":, "t":, "d":,
//  "generators": [[{"monomial exponents": [s+t ints], "coeff": "p/q"}] per i]}
struct GeneratorInput {
  int s = 0;
  int t = 0;
  int d = 0;
  std::vector<TruncPoly> generators;
};
GeneratorInput generators_from_json(const json& j);
json generators_to_json(const GeneratorInput& in);

// Resolution tower report with exact rational discrepancies.
json tower_to_json(const ResolutionTower& tower);

// Built-in datasets. Every builtin is materialized as JSON text and read
// back through the parsers above, so the file and builtin paths cannot
// diverge. Unknown names throw std::invalid_argument.
bool is_builtin_fan(const std::string& name);   // P2, P1xP1, F1
bool is_builtin_cox(const std::string& name);   // example31
Fan builtin_fan(const std::string& name);
CoxPresentation builtin_cox(const std::string& name);

// The cyclic doubling action (name "example30") for a given t, together
// with its t distinguished orbit classes.
TorusAction builtin_action(const std::string& name, Eigen::Index t);
std::vector<OrbitClass> builtin_orbits(const std::string& name, Eigen::Index t);

}  // namespace toricgit
