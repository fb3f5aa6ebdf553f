#include "toricgit/json_io.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace toricgit {

namespace {

long long to_ll(const Int& v) {
  if (v > (std::numeric_limits<long long>::max)() ||
      v < (std::numeric_limits<long long>::min)())
    throw std::invalid_argument("integer too large for JSON output");
  return v.convert_to<long long>();
}

Int int_from_json(const json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer");
  return Int(j.get<long long>());
}

json int_list(const VecZ& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_ll(v(i)));
  return out;
}

VecZ vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  VecZ v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = int_from_json(j[static_cast<size_t>(i)]);
  return v;
}

// Columns of m as a list of integer lists.
json columns_to_json(const MatZ& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(int_list(m.col(c)));
  return out;
}

// List of equal-length integer lists as matrix columns.
MatZ columns_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty array");
  const auto n = static_cast<Eigen::Index>(j[0].size());
  MatZ m(n, static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    VecZ col = vec_from_json(j[static_cast<size_t>(c)], what);
    if (col.size() != n)
      throw std::invalid_argument(std::string(what) + ": ragged entry lengths");
    m.col(c) = col;
  }
  return m;
}

// 1-based JSON index lists <-> 0-based index vectors.
json indices_to_json(const std::vector<std::vector<Eigen::Index>>& sets) {
  json out = json::array();
  for (const auto& set : sets) {
    json one = json::array();
    for (Eigen::Index i : set) one.push_back(static_cast<long long>(i) + 1);
    out.push_back(one);
  }
  return out;
}

std::vector<std::vector<Eigen::Index>> indices_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<std::vector<Eigen::Index>> sets;
  for (const auto& entry : j) {
    if (!entry.is_array())
      throw std::invalid_argument(std::string(what) + ": expected index lists");
    std::vector<Eigen::Index> set;
    for (const auto& e : entry) {
      Int v = int_from_json(e);
      if (v < 1) throw std::invalid_argument(std::string(what) + ": indices are 1-based");
      set.push_back(static_cast<Eigen::Index>(to_ll(v)) - 1);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

json terms_to_json(const TruncPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms) {
    json term;
    term["monomial exponents"] = m;
    term["coeff"] = rat_to_string(c);
    out.push_back(term);
  }
  return out;
}

TruncPoly terms_from_json(const json& j, int nvars, int bound) {
  TruncPoly p = trunc_poly(nvars, bound);
  if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
  for (const auto& term : j) {
    const json& exps = field(term, "monomial exponents");
    Monomial m;
    for (const auto& e : exps) {
      Int v = int_from_json(e);
      if (v < 0) throw std::invalid_argument("negative exponent");
      m.push_back(static_cast<int>(to_ll(v)));
    }
    Rat c = rat_from_string(field(term, "coeff").get<std::string>());
    add_term(p, m, c);
  }
  return p;
}

int small_int(const json& j, const char* what) {
  Int v = int_from_json(j);
  if (v < 0 || v > 1000000)
    throw std::invalid_argument(std::string(what) + ": out of range");
  return static_cast<int>(to_ll(v));
}

}  // namespace

json action_to_json(const TorusAction& A) {
  json j;
  j["rank"] = static_cast<long long>(A.rank);
  j["coords"] = A.coords;
  j["weights"] = columns_to_json(A.weights);
  return j;
}

TorusAction action_from_json(const json& j) {
  TorusAction A;
  A.rank = static_cast<Eigen::Index>(to_ll(int_from_json(field(j, "rank"))));
  for (const auto& name : field(j, "coords")) A.coords.push_back(name.get<std::string>());
  A.weights = columns_from_json(field(j, "weights"), "weights");
  if (A.weights.rows() != A.rank)
    throw std::invalid_argument("weights: entries must have length rank");
  validate(A);
  return A;
}

json orbit_to_json(const TorusAction& A, const OrbitClass& O) {
  json names = json::array();
  for (Eigen::Index i : O.support) {
    if (i < 0 || i >= static_cast<Eigen::Index>(A.coords.size()))
      throw std::invalid_argument("orbit support index out of range");
    names.push_back(A.coords[static_cast<size_t>(i)]);
  }
  return json{{"support", names}};
}

OrbitClass orbit_from_json(const TorusAction& A, const json& j) {
  OrbitClass O;
  for (const auto& entry : field(j, "support")) {
    const std::string name = entry.get<std::string>();
    auto it = std::find(A.coords.begin(), A.coords.end(), name);
    if (it == A.coords.end())
      throw std::invalid_argument("unknown coordinate name \"" + name + "\"");
    O.support.push_back(it - A.coords.begin());
  }
  std::sort(O.support.begin(), O.support.end());
  if (std::adjacent_find(O.support.begin(), O.support.end()) != O.support.end())
    throw std::invalid_argument("orbit support repeats a coordinate");
  return O;
}

json certificate_to_json(const TorusAction& A, const std::vector<OrbitClass>& orbits,
                         const NonQPCertificate& cert) {
  json j;
  j["orbits"] = json::array();
  for (const auto& O : orbits) j["orbits"].push_back(orbit_to_json(A, O));
  j["intersection_dim"] = static_cast<long long>(cert.intersection_dim);
  j["subset_witnesses"] = json::array();
  for (const auto& w : cert.subset_witnesses) {
    json entry;
    entry["subset"] = json::array();
    for (size_t i : w.subset) entry["subset"].push_back(i + 1);
    entry["chi"] = int_list(w.chi);
    j["subset_witnesses"].push_back(entry);
  }
  return j;
}

ParsedCertificate certificate_from_json(const TorusAction& A, const json& j) {
  ParsedCertificate out;
  for (const auto& entry : field(j, "orbits")) out.orbits.push_back(orbit_from_json(A, entry));
  out.intersection_dim =
      static_cast<Eigen::Index>(to_ll(int_from_json(field(j, "intersection_dim"))));
  for (const auto& entry : field(j, "subset_witnesses")) {
    SubsetWitness w;
    for (const auto& e : field(entry, "subset")) {
      Int v = int_from_json(e);
      if (v < 1 || v > static_cast<long long>(out.orbits.size()))
        throw std::invalid_argument("subset: orbit indices are 1-based");
      w.subset.push_back(static_cast<size_t>(to_ll(v)) - 1);
    }
    w.chi = vec_from_json(field(entry, "chi"), "chi");
    out.subset_witnesses.push_back(std::move(w));
  }
  return out;
}

json fan_to_json(const Fan& F) {
  json j;
  j["rank"] = static_cast<long long>(F.rank);
  j["rays"] = columns_to_json(F.rays);
  j["max_cones"] = indices_to_json(F.max_cones);
  return j;
}

Fan fan_from_json(const json& j) {
  Fan F;
  F.rank = static_cast<Eigen::Index>(to_ll(int_from_json(field(j, "rank"))));
  F.rays = columns_from_json(field(j, "rays"), "rays");
  if (F.rays.rows() != F.rank)
    throw std::invalid_argument("rays: entries must have length rank");
  F.max_cones = indices_from_json(field(j, "max_cones"), "max_cones");
  return F;
}

json cox_to_json(const CoxPresentation& P) {
  json j;
  j["num_vars"] = static_cast<long long>(P.num_vars);
  j["degrees"] = columns_to_json(P.degrees);
  j["primitive_collections"] = indices_to_json(P.primitive_collections);
  return j;
}

CoxPresentation cox_from_json(const json& j) {
  CoxPresentation P;
  P.num_vars = static_cast<Eigen::Index>(to_ll(int_from_json(field(j, "num_vars"))));
  P.degrees = columns_from_json(field(j, "degrees"), "degrees");
  if (P.degrees.cols() != P.num_vars)
    throw std::invalid_argument("degrees: one column per variable expected");
  P.primitive_collections =
      indices_from_json(field(j, "primitive_collections"), "primitive_collections");
  return P;
}

json normal_form_to_json(const NormalForm& nf) {
  json j;
  j["s"] = nf.s;
  j["t"] = nf.t;
  j["d"] = nf.d;
  j["h"] = json::array();
  for (const auto& p : nf.h) j["h"].push_back(terms_to_json(p));
  return j;
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  nf.s = small_int(field(j, "s"), "s");
  nf.t = small_int(field(j, "t"), "t");
  nf.d = small_int(field(j, "d"), "d");
  if (nf.s < 1 || nf.t < 1 || nf.d < 1) throw std::invalid_argument("need s, t, d >= 1");
  const json& h = field(j, "h");
  if (static_cast<int>(h.size()) != nf.s)
    throw std::invalid_argument("h: expected one term list per generator");
  for (const auto& entry : h) nf.h.push_back(terms_from_json(entry, nf.t, nf.d));
  return nf;
}

GeneratorInput generators_from_json(const json& j) {
  GeneratorInput in;
  in.s = small_int(field(j, "s"), "s");
  in.t = small_int(field(j, "t"), "t");
  in.d = small_int(field(j, "d"), "d");
  if (in.s < 1 || in.t < 1 || in.d < 1) throw std::invalid_argument("need s, t, d >= 1");
  for (const auto& entry : field(j, "generators"))
    in.generators.push_back(terms_from_json(entry, in.s + in.t, in.d));
  return in;
}

json generators_to_json(const GeneratorInput& in) {
  json j;
  j["s"] = in.s;
  j["t"] = in.t;
  j["d"] = in.d;
  j["generators"] = json::array();
  for (const auto& p : in.generators) j["generators"].push_back(terms_to_json(p));
  return j;
}

json tower_to_json(const ResolutionTower& tower) {
  auto quotient = [](const CyclicQuotient& Q) {
    json q;
    q["order"] = to_ll(Q.order);
    q["residues"] = json::array();
    for (const Int& r : Q.residues) q["residues"].push_back(to_ll(r));
    return q;
  };
  json j;
  j["input"] = quotient(tower.input);
  j["steps"] = json::array();
  for (const auto& step : tower.steps) {
    json s;
    s["level"] = to_ll(step.level);
    s["divisor_weights"] = json::array();
    for (const Int& w : step.divisor_weights) s["divisor_weights"].push_back(to_ll(w));
    s["step_discrepancy"] = rat_to_string(step.step_discrepancy);
    s["cumulative_discrepancy"] = rat_to_string(step.cumulative_discrepancy);
    s["residual"] = quotient(step.residual);
    j["steps"].push_back(s);
  }
  return j;
}

namespace {

constexpr const char* kFanP2 = R"({
  "rank": 2,
  "rays": [[1, 0], [0, 1], [-1, -1]],
  "max_cones": [[1, 2], [2, 3], [1, 3]]
})";

constexpr const char* kFanP1xP1 = R"({
  "rank": 2,
  "rays": [[1, 0], [-1, 0], [0, 1], [0, -1]],
  "max_cones": [[1, 3], [2, 3], [2, 4], [1, 4]]
})";

constexpr const char* kFanF1 = R"({
  "rank": 2,
  "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]],
  "max_cones": [[1, 2], [2, 3], [3, 4], [1, 4]]
})";

// Quotient presentation of the smooth complete nonprojective toric
// threefold: variables u1, u2, u3, x1, x2, x3, x4 graded by the class group
// Z^4, irrelevant locus cut out by the seven collections below.
constexpr const char* kCoxExample31 = R"({
  "num_vars": 7,
  "degrees": [[1, 1, 0, 1], [1, 1, 1, 0], [1, 0, 1, 1],
              [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
  "primitive_collections": [[1, 4], [1, 7], [2, 4], [2, 5],
                            [3, 4], [3, 6], [5, 6, 7]]
})";

}  // namespace

bool is_builtin_fan(const std::string& name) {
  return name == "P2" || name == "P1xP1" || name == "F1";
}

bool is_builtin_cox(const std::string& name) { return name == "example31"; }

Fan builtin_fan(const std::string& name) {
  const char* text = nullptr;
  if (name == "P2") text = kFanP2;
  else if (name == "P1xP1") text = kFanP1xP1;
  else if (name == "F1") text = kFanF1;
  else throw std::invalid_argument("unknown builtin fan \"" + name + "\"");
  return fan_from_json(json::parse(text));
}

CoxPresentation builtin_cox(const std::string& name) {
  if (name != "example31")
    throw std::invalid_argument("unknown builtin presentation \"" + name + "\"");
  return cox_from_json(json::parse(kCoxExample31));
}

TorusAction builtin_action(const std::string& name, Eigen::Index t) {
  if (name != "example30")
    throw std::invalid_argument("unknown builtin action \"" + name + "\"");
  if (t < 2) throw std::invalid_argument("example30 needs t >= 2");
  // Parameterized by t, so the JSON text is produced on the fly and read
  // back through the same parser the file path uses.
  return action_from_json(json::parse(action_to_json(doubling_action(t)).dump()));
}

std::vector<OrbitClass> builtin_orbits(const std::string& name, Eigen::Index t) {
  TorusAction A = builtin_action(name, t);
  std::vector<OrbitClass> orbits;
  for (Eigen::Index i = 0; i < t; ++i) {
    json text = json::parse(orbit_to_json(A, doubling_orbit(t, i)).dump());
    orbits.push_back(orbit_from_json(A, text));
  }
  return orbits;
}

}  // namespace toricgit
