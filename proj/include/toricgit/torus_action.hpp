#pragma once

// Diagonal torus actions on affine space, semistable cones per orbit class,
// simultaneous polarizations, and non-quasi-projectivity certificates.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricgit/cone.hpp"
#include "toricgit/numeric.hpp"

namespace toricgit {

// Column j of weights is the character by which the torus scales
// coordinate j.
struct TorusAction {
  Eigen::Index rank = 0;
  std::vector<std::string> coords;
  MatZ weights;  // rank x N
};

// Shape and name-uniqueness checks; throws std::invalid_argument.
void validate(const TorusAction& A);

// Orbit class of points whose nonzero coordinates are exactly `support`
// (0-based coordinate indices, sorted, unique).
struct OrbitClass {
  std::vector<Eigen::Index> support;
};

enum class PolarizationMode { Semistable, Stable };

// Rank-t action on s+t coordinates u_1..u_s, x_1..x_t where u_i scales by
// the character in row i of c and x_j scales by e_j. Entries of c must be
// nonnegative.
TorusAction action_from_subtorus(Eigen::Index s, Eigen::Index t, const MatZ& c);

// The cyclic doubling action: s = t and row i of c is e_i + 2 e_{i+1}
// (indices mod t), so u_i scales by lambda_i lambda_{i+1}^2.
TorusAction doubling_action(Eigen::Index t);

// Orbit class with u_i present and x_i absent: support {u_i, x_j : j != i}.
OrbitClass doubling_orbit(Eigen::Index t, Eigen::Index i);

// Weight columns indexed by the orbit's support.
MatZ support_columns(const TorusAction& A, const OrbitClass& O);

// Facets of the cone of characters under which the orbit class is
// semistable: Cone(weights_j : j in support).
FacetSystem semistable_cone(const TorusAction& A, const OrbitClass& O);

// chi in the closed cone; chi = 0 is always semistable.
bool orbit_semistable(const TorusAction& A, const OrbitClass& O, const VecZ& chi);

// chi in the relative interior and the supported weight columns span the
// full character space (finite generic stabilizer).
bool orbit_stable(const TorusAction& A, const OrbitClass& O, const VecZ& chi);

// A nonzero integral character making every listed orbit semistable
// (Semistable mode) or stable (Stable mode); nullopt when only chi = 0
// works. Witnesses are re-verified through the generator route before being
// returned.
std::optional<VecZ> simultaneous_polarization(const TorusAction& A,
                                              const std::vector<OrbitClass>& orbits,
                                              PolarizationMode mode);

struct SubsetWitness {
  std::vector<size_t> subset;  // indices into the orbit list
  VecZ chi;
};

struct NonQPCertificate {
  PolarizationMode mode = PolarizationMode::Semistable;
  size_t num_orbits = 0;
  Eigen::Index intersection_dim = 0;  // dimension of the common cone; 0 when certified
  std::vector<SubsetWitness> subset_witnesses;
  std::vector<std::string> transcript;
};

// Thrown when the orbit collection does admit a common nonzero polarization.
struct CertificateFailure : std::runtime_error {
  VecZ chi;
  explicit CertificateFailure(VecZ c);
};

// Certify that no single nonzero polarization covers all orbits at once,
// recording a witness character for every proper subset that admits one.
// Throws CertificateFailure (with the verified witness) otherwise.
NonQPCertificate nonqp_certificate(const TorusAction& A,
                                   const std::vector<OrbitClass>& orbits,
                                   PolarizationMode mode = PolarizationMode::Semistable);

struct PairReport {
  size_t i = 0, j = 0;
  std::optional<VecZ> chi;  // stable-mode witness if any
};

struct SeparationReport {
  std::vector<PairReport> pairs;
  bool all_separated = false;
};

// Stable-mode polarization for every unordered pair of orbits.
SeparationReport separated_pairs(const TorusAction& A, const std::vector<OrbitClass>& orbits);

}  // namespace toricgit
