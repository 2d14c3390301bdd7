#pragma once
// Drivers that turn an input system of Laurent equations into a certified
// compactification: the deterministic level-by-level elimination (which also
// computes the codimension), a seeded randomized variant for a caller-supplied
// codimension, and the fan assembly with its four certificates.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goodfan/elimination.hpp"
#include "goodfan/laurent.hpp"
#include "goodfan/polytope.hpp"

namespace goodfan {

struct LevelReport {
    int level = 0;            // 1-based
    LaurentPolynomial pivot;  // pulled back to the input rank
    bool has_split = false;
    IntVec phi;  // at the level's own rank; empty when no projection ran
    IntVec e;
    int coeffs_before = -1;  // resultant coefficients before/after pruning
    int coeffs_after = -1;
    std::string stop;  // "", "all coefficients vanish", "single equation", "cap warning"
};

struct OrbitAvoidanceWitness {
    int cone;                        // index into fan.cones
    std::vector<int> face_vertices;  // the cone's dual face of the Minkowski sum
    int summand;                     // tuple index whose face is a single vertex
    IntVec vertex;
};
struct OrbitAvoidance {
    // One witness per cone of dimension > n-k: on such a cone the summand's
    // support function is the single character <., vertex>, so the closure of
    // the zero set misses the corresponding orbit.
    bool certified = false;
    std::vector<OrbitAvoidanceWitness> witnesses;
    int violating_cone = -1;  // first cone without a witness, when not certified
};

// Runs the witness search for a fan against the tuple's Newton polytopes:
// each cone of dimension > n-k is probed at the sum of its rays (a relative
// interior point, so the face decomposition there is the cone's own).
OrbitAvoidance orbit_avoidance(const Fan& fan, const std::vector<LatticePolytope>& deltas);

struct FanWithCertificates {
    Fan fan;  // normal fan of the Minkowski sum of the Newton polytopes
    EdgeIndependence edge_cert;
    Developedness developed_cert;
    Convenience convenience_cert;
    OrbitAvoidance orbit_cert;
};

// Fan plus all four certificates for a tuple of nonzero polynomials. A tuple
// that is not developed cannot avoid the small orbits; that case throws a
// precondition_error naming the violating face.
FanWithCertificates build_convenient_fan(const std::vector<LaurentPolynomial>& tuple);

struct CompactificationResult {
    int codim = 0;
    std::vector<LaurentPolynomial> tuple;  // pivots, pulled back to the input rank
    Fan fan;
    EdgeIndependence edge_cert;
    Developedness developed_cert;
    Convenience convenience_cert;
    OrbitAvoidance orbit_cert;
    bool whole_torus = false;  // every input was the zero polynomial
    std::vector<LevelReport> report;
};

// Deterministic driver. Each level picks a pivot, splits the torus along a
// generic covector for the pivot's Newton polytope, and replaces the other
// equations by the pruned coefficient list of the parametric resultant; it
// stops when the coefficients all vanish or one equation remains. The number
// of levels is the codimension of the variety the input defines. An all-zero
// (or empty) system yields codim 0, an empty tuple, and the one-cone fan.
// level_cap bounds the equations carried into the next level; a capped level
// is flagged "cap warning" in the report (completeness heuristic).
CompactificationResult good_system(const std::vector<LaurentPolynomial>& system, int rank,
                                   int level_cap = 64);

// (dim, codim) of the input's zero set, via good_system.
std::pair<int, int> dimension(const std::vector<LaurentPolynomial>& system, int rank);

// Randomized variant for a known codimension k: each level eliminates against
// k-i random integer combinations of the current equations (one plain
// resultant per combination instead of the parametric expansion) and the k-th
// level's pivot completes the tuple. Results are validated a posteriori by
// the full certificate suite; failed draws retry with a widening coefficient
// range until the retry budget is exhausted (genericity_error).
CompactificationResult good_system_randomized(const std::vector<LaurentPolynomial>& system,
                                              int rank, int codim, std::uint64_t seed);

}  // namespace goodfan
