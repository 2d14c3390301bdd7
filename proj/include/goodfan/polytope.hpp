#pragma once
// Lattice polytopes with exact rational geometry: hulls, support functions,
// faces in a co-direction, Minkowski sums, edge machinery, normal fans, and
// the predicates used to certify compactifications. Conventions: the support
// function is the MINIMUM of <xi, .> over the polytope, faces are argmin
// faces, facet normals point inward (their minimum is attained on the facet).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goodfan/numeric.hpp"

namespace goodfan {

class LatticePolytope {
public:
    LatticePolytope() = default;
    LatticePolytope(int rank, std::vector<IntVec> extreme_vertices);

    int rank() const { return rank_; }
    // Extreme points only, sorted lexicographically ascending.
    const std::vector<IntVec>& vertices() const { return vertices_; }
    // Dimension of the affine hull.
    int dim() const;
    bool operator==(const LatticePolytope& o) const {
        return rank_ == o.rank_ && vertices_ == o.vertices_;
    }

private:
    int rank_ = 0;
    std::vector<IntVec> vertices_;
};

// Convex hull: deduplicates and drops non-extreme points (exact feasibility
// test). Empty input -> shape_error.
LatticePolytope hull(int rank, const std::vector<IntVec>& points);

// min over the polytope of <xi, .>; integer because both sides are integral.
Int support_function(const LatticePolytope& p, const IntVec& xi);

struct Face {
    std::vector<int> vertex_indices;  // indices into the parent's vertices()
    IntVec witness;                   // a covector attaining exactly this face
    int dim = -1;
};

// Argmin face of <xi, .>; xi = 0 gives the whole polytope.
Face face_in_direction(const LatticePolytope& p, const IntVec& xi);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts);

// Complete face lattice including the polytope itself (the empty face is not
// recorded). Faces are sorted by (dim ascending, vertex set); a face's witness
// is the sum of the inward normals of the facets containing it (zero covector
// for the polytope itself).
struct FaceLattice {
    int poly_dim = 0;
    std::vector<IntVec> facet_normals;  // primitive inward normals
    std::vector<Int> facet_offsets;     // support value on the facet
    std::vector<std::vector<int>> facet_vertices;
    std::vector<IntVec> lineality;      // primitive covectors vanishing on aff(p)
    struct Entry {
        std::vector<int> vertex_indices;
        int dim;
        IntVec witness;
        std::vector<int> containing_facets;
    };
    std::vector<Entry> faces;
};
FaceLattice face_lattice(const LatticePolytope& p);

struct Edge {
    int a, b;          // vertex indices, a < b
    IntVec direction;  // primitive, first nonzero coordinate positive
};
std::vector<Edge> edges(const LatticePolytope& p);

// Faces of the summands in co-direction xi; their Minkowski sum is the face
// of the sum in the same co-direction.
std::vector<Face> face_decomposition(const std::vector<LatticePolytope>& parts,
                                     const IntVec& xi);

struct EdgeSelection {
    int poly;  // which polytope
    Edge edge;
};
struct EdgeIndependence {
    enum class Reason { independent, dependent_selection, k_exceeds_rank };
    bool independent = false;
    Reason reason = Reason::independent;
    // First violating selection in lexicographic order (one edge direction per
    // polytope); empty when independent or k exceeds the rank.
    std::vector<EdgeSelection> violating;
};
// True iff every choice of one edge per polytope yields linearly independent
// directions. k > rank is reported as its own reason (even though a polytope
// without edges would make the quantifier vacuous).
EdgeIndependence edges_affine_independent(const std::vector<LatticePolytope>& parts);

struct DevelopedWitness {
    std::vector<int> face_vertices;  // face of the Minkowski sum
    IntVec face_witness;
    int summand;   // index j with a vertex summand
    IntVec vertex;  // that vertex of parts[summand]
};
struct Developedness {
    bool developed = false;
    std::vector<DevelopedWitness> certificates;  // one per face of dim < k
    // On failure: the violating face of the sum.
    std::vector<int> violating_face;
    IntVec violating_witness;
};
// Every face of the Minkowski sum of dimension < k must have at least one
// vertex among its summand faces.
Developedness is_developed(const std::vector<LatticePolytope>& parts);

// Zero covector reported as not (weakly) generic.
bool is_generic_covector(const IntVec& xi, const LatticePolytope& p);
bool is_weakly_generic(const IntVec& xi, const LatticePolytope& p);

// First generic covector in the canonical enumeration: shells of increasing
// max-norm; within a shell, lexicographic product over the per-coordinate
// value sequence 0, 1, -1, 2, -2, ...; non-primitive candidates skipped.
IntVec find_generic_covector(const LatticePolytope& p);

struct Cone {
    int dim = 0;                        // includes the lineality space
    std::vector<int> ray_indices;       // into Fan::rays
    std::vector<int> dual_face_vertices;  // into Fan::provenance_vertices
};
struct Fan {
    int rank = 0;
    std::vector<IntVec> rays;       // primitive covectors
    std::vector<IntVec> lineality;  // shared by every cone
    std::vector<Cone> cones;        // closed under taking faces
    std::vector<IntVec> provenance_vertices;  // vertices of the dual polytope
};

// Normal fan: one cone per face (the cone of covectors minimizing on it).
// Complete by construction; for lower-dimensional polytopes every cone
// contains the lineality space of covectors constant on the polytope.
Fan normal_fan(const LatticePolytope& p);

struct ConvenienceWitness {
    int cone;    // index of a maximal cone
    int poly;    // tuple index
    IntVec vertex;  // vertex whose character is linear on that cone
};
struct Convenience {
    bool convenient = false;
    std::vector<ConvenienceWitness> certificates;
    int violating_cone = -1, violating_poly = -1;
};
// Support functions of all tuple members must be linear on every maximal cone
// (checked exactly at cone generators: rays plus +-lineality). The fan must
// contain a full-dimensional cone ("incomplete fan" otherwise).
Convenience is_convenient(const Fan& fan, const std::vector<LatticePolytope>& tuple);

}  // namespace goodfan
