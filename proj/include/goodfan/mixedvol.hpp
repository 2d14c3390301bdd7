#pragma once
// Exact lattice volumes via placing triangulations, and the alternating-sum
// solution count for a tuple of Newton polytopes.

#include <vector>

#include "goodfan/polytope.hpp"

namespace goodfan {

struct VolumeResult {
    Rat value;  // normalized so the unit cube has volume 1
    // Full-dimensional simplices as vertex indices into p.vertices();
    // empty when dim p < rank (value 0).
    std::vector<std::vector<int>> triangulation;
};

// Cones the first vertex over the facets that do not contain it, recursively
// on each facet. Simplex volumes are |det of edge matrix| / n!.
VolumeResult triangulated_volume(const LatticePolytope& p);

Rat volume(const LatticePolytope& p);

// Sum over nonempty S of (-1)^(n-|S|) * volume(sum of the polytopes in S).
// Equals n! times the mixed volume; for n Newton polytopes this is the number
// of solutions of a generic system with those supports. Requires exactly
// rank-many polytopes, all of the same rank.
Rat bkk_number(const std::vector<LatticePolytope>& deltas);

}  // namespace goodfan
