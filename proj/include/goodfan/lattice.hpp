#pragma once
// Integer lattice utilities: primitive vectors and the splitting of the rank-n
// lattice induced by a primitive covector phi. The split identifies ker(phi)
// with the rank-(n-1) lattice and carries the complementary vector e with
// <phi, e> = 1, so characters factor as  chi_m = t^<phi,m> * chi_(kernel part)
// with t = chi_e.

#include <utility>
#include <vector>

#include "goodfan/numeric.hpp"

namespace goodfan {

// (primitive vector, content): v = content * primitive, content > 0, the
// primitive part keeps v's orientation. Zero vector -> precondition_error.
std::pair<IntVec, Int> make_primitive(const IntVec& v);

struct TorusSplit {
    IntVec phi;                        // primitive covector, rank n
    IntVec e;                          // <phi, e> = 1
    std::vector<IntVec> kernel_basis;  // n-1 vectors spanning ker(phi) over Z

    // Rows of the inverse of the column matrix (kernel_basis | e); the last
    // row equals phi. Unimodularity makes the inverse integral.
    std::vector<IntVec> inverse_rows;

    int rank() const { return static_cast<int>(phi.size()); }
};

// Extended-gcd column reduction (Hermite style, coordinates left to right);
// deterministic. Kernel vectors are sign-normalized (first nonzero positive).
// Non-primitive or zero phi -> precondition_error.
TorusSplit complete_split(const IntVec& phi);

// Coordinates of m in kernel_basis; m must satisfy <phi, m> = 0, otherwise
// precondition_error("not in kernel sublattice").
IntVec push_down(const IntVec& m, const TorusSplit& split);

// Inverse of push_down: sum of c_i * kernel_basis[i].
IntVec pull_up(const IntVec& c, const TorusSplit& split);

}  // namespace goodfan
