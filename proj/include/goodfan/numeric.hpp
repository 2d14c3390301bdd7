#pragma once
// Exact arithmetic base types. All integers are arbitrary precision (GMP);
// nothing in the library rounds or truncates.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace goodfan {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;   // lattice vectors and covectors alike
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline IntVec negate(const IntVec& a) { return scale(-1, a); }

inline bool is_zero_vec(const IntVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

inline Int total(const IntVec& a) {
    Int s = 0;
    for (const Int& x : a) s += x;
    return s;
}

// "(a,b,c)" rendering used by reports and error messages.
std::string vec_to_string(const IntVec& v);

}  // namespace goodfan
