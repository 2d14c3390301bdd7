#pragma once
// Exact Laurent polynomials over Q: term maps keyed by exponent vectors in
// Z^n, support/Newton polytope, reduction to an argmin face, and the rewrite
// as a univariate polynomial in t = chi_e with coefficients in the kernel
// sublattice ring (coordinates via a TorusSplit).

#include <map>
#include <string>
#include <vector>

#include "goodfan/lattice.hpp"
#include "goodfan/numeric.hpp"
#include "goodfan/polytope.hpp"

namespace goodfan {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;  // zero polynomial of rank 0 (constants)
    explicit LaurentPolynomial(int rank) : rank_(rank) {}

    static LaurentPolynomial constant(int rank, const Rat& c);
    static LaurentPolynomial monomial(int rank, const IntVec& exps, const Rat& c);

    int rank() const { return rank_; }
    const std::map<IntVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Accumulates; entries that cancel to zero are removed.
    void add_term(const IntVec& m, const Rat& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }
    // Total order (rank, then term maps); used for deduplication and stable
    // output ordering.
    bool operator<(const LaurentPolynomial& o) const;

    LaurentPolynomial scale(const Rat& c) const;
    LaurentPolynomial mul_monomial(const IntVec& m) const;

    std::vector<IntVec> support() const;
    LatticePolytope newton_polytope() const;  // zero -> "Newton polytope undefined"

    // Value at a point with all coordinates nonzero (a torus point).
    Rat eval(const RatVec& point) const;

    // Canonical text form: terms in graded-lex descending order, rational
    // coefficients as p/q, variables x1..xn, explicit '*' and '^'.
    std::string to_string() const;

private:
    int rank_ = 0;
    std::map<IntVec, Rat> terms_;
};

// Grammar: polynomial := term (('+'|'-') term)*, term := factors joined by
// '*', factor := rational | 'x'index['^'integer], rational := integer
// ['/'positive-integer]; an optional sign may precede the first term;
// whitespace is insignificant. Variable indices run 1..rank.
LaurentPolynomial parse_polynomial(const std::string& text, int rank);

// Largest variable index mentioned (0 if none); tolerant scan used to infer
// the ambient rank of a file before full parsing.
int scan_max_variable_index(const std::string& text);

// Keeps exactly the terms whose exponents lie on the argmin face of the
// Newton polytope in co-direction xi.
LaurentPolynomial reduce_in_codirection(const LaurentPolynomial& p, const IntVec& xi);

// p written as sum t^d * coeffs[d] after factoring out t^shift, where
// t = chi_e of the split and coefficients live in the kernel coordinates
// (rank n-1). coeffs.front() and coeffs.back() are nonzero.
struct UnivariatePoly {
    TorusSplit split;
    std::vector<LaurentPolynomial> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};
struct UnivariateForm {
    UnivariatePoly poly;
    Int shift;  // lowest t-degree of the input
};
UnivariateForm to_univariate(const LaurentPolynomial& p, const TorusSplit& split);
LaurentPolynomial from_univariate(const UnivariatePoly& u, const Int& shift);

// Canonical representative modulo units c*chi^m: the trailing (graded-lex
// smallest) exponent is shifted to zero and the leading coefficient to 1.
LaurentPolynomial unit_normal_form(const LaurentPolynomial& p);

// Exact quotient a/b in the Laurent ring; throws if b is zero or does not
// divide a.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace goodfan
