#include "goodfan/lattice.hpp"

#include <cstddef>

#include "goodfan/errors.hpp"
#include "goodfan/linalg.hpp"

namespace goodfan {

std::pair<IntVec, Int> make_primitive(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw precondition_error("zero vector has no primitive form");
    IntVec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(p[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return {p, g};
}

// Row-style Hermite normal form in place (full row rank assumed): pivots
// positive, entries above a pivot reduced into [0, pivot). Unique for the row
// lattice. Returns (row, column) of each pivot, left to right.
static std::vector<std::pair<std::size_t, std::size_t>> hermite_normal_form(
    std::vector<IntVec>& rows) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t p = 0;
    for (std::size_t j = 0; j < n && p < rows.size(); ++j) {
        std::size_t nz = p;
        while (nz < rows.size() && rows[nz][j] == 0) ++nz;
        if (nz == rows.size()) continue;
        std::swap(rows[p], rows[nz]);
        for (std::size_t r = p + 1; r < rows.size(); ++r) {
            if (rows[r][j] == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       rows[p][j].get_mpz_t(), rows[r][j].get_mpz_t());
            Int u = rows[r][j] / g, v = rows[p][j] / g;
            IntVec np = add(scale(s, rows[p]), scale(t, rows[r]));
            IntVec nr = sub(scale(v, rows[r]), scale(u, rows[p]));
            rows[p] = std::move(np);
            rows[r] = std::move(nr);
        }
        if (rows[p][j] < 0) rows[p] = negate(rows[p]);
        for (std::size_t r = 0; r < p; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][j].get_mpz_t(), rows[p][j].get_mpz_t());
            if (q != 0) rows[r] = sub(rows[r], scale(q, rows[p]));
        }
        pivots.emplace_back(p, j);
        ++p;
    }
    return pivots;
}

TorusSplit complete_split(const IntVec& phi) {
    const std::size_t n = phi.size();
    if (n == 0) throw shape_error("covector of rank zero");

    // Column operations on the identity, tracked so that phi * U = (g, 0, ..., 0).
    std::vector<IntVec> cols(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
    IntVec w = phi;
    Int g = w[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        Int g2, s, t;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   w[i].get_mpz_t());
        Int u = w[i] / g2, v = g / g2;  // exact: g2 divides both
        IntVec c0 = add(scale(s, cols[0]), scale(t, cols[i]));
        IntVec ci = add(scale(-u, cols[0]), scale(v, cols[i]));
        cols[0] = std::move(c0);
        cols[i] = std::move(ci);
        g = g2;
        w[i] = 0;
    }
    if (g == 0) throw precondition_error("zero vector has no primitive form");
    if (g < 0) {  // happens only when phi = (negative, 0, ..., 0)
        cols[0] = negate(cols[0]);
        g = -g;
    }
    if (g != 1) throw precondition_error("covector is not primitive");

    TorusSplit split;
    split.phi = phi;
    split.e = cols[0];
    for (std::size_t i = 1; i < n; ++i) split.kernel_basis.push_back(cols[i]);

    // Canonical form: Hermite normal form of the kernel basis (unique for the
    // kernel lattice), then e reduced modulo the kernel so the split does not
    // depend on the extended-gcd cofactor choices above.
    std::vector<std::pair<std::size_t, std::size_t>> pivots =
        hermite_normal_form(split.kernel_basis);
    for (auto [p, j] : pivots) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), split.e[j].get_mpz_t(),
                   split.kernel_basis[p][j].get_mpz_t());
        if (q != 0) split.e = sub(split.e, scale(q, split.kernel_basis[p]));
    }

    std::vector<IntVec> matrix_cols = split.kernel_basis;
    matrix_cols.push_back(split.e);
    split.inverse_rows = unimodular_inverse_rows(matrix_cols);
    return split;
}

IntVec push_down(const IntVec& m, const TorusSplit& split) {
    if (m.size() != split.phi.size()) throw shape_error("vector rank mismatch");
    if (dot(split.phi, m) != 0) throw precondition_error("not in kernel sublattice");
    const std::size_t k = split.kernel_basis.size();
    IntVec c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = dot(split.inverse_rows[i], m);
    return c;
}

IntVec pull_up(const IntVec& c, const TorusSplit& split) {
    if (c.size() != split.kernel_basis.size())
        throw shape_error("coordinate rank mismatch");
    IntVec m(split.phi.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        m = add(m, scale(c[i], split.kernel_basis[i]));
    return m;
}

}  // namespace goodfan
