#include "goodfan/linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "goodfan/errors.hpp"

namespace goodfan {

std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

RatMat to_rat_matrix(const std::vector<IntVec>& rows) {
    RatMat m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) {
        RatVec q(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
        m.push_back(std::move(q));
    }
    return m;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank_of_rat(const RatMat& rows) {
    RatMat m = rows;
    return static_cast<int>(rref(m).size());
}

int rank_of(const std::vector<IntVec>& rows) {
    RatMat m = to_rat_matrix(rows);
    return static_cast<int>(rref(m).size());
}

static IntVec clear_denominators(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        Int den = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        r[i] = scaled.get_num();  // denominator is 1 after scaling
    }
    return r;
}

static void sign_normalize(IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return;
        if (x < 0) {
            v = negate(v);
            return;
        }
    }
}

static IntVec primitive_part(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

std::vector<IntVec> integer_nullspace(const std::vector<IntVec>& rows, int ncols) {
    const std::size_t cols = static_cast<std::size_t>(ncols);
    RatMat m = to_rat_matrix(rows);
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<IntVec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        RatVec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        IntVec iv = primitive_part(clear_denominators(v));
        sign_normalize(iv);
        basis.push_back(std::move(iv));
    }
    return basis;
}

Rat det_rat(RatMat m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rat inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Int det_int(const std::vector<IntVec>& rows) {
    for (const IntVec& r : rows)
        if (r.size() != rows.size()) throw shape_error("determinant needs a square matrix");
    Rat d = det_rat(to_rat_matrix(rows));
    return d.get_num();  // integer matrix has integer determinant
}

std::vector<IntVec> unimodular_inverse_rows(const std::vector<IntVec>& cols) {
    const std::size_t n = cols.size();
    RatMat m(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(cols[j][i]);
        m[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(m);
    if (pivots.size() != n) throw precondition_error("matrix is singular");
    std::vector<IntVec> inv(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = m[i][n + j];
            if (x.get_den() != 1) throw precondition_error("matrix is not unimodular");
            inv[i][j] = x.get_num();
        }
    return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RatMat m(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(m);
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = m[pr][cols];
    return x;
}

// Phase-one simplex: minimize the sum of artificials for
//   sum_i lambda_i * points[i] = target,  sum_i lambda_i = 1,  lambda >= 0.
// Bland's rule guarantees termination; all arithmetic exact.
bool in_convex_hull(const std::vector<IntVec>& points, const IntVec& target) {
    const std::size_t m = points.size();
    if (m == 0) return false;
    const std::size_t n = target.size();
    const std::size_t rows = n + 1;
    const std::size_t cols = m + rows + 1;  // lambdas, artificials, rhs

    RatMat t(rows, RatVec(cols, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < m; ++j)
            t[r][j] = (r < n) ? Rat(points[j][r]) : Rat(1);
        t[r][cols - 1] = (r < n) ? Rat(target[r]) : Rat(1);
        if (t[r][cols - 1] < 0)
            for (std::size_t j = 0; j < cols; ++j) t[r][j] = -t[r][j];
        t[r][m + r] = 1;
    }

    std::vector<std::size_t> basis(rows);
    RatVec obj(cols, Rat(0));  // reduced costs of maximizing -(sum of artificials)
    for (std::size_t r = 0; r < rows; ++r) {
        basis[r] = m + r;
        for (std::size_t j = 0; j < cols; ++j) obj[j] += t[r][j];
    }
    for (std::size_t r = 0; r < rows; ++r) obj[m + r] -= 1;  // basic columns cost 1

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < m; ++j) {  // artificials never re-enter
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][cols - 1] / t[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave]))
                leave = r, best = ratio;
        }
        if (leave == rows) break;  // unbounded cannot happen; guard anyway
        const Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rat f = t[r][enter];
            for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
        }
        const Rat f = obj[enter];
        for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    Rat residual = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) residual += t[r][cols - 1];
    return residual == 0;
}

}  // namespace goodfan
