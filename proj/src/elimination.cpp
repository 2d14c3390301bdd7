#include "goodfan/elimination.hpp"

#include <algorithm>
#include <set>

#include "goodfan/errors.hpp"

namespace goodfan {

namespace {

LaurentPolynomial cofactor_det(const std::vector<std::vector<LaurentPolynomial>>& m,
                               int coeff_rank) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    LaurentPolynomial det(coeff_rank);
    int sign = 1;
    for (size_t i = 0; i < n; ++i, sign = -sign) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<LaurentPolynomial>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        LaurentPolynomial term = m[i][0] * cofactor_det(minor, coeff_rank);
        det = sign > 0 ? det + term : det - term;
    }
    return det;
}

LaurentPolynomial bareiss_det(std::vector<std::vector<LaurentPolynomial>>& m,
                              int coeff_rank) {
    size_t n = m.size();
    int sign = 1;
    LaurentPolynomial prev = LaurentPolynomial::constant(coeff_rank, Rat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return LaurentPolynomial(coeff_rank);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPolynomial(coeff_rank);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

LaurentPolynomial poly_determinant(std::vector<std::vector<LaurentPolynomial>> m,
                                   int coeff_rank) {
    size_t n = m.size();
    if (n == 0) throw shape_error("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw shape_error("matrix is not square");
    if (n <= 6) return cofactor_det(m, coeff_rank);
    return bareiss_det(m, coeff_rank);
}

LaurentPolynomial resultant(const UnivariatePoly& P, const UnivariatePoly& Q,
                            int p, int q) {
    if (p + q < 1) throw shape_error("empty resultant");
    if (p < P.degree() || q < Q.degree())
        throw shape_error("declared degree below actual degree");
    if (P.coeffs.empty() || Q.coeffs.empty()) throw shape_error("missing coefficients");
    int rank = P.coeffs[0].rank();
    if (Q.coeffs[0].rank() != rank) throw shape_error("coefficient rings differ");

    auto coeff = [rank](const UnivariatePoly& u, int d) {
        if (d < 0 || d > u.degree()) return LaurentPolynomial(rank);
        return u.coeffs[d];
    };
    int n = p + q;
    std::vector<std::vector<LaurentPolynomial>> m(
        n, std::vector<LaurentPolynomial>(n, LaurentPolynomial(rank)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j <= p; ++j) m[i][i + j] = coeff(P, p - j);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= q; ++j) m[q + i][i + j] = coeff(Q, q - j);
    return poly_determinant(std::move(m), rank);
}

LambdaPoly parametric_resultant(const UnivariatePoly& P,
                                const std::vector<UnivariatePoly>& Qs) {
    if (Qs.empty()) throw shape_error("no equations to eliminate against");
    int rank = P.coeffs.empty() ? -1 : P.coeffs[0].rank();
    if (rank < 0) throw shape_error("missing coefficients");
    int N = static_cast<int>(Qs.size());
    int p = P.degree();
    int q = 0;
    for (const auto& Qi : Qs) {
        if (Qi.coeffs.empty() || Qi.coeffs[0].rank() != rank)
            throw shape_error("coefficient rings differ");
        q = std::max(q, Qi.degree());
    }

    // embed the lambdas as extra variables of the coefficient ring
    auto lift = [rank, N](const LaurentPolynomial& c, int lambda_index) {
        LaurentPolynomial out(rank + N);
        for (const auto& [m, a] : c.terms()) {
            IntVec e = m;
            e.resize(rank + N, Int(0));
            if (lambda_index >= 0) e[rank + lambda_index] = 1;
            out.add_term(e, a);
        }
        return out;
    };
    if (p + q == 0) {
        // 0x0 determinant: a unit pivot and t-free combinations; the
        // projection carries the unit ideal
        LambdaPoly unit;
        unit.parameters = N;
        unit.terms.emplace(IntVec(N, Int(0)),
                           LaurentPolynomial::constant(rank, Rat(1)));
        return unit;
    }

    UnivariatePoly Pl, Ql;
    Pl.split = P.split;
    Ql.split = P.split;
    for (const auto& c : P.coeffs) Pl.coeffs.push_back(lift(c, -1));
    for (int d = 0; d <= q; ++d) {
        LaurentPolynomial cd(rank + N);
        for (int i = 0; i < N; ++i)
            if (d <= Qs[i].degree()) cd = cd + lift(Qs[i].coeffs[d], i);
        Ql.coeffs.push_back(cd);
    }
    while (Ql.coeffs.size() > 1 && Ql.coeffs.back().is_zero()) Ql.coeffs.pop_back();

    LaurentPolynomial R = resultant(Pl, Ql, p, q);

    LambdaPoly out;
    out.parameters = N;
    for (const auto& [m, c] : R.terms()) {
        IntVec kernel_part(m.begin(), m.begin() + rank);
        IntVec lambda_part(m.begin() + rank, m.end());
        if (total(lambda_part) != p)
            throw error("internal: resultant is not homogeneous in the combination parameters");
        auto it = out.terms.find(lambda_part);
        if (it == out.terms.end())
            it = out.terms.emplace(lambda_part, LaurentPolynomial(rank)).first;
        it->second.add_term(kernel_part, c);
    }
    return out;
}

std::vector<LaurentPolynomial> prune_equations(const std::vector<LaurentPolynomial>& eqs) {
    std::set<LaurentPolynomial> seen;
    for (const auto& e : eqs) {
        if (e.is_zero()) continue;
        seen.insert(unit_normal_form(e));
    }
    return {seen.begin(), seen.end()};
}

std::vector<LaurentPolynomial> projection_equations(
    const std::vector<LaurentPolynomial>& system, const TorusSplit& split) {
    if (system.empty()) throw shape_error("empty system");
    const LaurentPolynomial& pivot = system[0];
    if (pivot.is_zero()) throw precondition_error("pivot equation is identically zero");
    LatticePolytope delta = pivot.newton_polytope();
    if (!is_weakly_generic(split.phi, delta)) {
        auto f = face_in_direction(delta, split.phi);
        auto g = face_in_direction(delta, negate(split.phi));
        const auto& bad = f.vertex_indices.size() > 1 ? f : g;
        std::string face;
        for (int i : bad.vertex_indices) {
            if (!face.empty()) face += " ";
            face += vec_to_string(delta.vertices()[i]);
        }
        throw precondition_error(
            "split not weakly generic for pivot Newton polytope; extreme face {" + face +
            "} in co-direction " + vec_to_string(bad.witness) + " is not a vertex");
    }

    std::vector<UnivariatePoly> Qs;
    for (size_t i = 1; i < system.size(); ++i) {
        if (system[i].is_zero()) continue;
        Qs.push_back(to_univariate(system[i], split).poly);
    }
    if (Qs.empty()) throw shape_error("no equations to eliminate against");
    UnivariatePoly P = to_univariate(pivot, split).poly;

    LambdaPoly R = parametric_resultant(P, Qs);
    std::vector<LaurentPolynomial> cs;
    cs.reserve(R.terms.size());
    for (const auto& [l, c] : R.terms) cs.push_back(c);
    return prune_equations(cs);
}

}  // namespace goodfan
