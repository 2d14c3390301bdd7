#include "goodfan/compactify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "goodfan/errors.hpp"

namespace goodfan {

namespace {

constexpr int kRetryBudget = 32;

void check_ranks(const std::vector<LaurentPolynomial>& system, int rank) {
    if (rank < 1) throw shape_error("rank must be positive");
    for (const auto& p : system)
        if (p.rank() != rank) throw shape_error("equation rank does not match the system rank");
}

// Ring map induced by the split's kernel embedding: rank n-1 -> rank n.
LaurentPolynomial pull_up_poly(const LaurentPolynomial& p, const TorusSplit& split) {
    LaurentPolynomial out(split.rank());
    for (const auto& [m, c] : p.terms()) out.add_term(pull_up(m, split), c);
    return out;
}

std::vector<LaurentPolynomial> drop_zeros(const std::vector<LaurentPolynomial>& eqs) {
    std::vector<LaurentPolynomial> out;
    for (const auto& p : eqs)
        if (!p.is_zero()) out.push_back(p);
    return out;
}

// Deeper-level pivot: fewest terms, ties by the canonical polynomial order.
std::size_t pick_pivot(const std::vector<LaurentPolynomial>& eqs, int level) {
    if (level == 1) return 0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < eqs.size(); ++i) {
        if (eqs[i].term_count() < eqs[best].term_count() ||
            (eqs[i].term_count() == eqs[best].term_count() && eqs[i] < eqs[best]))
            best = i;
    }
    return best;
}

CompactificationResult whole_torus_result(int rank) {
    CompactificationResult res;
    res.codim = 0;
    res.whole_torus = true;
    res.fan = normal_fan(hull(rank, {IntVec(rank, 0)}));
    res.edge_cert.independent = true;
    res.developed_cert.developed = true;
    res.convenience_cert = is_convenient(res.fan, {});
    res.orbit_cert.certified = true;  // no cone has dimension > rank
    return res;
}

void pull_back_pivots(std::vector<LaurentPolynomial>& pivots,
                      const std::vector<TorusSplit>& splits) {
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = std::min(i, splits.size()); j-- > 0;)
            pivots[i] = pull_up_poly(pivots[i], splits[j]);
}

void attach_certificates(CompactificationResult& res) {
    FanWithCertificates f = build_convenient_fan(res.tuple);
    res.fan = std::move(f.fan);
    res.edge_cert = std::move(f.edge_cert);
    res.developed_cert = std::move(f.developed_cert);
    res.convenience_cert = std::move(f.convenience_cert);
    res.orbit_cert = std::move(f.orbit_cert);
}

}  // namespace

FanWithCertificates build_convenient_fan(const std::vector<LaurentPolynomial>& tuple) {
    if (tuple.empty()) throw shape_error("empty tuple");
    std::vector<LatticePolytope> deltas;
    for (const auto& p : tuple) deltas.push_back(p.newton_polytope());
    int n = deltas[0].rank();
    for (const auto& d : deltas)
        if (d.rank() != n) throw shape_error("tuple members have mixed ranks");
    int k = static_cast<int>(tuple.size());

    FanWithCertificates out;
    LatticePolytope sum = minkowski_sum(deltas);
    out.fan = normal_fan(sum);
    out.edge_cert = edges_affine_independent(deltas);
    out.developed_cert = is_developed(deltas);
    if (!out.developed_cert.developed) {
        std::string face = "{";
        for (std::size_t i = 0; i < out.developed_cert.violating_face.size(); ++i) {
            if (i) face += ", ";
            face += vec_to_string(sum.vertices()[out.developed_cert.violating_face[i]]);
        }
        face += "}";
        throw precondition_error("tuple is not developed; face " + face +
                                 " of the Minkowski sum has no vertex summand");
    }
    out.convenience_cert = is_convenient(out.fan, deltas);

    out.orbit_cert = orbit_avoidance(out.fan, deltas);
    // this fan came from the sum itself, so the stored dual faces must agree
    // with the faces cut out at the witness covectors
    for (std::size_t ci = 0; ci < out.fan.cones.size(); ++ci) {
        const Cone& c = out.fan.cones[ci];
        if (c.dim <= n - k) continue;
        IntVec xi(n, 0);
        for (int r : c.ray_indices) xi = add(xi, out.fan.rays[r]);
        if (face_in_direction(sum, xi).vertex_indices != c.dual_face_vertices) {
            out.orbit_cert.certified = false;
            out.orbit_cert.violating_cone = static_cast<int>(ci);
        }
    }
    return out;
}

OrbitAvoidance orbit_avoidance(const Fan& fan, const std::vector<LatticePolytope>& deltas) {
    OrbitAvoidance cert;
    cert.certified = true;
    int n = fan.rank;
    int k = static_cast<int>(deltas.size());
    LatticePolytope sum = minkowski_sum(deltas);
    for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const Cone& c = fan.cones[ci];
        if (c.dim <= n - k) continue;
        // A point of the cone's relative interior; the face decomposition is
        // constant there.
        IntVec xi(n, 0);
        for (int r : c.ray_indices) xi = add(xi, fan.rays[r]);
        std::vector<Face> decomp = face_decomposition(deltas, xi);
        int vertex_summand = -1;
        for (std::size_t j = 0; j < decomp.size(); ++j) {
            if (decomp[j].vertex_indices.size() == 1) {
                vertex_summand = static_cast<int>(j);
                break;
            }
        }
        if (vertex_summand < 0) {
            cert.certified = false;
            if (cert.violating_cone < 0) cert.violating_cone = static_cast<int>(ci);
            continue;
        }
        OrbitAvoidanceWitness w;
        w.cone = static_cast<int>(ci);
        w.face_vertices = face_in_direction(sum, xi).vertex_indices;
        w.summand = vertex_summand;
        w.vertex = deltas[vertex_summand].vertices()[decomp[vertex_summand].vertex_indices[0]];
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

CompactificationResult good_system(const std::vector<LaurentPolynomial>& system, int rank,
                                   int level_cap) {
    check_ranks(system, rank);

    std::vector<LaurentPolynomial> current = system;
    std::vector<TorusSplit> splits;
    std::vector<LaurentPolynomial> pivots;
    std::vector<LevelReport> reports;

    for (int level = 1;; ++level) {
        std::vector<LaurentPolynomial> eqs = drop_zeros(current);
        if (eqs.empty()) {
            if (level == 1) {
                CompactificationResult res = whole_torus_result(rank);
                res.report = std::move(reports);
                return res;
            }
            throw shape_error("internal: level without equations");
        }
        std::size_t pi = pick_pivot(eqs, level);
        LaurentPolynomial pivot = eqs[pi];
        std::vector<LaurentPolynomial> others;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (i != pi) others.push_back(eqs[i]);

        LevelReport rep;
        rep.level = level;
        rep.pivot = pivot;
        pivots.push_back(pivot);

        if (others.empty()) {
            rep.stop = "single equation";
            reports.push_back(std::move(rep));
            break;
        }

        IntVec phi = find_generic_covector(pivot.newton_polytope());
        TorusSplit split = complete_split(phi);
        rep.has_split = true;
        rep.phi = phi;
        rep.e = split.e;

        UnivariateForm P = to_univariate(pivot, split);
        std::vector<UnivariatePoly> Qs;
        for (const auto& q : others) Qs.push_back(to_univariate(q, split).poly);
        LambdaPoly R = parametric_resultant(P.poly, Qs);

        std::vector<LaurentPolynomial> raw;
        for (const auto& [deg, c] : R.terms) raw.push_back(c);
        std::vector<LaurentPolynomial> pruned = prune_equations(raw);
        rep.coeffs_before = static_cast<int>(raw.size());
        rep.coeffs_after = static_cast<int>(pruned.size());

        if (pruned.empty()) {
            rep.stop = "all coefficients vanish";
            reports.push_back(std::move(rep));
            break;
        }
        if (static_cast<int>(pruned.size()) > level_cap) {
            pruned.resize(level_cap);
            rep.stop = "cap warning";
        }
        reports.push_back(std::move(rep));
        splits.push_back(split);
        current = std::move(pruned);
    }

    pull_back_pivots(pivots, splits);
    for (std::size_t i = 0; i < reports.size(); ++i) reports[i].pivot = pivots[i];

    CompactificationResult res;
    res.codim = static_cast<int>(pivots.size());
    res.tuple = std::move(pivots);
    res.report = std::move(reports);
    attach_certificates(res);
    return res;
}

std::pair<int, int> dimension(const std::vector<LaurentPolynomial>& system, int rank) {
    CompactificationResult res = good_system(system, rank);
    return {rank - res.codim, res.codim};
}

namespace {

LaurentPolynomial random_combination(const std::vector<LaurentPolynomial>& eqs,
                                     std::mt19937_64& rng, long bound) {
    LaurentPolynomial acc(eqs[0].rank());
    for (const auto& q : eqs) {
        long lambda =
            static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
        if (lambda != 0) acc = acc + q.scale(Rat(lambda));
    }
    return acc;
}

CompactificationResult randomized_attempt(const std::vector<LaurentPolynomial>& system,
                                          int codim, std::mt19937_64& rng, long bound) {
    std::vector<LaurentPolynomial> current = system;
    std::vector<TorusSplit> splits;
    std::vector<LaurentPolynomial> pivots;
    std::vector<LevelReport> reports;

    for (int level = 1; level <= codim; ++level) {
        std::vector<LaurentPolynomial> eqs = drop_zeros(current);
        if (eqs.empty()) throw precondition_error("level ran out of equations");
        LaurentPolynomial pivot = random_combination(eqs, rng, bound);
        if (pivot.is_zero()) throw precondition_error("zero pivot draw");
        pivots.push_back(pivot);

        LevelReport rep;
        rep.level = level;
        rep.pivot = pivot;
        if (level == codim) {
            rep.stop = "single equation";
            reports.push_back(std::move(rep));
            break;
        }

        IntVec phi = find_generic_covector(pivot.newton_polytope());
        TorusSplit split = complete_split(phi);
        rep.has_split = true;
        rep.phi = phi;
        rep.e = split.e;

        UnivariateForm P = to_univariate(pivot, split);
        std::vector<LaurentPolynomial> next;
        for (int j = 0; j < codim - level; ++j) {
            LaurentPolynomial g = random_combination(eqs, rng, bound);
            if (g.is_zero()) throw precondition_error("zero combination draw");
            UnivariateForm Q = to_univariate(g, split);
            LaurentPolynomial r =
                resultant(P.poly, Q.poly, P.poly.degree(), Q.poly.degree());
            if (r.is_zero()) throw precondition_error("zero resultant draw");
            LaurentPolynomial n = unit_normal_form(r);
            if (n.term_count() == 1 && is_zero_vec(n.terms().begin()->first))
                throw precondition_error("projection collapsed to a unit");
            next.push_back(std::move(n));
        }
        std::set<LaurentPolynomial> distinct(next.begin(), next.end());
        if (distinct.size() != next.size())
            throw precondition_error("coincident resultant draws");
        rep.coeffs_before = static_cast<int>(next.size());
        rep.coeffs_after = static_cast<int>(next.size());
        reports.push_back(std::move(rep));
        splits.push_back(split);
        current = std::move(next);
    }

    pull_back_pivots(pivots, splits);
    for (std::size_t i = 0; i < reports.size(); ++i) reports[i].pivot = pivots[i];

    CompactificationResult res;
    res.codim = codim;
    res.tuple = std::move(pivots);
    res.report = std::move(reports);
    attach_certificates(res);
    if (!res.edge_cert.independent || !res.developed_cert.developed ||
        !res.convenience_cert.convenient || !res.orbit_cert.certified)
        throw precondition_error("certificate check failed");
    return res;
}

}  // namespace

CompactificationResult good_system_randomized(const std::vector<LaurentPolynomial>& system,
                                              int rank, int codim, std::uint64_t seed) {
    check_ranks(system, rank);
    if (codim < 1) throw precondition_error("codimension must be at least 1");
    if (codim > rank) throw precondition_error("codimension exceeds the rank");
    if (system.empty()) throw shape_error("empty system");

    std::mt19937_64 rng(seed);
    long bound = 4;
    std::string trace;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        try {
            return randomized_attempt(system, codim, rng, bound);
        } catch (const shape_error& e) {
            trace += "\n  attempt " + std::to_string(attempt + 1) + " (range " +
                     std::to_string(bound) + "): " + e.what();
        } catch (const precondition_error& e) {
            trace += "\n  attempt " + std::to_string(attempt + 1) + " (range " +
                     std::to_string(bound) + "): " + e.what();
        }
        if (attempt % 4 == 3) bound *= 2;
    }
    throw genericity_error("genericity failure — verify k or raise coefficient range" + trace);
}

}  // namespace goodfan
