#include "goodfan/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

#include "goodfan/errors.hpp"
#include "goodfan/lattice.hpp"
#include "goodfan/linalg.hpp"

namespace goodfan {

LatticePolytope::LatticePolytope(int rank, std::vector<IntVec> extreme_vertices)
    : rank_(rank), vertices_(std::move(extreme_vertices)) {
    for (const IntVec& v : vertices_)
        if (static_cast<int>(v.size()) != rank_)
            throw shape_error("vertex rank mismatch");
    std::sort(vertices_.begin(), vertices_.end());
}

static std::vector<IntVec> differences(const std::vector<IntVec>& pts) {
    std::vector<IntVec> d;
    for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
    return d;
}

int LatticePolytope::dim() const {
    if (vertices_.empty()) return -1;
    return rank_of(differences(vertices_));
}

LatticePolytope hull(int rank, const std::vector<IntVec>& points) {
    if (points.empty()) throw shape_error("hull of no points");
    std::vector<IntVec> pts = points;
    for (const IntVec& p : pts)
        if (static_cast<int>(p.size()) != rank) throw shape_error("point rank mismatch");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Progressive redundancy removal: a point inside the hull of the others
    // can be dropped without changing the hull, shrinking later tests.
    std::vector<bool> keep(pts.size(), true);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> others;
        others.reserve(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i && keep[j]) others.push_back(pts[j]);
        if (in_convex_hull(others, pts[i])) keep[i] = false;
    }
    std::vector<IntVec> verts;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) verts.push_back(pts[i]);
    return LatticePolytope(rank, std::move(verts));
}

Int support_function(const LatticePolytope& p, const IntVec& xi) {
    if (p.vertices().empty()) throw shape_error("empty polytope");
    Int best = dot(xi, p.vertices()[0]);
    for (const IntVec& v : p.vertices()) best = std::min(best, dot(xi, v));
    return best;
}

Face face_in_direction(const LatticePolytope& p, const IntVec& xi) {
    const Int h = support_function(p, xi);
    Face f;
    f.witness = xi;
    std::vector<IntVec> sel;
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (dot(xi, p.vertices()[i]) == h) {
            f.vertex_indices.push_back(static_cast<int>(i));
            sel.push_back(p.vertices()[i]);
        }
    f.dim = rank_of(differences(sel));
    return f;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.rank() != b.rank()) throw shape_error("rank mismatch in Minkowski sum");
    std::vector<IntVec> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const IntVec& u : a.vertices())
        for (const IntVec& v : b.vertices()) sums.push_back(add(u, v));
    return hull(a.rank(), sums);
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts) {
    if (parts.empty()) throw shape_error("Minkowski sum of no polytopes");
    LatticePolytope acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = minkowski_sum(acc, parts[i]);
    return acc;
}

namespace {

void sign_normalize(IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return;
        if (x < 0) {
            v = negate(v);
            return;
        }
    }
}

// Full-dimensional coordinates for the affine hull: a tower of splits along
// covectors vanishing on all vertex differences. The lifted phis generate the
// lineality space of every normal cone.
struct AdaptedCoords {
    std::vector<IntVec> coords;     // one per vertex, rank d
    int dim = 0;
    std::vector<IntVec> lineality;  // n - d primitive covectors on Z^n
    std::vector<TorusSplit> tower;

    // Lift a covector on the rank-d chart to Z^n (vanishing on each level's e).
    IntVec lift_covector(IntVec eta) const {
        for (auto it = tower.rbegin(); it != tower.rend(); ++it) {
            const std::size_t r = it->phi.size();
            IntVec lifted(r, 0);
            for (std::size_t i = 0; i + 1 < r; ++i)
                lifted = add(lifted, scale(eta[i], it->inverse_rows[i]));
            eta = std::move(lifted);
        }
        return eta;
    }
};

AdaptedCoords adapt_coordinates(const std::vector<IntVec>& vertices, int rank) {
    AdaptedCoords ac;
    std::vector<IntVec> cur = differences(vertices);
    int r = rank;
    while (true) {
        const int d = rank_of(cur);
        if (d == r) break;
        IntVec phi = integer_nullspace(cur, r).front();
        TorusSplit split = complete_split(phi);
        for (IntVec& v : cur) v = push_down(v, split);
        ac.tower.push_back(std::move(split));
        r -= 1;
    }
    ac.dim = r;
    ac.coords.resize(vertices.size());
    ac.coords[0] = IntVec(r, 0);
    for (std::size_t i = 1; i < vertices.size(); ++i) ac.coords[i] = cur[i - 1];

    for (std::size_t j = 0; j < ac.tower.size(); ++j) {
        IntVec lin = ac.tower[j].phi;
        for (std::size_t lvl = j; lvl-- > 0;) {
            const TorusSplit& s = ac.tower[lvl];
            IntVec lifted(s.phi.size(), 0);
            for (std::size_t i = 0; i + 1 < s.phi.size(); ++i)
                lifted = add(lifted, scale(lin[i], s.inverse_rows[i]));
            lin = std::move(lifted);
        }
        lin = make_primitive(lin).first;
        sign_normalize(lin);
        ac.lineality.push_back(std::move(lin));
    }
    std::sort(ac.lineality.begin(), ac.lineality.end());
    return ac;
}

}  // namespace

FaceLattice face_lattice(const LatticePolytope& p) {
    if (p.vertices().empty()) throw shape_error("empty polytope");
    const int n = p.rank();
    const std::size_t nv = p.vertices().size();
    AdaptedCoords ac = adapt_coordinates(p.vertices(), n);
    const int d = ac.dim;

    FaceLattice fl;
    fl.poly_dim = d;
    fl.lineality = ac.lineality;

    // Facets: supporting hyperplanes spanned by affinely independent d-subsets.
    std::map<std::pair<IntVec, Int>, std::vector<int>> facets;
    if (d >= 1) {
        std::vector<int> comb(d);
        for (int i = 0; i < d; ++i) comb[i] = i;
        while (true) {
            std::vector<IntVec> rows;
            for (int i = 1; i < d; ++i)
                rows.push_back(sub(ac.coords[comb[i]], ac.coords[comb[0]]));
            std::vector<IntVec> ns = integer_nullspace(rows, d);
            if (ns.size() == 1) {
                IntVec eta = ns[0];
                Int c = dot(eta, ac.coords[comb[0]]);
                bool lower = true, upper = true;
                for (std::size_t i = 0; i < nv; ++i) {
                    const Int v = dot(eta, ac.coords[i]);
                    if (v < c) lower = false;
                    if (v > c) upper = false;
                }
                if (lower || upper) {
                    if (!lower) {
                        eta = negate(eta);
                        c = -c;
                    }
                    auto key = std::make_pair(eta, c);
                    if (!facets.count(key)) {
                        std::vector<int> on;
                        for (std::size_t i = 0; i < nv; ++i)
                            if (dot(eta, ac.coords[i]) == c)
                                on.push_back(static_cast<int>(i));
                        facets.emplace(std::move(key), std::move(on));
                    }
                }
            }
            // next combination
            int i = d - 1;
            while (i >= 0 && comb[i] == static_cast<int>(nv) - d + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    for (auto& [key, on] : facets) {
        fl.facet_normals.push_back(ac.lift_covector(key.first));
        fl.facet_vertices.push_back(on);
    }
    for (std::size_t f = 0; f < fl.facet_normals.size(); ++f)
        fl.facet_offsets.push_back(
            dot(fl.facet_normals[f], p.vertices()[fl.facet_vertices[f][0]]));

    // Face closure: every nonempty intersection of facets is a face.
    std::set<std::vector<int>> known;
    std::vector<int> all(nv);
    for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<int>(i);
    known.insert(all);
    for (const auto& fv : fl.facet_vertices) known.insert(fv);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> fresh;
        for (const auto& face : known)
            for (const auto& fv : fl.facet_vertices) {
                std::vector<int> inter;
                std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && !known.count(inter)) fresh.push_back(inter);
            }
        for (auto& f : fresh)
            if (known.insert(std::move(f)).second) grew = true;
    }

    for (const auto& vs : known) {
        FaceLattice::Entry e;
        e.vertex_indices = vs;
        std::vector<IntVec> pts;
        for (int i : vs) pts.push_back(p.vertices()[i]);
        e.dim = rank_of(differences(pts));
        e.witness = IntVec(n, 0);
        for (std::size_t f = 0; f < fl.facet_vertices.size(); ++f)
            if (std::includes(fl.facet_vertices[f].begin(), fl.facet_vertices[f].end(),
                              vs.begin(), vs.end())) {
                e.containing_facets.push_back(static_cast<int>(f));
                e.witness = add(e.witness, fl.facet_normals[f]);
            }
        fl.faces.push_back(std::move(e));
    }
    std::sort(fl.faces.begin(), fl.faces.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_indices < b.vertex_indices;
    });
    return fl;
}

std::vector<Edge> edges(const LatticePolytope& p) {
    FaceLattice fl = face_lattice(p);
    std::vector<Edge> es;
    for (const auto& f : fl.faces) {
        if (f.dim != 1) continue;
        if (f.vertex_indices.size() != 2)
            throw error("internal: one-dimensional face without two vertices");
        Edge e;
        e.a = f.vertex_indices[0];
        e.b = f.vertex_indices[1];
        e.direction =
            make_primitive(sub(p.vertices()[e.b], p.vertices()[e.a])).first;
        sign_normalize(e.direction);
        es.push_back(std::move(e));
    }
    return es;
}

std::vector<Face> face_decomposition(const std::vector<LatticePolytope>& parts,
                                     const IntVec& xi) {
    std::vector<Face> fs;
    fs.reserve(parts.size());
    for (const auto& p : parts) fs.push_back(face_in_direction(p, xi));
    return fs;
}

EdgeIndependence edges_affine_independent(const std::vector<LatticePolytope>& parts) {
    EdgeIndependence res;
    const int k = static_cast<int>(parts.size());
    if (k == 0) {
        res.independent = true;
        return res;
    }
    const int n = parts[0].rank();
    for (const auto& p : parts)
        if (p.rank() != n) throw shape_error("rank mismatch in tuple");
    if (k > n) {
        res.independent = false;
        res.reason = EdgeIndependence::Reason::k_exceeds_rank;
        return res;
    }

    // Distinct edge directions per polytope, canonical order, one witness edge
    // per direction.
    std::vector<std::vector<Edge>> dirs(k);
    for (int i = 0; i < k; ++i) {
        std::map<IntVec, Edge> uniq;
        for (const Edge& e : edges(parts[i])) uniq.emplace(e.direction, e);
        for (auto& [d, e] : uniq) dirs[i].push_back(e);
        if (dirs[i].empty()) {
            // A polytope with no edges admits no selection: vacuously true.
            res.independent = true;
            return res;
        }
    }

    // Depth-first over selections in lexicographic order, pruning with an
    // incremental echelon; the first dependent selection found is the
    // lexicographically first violating tuple.
    std::vector<int> choice(k, 0);
    std::vector<RatVec> echelon;  // reduced independent rows
    auto reduce_insert = [&](const IntVec& v) -> bool {
        RatVec r(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) r[j] = Rat(v[j]);
        for (const RatVec& row : echelon) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            if (lead < row.size() && r[lead] != 0) {
                const Rat f = r[lead] / row[lead];
                for (std::size_t j = lead; j < r.size(); ++j) r[j] -= f * row[j];
            }
        }
        for (const Rat& x : r)
            if (x != 0) {
                echelon.push_back(std::move(r));
                return true;
            }
        return false;
    };

    std::vector<std::size_t> stack_sizes;
    int level = 0;
    while (true) {
        if (level == k) {
            // full independent selection; advance to the next one
            --level;
            echelon.resize(stack_sizes.back());
            stack_sizes.pop_back();
            while (level >= 0 &&
                   choice[level] + 1 == static_cast<int>(dirs[level].size())) {
                choice[level] = 0;
                --level;
                if (level >= 0) {
                    echelon.resize(stack_sizes.back());
                    stack_sizes.pop_back();
                }
            }
            if (level < 0) break;
            ++choice[level];
            continue;
        }
        stack_sizes.push_back(echelon.size());
        if (!reduce_insert(dirs[level][choice[level]].direction)) {
            res.independent = false;
            res.reason = EdgeIndependence::Reason::dependent_selection;
            for (int i = 0; i <= level; ++i)
                res.violating.push_back({i, dirs[i][choice[i]]});
            for (int i = level + 1; i < k; ++i)
                res.violating.push_back({i, dirs[i][0]});
            return res;
        }
        ++level;
    }
    res.independent = true;
    res.reason = EdgeIndependence::Reason::independent;
    return res;
}

Developedness is_developed(const std::vector<LatticePolytope>& parts) {
    Developedness res;
    const int k = static_cast<int>(parts.size());
    if (k == 0) {
        res.developed = true;
        return res;
    }
    LatticePolytope sum = minkowski_sum(parts);
    FaceLattice fl = face_lattice(sum);
    for (const auto& face : fl.faces) {
        if (face.dim >= k) continue;
        bool found = false;
        for (int j = 0; j < k && !found; ++j) {
            Face fj = face_in_direction(parts[j], face.witness);
            if (fj.vertex_indices.size() == 1) {
                DevelopedWitness w;
                w.face_vertices = face.vertex_indices;
                w.face_witness = face.witness;
                w.summand = j;
                w.vertex = parts[j].vertices()[fj.vertex_indices[0]];
                res.certificates.push_back(std::move(w));
                found = true;
            }
        }
        if (!found) {
            res.developed = false;
            res.violating_face = face.vertex_indices;
            res.violating_witness = face.witness;
            return res;
        }
    }
    res.developed = true;
    return res;
}

bool is_generic_covector(const IntVec& xi, const LatticePolytope& p) {
    if (is_zero_vec(xi)) return false;
    for (const Edge& e : edges(p))
        if (dot(xi, e.direction) == 0) return false;
    return true;
}

bool is_weakly_generic(const IntVec& xi, const LatticePolytope& p) {
    if (is_zero_vec(xi)) return false;
    if (face_in_direction(p, xi).vertex_indices.size() != 1) return false;
    return face_in_direction(p, negate(xi)).vertex_indices.size() == 1;
}

IntVec find_generic_covector(const LatticePolytope& p) {
    const int n = p.rank();
    std::vector<IntVec> dirs;
    for (const Edge& e : edges(p)) dirs.push_back(e.direction);

    // value sequence 0, 1, -1, 2, -2, ...
    auto value = [](int t) -> long { return (t % 2) ? (t + 1) / 2 : -(t / 2); };
    for (int m = 1;; ++m) {
        const int vals = 2 * m + 1;
        std::vector<int> digit(n, 0);
        while (true) {
            IntVec xi(n);
            int maxabs = 0;
            for (int i = 0; i < n; ++i) {
                const long v = value(digit[i]);
                xi[i] = v;
                maxabs = std::max<long>(maxabs, v < 0 ? -v : v);
            }
            if (maxabs == m) {
                Int g = 0;
                for (const Int& x : xi)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (g == 1) {
                    bool ok = true;
                    for (const IntVec& d : dirs)
                        if (dot(xi, d) == 0) {
                            ok = false;
                            break;
                        }
                    if (ok) return xi;
                }
            }
            int i = n - 1;
            while (i >= 0 && digit[i] == vals - 1) digit[i--] = 0;
            if (i < 0) break;
            ++digit[i];
        }
    }
}

Fan normal_fan(const LatticePolytope& p) {
    FaceLattice fl = face_lattice(p);
    Fan fan;
    fan.rank = p.rank();
    fan.provenance_vertices = p.vertices();
    fan.lineality = fl.lineality;

    std::vector<std::size_t> order(fl.facet_normals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fl.facet_normals[a] < fl.facet_normals[b];
    });
    std::vector<int> new_index(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        fan.rays.push_back(fl.facet_normals[order[i]]);
        new_index[order[i]] = static_cast<int>(i);
    }

    // faces are sorted dim-ascending, so cones come out dim-descending
    for (const auto& face : fl.faces) {
        Cone c;
        c.dim = p.rank() - face.dim;
        for (int f : face.containing_facets) c.ray_indices.push_back(new_index[f]);
        std::sort(c.ray_indices.begin(), c.ray_indices.end());
        c.dual_face_vertices = face.vertex_indices;
        fan.cones.push_back(std::move(c));
    }
    return fan;
}

Convenience is_convenient(const Fan& fan, const std::vector<LatticePolytope>& tuple) {
    Convenience res;
    for (const auto& p : tuple)
        if (p.rank() != fan.rank) throw shape_error("rank mismatch with fan");
    bool has_full = false;
    for (const Cone& c : fan.cones) has_full = has_full || c.dim == fan.rank;
    if (!has_full) throw precondition_error("incomplete fan");

    for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const Cone& c = fan.cones[ci];
        if (c.dim != fan.rank) continue;
        std::vector<IntVec> gens;
        for (int r : c.ray_indices) gens.push_back(fan.rays[r]);
        for (const IntVec& l : fan.lineality) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        for (std::size_t pi = 0; pi < tuple.size(); ++pi) {
            const auto& verts = tuple[pi].vertices();
            std::vector<bool> common(verts.size(), true);
            for (const IntVec& g : gens) {
                const Int h = support_function(tuple[pi], g);
                for (std::size_t v = 0; v < verts.size(); ++v)
                    if (common[v] && dot(g, verts[v]) != h) common[v] = false;
            }
            int pick = -1;
            for (std::size_t v = 0; v < verts.size(); ++v)
                if (common[v]) {
                    pick = static_cast<int>(v);
                    break;
                }
            if (pick < 0) {
                res.convenient = false;
                res.violating_cone = static_cast<int>(ci);
                res.violating_poly = static_cast<int>(pi);
                return res;
            }
            res.certificates.push_back(
                {static_cast<int>(ci), static_cast<int>(pi), verts[pick]});
        }
    }
    res.convenient = true;
    return res;
}

}  // namespace goodfan
