#include "goodfan/mixedvol.hpp"

#include <map>

#include "goodfan/errors.hpp"
#include "goodfan/linalg.hpp"

namespace goodfan {

namespace {

// Simplices covering the face spanned by `points` (all extreme, dim d),
// each as a list of d+1 points. Cone from the first vertex over the facets
// missing it; a face with exactly d+1 vertices is already a simplex.
void triangulate_points(int rank, const std::vector<IntVec>& points, int dim,
                        std::vector<std::vector<IntVec>>& out) {
    if ((int)points.size() == dim + 1) {
        out.push_back(points);
        return;
    }
    LatticePolytope q = hull(rank, points);
    FaceLattice fl = face_lattice(q);
    const IntVec& apex = q.vertices()[0];
    for (std::size_t f = 0; f < fl.facet_vertices.size(); ++f) {
        bool has_apex = false;
        for (int vi : fl.facet_vertices[f]) {
            if (q.vertices()[vi] == apex) has_apex = true;
        }
        if (has_apex) continue;
        std::vector<IntVec> facet_points;
        for (int vi : fl.facet_vertices[f]) facet_points.push_back(q.vertices()[vi]);
        std::vector<std::vector<IntVec>> sub;
        triangulate_points(rank, facet_points, dim - 1, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

Rat simplex_volume(const std::vector<IntVec>& simplex, int rank) {
    std::vector<IntVec> edges;
    for (std::size_t i = 1; i < simplex.size(); ++i)
        edges.push_back(sub(simplex[i], simplex[0]));
    Int d = det_int(edges);
    if (d < 0) d = -d;
    Int fact = 1;
    for (int i = 2; i <= rank; ++i) fact *= i;
    return Rat(d) / Rat(fact);
}

}  // namespace

VolumeResult triangulated_volume(const LatticePolytope& p) {
    VolumeResult res;
    res.value = 0;
    if (p.dim() < p.rank()) return res;
    if (p.rank() == 0) {
        res.value = 1;  // the single point of the rank-0 torus
        return res;
    }
    std::vector<std::vector<IntVec>> simplices;
    triangulate_points(p.rank(), p.vertices(), p.dim(), simplices);
    std::map<IntVec, int> index;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) index[p.vertices()[i]] = (int)i;
    for (const auto& s : simplices) {
        res.value += simplex_volume(s, p.rank());
        std::vector<int> ids;
        for (const auto& v : s) ids.push_back(index.at(v));
        res.triangulation.push_back(std::move(ids));
    }
    return res;
}

Rat volume(const LatticePolytope& p) { return triangulated_volume(p).value; }

Rat bkk_number(const std::vector<LatticePolytope>& deltas) {
    if (deltas.empty()) throw shape_error("no polytopes given");
    int n = deltas[0].rank();
    for (const auto& d : deltas)
        if (d.rank() != n) throw shape_error("polytopes have mixed ranks");
    if ((int)deltas.size() != n)
        throw shape_error("need exactly " + std::to_string(n) +
                          " polytopes of rank " + std::to_string(n) + ", got " +
                          std::to_string(deltas.size()));
    Rat total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<LatticePolytope> parts;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) parts.push_back(deltas[i]);
        Rat v = volume(minkowski_sum(parts));
        if ((n - (int)parts.size()) % 2 != 0) v = -v;
        total += v;
    }
    return total;
}

}  // namespace goodfan
