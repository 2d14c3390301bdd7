#include "goodfan/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "goodfan/errors.hpp"
#include "goodfan/fan_io.hpp"
#include "goodfan/mixedvol.hpp"

namespace goodfan {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const shape_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const genericity_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw shape_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw shape_error("cannot write file: " + path);
    out << content;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Comment-stripped polynomial chunks with their 1-based source lines.
std::vector<std::pair<std::string, std::size_t>> system_chunks(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> chunks;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t semi = line.find(';', start);
            std::string piece =
                trim(semi == std::string::npos ? line.substr(start) : line.substr(start, semi - start));
            if (!piece.empty()) chunks.emplace_back(piece, lineno);
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }
    return chunks;
}

IntVec parse_covector(const std::string& text) {
    IntVec v;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw shape_error("not an integer: " + tok);
        }
    }
    if (v.empty()) throw shape_error("empty covector");
    return v;
}

// "x1 x2 ... xn; ..." -> polytope over the listed lattice points
LatticePolytope parse_polytope_literal(const std::string& text) {
    std::vector<IntVec> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece =
            trim(semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start));
        if (!piece.empty()) points.push_back(parse_covector(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (points.empty()) throw shape_error("empty polytope literal");
    for (const auto& p : points)
        if (p.size() != points[0].size())
            throw shape_error("polytope vertices have inconsistent lengths");
    return hull(static_cast<int>(points[0].size()), points);
}

struct CheckOutcome {
    std::string text;
    bool all_pass = true;
};

// The four certificate checks, rendered one PASS/FAIL line each. An empty
// tuple passes vacuously.
CheckOutcome render_checks(const std::vector<LaurentPolynomial>& tuple, const Fan& fan) {
    CheckOutcome out;
    if (tuple.empty()) {
        out.text =
            "edge-independence: PASS\ndevelopedness: PASS\nconvenience: PASS\n"
            "orbit-avoidance: PASS\n";
        return out;
    }
    std::vector<LatticePolytope> deltas;
    for (const auto& p : tuple) deltas.push_back(p.newton_polytope());
    LatticePolytope sum = minkowski_sum(deltas);

    EdgeIndependence edge = edges_affine_independent(deltas);
    if (edge.independent) {
        out.text += "edge-independence: PASS\n";
    } else {
        out.all_pass = false;
        out.text += "edge-independence: FAIL (";
        if (edge.reason == EdgeIndependence::Reason::k_exceeds_rank) {
            out.text += "tuple larger than the rank";
        } else {
            out.text += "dependent selection:";
            for (const auto& sel : edge.violating)
                out.text += " polytope " + std::to_string(sel.poly) + " direction " +
                            vec_to_string(sel.edge.direction);
        }
        out.text += ")\n";
    }

    Developedness dev = is_developed(deltas);
    if (dev.developed) {
        out.text +=
            "developedness: PASS (" + std::to_string(dev.certificates.size()) + " faces)\n";
    } else {
        out.all_pass = false;
        std::string face;
        for (std::size_t i = 0; i < dev.violating_face.size(); ++i) {
            if (i) face += ", ";
            face += vec_to_string(sum.vertices()[dev.violating_face[i]]);
        }
        out.text += "developedness: FAIL (face {" + face + "} witness " +
                    vec_to_string(dev.violating_witness) + ")\n";
    }

    Convenience conv = is_convenient(fan, deltas);
    if (conv.convenient) {
        out.text +=
            "convenience: PASS (" + std::to_string(conv.certificates.size()) + " certificates)\n";
    } else {
        out.all_pass = false;
        out.text += "convenience: FAIL (cone " + std::to_string(conv.violating_cone) +
                    ", polytope " + std::to_string(conv.violating_poly) + ")\n";
    }

    OrbitAvoidance orbit = orbit_avoidance(fan, deltas);
    if (orbit.certified) {
        out.text +=
            "orbit-avoidance: PASS (" + std::to_string(orbit.witnesses.size()) + " witnesses)\n";
    } else {
        out.all_pass = false;
        out.text +=
            "orbit-avoidance: FAIL (cone " + std::to_string(orbit.violating_cone) + ")\n";
    }
    return out;
}

}  // namespace

SystemFile load_system(const std::string& text, int rank) {
    auto chunks = system_chunks(text);
    int n = rank;
    if (n <= 0) {
        int max_index = 0;
        for (const auto& [chunk, lineno] : chunks)
            max_index = std::max(max_index, scan_max_variable_index(chunk));
        n = std::max(max_index, 1);
    }
    SystemFile file;
    file.rank = n;
    for (const auto& [chunk, lineno] : chunks) {
        try {
            file.system.push_back(parse_polynomial(chunk, n));
        } catch (const parse_error& e) {
            throw shape_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return file;
}

SystemFile load_system_file(const std::string& path, int rank) {
    std::string text = read_file(path);
    try {
        return load_system(text, rank);
    } catch (const shape_error& e) {
        throw shape_error(path + ": " + e.what());
    }
}

std::string format_report(const CompactificationResult& result) {
    std::string out = "goodfan report v1\n";
    if (result.whole_torus) out += "variety is the whole torus\n";
    for (const auto& rep : result.report) {
        out += "level " + std::to_string(rep.level) + ": pivot=" + rep.pivot.to_string();
        out += " phi=" + (rep.has_split ? vec_to_string(rep.phi) : std::string("-"));
        out += " e=" + (rep.has_split ? vec_to_string(rep.e) : std::string("-"));
        if (rep.coeffs_before >= 0) {
            out += " coeffs=" + std::to_string(rep.coeffs_before) + "/" +
                   std::to_string(rep.coeffs_after);
        } else {
            out += " coeffs=-/-";
        }
        out += " stop=" + (rep.stop.empty() ? std::string("-") : rep.stop) + "\n";
    }
    out += "codim=" + std::to_string(result.codim) + "\n";
    return out;
}

int cmd_dim(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        SystemFile file = load_system_file(path);
        CompactificationResult result = good_system(file.system, file.rank);
        out << format_report(result);
        out << "dim=" << (file.rank - result.codim) << " codim=" << result.codim << "\n";
        return 0;
    });
}

int cmd_compactify(const std::string& path, std::optional<int> codim,
                   std::optional<std::uint64_t> seed, const std::string& out_dir,
                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (seed && !codim) throw shape_error("--seed requires --codim");
        SystemFile file = load_system_file(path);
        CompactificationResult result =
            codim ? good_system_randomized(file.system, file.rank, *codim, seed.value_or(0))
                  : good_system(file.system, file.rank);

        std::string tuple_text;
        if (result.whole_torus) tuple_text += "# variety is the whole torus\n";
        for (const auto& p : result.tuple) tuple_text += p.to_string() + "\n";

        CheckOutcome checks = render_checks(result.tuple, result.fan);
        std::string certs_text = checks.text;
        if (checks.all_pass) certs_text += "ALL CHECKS PASSED\n";

        std::filesystem::create_directories(out_dir);
        write_file(out_dir + "/system.out", tuple_text);
        write_file(out_dir + "/fan.out", write_fan(result.fan));
        write_file(out_dir + "/certs.out", certs_text);
        write_file(out_dir + "/report.out", format_report(result));

        out << format_report(result);
        if (!checks.all_pass) {
            err << "error: certificate check failed\n" << checks.text;
            return 1;
        }
        return 0;
    });
}

int cmd_project(const std::string& path, const std::string& phi_text, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&]() {
        SystemFile file = load_system_file(path);
        IntVec phi = parse_covector(phi_text);
        if (static_cast<int>(phi.size()) != file.rank)
            throw shape_error("covector has " + std::to_string(phi.size()) +
                              " entries for a rank-" + std::to_string(file.rank) + " system");
        if (file.system.empty()) throw shape_error("no equations to project");
        TorusSplit split = complete_split(phi);
        std::vector<LaurentPolynomial> projected = projection_equations(file.system, split);
        out << "split: phi=" << vec_to_string(split.phi) << " e=" << vec_to_string(split.e)
            << " kernel=";
        for (std::size_t i = 0; i < split.kernel_basis.size(); ++i) {
            if (i) out << " ";
            out << vec_to_string(split.kernel_basis[i]);
        }
        out << "\n";
        for (const auto& c : projected) out << c.to_string() << "\n";
        return 0;
    });
}

int cmd_mixedvol(const std::vector<std::string>& system_paths,
                 const std::vector<std::string>& polytope_literals, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&]() {
        std::vector<LatticePolytope> deltas;
        for (const auto& path : system_paths) {
            SystemFile file = load_system_file(path);
            for (const auto& p : file.system) deltas.push_back(p.newton_polytope());
        }
        for (const auto& lit : polytope_literals) deltas.push_back(parse_polytope_literal(lit));
        Rat value = bkk_number(deltas);
        out << value.get_str() << "\n";
        return 0;
    });
}

int cmd_check(const std::string& tuple_path, const std::string& fan_path, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&]() {
        std::string fan_text = read_file(fan_path);
        Fan fan;
        try {
            fan = read_fan(fan_text);
        } catch (const shape_error& e) {
            throw shape_error(fan_path + ": " + e.what());
        }
        SystemFile file = load_system_file(tuple_path, fan.rank);
        CheckOutcome checks = render_checks(file.system, fan);
        out << checks.text;
        if (checks.all_pass) {
            out << "ALL CHECKS PASSED\n";
            return 0;
        }
        return 1;
    });
}

}  // namespace goodfan
