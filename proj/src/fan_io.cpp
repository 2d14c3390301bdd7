#include "goodfan/fan_io.hpp"

#include <sstream>

#include "goodfan/errors.hpp"

namespace goodfan {

namespace {

std::string vector_line(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

IntVec parse_vector(const std::string& line, std::size_t lineno) {
    IntVec v;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw shape_error("fan file line " + std::to_string(lineno) +
                              ": not an integer: " + tok);
        }
    }
    return v;
}

}  // namespace

std::string write_fan(const Fan& fan) {
    std::string out = "RAYS\n";
    for (const auto& r : fan.rays) out += vector_line(r) + "\n";
    out += "LINEALITY\n";
    for (const auto& l : fan.lineality) out += vector_line(l) + "\n";
    out += "CONES\n";
    for (const auto& c : fan.cones) {
        out += std::to_string(c.dim);
        for (int r : c.ray_indices) out += ' ' + std::to_string(r);
        out += " | face:";
        for (int v : c.dual_face_vertices) out += ' ' + std::to_string(v);
        out += "\n";
    }
    return out;
}

Fan read_fan(const std::string& text) {
    Fan fan;
    enum { none, rays, lineality, cones } section = none;
    std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = trim(lines[i]);
        std::size_t lineno = i + 1;
        if (line.empty() || line[0] == '#') continue;
        if (line == "RAYS") {
            section = rays;
            continue;
        }
        if (line == "LINEALITY") {
            section = lineality;
            continue;
        }
        if (line == "CONES") {
            section = cones;
            continue;
        }
        switch (section) {
            case none:
                throw shape_error("fan file line " + std::to_string(lineno) +
                                  ": expected a section header");
            case rays:
                fan.rays.push_back(parse_vector(line, lineno));
                break;
            case lineality:
                fan.lineality.push_back(parse_vector(line, lineno));
                break;
            case cones: {
                std::size_t bar = line.find('|');
                std::string head = bar == std::string::npos ? line : line.substr(0, bar);
                std::string tail;
                if (bar != std::string::npos) {
                    tail = trim(line.substr(bar + 1));
                    if (tail.rfind("face:", 0) != 0)
                        throw shape_error("fan file line " + std::to_string(lineno) +
                                          ": expected 'face:' after '|'");
                    tail = tail.substr(5);
                }
                IntVec nums = parse_vector(head, lineno);
                if (nums.empty())
                    throw shape_error("fan file line " + std::to_string(lineno) +
                                      ": empty cone line");
                Cone c;
                c.dim = static_cast<int>(nums[0].get_si());
                for (std::size_t j = 1; j < nums.size(); ++j) {
                    long idx = nums[j].get_si();
                    if (idx < 0 || idx >= static_cast<long>(fan.rays.size()))
                        throw shape_error("fan file line " + std::to_string(lineno) +
                                          ": ray index out of range");
                    c.ray_indices.push_back(static_cast<int>(idx));
                }
                for (const Int& v : parse_vector(tail, lineno))
                    c.dual_face_vertices.push_back(static_cast<int>(v.get_si()));
                fan.cones.push_back(std::move(c));
                break;
            }
        }
    }
    int rank = 0;
    if (!fan.rays.empty())
        rank = static_cast<int>(fan.rays[0].size());
    else if (!fan.lineality.empty())
        rank = static_cast<int>(fan.lineality[0].size());
    else
        throw shape_error("fan has neither rays nor lineality; cannot infer the rank");
    for (const auto& r : fan.rays)
        if (static_cast<int>(r.size()) != rank)
            throw shape_error("fan rays have inconsistent lengths");
    for (const auto& l : fan.lineality)
        if (static_cast<int>(l.size()) != rank)
            throw shape_error("fan lineality vectors have inconsistent lengths");
    fan.rank = rank;
    return fan;
}

}  // namespace goodfan
