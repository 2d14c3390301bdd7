#pragma once
// Command implementations behind the goodfan binary. Each command prints to
// the given streams and returns a process exit code (0 success, 2 parse or
// shape error, 3 genericity failure, 4 precondition failure); the binary is
// a thin argument parser on top.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "goodfan/compactify.hpp"

namespace goodfan {

struct SystemFile {
    std::vector<LaurentPolynomial> system;
    int rank = 1;
};

// One polynomial per line; '#' starts a comment; ';' also separates
// polynomials; blank lines are skipped. rank 0 means infer: the largest
// variable index mentioned anywhere, and at least 1.
SystemFile load_system(const std::string& text, int rank = 0);
SystemFile load_system_file(const std::string& path, int rank = 0);

// "goodfan report v1", one line per level, then "codim=<k>". All-zero
// systems carry the note line "variety is the whole torus" instead of levels.
std::string format_report(const CompactificationResult& result);

int cmd_dim(const std::string& path, std::ostream& out, std::ostream& err);

// Writes system.out, fan.out, certs.out, report.out into out_dir and prints
// the report. With codim set the randomized driver runs (seed defaults to 0);
// a seed without a codim is rejected.
int cmd_compactify(const std::string& path, std::optional<int> codim,
                   std::optional<std::uint64_t> seed, const std::string& out_dir,
                   std::ostream& out, std::ostream& err);

// Eliminates the first equation along the covector given as "a1 a2 ... an"
// and prints the split and the projected equations (rank n-1 grammar).
int cmd_project(const std::string& path, const std::string& phi_text, std::ostream& out,
                std::ostream& err);

// Solution count for the Newton polytopes of the given system files plus any
// inline polytopes ("x y; x y; ..." vertex lists).
int cmd_mixedvol(const std::vector<std::string>& system_paths,
                 const std::vector<std::string>& polytope_literals, std::ostream& out,
                 std::ostream& err);

// Re-checks an externally supplied tuple against an externally supplied fan:
// edge-independence, developedness, convenience, orbit-avoidance. Exit 0 iff
// every check passes (failed checks exit 1).
int cmd_check(const std::string& tuple_path, const std::string& fan_path, std::ostream& out,
              std::ostream& err);

}  // namespace goodfan
