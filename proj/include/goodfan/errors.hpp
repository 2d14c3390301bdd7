#pragma once
// Error taxonomy. The CLI maps these onto its exit codes: shape/parse -> 2,
// genericity -> 3, precondition -> 4. Library code throws, never exits.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goodfan {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input; position is a byte offset into the parsed string.
struct parse_error : error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& what)
        : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Structurally wrong arguments: rank mismatches, wrong counts, empty input.
struct shape_error : error {
    using error::error;
};

// A documented mathematical precondition does not hold (zero vector, covector
// not primitive, split not weakly generic, ...).
struct precondition_error : error {
    using error::error;
};

// The randomized driver exhausted its retry budget.
struct genericity_error : error {
    using error::error;
};

}  // namespace goodfan
