#pragma once
// Text form of a fan: RAYS / LINEALITY / CONES sections, exact integers.
// Each cone line is "<dim> <ray indices> | face: <dual face vertex indices>";
// the face part is provenance for readers and is not needed to re-check a
// fan against a tuple.

#include <string>

#include "goodfan/polytope.hpp"

namespace goodfan {

std::string write_fan(const Fan& fan);

// Inverse of write_fan up to provenance_vertices, which the text form does
// not carry (left empty). The rank is inferred from the vectors; a fan with
// neither rays nor lineality does not round-trip.
Fan read_fan(const std::string& text);

}  // namespace goodfan
