#ifndef REPSPLIT_JSON_IO_HPP
#define REPSPLIT_JSON_IO_HPP

#include <string>

#include "repsplit/splitter.hpp"

namespace repsplit {

// JSON schema, top level:
//   {degree, rank, suborbits: [{length, transpose_of}], field: <field>|null,
//    components: [{dimension, multiplicity, conjugate_of, coefficients: [...]}]}
// A field element serializes as {field: <field>|null, coords: ["p/q", ...]}
// where <field> = {minpoly: ["p/q", ...], approx: {re, im, radius}} with
// decimal strings for the isolating box. Indices are 1-based, null field
// means a rational value.
std::string decomposition_to_json(const Decomposition& dec, const OrbitalBasis& basis,
                                  int digits = 12, const TransformBasis* tbasis = nullptr);

struct ParsedDecomposition {
    Decomposition dec;
    std::vector<Point> suborbit_lengths;
    std::vector<int> transpose_of; // 0-based
};

ParsedDecomposition decomposition_from_json(const std::string& text);

// Table dump: {degree, rank, suborbits, commutative,
//              tensor: [[p, q, r, value], ...]} (1-based, nonzero entries).
std::string tables_to_json(const OrbitalBasis& basis, const StructureConstants& sc);

} // namespace repsplit

#endif
