#ifndef REPSPLIT_REPORT_HPP
#define REPSPLIT_REPORT_HPP

#include <ostream>
#include <string>

#include "repsplit/splitter.hpp"

namespace repsplit {

struct StageTimings {
    double orbital_seconds = 0; // orbit, suborbits, multiplication table
    double solve_seconds = 0;   // polynomial stage
};

// Suborbit lengths with the prime mark on transposed pairs and the exponent
// convention for repeats: "1, 105, 720, 840, 840', 1344, 4480" or "1^3, 7^3".
std::string suborbit_lengths_line(const OrbitalBasis& basis);

// Component list like "1, 51, 51~, 680" with "~" marking the conjugate member
// of a pair and "d^k" for a multiplicity-k family.
std::string components_line(const Decomposition& dec);

// Paper-style block printed before solving: rank, dimension, suborbit
// lengths, commutativity.
void print_orbital_block(std::ostream& os, const OrbitalBasis& basis,
                         const StructureConstants& sc);

// Full text report of a decomposition.
void print_decomposition(std::ostream& os, const Decomposition& dec, const OrbitalBasis& basis);

std::size_t memory_estimate_bytes(const OrbitalBasis& basis, const StructureConstants& sc);

std::string format_bytes(std::size_t bytes);

} // namespace repsplit

#endif
