#ifndef REPSPLIT_CENTRALIZER_HPP
#define REPSPLIT_CENTRALIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "repsplit/orbitals.hpp"

namespace repsplit {

// Multiplication table of the centralizer ring: A_p A_q = sum_r C_pq^r A_r.
struct StructureConstants {
    int rank = 0;
    Point degree = 0;
    std::vector<std::vector<std::uint32_t>> c; // c[r][p*rank + q]
    bool commutative = false;

    std::uint32_t get(int p, int q, int r) const {
        return c[static_cast<std::size_t>(r)][static_cast<std::size_t>(p) * static_cast<std::size_t>(rank) +
                                              static_cast<std::size_t>(q)];
    }
};

// One O(N) sweep per target orbital; sweeps run in parallel when
// REPSPLIT_THREADS (or `threads`) allows.
StructureConstants structure_constants(const OrbitalBasis& basis, int threads = 0);

bool is_multiplicity_free(const StructureConstants& sc);

// Exhaustive identity checks (bounds, identity element, row sums, traces,
// transpose anti-automorphism); returns human-readable violations.
std::vector<std::string> check_structure_constants(const StructureConstants& sc,
                                                   const OrbitalBasis& basis);

// Random associativity probes: sum_s C_pq^s C_sr^t = sum_s C_qr^s C_ps^t.
bool associativity_spot_check(const StructureConstants& sc, std::uint64_t seed, int draws);

int worker_thread_count(int requested); // resolves REPSPLIT_THREADS

} // namespace repsplit

#endif
