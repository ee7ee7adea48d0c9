#ifndef REPSPLIT_ORBITALS_HPP
#define REPSPLIT_ORBITALS_HPP

#include <vector>

#include "repsplit/permgroup.hpp"

namespace repsplit {

// The orbitals of a transitive action, indexed 0..rank-1, identified with the
// suborbits of the stabilizer of the base point. Membership queries go
// through the transversal, never through materialized N x N matrices.
struct OrbitalBasis {
    Point degree = 0;
    int rank = 0;
    std::vector<int> row1;                 // orbital index of (base, j) for every j
    std::vector<Point> suborbit_lengths;   // per orbital
    std::vector<Point> suborbit_reps;      // smallest j with (base, j) in the orbital
    std::vector<int> transpose_of;         // involution; filled by transpose_pairing
    std::vector<Point> first_col_index;    // min i with (i, base) in the orbital
    OrbitTransversal transversal;          // at the base point
    bool ordered = false;

    int orbital_index(Point i, Point j) const {
        return row1[transversal.apply_inverse_transversal(i, j)];
    }
    int diagonal() const { return row1[transversal.base]; }
};

// Suborbits in first-seen order (by smallest representative); throws
// NotTransitive when the action has more than one orbit.
OrbitalBasis compute_suborbits(const PermutationAction& act);

// Fills transpose_of and first_col_index.
void transpose_pairing(OrbitalBasis& basis);

// Reorders the orbitals: ascending suborbit length, symmetric before
// asymmetric, ascending first-column index, transpose pairs adjacent (the
// member with the smaller first-column index first). Remaining ties fall
// back to the smallest suborbit representative.
void order_orbitals(OrbitalBasis& basis);

// Convenience: compute, pair, order.
OrbitalBasis orbital_basis(const PermutationAction& act);

} // namespace repsplit

#endif
