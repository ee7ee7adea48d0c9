#ifndef REPSPLIT_FACTOR_HPP
#define REPSPLIT_FACTOR_HPP

#include <vector>

#include "repsplit/qpoly.hpp"

namespace repsplit {

struct QFactor {
    QPoly poly; // monic irreducible over Q
    int multiplicity;
};

struct QFactorization {
    Rational lead;
    std::vector<QFactor> factors; // sorted by (degree, coefficients)

    QPoly reassemble() const;
};

// Complete factorization over Q: squarefree decomposition, then Zassenhaus
// (distinct-degree / equal-degree splitting mod p, quadratic Hensel lifting,
// subset recombination). Throws ResourceLimit if recombination exceeds caps.
QFactorization factor_over_Q(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

} // namespace repsplit

#endif
