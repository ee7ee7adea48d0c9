#ifndef REPSPLIT_GROEBNER_HPP
#define REPSPLIT_GROEBNER_HPP

#include "repsplit/multipoly.hpp"

namespace repsplit {

struct GbLimits {
    int max_total_degree = 40;
    std::size_t max_terms = 2'000'000;
};

struct IdealBasis {
    PolyCtx ctx{0, MonoOrder::degrevlex};
    std::vector<MultiPoly> gens; // reduced Groebner basis, sorted by ascending lt
    bool reduced = false;
};

// Buchberger with sugar pair selection and the product criterion, followed by
// inter-reduction to the unique reduced basis. Throws ResourceLimit when the
// degree or term caps are exceeded.
IdealBasis buchberger(const PolyCtx& ctx, std::vector<MultiPoly> gens, const GbLimits& limits = {});

// Full normal form (lead and tail reduction) against a list of polynomials.
MultiPoly normal_form(const PolyCtx& ctx, MultiPoly f, const std::vector<MultiPoly>& basis);

bool is_inconsistent(const IdealBasis& basis);

// FGLM order conversion for zero-dimensional ideals: walks the monomials in
// increasing lex order and reads the reduced lex basis off the linear
// relations between normal forms in the (finite dimensional) quotient.
IdealBasis fglm_to_lex(const IdealBasis& degrevlex_basis, const GbLimits& limits = {});

// Krull dimension from the leading monomials (any global order); the basis
// must be consistent. Zero ideal gives nvars.
int krull_dimension(const IdealBasis& basis);

std::string ideal_basis_str(const IdealBasis& basis); // one generator per line

} // namespace repsplit

#endif
