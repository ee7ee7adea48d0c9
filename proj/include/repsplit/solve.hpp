#ifndef REPSPLIT_SOLVE_HPP
#define REPSPLIT_SOLVE_HPP

#include "repsplit/groebner.hpp"

namespace repsplit {

enum class SolveStatus { inconsistent, zero_dimensional, positive_dimensional };

struct SolveOutcome {
    SolveStatus status = SolveStatus::inconsistent;
    int hilbert_dimension = -1;                       // -1 when inconsistent
    std::vector<std::vector<FieldElement>> solutions; // filled when zero dimensional
    FieldPtr field;    // session field after solving (may be an extension)
    Embedding embed;   // caller's session field -> `field`
};

// Degrevlex Groebner run for consistency and Hilbert (Krull) dimension.
struct SystemAnalysis {
    SolveStatus status;
    int h; // -1 when inconsistent
    IdealBasis gb;
};
SystemAnalysis analyze_system(int nvars, const std::vector<MultiPoly>& gens,
                              const GbLimits& limits = {});

// Full pipeline: analyze, then solve when the system is zero dimensional
// (fresh lex basis, triangular back-substitution, dynamic field extensions;
// conjugate roots are enumerated as separate solutions). All coefficients
// must live in `session` (or Q when session is null).
SolveOutcome solve_system(int nvars, const std::vector<MultiPoly>& gens, const FieldPtr& session,
                          const GbLimits& limits = {}, int digits = kDefaultDigits);

// Number of distinct solutions of a zero-dimensional system.
int count_solutions(int nvars, const std::vector<MultiPoly>& gens, const FieldPtr& session,
                    const GbLimits& limits = {}, int digits = kDefaultDigits);

} // namespace repsplit

#endif
