#ifndef REPSPLIT_SPLITTER_HPP
#define REPSPLIT_SPLITTER_HPP

#include <functional>
#include <string>

#include "repsplit/centralizer.hpp"
#include "repsplit/solve.hpp"

namespace repsplit {

// The quadratic system cut out by X^2 - X = 0 in the orbital basis, plus the
// orthogonality constraints accumulated as projectors are found. Variables
// x_1..x_R are 0-based internally (variable 0 is the diagonal coefficient).
struct IdempotencySystem {
    int rank = 0;
    PolyCtx ctx{0, MonoOrder::degrevlex};
    std::vector<MultiPoly> idempotency;  // E_r = sum C_pq^r x_p x_q - x_r
    std::vector<MultiPoly> constraints;  // linear orthogonality polynomials
};

IdempotencySystem build_idempotency_system(const StructureConstants& sc);

// O_r(b; x) = sum_pq C_pq^r b_p x_q, the coordinates of B*X.
std::vector<MultiPoly> build_orthogonality_polynomials(const StructureConstants& sc,
                                                       const std::vector<FieldElement>& b);

// Coordinates of the product of two centralizer-ring elements.
std::vector<FieldElement> scheme_product(const StructureConstants& sc,
                                         const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b);

struct Projector {
    std::vector<FieldElement> coeff; // b_1..b_R
    long dimension = 0;
    int multiplicity_group = -1; // tag shared by one multiplicity family
    int conjugate_of = -1;       // index of the complex-conjugate projector
};

Projector trivial_projector(Point degree, int rank);

struct PassLog {
    long d;
    SolveStatus status;
    int h;
    int k;
};

struct Decomposition {
    int rank = 0;
    Point degree = 0;
    bool multiplicity_free = false;
    FieldPtr field; // null: everything rational
    std::vector<Projector> projectors;
    std::vector<PassLog> passes;
};

struct SplitConfig {
    std::uint64_t seed = 0;
    int digits = kDefaultDigits;
    GbLimits limits;
    int max_slice_attempts = 64;
    int threads = 0;
    std::function<void(const std::string&)> progress;
};

// The main loop: seed with the trivial projector, walk d = 1, 2, ... and
// solve the truncated systems, accumulating orthogonality constraints, until
// the dimensions sum to the degree.
Decomposition split(const PermutationAction& act, const SplitConfig& cfg = {});
Decomposition split_prepared(const OrbitalBasis& basis, const StructureConstants& sc,
                             const SplitConfig& cfg = {});

struct VerifyReport {
    struct Item {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_ok() const {
        for (const auto& i : items)
            if (!i.ok)
                return false;
        return true;
    }
};

// Coefficient-level checks through the structure constants plus the
// matrix-free invariance spot-check on random sparse vectors.
VerifyReport verify_decomposition(const Decomposition& dec, const PermutationAction& act,
                                  const OrbitalBasis& basis, const StructureConstants& sc,
                                  std::uint64_t seed = 0, int invariance_draws = 100,
                                  int digits = kDefaultDigits);

struct TransformBasis {
    std::vector<std::vector<FieldElement>> columns; // N columns of length N
    std::vector<long> block_widths;
};

// Exact block basis: column space of each projector via reduced row echelon.
// Dense N x N work, guarded by the cap.
TransformBasis transformation_basis(const Decomposition& dec, const OrbitalBasis& basis,
                                    Point max_degree = 2000);

} // namespace repsplit

#endif
