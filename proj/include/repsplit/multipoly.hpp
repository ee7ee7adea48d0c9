#ifndef REPSPLIT_MULTIPOLY_HPP
#define REPSPLIT_MULTIPOLY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "repsplit/numberfield.hpp"

namespace repsplit {

enum class MonoOrder { degrevlex, lex };

struct PolyCtx {
    int nvars;
    MonoOrder order;
};

using Expo = std::vector<std::uint16_t>;

int total_degree(const Expo& e);
// >0 when a > b under the order (lex: variable 0 is the biggest).
int mono_cmp(const Expo& a, const Expo& b, MonoOrder order);
bool mono_divides(const Expo& a, const Expo& b); // a | b
Expo mono_lcm(const Expo& a, const Expo& b);
Expo mono_div(const Expo& a, const Expo& b); // a / b, requires b | a
Expo mono_mul(const Expo& a, const Expo& b);

struct Term {
    Expo mono;
    FieldElement coef;
};

// Terms kept sorted strictly descending under the owning context's order.
struct MultiPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    int total_deg() const;

    static MultiPoly constant(int nvars, const FieldElement& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, const Expo& e, const FieldElement& c);
};

MultiPoly mp_add(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_neg(const MultiPoly& a);
MultiPoly mp_mul(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul_term(const PolyCtx& ctx, const MultiPoly& a, const Expo& mono,
                      const FieldElement& coef);
MultiPoly mp_scale(const MultiPoly& a, const FieldElement& c);
MultiPoly mp_monic(const MultiPoly& a);
MultiPoly mp_resort(const PolyCtx& ctx, MultiPoly a); // after an order switch
bool mp_equal(const MultiPoly& a, const MultiPoly& b);

FieldElement mp_eval(const MultiPoly& a, const std::vector<FieldElement>& point);

// Fixes variable `var` to `value` and removes it (nvars shrinks by one).
MultiPoly mp_substitute_drop(const PolyCtx& ctx, const MultiPoly& a, int var,
                             const FieldElement& value);

// Collapses to a univariate polynomial in `var`; every other variable must
// carry a value in `vals`.
FPoly mp_to_univariate(const MultiPoly& a, int var,
                       const std::vector<std::optional<FieldElement>>& vals);

MultiPoly mp_map_coeffs(const MultiPoly& a,
                        const std::function<FieldElement(const FieldElement&)>& fn);

// Plain-text form like "3/2*x1^2*x3 - x2 + 5" (variables 1-based).
std::string mp_str(const MultiPoly& a);

} // namespace repsplit

#endif
