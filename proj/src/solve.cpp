#include "repsplit/solve.hpp"

#include <algorithm>

#include "repsplit/errors.hpp"

namespace repsplit {

namespace {

FPoly fp_map(const FPoly& p, const Embedding& e) {
    std::vector<FieldElement> c;
    c.reserve(p.c.size());
    for (const auto& v : p.c)
        c.push_back(e(v));
    return FPoly(std::move(c));
}

bool support_within(const MultiPoly& g, int var, int nvars) {
    // all variables strictly below `var` must be absent (vars solve from the
    // highest index down)
    for (const auto& t : g.terms)
        for (int i = 0; i < var; ++i)
            if (t.mono[static_cast<std::size_t>(i)])
                return false;
    (void)nvars;
    return true;
}

} // namespace

SystemAnalysis analyze_system(int nvars, const std::vector<MultiPoly>& gens,
                              const GbLimits& limits) {
    SystemAnalysis a{SolveStatus::inconsistent, -1,
                     buchberger(PolyCtx{nvars, MonoOrder::degrevlex}, gens, limits)};
    if (is_inconsistent(a.gb))
        return a;
    a.h = krull_dimension(a.gb);
    a.status = a.h == 0 ? SolveStatus::zero_dimensional : SolveStatus::positive_dimensional;
    return a;
}

SolveOutcome solve_system(int nvars, const std::vector<MultiPoly>& gens, const FieldPtr& session,
                          const GbLimits& limits, int digits) {
    SolveOutcome out;
    out.field = session;
    out.embed = Embedding::identity(session);

    SystemAnalysis analysis = analyze_system(nvars, gens, limits);
    out.status = analysis.status;
    out.hilbert_dimension = analysis.h;
    if (analysis.status != SolveStatus::zero_dimensional)
        return out;

    // triangular lex basis, obtained by order conversion from the degrevlex
    // basis (direct lex Buchberger runs blow up already at moderate rank)
    IdealBasis lex = fglm_to_lex(analysis.gb, limits);

    FieldPtr field = session;
    Embedding total = Embedding::identity(session);
    std::vector<MultiPoly> gb = lex.gens;

    using Partial = std::vector<std::optional<FieldElement>>;
    std::vector<Partial> partials{Partial(static_cast<std::size_t>(nvars))};

    for (int var = nvars - 1; var >= 0; --var) {
        std::vector<Partial> next;
        std::vector<const MultiPoly*> level;
        for (const auto& g : gb)
            if (support_within(g, var, nvars))
                level.push_back(&g);

        for (std::size_t si = 0; si < partials.size(); ++si) {
            // u: gcd of the substituted constraints on this variable
            FPoly u;
            for (const MultiPoly* g : level) {
                FPoly p = mp_to_univariate(*g, var, partials[si]);
                if (p.is_zero())
                    continue;
                u = gcd(u, p);
                if (u.degree() == 0)
                    break;
            }
            if (u.is_zero())
                throw CheckFailure("unconstrained variable in a zero-dimensional system");
            if (u.degree() == 0)
                throw CheckFailure("partial solution failed to extend");
            u = squarefree_part(u);

            std::vector<FPoly> queue = factor_squarefree_over(field, u, digits);
            std::reverse(queue.begin(), queue.end()); // pop_back processes ascending degree
            while (!queue.empty()) {
                FPoly f = std::move(queue.back());
                queue.pop_back();
                if (f.degree() == 1) {
                    Partial ext = partials[si];
                    ext[static_cast<std::size_t>(var)] = -f.c[0];
                    next.push_back(std::move(ext));
                    continue;
                }
                // adjoin one root, re-express all in-flight state, then split
                // f over the extension to enumerate its conjugate roots
                AdjoinResult ar = adjoin_root(field, f, std::nullopt, digits);
                const Embedding& phi = ar.embed;
                for (auto& g : gb)
                    g = mp_map_coeffs(g, [&phi](const FieldElement& c) { return phi(c); });
                auto embed_partial = [&phi](Partial& p) {
                    for (auto& v : p)
                        if (v)
                            v = phi(*v);
                };
                for (auto& p : partials)
                    embed_partial(p);
                for (auto& p : next)
                    embed_partial(p);
                for (auto& q : queue)
                    q = fp_map(q, phi);
                FPoly f_embedded = fp_map(f, phi);
                field = ar.field;
                total = total.then(phi);

                std::vector<FPoly> split = factor_squarefree_over(field, f_embedded, digits);
                std::reverse(split.begin(), split.end());
                for (auto& piece : split)
                    queue.push_back(std::move(piece));
            }
        }
        partials = std::move(next);
    }

    out.solutions.reserve(partials.size());
    for (const auto& p : partials) {
        std::vector<FieldElement> sol;
        sol.reserve(p.size());
        for (const auto& v : p)
            sol.push_back(*v);
        out.solutions.push_back(std::move(sol));
    }
    out.field = field;
    out.embed = total;

    // every solution must kill every original generator exactly
    for (const auto& sol : out.solutions)
        for (const auto& g : gens) {
            MultiPoly ge = mp_map_coeffs(g, [&total](const FieldElement& c) { return total(c); });
            if (!mp_eval(ge, sol).is_zero())
                throw CheckFailure("solver produced a non-solution");
        }
    return out;
}

int count_solutions(int nvars, const std::vector<MultiPoly>& gens, const FieldPtr& session,
                    const GbLimits& limits, int digits) {
    SolveOutcome out = solve_system(nvars, gens, session, limits, digits);
    if (out.status != SolveStatus::zero_dimensional)
        throw CheckFailure("count_solutions requires a zero-dimensional system");
    return static_cast<int>(out.solutions.size());
}

} // namespace repsplit
