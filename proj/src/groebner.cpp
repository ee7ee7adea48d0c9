#include "repsplit/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "repsplit/errors.hpp"

namespace repsplit {

namespace {

void enforce_limits(const MultiPoly& p, const GbLimits& limits, std::size_t stored_terms) {
    if (p.total_deg() > limits.max_total_degree)
        throw ResourceLimit("polynomial degree exceeds the configured cap");
    if (stored_terms + p.terms.size() > limits.max_terms)
        throw ResourceLimit("polynomial term count exceeds the configured cap");
}

struct Pair {
    std::size_t i, j;
    Expo lcm;
    int sugar;
};

int sugar_of(const MultiPoly& p) { return p.total_deg(); }

// content removal: rational-coefficient polynomials are scaled to primitive
// integer form with a positive leading coefficient; anything with genuine
// field coefficients is scaled monic instead
MultiPoly normalize_coeffs(MultiPoly p) {
    if (p.is_zero())
        return p;
    bool all_rational = true;
    for (const auto& t : p.terms)
        if (!t.coef.is_rational()) {
            all_rational = false;
            break;
        }
    if (!all_rational)
        return mp_monic(std::move(p));
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms) {
        const Rational& q = t.coef.as_rational();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sgn(p.lt().coef.as_rational()) < 0)
        scale = -scale;
    for (auto& t : p.terms)
        t.coef = FieldElement(t.coef.as_rational() * scale);
    return p;
}

} // namespace

MultiPoly normal_form(const PolyCtx& ctx, MultiPoly f, const std::vector<MultiPoly>& basis) {
    std::vector<Term> done; // irreducible head terms, in descending order
    while (!f.is_zero()) {
        const MultiPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero())
                continue;
            if (mono_divides(g.lt().mono, f.lt().mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Expo q = mono_div(f.lt().mono, reducer->lt().mono);
            FieldElement c = f.lt().coef / reducer->lt().coef;
            f = mp_sub(ctx, f, mp_mul_term(ctx, *reducer, q, c));
        } else {
            done.push_back(f.lt());
            f.terms.erase(f.terms.begin());
        }
    }
    MultiPoly out;
    out.terms = std::move(done);
    return out;
}

IdealBasis buchberger(const PolyCtx& ctx, std::vector<MultiPoly> gens, const GbLimits& limits) {
    std::vector<MultiPoly> basis;
    std::size_t stored_terms = 0;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        enforce_limits(g, limits, stored_terms);
        basis.push_back(normalize_coeffs(std::move(g)));
        stored_terms += basis.back().terms.size();
    }

    IdealBasis out;
    out.ctx = ctx;
    out.reduced = true;
    if (basis.empty())
        return out;

    std::vector<Pair> pending;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            const Expo& a = basis[i].lt().mono;
            const Expo& b = basis[upto].lt().mono;
            // product criterion: coprime leading monomials reduce to zero
            bool coprime = true;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] && b[k]) {
                    coprime = false;
                    break;
                }
            if (coprime)
                continue;
            Pair p;
            p.i = i;
            p.j = upto;
            p.lcm = mono_lcm(a, b);
            p.sugar = std::max(sugar_of(basis[i]) + total_degree(mono_div(p.lcm, a)),
                               sugar_of(basis[upto]) + total_degree(mono_div(p.lcm, b)));
            pending.push_back(std::move(p));
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        push_pairs(j);

    while (!pending.empty()) {
        // sugar selection, deterministic tie-breaks
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair& a = pending[k];
            const Pair& b = pending[best];
            int c;
            if (a.sugar != b.sugar)
                c = a.sugar < b.sugar ? 1 : -1;
            else if ((c = -mono_cmp(a.lcm, b.lcm, ctx.order)) == 0)
                c = (a.i != b.i) ? (a.i < b.i ? 1 : -1) : (a.j < b.j ? 1 : -1);
            if (c > 0)
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        // chain criterion: skip when a third leading monomial divides the lcm
        // and both cross-lcms are proper divisors
        {
            bool skippable = false;
            for (std::size_t k = 0; k < basis.size() && !skippable; ++k) {
                if (k == pr.i || k == pr.j)
                    continue;
                if (!mono_divides(basis[k].lt().mono, pr.lcm))
                    continue;
                Expo lik = mono_lcm(basis[pr.i].lt().mono, basis[k].lt().mono);
                Expo lkj = mono_lcm(basis[k].lt().mono, basis[pr.j].lt().mono);
                if (lik != pr.lcm && lkj != pr.lcm)
                    skippable = true;
            }
            if (skippable)
                continue;
        }

        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        MultiPoly s = mp_sub(
            ctx, mp_mul_term(ctx, f, mono_div(pr.lcm, f.lt().mono), FieldElement(Rational(1))),
            mp_mul_term(ctx, g, mono_div(pr.lcm, g.lt().mono),
                        f.lt().coef / g.lt().coef));
        MultiPoly r = normal_form(ctx, std::move(s), basis);
        if (r.is_zero())
            continue;
        enforce_limits(r, limits, stored_terms);
        basis.push_back(normalize_coeffs(std::move(r)));
        stored_terms += basis.back().terms.size();
        push_pairs(basis.size() - 1);
        // constant in the ideal: everything collapses
        if (total_degree(basis.back().lt().mono) == 0) {
            out.gens = {MultiPoly::constant(ctx.nvars, FieldElement(Rational(1)))};
            return out;
        }
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j])
                continue;
            if (mono_divides(basis[j].lt().mono, basis[i].lt().mono) &&
                (basis[j].lt().mono != basis[i].lt().mono || j < i))
                keep[i] = false;
        }
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i])
            minimal.push_back(basis[i]);

    // tail-reduce each against the others
    std::vector<MultiPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced[i] = mp_monic(normal_form(ctx, minimal[i], others));
        if (reduced[i].is_zero())
            throw CheckFailure("minimal generator reduced to zero");
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_cmp(a.lt().mono, b.lt().mono, ctx.order) < 0;
    });
    out.gens = std::move(reduced);
    return out;
}

bool is_inconsistent(const IdealBasis& basis) {
    return basis.gens.size() == 1 && !basis.gens[0].is_zero() &&
           total_degree(basis.gens[0].lt().mono) == 0;
}

namespace {

int dim_search(const std::vector<std::uint32_t>& supports, std::uint32_t allowed,
               std::map<std::uint32_t, int>& memo, int nvars) {
    auto it = memo.find(allowed);
    if (it != memo.end())
        return it->second;
    const std::uint32_t* offender = nullptr;
    for (const auto& s : supports)
        if ((s & ~allowed) == 0) {
            offender = &s;
            break;
        }
    int result;
    if (!offender) {
        result = __builtin_popcount(allowed);
    } else {
        result = -1;
        for (int v = 0; v < nvars; ++v)
            if (*offender & (1u << v))
                result = std::max(result, dim_search(supports, allowed & ~(1u << v), memo, nvars));
    }
    memo[allowed] = result;
    return result;
}

} // namespace

int krull_dimension(const IdealBasis& basis) {
    if (is_inconsistent(basis))
        return -1;
    if (basis.gens.empty())
        return basis.ctx.nvars;
    if (basis.ctx.nvars > 31)
        throw ResourceLimit("dimension computation limited to 31 variables");
    std::vector<std::uint32_t> supports;
    for (const auto& g : basis.gens) {
        std::uint32_t m = 0;
        const Expo& e = g.lt().mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                m |= 1u << i;
        supports.push_back(m);
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::map<std::uint32_t, int> memo;
    std::uint32_t all = (basis.ctx.nvars == 31) ? 0x7fffffffu : ((1u << basis.ctx.nvars) - 1);
    return dim_search(supports, all, memo, basis.ctx.nvars);
}

IdealBasis fglm_to_lex(const IdealBasis& drl, const GbLimits& limits) {
    const int nvars = drl.ctx.nvars;
    PolyCtx lexctx{nvars, MonoOrder::lex};
    IdealBasis out;
    out.ctx = lexctx;
    out.reduced = true;
    if (is_inconsistent(drl)) {
        out.gens = {MultiPoly::constant(nvars, FieldElement(Rational(1)))};
        return out;
    }

    // standard monomials of the degrevlex ideal: a basis of the quotient
    auto is_standard = [&](const Expo& m) {
        for (const auto& g : drl.gens)
            if (mono_divides(g.lt().mono, m))
                return false;
        return true;
    };
    std::vector<Expo> standard;
    std::map<Expo, std::size_t> standard_index;
    {
        std::vector<Expo> queue{Expo(static_cast<std::size_t>(nvars), 0)};
        std::map<Expo, bool> seen;
        seen[queue.front()] = true;
        while (!queue.empty()) {
            Expo m = std::move(queue.back());
            queue.pop_back();
            if (!is_standard(m))
                continue;
            standard_index[m] = standard.size();
            standard.push_back(m);
            if (standard.size() > limits.max_terms)
                throw ResourceLimit("quotient dimension too large for order conversion");
            for (int v = 0; v < nvars; ++v) {
                Expo next = m;
                ++next[static_cast<std::size_t>(v)];
                if (!seen[next]) {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    const std::size_t D = standard.size();

    using Vec = std::vector<FieldElement>;
    std::map<Expo, Vec> nf_cache;
    auto nf_vector = [&](const Expo& m) -> const Vec& {
        auto it = nf_cache.find(m);
        if (it != nf_cache.end())
            return it->second;
        Vec v(D);
        auto st = standard_index.find(m);
        if (st != standard_index.end()) {
            v[st->second] = FieldElement(Rational(1));
        } else {
            MultiPoly nf = normal_form(
                drl.ctx, MultiPoly::monomial(nvars, m, FieldElement(Rational(1))), drl.gens);
            for (const auto& t : nf.terms)
                v[standard_index.at(t.mono)] = t.coef;
        }
        return nf_cache.emplace(m, std::move(v)).first->second;
    };

    // kept lex-standard monomials with their quotient vectors
    std::vector<Expo> lex_standard;
    std::vector<Vec> kept;

    // solve sum lambda_i kept_i = w; empty result means independent
    auto dependence = [&](const Vec& w) -> std::optional<Vec> {
        const std::size_t k = kept.size();
        // columns: kept vectors, then w as the right-hand side
        std::vector<Vec> m(D, Vec(k + 1));
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t r = 0; r < D; ++r)
                m[r][c] = kept[c][r];
        for (std::size_t r = 0; r < D; ++r)
            m[r][k] = w[r];
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t col = 0; col < k && rank < D; ++col) {
            std::size_t sel = rank;
            while (sel < D && m[sel][col].is_zero())
                ++sel;
            if (sel == D)
                continue;
            std::swap(m[rank], m[sel]);
            FieldElement inv = m[rank][col].inverse();
            for (auto& x : m[rank])
                x = x * inv;
            for (std::size_t r = 0; r < D; ++r) {
                if (r == rank || m[r][col].is_zero())
                    continue;
                FieldElement f = m[r][col];
                for (std::size_t c2 = col; c2 <= k; ++c2)
                    m[r][c2] = m[r][c2] - f * m[rank][c2];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (std::size_t r = rank; r < D; ++r)
            if (!m[r][k].is_zero())
                return std::nullopt; // independent
        Vec lambda(k);
        for (std::size_t r = 0; r < rank; ++r)
            lambda[pivot_col[r]] = m[r][k];
        return lambda;
    };

    struct HeapEntry {
        Expo mono;
    };
    auto lex_greater = [](const HeapEntry& a, const HeapEntry& b) {
        return mono_cmp(a.mono, b.mono, MonoOrder::lex) > 0; // min-heap
    };
    std::vector<HeapEntry> heap;
    std::map<Expo, bool> queued;
    auto push = [&](Expo m) {
        if (queued[m])
            return;
        queued[m] = true;
        heap.push_back({std::move(m)});
        std::push_heap(heap.begin(), heap.end(), lex_greater);
    };
    push(Expo(static_cast<std::size_t>(nvars), 0));

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), lex_greater);
        Expo mono = std::move(heap.back().mono);
        heap.pop_back();
        bool reducible = false;
        for (const auto& g : out.gens)
            if (mono_divides(g.lt().mono, mono)) {
                reducible = true;
                break;
            }
        if (reducible)
            continue;
        const Vec& w = nf_vector(mono);
        if (auto lambda = dependence(w)) {
            MultiPoly g = MultiPoly::monomial(nvars, mono, FieldElement(Rational(1)));
            for (std::size_t i = 0; i < lex_standard.size(); ++i)
                if (!(*lambda)[i].is_zero())
                    g = mp_add(lexctx, g,
                               MultiPoly::monomial(nvars, lex_standard[i], -(*lambda)[i]));
            out.gens.push_back(mp_resort(lexctx, g));
        } else {
            lex_standard.push_back(mono);
            kept.push_back(w);
            if (kept.size() > D)
                throw CheckFailure("order conversion produced too many standard monomials");
            for (int v = 0; v < nvars; ++v) {
                Expo next = mono;
                ++next[static_cast<std::size_t>(v)];
                push(std::move(next));
            }
        }
    }
    if (lex_standard.size() != D)
        throw CheckFailure("order conversion lost quotient dimension");
    std::sort(out.gens.begin(), out.gens.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_cmp(a.lt().mono, b.lt().mono, lexctx.order) < 0;
    });
    return out;
}

std::string ideal_basis_str(const IdealBasis& basis) {
    std::ostringstream os;
    for (const auto& g : basis.gens)
        os << mp_str(g) << "\n";
    return os.str();
}

} // namespace repsplit
