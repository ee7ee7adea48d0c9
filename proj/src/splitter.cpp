#include "repsplit/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace repsplit {

IdempotencySystem build_idempotency_system(const StructureConstants& sc) {
    IdempotencySystem sys;
    sys.rank = sc.rank;
    sys.ctx = PolyCtx{sc.rank, MonoOrder::degrevlex};
    const int R = sc.rank;
    for (int r = 0; r < R; ++r) {
        MultiPoly e;
        for (int p = 0; p < R; ++p)
            for (int q = 0; q < R; ++q) {
                std::uint32_t c = sc.get(p, q, r);
                if (!c)
                    continue;
                Expo m(static_cast<std::size_t>(R), 0);
                ++m[static_cast<std::size_t>(p)];
                ++m[static_cast<std::size_t>(q)];
                e = mp_add(sys.ctx, e,
                           MultiPoly::monomial(R, m, FieldElement(Rational(c))));
            }
        e = mp_sub(sys.ctx, e, MultiPoly::variable(R, r));
        sys.idempotency.push_back(std::move(e));
    }
    return sys;
}

std::vector<MultiPoly> build_orthogonality_polynomials(const StructureConstants& sc,
                                                       const std::vector<FieldElement>& b) {
    const int R = sc.rank;
    PolyCtx ctx{R, MonoOrder::degrevlex};
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(R));
    for (int r = 0; r < R; ++r) {
        MultiPoly o;
        for (int q = 0; q < R; ++q) {
            FieldElement coef;
            for (int p = 0; p < R; ++p) {
                std::uint32_t c = sc.get(p, q, r);
                if (c)
                    coef = coef + FieldElement(Rational(c)) * b[static_cast<std::size_t>(p)];
            }
            if (!coef.is_zero())
                o = mp_add(ctx, o, mp_scale(MultiPoly::variable(R, q), coef));
        }
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<FieldElement> scheme_product(const StructureConstants& sc,
                                         const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b) {
    const int R = sc.rank;
    std::vector<FieldElement> out(static_cast<std::size_t>(R));
    for (int p = 0; p < R; ++p) {
        if (a[static_cast<std::size_t>(p)].is_zero())
            continue;
        for (int q = 0; q < R; ++q) {
            if (b[static_cast<std::size_t>(q)].is_zero())
                continue;
            FieldElement ab = a[static_cast<std::size_t>(p)] * b[static_cast<std::size_t>(q)];
            for (int r = 0; r < R; ++r) {
                std::uint32_t c = sc.get(p, q, r);
                if (c)
                    out[static_cast<std::size_t>(r)] =
                        out[static_cast<std::size_t>(r)] + FieldElement(Rational(c)) * ab;
            }
        }
    }
    return out;
}

Projector trivial_projector(Point degree, int rank) {
    Projector p;
    p.dimension = 1;
    p.coeff.assign(static_cast<std::size_t>(rank), FieldElement(make_rational(1, degree)));
    return p;
}

Decomposition split(const PermutationAction& act, const SplitConfig& cfg) {
    OrbitalBasis basis = orbital_basis(act);
    StructureConstants sc = structure_constants(basis, cfg.threads);
    return split_prepared(basis, sc, cfg);
}

namespace {

struct SplitState {
    FieldPtr field;                    // session field, null = Q
    std::vector<Projector> found;
    std::vector<MultiPoly> constraints; // full R-variable space
    const StructureConstants* sc;
    const SplitConfig* cfg;

    void apply_embedding(const Embedding& phi) {
        for (auto& p : found)
            for (auto& c : p.coeff)
                c = phi(c);
        for (auto& g : constraints)
            g = mp_map_coeffs(g, [&phi](const FieldElement& c) { return phi(c); });
        field = phi.to;
    }

    void accept(Projector proj, long d) {
        // exact idempotency through the structure constants
        if (!(scheme_product(*sc, proj.coeff, proj.coeff) == proj.coeff))
            throw CheckFailure("candidate projector is not idempotent");
        for (const auto& o : build_orthogonality_polynomials(*sc, proj.coeff))
            constraints.push_back(o);
        proj.dimension = d;
        found.push_back(std::move(proj));
    }
};

std::vector<MultiPoly> truncated_system(const IdempotencySystem& sys,
                                        const std::vector<MultiPoly>& constraints,
                                        const Rational& x1) {
    std::vector<MultiPoly> gens;
    FieldElement v(x1);
    for (const auto& e : sys.idempotency) {
        MultiPoly g = mp_substitute_drop(sys.ctx, e, 0, v);
        if (!g.is_zero())
            gens.push_back(std::move(g));
    }
    for (const auto& c : constraints) {
        MultiPoly g = mp_substitute_drop(sys.ctx, c, 0, v);
        if (!g.is_zero())
            gens.push_back(std::move(g));
    }
    return gens;
}

// The accumulated orthogonality constraints (and the slices) are affine, so
// they get eliminated by plain Gaussian elimination before any Groebner work.
// The variety maps isomorphically onto the reduced space, which preserves
// consistency, the Hilbert dimension and the solution count.
struct LinearReduction {
    bool inconsistent = false;
    int nfree = 0;
    std::vector<int> free_vars;          // reduced index -> original variable
    std::vector<MultiPoly> exprs;        // original variable -> affine poly in the reduced space
    std::vector<MultiPoly> reduced_gens; // substituted non-linear generators
};

LinearReduction reduce_by_linear(int nvars, const std::vector<MultiPoly>& gens) {
    LinearReduction out;
    // rows: coefficients of x_0..x_{nvars-1} plus the constant
    std::vector<std::vector<FieldElement>> rows;
    std::vector<const MultiPoly*> nonlinear;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        if (g.total_deg() <= 1) {
            std::vector<FieldElement> row(static_cast<std::size_t>(nvars) + 1);
            for (const auto& t : g.terms) {
                int deg = total_degree(t.mono);
                if (deg == 0) {
                    row[static_cast<std::size_t>(nvars)] = t.coef;
                } else {
                    for (int v = 0; v < nvars; ++v)
                        if (t.mono[static_cast<std::size_t>(v)])
                            row[static_cast<std::size_t>(v)] = t.coef;
                }
            }
            rows.push_back(std::move(row));
        } else {
            nonlinear.push_back(&g);
        }
    }

    // row echelon over the field
    std::vector<int> pivot_of_row;
    std::size_t rank = 0;
    for (int col = 0; col < nvars && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        FieldElement inv = rows[rank][static_cast<std::size_t>(col)].inverse();
        for (auto& v : rows[rank])
            v = v * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][static_cast<std::size_t>(col)].is_zero())
                continue;
            FieldElement f = rows[r][static_cast<std::size_t>(col)];
            for (std::size_t c2 = 0; c2 < rows[r].size(); ++c2)
                rows[r][c2] = rows[r][c2] - f * rows[rank][c2];
        }
        pivot_of_row.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][static_cast<std::size_t>(nvars)].is_zero()) {
            out.inconsistent = true;
            return out;
        }

    std::vector<bool> is_pivot(static_cast<std::size_t>(nvars), false);
    for (int p : pivot_of_row)
        is_pivot[static_cast<std::size_t>(p)] = true;
    for (int v = 0; v < nvars; ++v)
        if (!is_pivot[static_cast<std::size_t>(v)])
            out.free_vars.push_back(v);
    out.nfree = static_cast<int>(out.free_vars.size());

    // original variable -> affine expression in the free variables
    PolyCtx rctx{out.nfree, MonoOrder::degrevlex};
    std::vector<int> reduced_index(static_cast<std::size_t>(nvars), -1);
    for (int i = 0; i < out.nfree; ++i)
        reduced_index[static_cast<std::size_t>(out.free_vars[static_cast<std::size_t>(i)])] = i;
    out.exprs.assign(static_cast<std::size_t>(nvars), MultiPoly{});
    for (int v = 0; v < nvars; ++v)
        if (!is_pivot[static_cast<std::size_t>(v)])
            out.exprs[static_cast<std::size_t>(v)] =
                MultiPoly::variable(out.nfree, reduced_index[static_cast<std::size_t>(v)]);
    for (std::size_t r = 0; r < rank; ++r) {
        int pv = pivot_of_row[r];
        // x_pv = -const - sum(free coef * x_free)
        MultiPoly e = MultiPoly::constant(out.nfree, -rows[r][static_cast<std::size_t>(nvars)]);
        for (int v = 0; v < nvars; ++v) {
            if (v == pv || rows[r][static_cast<std::size_t>(v)].is_zero())
                continue;
            e = mp_add(rctx, e,
                       mp_scale(MultiPoly::variable(out.nfree, reduced_index[static_cast<std::size_t>(v)]),
                                -rows[r][static_cast<std::size_t>(v)]));
        }
        out.exprs[static_cast<std::size_t>(pv)] = std::move(e);
    }

    for (const MultiPoly* g : nonlinear) {
        MultiPoly acc;
        for (const auto& t : g->terms) {
            MultiPoly term = MultiPoly::constant(out.nfree, t.coef);
            for (int v = 0; v < nvars; ++v)
                for (int e = 0; e < t.mono[static_cast<std::size_t>(v)]; ++e)
                    term = mp_mul(rctx, term, out.exprs[static_cast<std::size_t>(v)]);
            acc = mp_add(rctx, acc, term);
        }
        if (!acc.is_zero())
            out.reduced_gens.push_back(std::move(acc));
    }
    return out;
}

std::vector<FieldElement> map_back(const LinearReduction& red,
                                   const std::vector<FieldElement>& reduced_solution,
                                   int nvars) {
    std::vector<FieldElement> full(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v)
        full[static_cast<std::size_t>(v)] =
            mp_eval(red.exprs[static_cast<std::size_t>(v)], reduced_solution);
    return full;
}


std::vector<FieldElement> with_first(const Rational& x1, const std::vector<FieldElement>& rest) {
    std::vector<FieldElement> full;
    full.reserve(rest.size() + 1);
    full.emplace_back(x1);
    for (const auto& v : rest)
        full.push_back(v);
    return full;
}

// b_{r'} == conj(b_r) for every transpose pair, using the conjugation
// automorphism of the session field.
bool is_hermitian(const std::vector<FieldElement>& coeff, const OrbitalBasis& basis,
                  const std::optional<Conjugation>& cj) {
    for (int r = 0; r < basis.rank; ++r) {
        int rt = basis.transpose_of[static_cast<std::size_t>(r)];
        const FieldElement& a = coeff[static_cast<std::size_t>(r)];
        const FieldElement& b = coeff[static_cast<std::size_t>(rt)];
        if (a.is_rational() && b.is_rational()) {
            if (!(a == b))
                return false;
            continue;
        }
        if (!cj)
            return false;
        if (!((*cj)(a) == b))
            return false;
    }
    return true;
}

void select_orthogonal_representatives(SplitState& st, const IdempotencySystem& sys,
                                       const OrbitalBasis& basis, long d, int k,
                                       std::mt19937_64& rng, int family_tag) {
    const int R = sys.rank;
    const Rational x1 = make_rational(d, st.sc->degree);

    // Hermiticity: equal coordinates on every transpose pair (conjugation is
    // verified exactly on each candidate below)
    std::vector<MultiPoly> hermiticity;
    for (int r = 1; r < R; ++r) {
        int rt = basis.transpose_of[static_cast<std::size_t>(r)];
        if (rt > r)
            hermiticity.push_back(mp_sub(sys.ctx, MultiPoly::variable(R, r),
                                         MultiPoly::variable(R, rt)));
    }

    PolyCtx sub_ctx{R - 1, MonoOrder::degrevlex};
    std::vector<MultiPoly> local = st.constraints;
    for (int t = 0; t < k; ++t) {
        std::vector<MultiPoly> base = truncated_system(sys, local, x1);
        for (const auto& h : hermiticity)
            base.push_back(mp_substitute_drop(sys.ctx, h, 0, FieldElement(x1)));

        bool selected = false;
        for (int attempt = 0; attempt < st.cfg->max_slice_attempts && !selected; ++attempt) {
            std::vector<MultiPoly> gens = base;
            // deterministic pseudo-random rational hyperplane slices until the
            // system turns zero dimensional
            int guard = 0;
            SystemAnalysis analysis = analyze_system(R - 1, gens, st.cfg->limits);
            while (analysis.status == SolveStatus::positive_dimensional && guard++ < 2 * R) {
                MultiPoly slice;
                for (int v = 0; v < R - 1; ++v) {
                    long a = static_cast<long>(rng() % 7) - 3;
                    if (a)
                        slice = mp_add(sub_ctx, slice,
                                       mp_scale(MultiPoly::variable(R - 1, v),
                                                FieldElement(Rational(a))));
                }
                long c = static_cast<long>(rng() % 5) - 2;
                slice =
                    mp_sub(sub_ctx, slice, MultiPoly::constant(R - 1, FieldElement(Rational(c))));
                if (slice.is_zero())
                    continue;
                std::vector<MultiPoly> trial = gens;
                trial.push_back(slice);
                SystemAnalysis t2 = analyze_system(R - 1, trial, st.cfg->limits);
                if (t2.status == SolveStatus::inconsistent)
                    continue; // slice missed the family; redraw
                gens = std::move(trial);
                analysis = std::move(t2);
            }
            if (analysis.status != SolveStatus::zero_dimensional)
                continue;

            SolveOutcome out = solve_system(R - 1, gens, st.field, st.cfg->limits, st.cfg->digits);
            if (out.solutions.empty())
                continue;
            if (!out.embed.is_identity()) {
                st.apply_embedding(out.embed);
                for (auto& g : local)
                    g = mp_map_coeffs(g, [&out](const FieldElement& c) { return out.embed(c); });
                for (auto& g : base)
                    g = mp_map_coeffs(g, [&out](const FieldElement& c) { return out.embed(c); });
            }
            std::optional<Conjugation> cj = conjugation_map(st.field, st.cfg->digits);
            for (const auto& sol : out.solutions) {
                std::vector<FieldElement> coeff = with_first(x1, sol);
                if (!is_hermitian(coeff, basis, cj))
                    continue;
                if (!(scheme_product(*st.sc, coeff, coeff) == coeff))
                    continue;
                Projector p;
                p.coeff = coeff;
                p.multiplicity_group = family_tag;
                st.accept(std::move(p), d);
                for (const auto& o : build_orthogonality_polynomials(*st.sc, coeff))
                    local.push_back(o);
                selected = true;
                break;
            }
        }
        if (!selected)
            throw SelectionFailure(
                "no mutually orthogonal representative found at dimension " + std::to_string(d) +
                " (multiplicity " + std::to_string(k) + ")");
    }
}

// deterministic conjugate ordering: the member whose first certifiably
// non-real coordinate has positive imaginary part comes first
bool positive_imaginary_first(const Projector& p, int digits) {
    for (const auto& c : p.coeff) {
        if (c.is_rational())
            continue;
        for (int work = digits; work <= kMaxDigits; work *= 2) {
            Disk d = complex_approx(c, work);
            if (d.im - d.rad > 0)
                return true;
            if (d.im + d.rad < 0)
                return false;
            // interval still straddles zero: the coordinate may be real
            if (work > 4 * digits)
                break;
        }
    }
    return true;
}

} // namespace

Decomposition split_prepared(const OrbitalBasis& basis, const StructureConstants& sc,
                             const SplitConfig& cfg) {
    const Point N = basis.degree;
    const int R = basis.rank;
    auto progress = [&cfg](const std::string& s) {
        if (cfg.progress)
            cfg.progress(s);
    };

    IdempotencySystem sys = build_idempotency_system(sc);
    SplitState st;
    st.sc = &sc;
    st.cfg = &cfg;
    st.accept(trivial_projector(N, R), 1);

    Decomposition dec;
    dec.rank = R;
    dec.degree = N;
    dec.multiplicity_free = sc.commutative;

    std::mt19937_64 rng(cfg.seed ^ 0x1d2e3f4a5b6c7d8eull);
    long assigned = 1;
    int family_tag = 0;

    // One symbolic basis (x1 kept as a variable) per constraint epoch; the
    // per-d systems are its specializations, which generate the same ideal as
    // the raw truncated system but are already nearly Groebner. x1 is moved
    // to the last slot, where degrevlex keeps it cheap, so specialization
    // rarely disturbs the leading terms.
    auto rotate_x1_last = [R](const MultiPoly& p) {
        MultiPoly out;
        out.terms.reserve(p.terms.size());
        for (const auto& t : p.terms) {
            Expo e(t.mono.begin() + 1, t.mono.end());
            e.push_back(t.mono[0]);
            out.terms.push_back({std::move(e), t.coef});
        }
        return mp_resort(PolyCtx{R, MonoOrder::degrevlex}, std::move(out));
    };
    std::vector<MultiPoly> epoch_gens;
    bool epoch_dirty = true;

    for (long d = 1; assigned < N; ++d) {
        if (d > static_cast<long>(N) - assigned)
            throw IncompleteDecomposition(
                "dimension loop exhausted before the degree was reached (assigned " +
                std::to_string(assigned) + " of " + std::to_string(N) + ")");
        if (epoch_dirty) {
            std::vector<MultiPoly> raw;
            for (const auto& e : sys.idempotency)
                raw.push_back(rotate_x1_last(e));
            for (const auto& c : st.constraints)
                raw.push_back(rotate_x1_last(c));
            epoch_gens = buchberger(sys.ctx, std::move(raw), cfg.limits).gens;
            epoch_dirty = false;
        }
        const Rational x1 = make_rational(d, N);
        std::vector<MultiPoly> gens;
        {
            FieldElement v(x1);
            for (const auto& e : epoch_gens) {
                MultiPoly g = mp_substitute_drop(sys.ctx, e, R - 1, v);
                if (!g.is_zero())
                    gens.push_back(std::move(g));
            }
        }
        // The affine constraints alone settle most passes: once enough
        // projectors are known they either contradict (next d) or pin a
        // single candidate point. Substituting them into the quadratics
        // densifies the system, so the general case keeps the raw generators.
        LinearReduction red = reduce_by_linear(R - 1, gens);
        SolveStatus status;
        int h = -1;
        bool pinned = false;
        if (red.inconsistent) {
            status = SolveStatus::inconsistent;
        } else if (red.nfree == 0) {
            pinned = true;
            bool consistent = true;
            for (const auto& g : red.reduced_gens)
                if (!g.is_zero())
                    consistent = false;
            status = consistent ? SolveStatus::zero_dimensional : SolveStatus::inconsistent;
            h = consistent ? 0 : -1;
        } else {
            SystemAnalysis analysis = analyze_system(R - 1, gens, cfg.limits);
            status = analysis.status;
            h = analysis.h;
        }
        if (status == SolveStatus::inconsistent) {
            dec.passes.push_back({d, SolveStatus::inconsistent, -1, 0});
            continue;
        }
        if (status == SolveStatus::zero_dimensional) {
            std::vector<std::vector<FieldElement>> solutions;
            if (pinned) {
                solutions.push_back(map_back(red, {}, R - 1));
            } else {
                SolveOutcome out = solve_system(R - 1, gens, st.field, cfg.limits, cfg.digits);
                if (!out.embed.is_identity())
                    st.apply_embedding(out.embed);
                solutions = std::move(out.solutions);
            }
            int k = static_cast<int>(solutions.size());
            dec.passes.push_back({d, SolveStatus::zero_dimensional, 0, k});
            progress("d=" + std::to_string(d) + ": " + std::to_string(k) +
                     " irreducible projector(s)");
            for (const auto& sol : solutions) {
                Projector p;
                p.coeff = with_first(x1, sol);
                st.accept(std::move(p), d);
                assigned += d;
                epoch_dirty = true;
            }
        } else {
            int k = static_cast<int>(std::ceil(std::sqrt(2.0 * h)));
            while (k * k < 2 * h)
                ++k;
            while (k > 1 && (k - 1) * (k - 1) >= 2 * h)
                --k;
            dec.passes.push_back({d, SolveStatus::positive_dimensional, h, k});
            progress("d=" + std::to_string(d) + ": multiplicity family, h=" + std::to_string(h) +
                     ", k=" + std::to_string(k));
            select_orthogonal_representatives(st, sys, basis, d, k, rng, family_tag++);
            assigned += static_cast<long>(d) * k;
            epoch_dirty = true;
        }
    }

    dec.field = st.field;
    dec.projectors = std::move(st.found);

    // completeness: coefficient sums must be (1, 0, ..., 0)
    std::vector<FieldElement> sum(static_cast<std::size_t>(R));
    long dim_total = 0;
    for (const auto& p : dec.projectors) {
        for (int r = 0; r < R; ++r)
            sum[static_cast<std::size_t>(r)] =
                sum[static_cast<std::size_t>(r)] + p.coeff[static_cast<std::size_t>(r)];
        dim_total += p.dimension;
    }
    bool complete = sum[0] == FieldElement(Rational(1)) && dim_total == static_cast<long>(N);
    for (int r = 1; r < R; ++r)
        complete = complete && sum[static_cast<std::size_t>(r)].is_zero();
    if (!complete)
        throw IncompleteDecomposition("completeness sums failed after the dimension loop");

    // conjugate pairing via the conjugation automorphism
    std::optional<Conjugation> cj = conjugation_map(st.field, cfg.digits);
    if (st.field && cj) {
        for (std::size_t i = 0; i < dec.projectors.size(); ++i)
            for (std::size_t j = i + 1; j < dec.projectors.size(); ++j) {
                if (dec.projectors[i].conjugate_of >= 0 || dec.projectors[j].conjugate_of >= 0)
                    continue;
                if (dec.projectors[i].dimension != dec.projectors[j].dimension)
                    continue;
                bool match = true;
                for (int r = 0; r < R && match; ++r)
                    match = (*cj)(dec.projectors[i].coeff[static_cast<std::size_t>(r)]) ==
                            dec.projectors[j].coeff[static_cast<std::size_t>(r)];
                if (match) {
                    dec.projectors[i].conjugate_of = static_cast<int>(j);
                    dec.projectors[j].conjugate_of = static_cast<int>(i);
                }
            }
    }

    // canonical output order: ascending dimension, conjugate pairs adjacent
    // with the positive-imaginary member first
    std::vector<int> order(dec.projectors.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return dec.projectors[static_cast<std::size_t>(a)].dimension <
               dec.projectors[static_cast<std::size_t>(b)].dimension;
    });
    std::vector<int> arranged;
    std::vector<bool> placed(order.size(), false);
    for (int idx : order) {
        if (placed[static_cast<std::size_t>(idx)])
            continue;
        int mate = dec.projectors[static_cast<std::size_t>(idx)].conjugate_of;
        if (mate >= 0 && !placed[static_cast<std::size_t>(mate)]) {
            int first = idx, second = mate;
            if (!positive_imaginary_first(dec.projectors[static_cast<std::size_t>(first)],
                                          cfg.digits))
                std::swap(first, second);
            arranged.push_back(first);
            arranged.push_back(second);
            placed[static_cast<std::size_t>(first)] = placed[static_cast<std::size_t>(second)] = true;
        } else {
            arranged.push_back(idx);
            placed[static_cast<std::size_t>(idx)] = true;
        }
    }
    std::vector<int> new_index(arranged.size());
    for (std::size_t i = 0; i < arranged.size(); ++i)
        new_index[static_cast<std::size_t>(arranged[i])] = static_cast<int>(i);
    std::vector<Projector> sorted;
    sorted.reserve(arranged.size());
    for (int idx : arranged) {
        Projector p = std::move(dec.projectors[static_cast<std::size_t>(idx)]);
        if (p.conjugate_of >= 0)
            p.conjugate_of = new_index[static_cast<std::size_t>(p.conjugate_of)];
        sorted.push_back(std::move(p));
    }
    dec.projectors = std::move(sorted);
    return dec;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

std::vector<FieldElement> apply_projector(const Projector& p, const OrbitalBasis& basis,
                                          const std::vector<std::pair<Point, FieldElement>>& sparse) {
    const Point n = basis.degree;
    std::vector<FieldElement> out(n);
    for (const auto& [j, vj] : sparse) {
        Permutation w = basis.transversal.transversal_element(j).inverse();
        for (Point i = 0; i < n; ++i) {
            int r = basis.transpose_of[static_cast<std::size_t>(basis.row1[w(i)])];
            const FieldElement& c = p.coeff[static_cast<std::size_t>(r)];
            if (!c.is_zero())
                out[i] = out[i] + c * vj;
        }
    }
    return out;
}

} // namespace

VerifyReport verify_decomposition(const Decomposition& dec, const PermutationAction& act,
                                  const OrbitalBasis& basis, const StructureConstants& sc,
                                  std::uint64_t seed, int invariance_draws, int digits) {
    VerifyReport rep;
    auto add = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
        rep.items.push_back({name, ok, detail});
    };
    const int R = dec.rank;
    const Point N = dec.degree;

    if (R != basis.rank || N != basis.degree) {
        add("artifact matches action", false, "rank/degree disagree");
        return rep;
    }
    add("artifact matches action", true);

    bool idem = true, trace = true;
    std::string idem_detail;
    for (std::size_t m = 0; m < dec.projectors.size(); ++m) {
        const auto& p = dec.projectors[m];
        if (!(scheme_product(sc, p.coeff, p.coeff) == p.coeff)) {
            idem = false;
            idem_detail = "projector " + std::to_string(m + 1) + " fails idempotency";
        }
        if (!(p.coeff[0] == FieldElement(make_rational(p.dimension, N))))
            trace = false;
    }
    add("idempotency", idem, idem_detail);
    add("trace identity b1*N = d", trace);

    bool orth = true;
    std::string orth_detail;
    for (std::size_t i = 0; i < dec.projectors.size() && orth; ++i)
        for (std::size_t j = i + 1; j < dec.projectors.size(); ++j) {
            auto prod = scheme_product(sc, dec.projectors[i].coeff, dec.projectors[j].coeff);
            for (const auto& v : prod)
                if (!v.is_zero()) {
                    orth = false;
                    orth_detail = "projectors " + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + " not orthogonal";
                    break;
                }
            if (!orth)
                break;
        }
    add("pairwise orthogonality", orth, orth_detail);

    std::vector<FieldElement> sum(static_cast<std::size_t>(R));
    long dim_total = 0;
    for (const auto& p : dec.projectors) {
        for (int r = 0; r < R; ++r)
            sum[static_cast<std::size_t>(r)] =
                sum[static_cast<std::size_t>(r)] + p.coeff[static_cast<std::size_t>(r)];
        dim_total += p.dimension;
    }
    bool complete = sum[0] == FieldElement(Rational(1));
    for (int r = 1; r < R; ++r)
        complete = complete && sum[static_cast<std::size_t>(r)].is_zero();
    add("completeness sums", complete);
    add("dimensions sum to degree", dim_total == static_cast<long>(N),
        "sum = " + std::to_string(dim_total));

    // sum over distinct components of multiplicity^2 = R
    {
        std::map<int, long> family_size;
        long k2 = 0;
        for (const auto& p : dec.projectors)
            if (p.multiplicity_group >= 0)
                ++family_size[p.multiplicity_group];
            else
                k2 += 1;
        for (const auto& [tag, size] : family_size)
            k2 += size * size;
        add("sum of squared multiplicities = rank", k2 == R, "sum = " + std::to_string(k2));
    }

    {
        std::optional<Conjugation> cj = conjugation_map(dec.field, digits);
        bool herm = true;
        for (const auto& p : dec.projectors)
            if (!is_hermitian(p.coeff, basis, cj))
                herm = false;
        add("hermiticity pairing", herm);
    }

    if (dec.multiplicity_free)
        add("multiplicity-free projector count = rank",
            static_cast<int>(dec.projectors.size()) == R);

    {
        auto bad = check_structure_constants(sc, basis);
        add("structure constant identities", bad.empty(), bad.empty() ? "" : bad.front());
        add("associativity spot-check", associativity_spot_check(sc, seed ^ 0xa5a5a5a5ull, 50));
    }

    // matrix-free invariance: rho(g) B_m v == B_m rho(g) v on random sparse v
    {
        std::mt19937_64 rng(seed ^ 0x0ddba11cafef00dull);
        bool ok = true;
        for (int draw = 0; draw < invariance_draws && ok; ++draw) {
            const Permutation& g =
                act.generators[rng() % act.generators.size()];
            const Projector& p = dec.projectors[rng() % dec.projectors.size()];
            std::vector<std::pair<Point, FieldElement>> sparse;
            for (int t = 0; t < 3; ++t)
                sparse.emplace_back(static_cast<Point>(rng() % N),
                                    FieldElement(Rational(static_cast<long>(rng() % 19) - 9)));
            std::vector<FieldElement> bv = apply_projector(p, basis, sparse);
            std::vector<FieldElement> g_bv = act_on_vector(g, bv);
            std::vector<std::pair<Point, FieldElement>> g_sparse;
            for (const auto& [j, vj] : sparse)
                g_sparse.emplace_back(g(j), vj);
            std::vector<FieldElement> b_gv = apply_projector(p, basis, g_sparse);
            ok = g_bv == b_gv;
        }
        add("invariance spot-check (" + std::to_string(invariance_draws) + " draws)", ok);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// transformation basis
// ---------------------------------------------------------------------------

TransformBasis transformation_basis(const Decomposition& dec, const OrbitalBasis& basis,
                                    Point max_degree) {
    const Point N = basis.degree;
    if (N > max_degree)
        throw DegreeCap("degree " + std::to_string(N) + " exceeds the dense cap " +
                        std::to_string(max_degree));
    TransformBasis tb;
    for (const auto& p : dec.projectors) {
        // rows of B_m^T are the columns of B_m; reduced row echelon of that
        // row space yields an exact basis of the image
        std::vector<std::vector<FieldElement>> rows;
        rows.reserve(N);
        for (Point j = 0; j < N; ++j) {
            Permutation w = basis.transversal.transversal_element(j).inverse();
            std::vector<FieldElement> row(N);
            for (Point i = 0; i < N; ++i)
                row[i] = p.coeff[static_cast<std::size_t>(
                    basis.transpose_of[static_cast<std::size_t>(basis.row1[w(i)])])];
            rows.push_back(std::move(row));
        }
        // in-place reduced row echelon
        std::size_t pivot_row = 0;
        for (Point col = 0; col < N && pivot_row < rows.size(); ++col) {
            std::size_t sel = pivot_row;
            while (sel < rows.size() && rows[sel][col].is_zero())
                ++sel;
            if (sel == rows.size())
                continue;
            std::swap(rows[pivot_row], rows[sel]);
            FieldElement inv = rows[pivot_row][col].inverse();
            for (Point c2 = col; c2 < N; ++c2)
                rows[pivot_row][c2] = rows[pivot_row][c2] * inv;
            for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                if (r2 == pivot_row || rows[r2][col].is_zero())
                    continue;
                FieldElement f = rows[r2][col];
                for (Point c2 = col; c2 < N; ++c2)
                    rows[r2][c2] = rows[r2][c2] - f * rows[pivot_row][c2];
            }
            ++pivot_row;
        }
        if (pivot_row != static_cast<std::size_t>(p.dimension))
            throw CheckFailure("projector image rank does not match its dimension");
        for (std::size_t r = 0; r < pivot_row; ++r)
            tb.columns.push_back(rows[r]);
        tb.block_widths.push_back(p.dimension);
    }

    // invertibility: the N columns must have full rank
    std::vector<std::vector<FieldElement>> m = tb.columns;
    std::size_t rank = 0;
    for (Point col = 0; col < N && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero())
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[rank], m[sel]);
        FieldElement inv = m[rank][col].inverse();
        for (Point c2 = col; c2 < N; ++c2)
            m[rank][c2] = m[rank][c2] * inv;
        for (std::size_t r2 = rank + 1; r2 < m.size(); ++r2) {
            if (m[r2][col].is_zero())
                continue;
            FieldElement f = m[r2][col];
            for (Point c2 = col; c2 < N; ++c2)
                m[r2][c2] = m[r2][c2] - f * m[rank][c2];
        }
        ++rank;
    }
    if (rank != N)
        throw CheckFailure("transformation basis is singular");
    return tb;
}

} // namespace repsplit
