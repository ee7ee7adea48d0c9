#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "repsplit/json_io.hpp"
#include "repsplit/report.hpp"

using namespace repsplit;
using namespace repsplit::testing;

namespace {

std::vector<FieldElement> rationals(std::initializer_list<Rational> qs) {
    std::vector<FieldElement> out;
    for (const auto& q : qs)
        out.emplace_back(q);
    return out;
}

// dense matrix of a projector via the membership oracle
std::vector<std::vector<FieldElement>> projector_matrix(const Projector& p,
                                                        const OrbitalBasis& basis) {
    const Point n = basis.degree;
    std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n));
    for (Point i = 0; i < n; ++i)
        for (Point j = 0; j < n; ++j)
            m[i][j] = p.coeff[static_cast<std::size_t>(basis.orbital_index(i, j))];
    return m;
}

std::vector<std::vector<FieldElement>> exact_inverse(std::vector<std::vector<FieldElement>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<FieldElement>> inv(n, std::vector<FieldElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = FieldElement(Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col].is_zero())
            ++sel;
        REQUIRE(sel < n);
        std::swap(a[col], a[sel]);
        std::swap(inv[col], inv[sel]);
        FieldElement d = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            FieldElement f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

bool conjugated_generators_are_block_diagonal(const PermutationAction& act,
                                              const TransformBasis& tb) {
    const std::size_t n = act.degree;
    // T columns -> matrix
    std::vector<std::vector<FieldElement>> t(n, std::vector<FieldElement>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            t[r][c] = tb.columns[c][r];
    auto tinv = exact_inverse(t);
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t off = 0;
    for (long w : tb.block_widths) {
        spans.emplace_back(off, off + static_cast<std::size_t>(w));
        off += static_cast<std::size_t>(w);
    }
    for (const auto& g : act.generators) {
        // M = T^-1 rho(g) T with rho(g)_{ij} = [j == i^g]
        std::vector<std::vector<FieldElement>> rt(n, std::vector<FieldElement>(n));
        for (std::size_t i = 0; i < n; ++i) {
            Point ig = g(static_cast<Point>(i));
            for (std::size_t c = 0; c < n; ++c)
                rt[i][c] = t[ig][c]; // (rho(g) T)_{i c} = T_{i^g, c}
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FieldElement v;
                for (std::size_t k = 0; k < n; ++k)
                    v = v + tinv[i][k] * rt[k][j];
                bool inside = false;
                for (auto [lo, hi] : spans)
                    if (i >= lo && i < hi && j >= lo && j < hi)
                        inside = true;
                if (!inside && !v.is_zero())
                    return false;
            }
    }
    return true;
}

} // namespace

TEST_CASE("idempotency polynomials of a rank-2 scheme") {
    auto basis = orbital_basis(m11_action());
    auto sc = structure_constants(basis);
    auto sys = build_idempotency_system(sc);
    REQUIRE(sys.idempotency.size() == 2);
    // E1 = x1^2 + 10 x2^2 - x1, E2 = 2 x1 x2 + 9 x2^2 - x2
    PolyCtx c = sys.ctx;
    auto x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    auto e1 = mp_sub(c,
                     mp_add(c, mp_mul(c, x1, x1),
                            mp_scale(mp_mul(c, x2, x2), FieldElement(Rational(10)))),
                     x1);
    auto e2 = mp_sub(c,
                     mp_add(c, mp_scale(mp_mul(c, x1, x2), FieldElement(Rational(2))),
                            mp_scale(mp_mul(c, x2, x2), FieldElement(Rational(9)))),
                     x2);
    CHECK(mp_equal(sys.idempotency[0], e1));
    CHECK(mp_equal(sys.idempotency[1], e2));
}

TEST_CASE("idempotency vanishes at the trivial and zero vectors") {
    for (const auto& act : {petersen_action(), s3_regular_action(), cyclic_action(5)}) {
        auto basis = orbital_basis(act);
        auto sc = structure_constants(basis);
        auto sys = build_idempotency_system(sc);
        auto trivial = trivial_projector(basis.degree, basis.rank);
        std::vector<FieldElement> zero(static_cast<std::size_t>(basis.rank));
        for (const auto& e : sys.idempotency) {
            CHECK(mp_eval(e, trivial.coeff).is_zero());
            CHECK(mp_eval(e, zero).is_zero());
        }
    }
}

TEST_CASE("orthogonality polynomials") {
    // rank 2 at N = 3: both O_r proportional to x1 + 2 x2
    auto basis = orbital_basis(s3_natural_action());
    auto sc = structure_constants(basis);
    REQUIRE(basis.rank == 2);
    auto trivial = trivial_projector(3, 2);
    auto orth = build_orthogonality_polynomials(sc, trivial.coeff);
    REQUIRE(orth.size() == 2);
    PolyCtx c{2, MonoOrder::degrevlex};
    auto expected = mp_scale(mp_add(c, MultiPoly::variable(2, 0),
                                    mp_scale(MultiPoly::variable(2, 1), FieldElement(Rational(2)))),
                             FieldElement(make_rational(1, 3)));
    CHECK(mp_equal(orth[0], expected));
    CHECK(mp_equal(orth[1], expected)); // (J/3)(x1 I + x2 (J-I)) = ((x1+2x2)/3)(A1+A2)

    // zero vector: all orthogonality polynomials vanish
    std::vector<FieldElement> zero(2);
    for (const auto& o : build_orthogonality_polynomials(sc, zero))
        CHECK(o.is_zero());

    // O(b; b) = b for an idempotent b
    for (int r = 0; r < 2; ++r)
        CHECK(mp_eval(orth[static_cast<std::size_t>(r)], trivial.coeff) ==
              trivial.coeff[static_cast<std::size_t>(r)]);
}

TEST_CASE("trivial projector") {
    auto p = trivial_projector(8330, 7);
    CHECK(p.dimension == 1);
    CHECK(p.coeff == rationals({make_rational(1, 8330), make_rational(1, 8330),
                                make_rational(1, 8330), make_rational(1, 8330),
                                make_rational(1, 8330), make_rational(1, 8330),
                                make_rational(1, 8330)}));
    auto q = trivial_projector(3906, 4);
    for (const auto& cf : q.coeff)
        CHECK(cf == FieldElement(make_rational(1, 3906)));
}

TEST_CASE("petersen splits into 1+4+5 over Q") {
    auto act = petersen_action();
    auto dec = split(act);
    REQUIRE(dec.projectors.size() == 3);
    CHECK(dec.projectors[0].dimension == 1);
    CHECK(dec.projectors[1].dimension == 4);
    CHECK(dec.projectors[2].dimension == 5);
    CHECK(dec.field == nullptr);
    CHECK(dec.multiplicity_free);
    for (const auto& p : dec.projectors)
        for (const auto& cf : p.coeff)
            CHECK(cf.is_rational());
}

TEST_CASE("m11 splits into 1+10 with the complement projector") {
    auto dec = split(m11_action());
    REQUIRE(dec.projectors.size() == 2);
    CHECK(dec.projectors[1].coeff ==
          rationals({make_rational(10, 11), make_rational(-1, 11)}));
}

TEST_CASE("s3 regular action: multiplicity family with h=2, k=2") {
    auto act = s3_regular_action();
    auto dec = split(act);
    REQUIRE(dec.projectors.size() == 4);
    CHECK(dec.projectors[0].dimension == 1);
    CHECK(dec.projectors[1].dimension == 1);
    CHECK(dec.projectors[2].dimension == 2);
    CHECK(dec.projectors[3].dimension == 2);
    CHECK(dec.projectors[2].multiplicity_group == dec.projectors[3].multiplicity_group);
    CHECK(dec.projectors[2].multiplicity_group >= 0);
    CHECK_FALSE(dec.multiplicity_free);
    bool saw_family_pass = false;
    for (const auto& pass : dec.passes)
        if (pass.d == 2 && pass.status == SolveStatus::positive_dimensional) {
            CHECK(pass.h == 2);
            CHECK(pass.k == 2);
            saw_family_pass = true;
        }
    CHECK(saw_family_pass);

    // the family members sum to the isotypic projector, itself idempotent
    auto basis = orbital_basis(act);
    auto sc = structure_constants(basis);
    std::vector<FieldElement> iso(static_cast<std::size_t>(basis.rank));
    for (int r = 0; r < basis.rank; ++r)
        iso[static_cast<std::size_t>(r)] = dec.projectors[2].coeff[static_cast<std::size_t>(r)] +
                                           dec.projectors[3].coeff[static_cast<std::size_t>(r)];
    CHECK(scheme_product(sc, iso, iso) == iso);
    CHECK(iso[0] == FieldElement(make_rational(4, 6)));
}

TEST_CASE("c5 regular action: four conjugate characters over a quartic field") {
    auto dec = split(cyclic_action(5));
    REQUIRE(dec.projectors.size() == 5);
    for (const auto& p : dec.projectors)
        CHECK(p.dimension == 1);
    REQUIRE(dec.field != nullptr);
    CHECK(dec.field->degree() == 4);
    int linked = 0;
    for (const auto& p : dec.projectors)
        if (p.conjugate_of >= 0)
            ++linked;
    CHECK(linked == 4);
    // conjugate mates are adjacent in the output order
    for (std::size_t i = 0; i < dec.projectors.size(); ++i) {
        int mate = dec.projectors[i].conjugate_of;
        if (mate >= 0)
            CHECK(std::abs(static_cast<long>(i) - mate) == 1);
    }
}

TEST_CASE("verification notices a corrupted coefficient") {
    auto act = petersen_action();
    auto basis = orbital_basis(act);
    auto sc = structure_constants(basis);
    auto dec = split_prepared(basis, sc, {});
    auto rep = verify_decomposition(dec, act, basis, sc, 1, 50);
    CHECK(rep.all_ok());

    dec.projectors[1].coeff[1] =
        dec.projectors[1].coeff[1] + FieldElement(make_rational(1, 7));
    auto bad = verify_decomposition(dec, act, basis, sc, 1, 50);
    CHECK_FALSE(bad.all_ok());
    bool idem_failed = false;
    for (const auto& item : bad.items)
        if (item.name == "idempotency" && !item.ok) {
            idem_failed = true;
            CHECK(item.detail.find("projector 2") != std::string::npos);
        }
    CHECK(idem_failed);
}

TEST_CASE("transformation basis") {
    // S3 natural: blocks 1 and 2, first column all ones, conjugation
    // block-diagonalizes both generators
    auto act = s3_natural_action();
    auto dec = split(act);
    auto basis = orbital_basis(act);
    auto tb = transformation_basis(dec, basis);
    REQUIRE(tb.block_widths == std::vector<long>{1, 2});
    const auto& first = tb.columns[0];
    for (const auto& v : first)
        CHECK(v == first[0]);
    CHECK_FALSE(first[0].is_zero());
    CHECK(conjugated_generators_are_block_diagonal(act, tb));

    // petersen: blocks 1, 4, 5
    auto pact = petersen_action();
    auto pdec = split(pact);
    auto pbasis = orbital_basis(pact);
    auto ptb = transformation_basis(pdec, pbasis);
    CHECK(ptb.block_widths == std::vector<long>{1, 4, 5});
    CHECK(conjugated_generators_are_block_diagonal(pact, ptb));

    // block columns span the projector images: B * col == col for each block
    auto bm = projector_matrix(pdec.projectors[1], pbasis);
    std::size_t off = 1;
    for (long wcount = 0; wcount < ptb.block_widths[1]; ++wcount) {
        const auto& col = ptb.columns[off + static_cast<std::size_t>(wcount)];
        for (std::size_t i = 0; i < 10; ++i) {
            FieldElement v;
            for (std::size_t k = 0; k < 10; ++k)
                v = v + bm[i][k] * col[k];
            CHECK(v == col[i]);
        }
    }

    CHECK_THROWS_AS(transformation_basis(pdec, pbasis, 5), DegreeCap);
}

TEST_CASE("split is deterministic for fixed input and seed") {
    auto act = s3_regular_action();
    SplitConfig cfg;
    cfg.seed = 12345;
    auto basis = orbital_basis(act);
    auto sc = structure_constants(basis);
    auto d1 = split_prepared(basis, sc, cfg);
    auto d2 = split_prepared(basis, sc, cfg);
    CHECK(decomposition_to_json(d1, basis) == decomposition_to_json(d2, basis));
}

TEST_CASE("s7 on pairs splits into 1+6+14") {
    auto dec = split(symmetric_on_pairs(7));
    REQUIRE(dec.projectors.size() == 3);
    CHECK(dec.projectors[0].dimension == 1);
    CHECK(dec.projectors[1].dimension == 6);
    CHECK(dec.projectors[2].dimension == 14);
}

TEST_CASE("multiplicity-free inputs never enter the h>0 branch") {
    for (const auto& act : {petersen_action(), cyclic_action(5), m11_action()}) {
        auto dec = split(act);
        CHECK(dec.multiplicity_free);
        CHECK(static_cast<int>(dec.projectors.size()) == dec.rank);
        for (const auto& pass : dec.passes)
            CHECK(pass.status != SolveStatus::positive_dimensional);
    }
}
