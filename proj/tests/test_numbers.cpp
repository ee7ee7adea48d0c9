#include <doctest.h>

#include <random>

#include "repsplit/factor.hpp"
#include "repsplit/numberfield.hpp"

using namespace repsplit;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return QPoly(std::move(c));
}

// Exhaustive rational-root and quadratic-subfactor search; sound up to
// degree 4 and completely independent of the Zassenhaus path.
bool oracle_irreducible_deg_le4(const QPoly& f) {
    REQUIRE(f.degree() >= 1);
    REQUIRE(f.degree() <= 4);
    if (f.degree() == 1)
        return true;
    auto [z, lead] = integer_primitive(f);
    (void)lead;
    auto divisors = [](Integer n) {
        std::vector<Integer> out;
        if (n < 0)
            n = -n;
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    // rational roots p/q with p | z[0], q | lc
    if (z.front() == 0)
        return false;
    for (const Integer& p : divisors(z.front()))
        for (const Integer& q : divisors(z.back()))
            for (int sign : {1, -1}) {
                Rational root = make_rational(sign * p, q);
                if (eval(f, root) == 0)
                    return false;
            }
    if (f.degree() != 4)
        return true;
    // quadratic subfactors of the monicized polynomial: y^4 + A y^3 + B y^2 +
    // C y + D = (y^2 + b y + c)(y^2 + d y + e) with integer b, c, d, e
    Integer lc = z.back();
    Integer A = z[3] * lc, B = z[2] * lc * lc, C = z[1] * lc * lc * lc,
            D = z[0] * lc * lc * lc * lc;
    if (D == 0)
        return false;
    for (const Integer& cd : divisors(D))
        for (int sign : {1, -1}) {
            Integer c = sign * cd;
            if (D % c != 0)
                continue;
            Integer e = D / c;
            // b + d = A, b*d = B - c - e, b*e + c*d = C
            Integer sum = A, prod = B - c - e;
            Integer disc = sum * sum - 4 * prod;
            if (disc < 0)
                continue;
            Integer root;
            mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
            if (root * root != disc)
                continue;
            Integer b1 = (sum + root) / 2, b2 = (sum - root) / 2;
            for (const Integer& b : {b1, b2}) {
                Integer d = sum - b;
                if (b + d == A && b * d == prod && b * e + c * d == C)
                    return false;
            }
        }
    return true;
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
    CHECK(rational_str(make_rational(-4, 6)) == "-2/3");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-1.25") == make_rational(-5, 4));
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(rational_div(Rational(1), Rational(0)), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("x"), MalformedInput);
}

TEST_CASE("factor examples") {
    auto f1 = factor_over_Q(qp({-1, 0, 1})); // x^2 - 1
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].poly == qp({-1, 1}));
    CHECK(f1.factors[1].poly == qp({1, 1}));

    CHECK(is_irreducible_over_Q(qp({-2, 0, 1})));

    auto f2 = factor_over_Q(qp({7, 0, 1}) * qp({-3, 1}) * qp({-3, 1}));
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].poly == qp({-3, 1}));
    CHECK(f2.factors[0].multiplicity == 2);
    CHECK(f2.factors[1].poly == qp({7, 0, 1}));
    CHECK(f2.factors[1].multiplicity == 1);
    CHECK(oracle_irreducible_deg_le4(f2.factors[1].poly));

    // cyclotomic and swinnerton-dyer style inputs
    CHECK(is_irreducible_over_Q(qp({1, 1, 1, 1, 1})));
    CHECK(is_irreducible_over_Q(qp({1, 0, -10, 0, 1}))); // minpoly of sqrt2+sqrt3
    CHECK(oracle_irreducible_deg_le4(qp({1, 0, -10, 0, 1})));
}

TEST_CASE("factorization reassembles bit-exactly on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        int deg = 1 + static_cast<int>(rng() % 20);
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& q : c)
            q = Rational(static_cast<long>(rng() % 19) - 9);
        while (c.back() == 0)
            c.back() = Rational(static_cast<long>(rng() % 9) + 1);
        // sprinkle in a forced square sometimes
        QPoly f(c);
        if (t % 5 == 0) {
            QPoly lin({Rational(static_cast<long>(rng() % 7) - 3), Rational(1)});
            f = f * lin * lin;
        }
        QFactorization fac = factor_over_Q(f);
        CHECK(fac.reassemble() == f);
        for (const auto& g : fac.factors) {
            CHECK(g.poly.is_monic());
            if (g.poly.degree() <= 4)
                CHECK(oracle_irreducible_deg_le4(g.poly));
        }
    }
}

TEST_CASE("field construction and arithmetic") {
    auto sqrt2 = adjoin_root(nullptr, FPoly::from_qpoly(qp({-2, 0, 1})));
    CHECK(sqrt2.field->degree() == 2);
    // the deterministic choice picks the positive root
    Disk box = complex_approx(sqrt2.root, 12);
    CHECK(box.re > Rational(14142, 10001));
    CHECK(box.im == 0);

    // inverse of alpha is alpha/2
    CHECK(sqrt2.root.inverse() == FieldElement(make_rational(1, 2)) * sqrt2.root);

    // (1 - a)/12 * (1 + a)/12 = 8/144 = 1/18 with a^2 = -7
    auto isqrt7 = adjoin_root(nullptr, FPoly::from_qpoly(qp({7, 0, 1})));
    FieldElement one(Rational(1));
    FieldElement u = (one - isqrt7.root) / FieldElement(Rational(12));
    FieldElement v = (one + isqrt7.root) / FieldElement(Rational(12));
    CHECK(u * v == FieldElement(make_rational(1, 18)));
    Disk b7 = complex_approx(isqrt7.root, 10);
    CHECK(b7.re == 0);
    CHECK(b7.im > Rational(2));

    CHECK_THROWS_AS(adjoin_root(nullptr, FPoly::from_qpoly(qp({-1, 0, 1}))), NotIrreducible);
}

TEST_CASE("tower compositum via a primitive element") {
    auto sqrt2 = adjoin_root(nullptr, FPoly::from_qpoly(qp({-2, 0, 1})));
    auto tower = adjoin_root(sqrt2.field, FPoly::from_qpoly(qp({-3, 0, 1})));
    CHECK(tower.field->degree() == 4);
    CHECK(tower.field->minpoly() == qp({1, 0, -10, 0, 1}));
    FieldElement r2 = tower.embed(sqrt2.root);
    CHECK(r2 * r2 == FieldElement(Rational(2)));
    CHECK(tower.root * tower.root == FieldElement(Rational(3)));
    // the embedded generator satisfies its original minimal polynomial
    CHECK(eval(FPoly::from_qpoly(sqrt2.field->minpoly()), r2).is_zero());
}

TEST_CASE("isolating box selection") {
    QPoly mp = qp({-2, 0, 1});
    Disk both(Rational(0), Rational(0), Rational(3));
    CHECK_THROWS_AS(NumberField::create(mp, both), BoxNotIsolating);
    Disk none(Rational(100), Rational(0), Rational(1));
    CHECK_THROWS_AS(NumberField::create(mp, none), BoxNotIsolating);
    Disk neg(Rational(-1), Rational(0), Rational(1));
    auto f = NumberField::create(mp, neg);
    Disk refined = f->root_box(20);
    CHECK(refined.re < 0);
    CHECK(refined.rad <= pow10_inv(20));
}

TEST_CASE("complex approximation") {
    // rational values are exact
    Disk d = complex_approx(FieldElement(make_rational(5, 6)), 10);
    CHECK(d.re == make_rational(5, 6));
    CHECK(d.rad == 0);

    auto isqrt7 = adjoin_root(nullptr, FPoly::from_qpoly(qp({7, 0, 1})));
    FieldElement val = (FieldElement(Rational(1)) - isqrt7.root) / FieldElement(Rational(12));
    Disk lo = complex_approx(val, 8);
    Disk mid = complex_approx(val, 16);
    Disk hi = complex_approx(val, 32);
    CHECK(lo.rad <= pow10_inv(8));
    CHECK(mid.rad <= pow10_inv(16));
    CHECK(hi.rad <= pow10_inv(32));
    // intervals shrink and stay nested around the true value
    CHECK(mid.rad <= lo.rad);
    CHECK(hi.rad <= mid.rad);
    CHECK(disks_intersect(lo, hi));
    CHECK(disk_inside(hi, lo));
    // (1 - i sqrt7)/12 ~ 0.0833 - 0.2205 i
    CHECK(abs(hi.re - make_rational(1, 12)) < make_rational(1, 1000000));
    CHECK(hi.im < Rational(0));
}

TEST_CASE("field axioms on random elements") {
    for (auto coeffs : {std::initializer_list<long>{-1, -1, 0, 1}, {7, 0, 1}}) {
        auto ar = adjoin_root(nullptr, FPoly::from_qpoly(qp(coeffs)));
        std::mt19937_64 rng(5);
        auto random_elem = [&]() {
            std::vector<Rational> c(static_cast<std::size_t>(ar.field->degree()));
            for (auto& q : c)
                q = make_rational(static_cast<long>(rng() % 13) - 6,
                                  1 + static_cast<long>(rng() % 4));
            return FieldElement::from_coords(ar.field, std::move(c));
        };
        for (int t = 0; t < 40; ++t) {
            FieldElement a = random_elem(), b = random_elem(), c = random_elem();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == FieldElement(Rational(1)));
                CHECK((a.inverse()).inverse() == a);
            }
        }
    }
}

TEST_CASE("conjugation automorphism") {
    auto isqrt7 = adjoin_root(nullptr, FPoly::from_qpoly(qp({7, 0, 1})));
    auto cj = conjugation_map(isqrt7.field);
    REQUIRE(cj.has_value());
    CHECK((*cj)(isqrt7.root) == -isqrt7.root);

    auto sqrt2 = adjoin_root(nullptr, FPoly::from_qpoly(qp({-2, 0, 1})));
    auto cj2 = conjugation_map(sqrt2.field);
    REQUIRE(cj2.has_value());
    CHECK((*cj2)(sqrt2.root) == sqrt2.root); // real field: identity

    auto zeta5 = adjoin_root(nullptr, FPoly::from_qpoly(qp({1, 1, 1, 1, 1})));
    auto cj5 = conjugation_map(zeta5.field);
    REQUIRE(cj5.has_value());
    FieldElement w = zeta5.root;
    CHECK((*cj5)(w) == w * w * w * w); // conj(zeta) = zeta^4
    CHECK((*cj5)((*cj5)(w)) == w);
}

TEST_CASE("polynomials over an extension field") {
    auto sqrt2 = adjoin_root(nullptr, FPoly::from_qpoly(qp({-2, 0, 1})));
    FieldElement a = sqrt2.root, one(Rational(1)), two(Rational(2));
    FPoly f({-a, one});       // y - a
    FPoly g({-one, one});     // y - 1
    FPoly h({two, one});      // y + 2
    CHECK(gcd(f * g, f * h) == f);
    auto [q, r] = divrem(f * g, f);
    CHECK(r.is_zero());
    CHECK(q == g);

    // x^2 - 2 splits over Q(sqrt2)
    auto split = factor_squarefree_over(sqrt2.field, FPoly::from_qpoly(qp({-2, 0, 1})));
    REQUIRE(split.size() == 2);
    for (const auto& lin : split)
        CHECK(lin.degree() == 1);

    // the 5th cyclotomic polynomial splits completely over Q(zeta5)
    auto zeta5 = adjoin_root(nullptr, FPoly::from_qpoly(qp({1, 1, 1, 1, 1})));
    auto lins = factor_squarefree_over(zeta5.field, FPoly::from_qpoly(qp({1, 1, 1, 1, 1})));
    CHECK(lins.size() == 4);
    for (const auto& lin : lins)
        CHECK(lin.degree() == 1);
}
