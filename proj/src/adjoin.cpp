#include <algorithm>

#include "repsplit/errors.hpp"
#include "repsplit/factor.hpp"
#include "repsplit/numberfield.hpp"

namespace repsplit {

namespace {

QPoly coeff_as_qpoly(const FieldElement& e) {
    if (e.is_rational())
        return QPoly::constant(e.as_rational());
    return QPoly(std::vector<Rational>(e.coords()));
}

// Norm of f(y - s*x) with respect to m(x): Res_x(m(x), f~(y - s*x, x)) where
// f~ replaces the field generator inside the coefficients of f by x. Computed
// by evaluation/interpolation in y; m must be monic.
QPoly norm_shifted(const QPoly& m, const FPoly& f, long s) {
    const int n = m.degree();
    const int e = f.degree();
    const int samples = n * e + 1;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(samples));
    ys.reserve(static_cast<std::size_t>(samples));
    long t = 0;
    while (static_cast<int>(xs.size()) < samples) {
        Rational tv(t);
        // g_t(x) = sum_j c_j(x) * (t - s*x)^j via Horner
        QPoly lin({tv, Rational(-s)});
        QPoly acc;
        for (int j = e; j >= 0; --j)
            acc = acc * lin + coeff_as_qpoly(f.c[static_cast<std::size_t>(j)]);
        xs.push_back(tv);
        ys.push_back(resultant(m, acc));
        t = (t > 0) ? -t : (-t + 1);
    }
    return interpolate(xs, ys);
}

bool is_squarefree(const QPoly& f) { return gcd(f, derivative(f)).degree() == 0; }

// Evaluates a rational-coefficient polynomial on a disk.
Disk eval_disk(const QPoly& p, const Disk& d) {
    Disk acc = Disk::point(Rational(0));
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * d + Disk::point(p[i]);
    return acc;
}

struct DiskCmpImRe {
    bool operator()(const Disk& a, const Disk& b) const {
        if (a.im != b.im)
            return a.im > b.im;
        return a.re > b.re;
    }
};

} // namespace

std::vector<FPoly> factor_squarefree_over(const FieldPtr& field, const FPoly& f, int digits) {
    FPoly fm = monic(f);
    if (fm.degree() <= 1)
        return {fm};
    if (!field) {
        QFactorization qa = factor_over_Q(to_qpoly(fm));
        std::vector<FPoly> out;
        out.reserve(qa.factors.size());
        for (const auto& fac : qa.factors)
            out.push_back(FPoly::from_qpoly(fac.poly));
        return out;
    }

    const QPoly& m = field->minpoly();
    for (long s = 0; s <= 64; ++s) {
        QPoly norm = norm_shifted(m, fm, s);
        if (!is_squarefree(norm))
            continue;
        QFactorization qa = factor_over_Q(norm);
        if (qa.factors.size() == 1)
            return {fm};
        FieldElement alpha = FieldElement::generator(field);
        FieldElement shift = FieldElement(Rational(-s)) * alpha;
        FPoly fs = taylor_shift(fm, shift); // fs(y) = f(y - s*alpha)
        std::vector<FPoly> out;
        FPoly check = FPoly::constant(FieldElement(Rational(1)));
        for (const auto& fac : qa.factors) {
            FPoly h = gcd(fs, FPoly::from_qpoly(fac.poly));
            if (h.degree() < 1)
                continue;
            FPoly piece = taylor_shift(h, FieldElement(Rational(s)) * alpha);
            check = check * piece;
            out.push_back(std::move(piece));
        }
        if (!(monic(check) == fm))
            throw ExtensionFailure("norm factorization did not reassemble");
        std::sort(out.begin(), out.end(), [](const FPoly& a, const FPoly& b) {
            return a.degree() < b.degree();
        });
        return out;
    }
    throw ExtensionFailure("no squarefree norm found for factorization over the field");
    (void)digits;
}

AdjoinResult adjoin_root(const FieldPtr& current, const FPoly& minpoly_over,
                         const std::optional<Disk>& box, int digits) {
    FPoly fm = monic(minpoly_over);
    if (fm.degree() < 1)
        throw NotIrreducible("cannot adjoin a root of a constant");

    if (fm.degree() == 1) {
        AdjoinResult r;
        r.field = current;
        r.embed = Embedding::identity(current);
        r.root = -fm.c[0];
        return r;
    }

    if (!current) {
        QPoly mp = to_qpoly(fm);
        Disk chosen;
        if (box) {
            chosen = *box;
        } else {
            std::vector<Disk> roots = isolate_roots(mp, digits);
            chosen = *std::min_element(roots.begin(), roots.end(), DiskCmpImRe{});
        }
        AdjoinResult r;
        r.field = NumberField::create(mp, chosen, digits);
        r.embed = Embedding::identity(nullptr);
        r.embed.to = r.field;
        r.root = FieldElement::generator(r.field);
        return r;
    }

    const QPoly& m = current->minpoly();
    const int n = m.degree();
    const int e = fm.degree();

    for (long s = 1; s <= 64; ++s) {
        QPoly norm = norm_shifted(m, fm, s);
        if (!is_squarefree(norm))
            continue;
        if (!is_irreducible_over_Q(norm))
            throw NotIrreducible("polynomial is reducible over the current field");

        // a(gamma): image of the old generator, from the linear gcd
        // gcd(m(x), f~(gamma - s*x, x)) over Q[gamma]/(norm). The gcd is a
        // symbolic computation, independent of which root box gets chosen,
        // so compute it in a provisional copy of the field.
        std::vector<Disk> norm_roots = isolate_roots(norm, digits);
        FieldPtr provisional = NumberField::create(norm, norm_roots.front(), digits);
        FieldElement gamma = FieldElement::generator(provisional);

        FPoly lin({gamma, FieldElement(Rational(-s))}); // gamma - s*x
        FPoly composed; // f~(gamma - s*x, x) as polynomial in x over provisional
        for (int j = e; j >= 0; --j) {
            QPoly cj = coeff_as_qpoly(fm.c[static_cast<std::size_t>(j)]);
            FPoly cjx = FPoly::from_qpoly(cj);
            composed = composed * lin + cjx;
        }
        FPoly g = gcd(FPoly::from_qpoly(m), composed);
        if (g.degree() != 1)
            continue; // unlucky shift
        FieldElement a_gamma = -g.c[0];
        QPoly a_poly = coeff_as_qpoly(a_gamma);

        // Select the root disk of the norm polynomial: the one where a(gamma)
        // lands on the current generator, then the requested (or the
        // deterministic) root of fm.
        int work = std::max(digits, 16);
        std::vector<std::size_t> cand(norm_roots.size());
        for (std::size_t i = 0; i < cand.size(); ++i)
            cand[i] = i;
        while (true) {
            Disk alpha_box = current->root_box(work);
            std::vector<Disk> refined;
            refined.reserve(norm_roots.size());
            for (const auto& d : norm_roots)
                refined.push_back(refine_root(norm, d, work));
            std::vector<std::size_t> keep;
            for (std::size_t i : cand)
                if (!disks_disjoint(eval_disk(a_poly, refined[i]), alpha_box))
                    keep.push_back(i);
            cand = std::move(keep);
            if (static_cast<int>(cand.size()) == e) {
                norm_roots = std::move(refined);
                break;
            }
            if (cand.empty())
                throw ExtensionFailure("lost track of the tower embedding");
            if (work > kMaxDigits)
                throw BoxNotIsolating("tower embedding selection exceeded the precision cap");
            work *= 2;
        }

        // beta disks for the surviving candidates
        auto beta_disk = [&](std::size_t i) {
            return norm_roots[i] - Rational(s) * eval_disk(a_poly, norm_roots[i]);
        };
        std::size_t pick = cand.front();
        if (box) {
            while (true) {
                const Disk& target = *box;
                std::vector<std::size_t> inside, touching;
                for (std::size_t i : cand) {
                    Disk bd = beta_disk(i);
                    if (disk_inside(bd, target))
                        inside.push_back(i);
                    else if (!disks_disjoint(bd, target))
                        touching.push_back(i);
                }
                if (inside.size() == 1 && touching.empty()) {
                    pick = inside.front();
                    break;
                }
                if (inside.size() > 1)
                    throw BoxNotIsolating("box contains more than one root");
                if (inside.empty() && touching.empty())
                    throw BoxNotIsolating("box contains no root");
                if (work > kMaxDigits)
                    throw BoxNotIsolating("root selection exceeded the precision cap");
                work *= 2;
                for (std::size_t i : cand)
                    norm_roots[i] = refine_root(norm, norm_roots[i], work);
            }
        } else {
            pick = *std::min_element(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
                return DiskCmpImRe{}(beta_disk(a), beta_disk(b));
            });
        }

        AdjoinResult r;
        r.field = NumberField::create(norm, norm_roots[pick], digits);
        FieldElement a_final = FieldElement::from_coords(r.field, std::vector<Rational>(a_poly.coeffs()));
        r.embed.from = current;
        r.embed.to = r.field;
        FieldElement p(Rational(1));
        for (int i = 0; i < n; ++i) {
            r.embed.gen_powers.push_back(p);
            p = p * a_final;
        }
        r.root = FieldElement::generator(r.field) - FieldElement(Rational(s)) * a_final;

        // consistency: the embedded old generator satisfies its minpoly, and
        // the adjoined root satisfies the embedded input polynomial
        if (!eval(FPoly::from_qpoly(m), a_final).is_zero())
            throw ExtensionFailure("embedded generator fails its minimal polynomial");
        FPoly fm_embedded;
        {
            std::vector<FieldElement> cs;
            cs.reserve(fm.c.size());
            for (const auto& ce : fm.c)
                cs.push_back(r.embed(ce));
            fm_embedded = FPoly(std::move(cs));
        }
        if (!eval(fm_embedded, r.root).is_zero())
            throw ExtensionFailure("adjoined root fails the input polynomial");
        return r;
    }
    throw ExtensionFailure("no usable primitive-element shift found");
}

std::optional<Conjugation> conjugation_map(const FieldPtr& field, int digits) {
    if (!field) {
        Conjugation c;
        return c;
    }
    FPoly mp = FPoly::from_qpoly(field->minpoly());
    std::vector<FieldElement> roots;
    for (const auto& fac : factor_squarefree_over(field, mp, digits))
        if (fac.degree() == 1)
            roots.push_back(-fac.c[0]);

    int work = std::max(digits, 16);
    while (true) {
        Disk target = conj(field->root_box(work));
        std::vector<const FieldElement*> hits;
        for (const auto& r : roots)
            if (!disks_disjoint(complex_approx(r, work), target))
                hits.push_back(&r);
        if (hits.size() == 1) {
            Conjugation c;
            c.field = field;
            FieldElement p(Rational(1));
            for (int i = 0; i < field->degree(); ++i) {
                c.gen_powers.push_back(p);
                p = p * *hits.front();
            }
            // involution check
            FieldElement back = c(c(FieldElement::generator(field)));
            if (!(back == FieldElement::generator(field)))
                return std::nullopt;
            return c;
        }
        if (hits.empty())
            return std::nullopt; // conjugate of the generator lies outside the field
        if (work > kMaxDigits)
            return std::nullopt;
        work *= 2;
    }
}

} // namespace repsplit
