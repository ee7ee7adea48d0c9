#include "repsplit/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "repsplit/errors.hpp"
#include "repsplit/factor.hpp"

namespace repsplit {

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::create(QPoly minpoly, const Disk& box, int digits) {
    if (minpoly.degree() < 1)
        throw NotIrreducible("minimal polynomial must have positive degree");
    minpoly = monic(minpoly);
    if (!is_irreducible_over_Q(minpoly))
        throw NotIrreducible("minimal polynomial is reducible over Q");

    for (int d = std::max(digits, 16); d <= kMaxDigits; d *= 2) {
        std::vector<Disk> roots = isolate_roots(minpoly, d);
        const Disk* inside = nullptr;
        int undecided = 0;
        for (const auto& r : roots) {
            if (disk_inside(r, box)) {
                if (inside)
                    throw BoxNotIsolating("box contains more than one root");
                inside = &r;
            } else if (!disks_disjoint(r, box)) {
                ++undecided;
            }
        }
        if (inside && undecided == 0)
            return FieldPtr(new NumberField(std::move(minpoly), *inside));
        if (!inside && undecided == 0)
            throw BoxNotIsolating("box contains no root of the minimal polynomial");
    }
    throw BoxNotIsolating("could not certify the isolating box below the precision cap");
}

Disk NumberField::root_box(int digits) const {
    Rational target = pow10_inv(digits);
    std::lock_guard<std::mutex> lock(mu_);
    if (box_.rad <= target)
        return box_;
    box_ = refine_root(minpoly_, box_, digits);
    return box_;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement FieldElement::generator(const FieldPtr& f) {
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
    if (f->degree() == 1) {
        // Q(alpha) with alpha rational: demote
        return FieldElement(-f->minpoly()[0]);
    }
    c[1] = Rational(1);
    FieldElement e;
    e.field_ = f;
    e.coords_ = std::move(c);
    return e;
}

FieldElement FieldElement::from_coords(const FieldPtr& f, std::vector<Rational> coords) {
    if (!f) {
        if (coords.size() != 1)
            throw MalformedInput("rational element needs exactly one coordinate");
        return FieldElement(coords[0]);
    }
    FieldElement e;
    e.field_ = f;
    coords.resize(static_cast<std::size_t>(f->degree()), Rational(0));
    e.coords_ = std::move(coords);
    e.normalize();
    return e;
}

void FieldElement::normalize() {
    if (!field_)
        return;
    bool rational = true;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) {
            rational = false;
            break;
        }
    if (rational) {
        Rational v = coords_.empty() ? Rational(0) : coords_[0];
        field_.reset();
        coords_.assign(1, std::move(v));
    }
}

const Rational& FieldElement::as_rational() const {
    if (field_)
        throw MalformedInput("element is not rational");
    return coords_[0];
}

bool FieldElement::is_zero() const { return !field_ && coords_[0] == 0; }

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_)
        return false;
    return coords_ == o.coords_;
}

namespace {

// reduce a coordinate vector (length may exceed degree) modulo the minpoly
std::vector<Rational> reduce_mod_minpoly(std::vector<Rational> v, const QPoly& m) {
    const int deg = m.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
        Rational lead = v[static_cast<std::size_t>(i)];
        if (lead == 0)
            continue;
        v[static_cast<std::size_t>(i)] = 0;
        // x^i = x^(i-deg) * (x^deg) = x^(i-deg) * (x^deg - m) since m monic
        for (int j = 0; j < deg; ++j)
            v[static_cast<std::size_t>(i - deg + j)] -= lead * m[j];
    }
    v.resize(static_cast<std::size_t>(deg), Rational(0));
    return v;
}

const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() && b.field() && a.field() != b.field())
        throw MalformedInput("field elements from different number fields");
    return a.field() ? a.field() : b.field();
}

std::vector<Rational> promoted_coords(const FieldElement& e, const FieldPtr& f) {
    if (!f)
        return e.coords();
    std::vector<Rational> v = e.coords();
    v.resize(static_cast<std::size_t>(f->degree()), Rational(0));
    return v;
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f)
        return FieldElement(a.as_rational() + b.as_rational());
    std::vector<Rational> va = promoted_coords(a, f), vb = promoted_coords(b, f);
    for (std::size_t i = 0; i < va.size(); ++i)
        va[i] += vb[i];
    return FieldElement::from_coords(f, std::move(va));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f)
        return FieldElement(a.as_rational() - b.as_rational());
    std::vector<Rational> va = promoted_coords(a, f), vb = promoted_coords(b, f);
    for (std::size_t i = 0; i < va.size(); ++i)
        va[i] -= vb[i];
    return FieldElement::from_coords(f, std::move(va));
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    for (auto& q : e.coords_)
        q = -q;
    return e;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f)
        return FieldElement(a.as_rational() * b.as_rational());
    if (a.is_rational()) {
        std::vector<Rational> v = b.coords();
        for (auto& q : v)
            q *= a.as_rational();
        return FieldElement::from_coords(f, std::move(v));
    }
    if (b.is_rational()) {
        std::vector<Rational> v = a.coords();
        for (auto& q : v)
            q *= b.as_rational();
        return FieldElement::from_coords(f, std::move(v));
    }
    const auto& va = a.coords();
    const auto& vb = b.coords();
    std::vector<Rational> prod(va.size() + vb.size() - 1, Rational(0));
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] == 0)
            continue;
        for (std::size_t j = 0; j < vb.size(); ++j)
            prod[i + j] += va[i] * vb[j];
    }
    return FieldElement::from_coords(f, reduce_mod_minpoly(std::move(prod), f->minpoly()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    if (!field_)
        return FieldElement(Rational(1) / coords_[0]);
    // extended euclid: s * a + t * m = 1 in Q[x]
    QPoly a{std::vector<Rational>(coords_)};
    QPoly m = field_->minpoly();
    QPoly r0 = m, r1 = a;
    QPoly s0, s1 = QPoly::constant(Rational(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = divrem(r0, r1);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r1.is_zero())
        throw DivisionByZero("element is not invertible (minpoly not irreducible?)");
    Rational inv_c = 1 / r1.lc();
    QPoly s = inv_c * s1;
    std::vector<Rational> v = s.coeffs();
    return FieldElement::from_coords(field_, std::move(v));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

std::string field_element_str(const FieldElement& e, const std::string& gen) {
    if (e.is_rational())
        return rational_str(e.as_rational());
    std::ostringstream os;
    bool first = true;
    const auto& v = e.coords();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (!first)
            os << (sgn(v[i]) >= 0 ? " + " : " - ");
        else if (sgn(v[i]) < 0)
            os << "-";
        first = false;
        Rational aq = abs(v[i]);
        if (i == 0 || aq != 1)
            os << rational_str(aq);
        if (i > 0) {
            if (aq != 1)
                os << "*";
            os << gen;
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

Disk complex_approx(const FieldElement& e, int digits) {
    if (e.is_rational())
        return Disk::point(e.as_rational());
    int work = std::max(digits, 16);
    Rational target = pow10_inv(digits);
    while (true) {
        Disk alpha = e.field()->root_box(work);
        Disk acc = Disk::point(Rational(0));
        for (std::size_t i = e.coords().size(); i-- > 0;) {
            acc = acc * alpha;
            acc = acc + Disk::point(e.coords()[i]);
        }
        if (acc.rad <= target)
            return acc;
        if (work > kMaxDigits)
            throw BoxNotIsolating("complex approximation failed below the precision cap");
        work *= 2;
    }
}

// ---------------------------------------------------------------------------
// FPoly
// ---------------------------------------------------------------------------

FPoly FPoly::from_qpoly(const QPoly& q) {
    std::vector<FieldElement> c;
    c.reserve(q.coeffs().size());
    for (const auto& v : q.coeffs())
        c.emplace_back(v);
    return FPoly(std::move(c));
}

QPoly to_qpoly(const FPoly& a) {
    std::vector<Rational> c;
    c.reserve(a.c.size());
    for (const auto& e : a.c)
        c.push_back(e.as_rational());
    return QPoly(std::move(c));
}

FPoly operator+(const FPoly& a, const FPoly& b) {
    std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        c[i] = c[i] + b.c[i];
    return FPoly(std::move(c));
}

FPoly operator-(const FPoly& a, const FPoly& b) {
    std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        c[i] = c[i] - b.c[i];
    return FPoly(std::move(c));
}

FPoly operator*(const FPoly& a, const FPoly& b) {
    if (a.is_zero() || b.is_zero())
        return FPoly();
    std::vector<FieldElement> c(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = c[i + j] + a.c[i] * b.c[j];
    }
    return FPoly(std::move(c));
}

FPoly operator*(const FieldElement& s, const FPoly& a) {
    std::vector<FieldElement> c(a.c);
    for (auto& e : c)
        e = s * e;
    return FPoly(std::move(c));
}

std::pair<FPoly, FPoly> divrem(const FPoly& a, const FPoly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {FPoly(), a};
    std::vector<FieldElement> rem(a.c);
    std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    FieldElement lead_inv = b.lc().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElement q = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (q.is_zero())
            continue;
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i - b.degree() + j)] =
                rem[static_cast<std::size_t>(i - b.degree() + j)] - q * b.c[static_cast<std::size_t>(j)];
    }
    return {FPoly(std::move(quo)), FPoly(std::move(rem))};
}

FPoly monic(const FPoly& a) {
    if (a.is_zero())
        return a;
    return a.lc().inverse() * a;
}

FPoly gcd(const FPoly& a, const FPoly& b) {
    FPoly f = a, g = b;
    while (!g.is_zero()) {
        FPoly r = divrem(f, g).second;
        f = g;
        g = r;
    }
    return monic(f);
}

FPoly derivative(const FPoly& a) {
    if (a.degree() <= 0)
        return FPoly();
    std::vector<FieldElement> c(static_cast<std::size_t>(a.degree()));
    for (int i = 1; i <= a.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] = FieldElement(Rational(i)) * a.c[static_cast<std::size_t>(i)];
    return FPoly(std::move(c));
}

FPoly squarefree_part(const FPoly& a) {
    if (a.degree() <= 0)
        return monic(a);
    FPoly g = gcd(a, derivative(a));
    if (g.degree() == 0)
        return monic(a);
    return monic(divrem(a, g).first);
}

FieldElement eval(const FPoly& a, const FieldElement& x) {
    FieldElement v;
    for (int i = a.degree(); i >= 0; --i)
        v = v * x + a.c[static_cast<std::size_t>(i)];
    return v;
}

FPoly taylor_shift(const FPoly& a, const FieldElement& shift) {
    FPoly result;
    FPoly lin({shift, FieldElement(Rational(1))});
    for (int i = a.degree(); i >= 0; --i)
        result = result * lin + FPoly::constant(a.c[static_cast<std::size_t>(i)]);
    return result;
}

std::string fpoly_str(const FPoly& a, const std::string& var) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const FieldElement& e = a.c[static_cast<std::size_t>(i)];
        if (e.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << field_element_str(e) << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

Embedding Embedding::identity(const FieldPtr& f) {
    Embedding e;
    e.from = f;
    e.to = f;
    if (f) {
        FieldElement alpha = FieldElement::generator(f);
        FieldElement p(Rational(1));
        for (int i = 0; i < f->degree(); ++i) {
            e.gen_powers.push_back(p);
            p = p * alpha;
        }
    }
    return e;
}

FieldElement Embedding::operator()(const FieldElement& e) const {
    if (e.is_rational())
        return e;
    if (e.field() != from)
        throw MalformedInput("embedding applied to element of the wrong field");
    if (from == to)
        return e;
    FieldElement acc;
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (e.coords()[i] == 0)
            continue;
        acc = acc + FieldElement(e.coords()[i]) * gen_powers[i];
    }
    return acc;
}

Embedding Embedding::then(const Embedding& next) const {
    if (to != next.from)
        throw MalformedInput("embedding composition mismatch");
    Embedding out;
    out.from = from;
    out.to = next.to;
    out.gen_powers.reserve(gen_powers.size());
    for (const auto& p : gen_powers)
        out.gen_powers.push_back(next(p));
    return out;
}

FieldElement Conjugation::operator()(const FieldElement& e) const {
    if (e.is_rational())
        return e;
    if (e.field() != field)
        throw MalformedInput("conjugation applied to element of the wrong field");
    FieldElement acc;
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (e.coords()[i] == 0)
            continue;
        acc = acc + FieldElement(e.coords()[i]) * gen_powers[i];
    }
    return acc;
}

} // namespace repsplit
