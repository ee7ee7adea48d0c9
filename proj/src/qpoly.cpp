#include "repsplit/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace repsplit {

QPoly QPoly::monomial(int deg, const Rational& coef) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
    c.back() = coef;
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        c[i] = a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i)
        c[i] += b.coeffs()[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        c[i] = a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i)
        c[i] -= b.coeffs()[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& q : c)
        q = -q;
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        return QPoly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return QPoly(std::move(c));
}

QPoly operator*(const Rational& s, const QPoly& a) {
    if (s == 0)
        return QPoly();
    std::vector<Rational> c(a.coeffs());
    for (auto& q : c)
        q *= s;
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {QPoly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.lc();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lead;
        if (q == 0)
            continue;
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& a) {
    if (a.is_zero() || a.is_monic())
        return a;
    Rational inv = 1 / a.lc();
    return inv * a;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly r = divrem(f, g).second;
        f = g;
        g = r;
    }
    return monic(f);
}

QPoly derivative(const QPoly& a) {
    if (a.degree() <= 0)
        return QPoly();
    std::vector<Rational> c(static_cast<std::size_t>(a.degree()), Rational(0));
    for (int i = 1; i <= a.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] = Rational(i) * a[i];
    return QPoly(std::move(c));
}

QPoly squarefree_part(const QPoly& a) {
    if (a.degree() <= 0)
        return monic(a);
    QPoly g = gcd(a, derivative(a));
    if (g.degree() == 0)
        return monic(a);
    return monic(divrem(a, g).first);
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational v(0);
    for (int i = a.degree(); i >= 0; --i)
        v = v * x + a[i];
    return v;
}

QPoly pow(const QPoly& a, unsigned e) {
    QPoly result = QPoly::constant(Rational(1));
    QPoly base = a;
    while (e) {
        if (e & 1u)
            result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

QPoly taylor_shift(const QPoly& a, const Rational& shift) {
    // Horner with respect to (x + shift).
    QPoly result;
    QPoly lin({shift, Rational(1)});
    for (int i = a.degree(); i >= 0; --i)
        result = result * lin + QPoly::constant(a[i]);
    return result;
}

Rational resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        return Rational(0);
    QPoly f = a, g = b;
    Rational res(1);
    bool negate = false;
    while (g.degree() > 0) {
        QPoly r = divrem(f, g).second;
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        if ((df & 1) && (dg & 1))
            negate = !negate;
        // res(f, g) = lc(g)^(df - dr) * res(g, r) * (-1)^(df*dg)
        Rational lg = g.lc();
        Rational factor(1);
        int e = df - (r.is_zero() ? 0 : dr);
        if (r.is_zero()) {
            // res(g, 0) handled below; res contributes lc(g)^df only if dg==0
            res = Rational(0);
            return res;
        }
        for (int i = 0; i < e; ++i)
            factor *= lg;
        res *= factor;
        f = g;
        g = r;
    }
    // g is a nonzero constant: res(f, c) = c^deg(f)
    Rational c = g.is_zero() ? Rational(0) : g.lc();
    if (c == 0)
        return Rational(0);
    Rational tail(1);
    for (int i = 0; i < f.degree(); ++i)
        tail *= c;
    res *= tail;
    return negate ? Rational(-res) : res;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton form.
    std::size_t n = xs.size();
    std::vector<Rational> coef(ys);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level)
                break;
        }
    QPoly result;
    for (std::size_t i = n; i-- > 0;) {
        QPoly lin({-xs[i], Rational(1)});
        result = result * lin + QPoly::constant(coef[i]);
    }
    return result;
}

std::pair<std::vector<Integer>, Rational> integer_primitive(const QPoly& a) {
    if (a.is_zero())
        return {{}, Rational(0)};
    Integer den_lcm = 1;
    for (const auto& q : a.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> z;
    z.reserve(a.coeffs().size());
    Integer content = 0;
    for (const auto& q : a.coeffs()) {
        Integer v = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (content == 0)
        content = 1;
    for (auto& v : z)
        v /= content;
    if (z.back() < 0) {
        for (auto& v : z)
            v = -v;
        content = -content;
    }
    return {std::move(z), make_rational(content, den_lcm)};
}

std::string qpoly_str(const QPoly& a, const std::string& var) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const Rational& q = a[i];
        if (q == 0)
            continue;
        if (!first)
            os << (sgn(q) >= 0 ? " + " : " - ");
        else if (sgn(q) < 0)
            os << "-";
        first = false;
        Rational aq = abs(q);
        bool unit = (aq == 1);
        if (i == 0 || !unit)
            os << rational_str(aq);
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

} // namespace repsplit
