#ifndef REPSPLIT_QPOLY_HPP
#define REPSPLIT_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "repsplit/rational.hpp"

namespace repsplit {

// Dense univariate polynomial over Q, coefficients low-to-high with a
// nonzero leading coefficient (the zero polynomial has no coefficients).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rational& q) { return QPoly(std::vector<Rational>{q}); }
    static QPoly x() { return QPoly({Rational(0), Rational(1)}); }
    static QPoly monomial(int deg, const Rational& coef);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lc() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a);
QPoly operator*(const Rational& s, const QPoly& a);

// Euclidean division; throws DivisionByZero when b = 0.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b); // monic (or zero)
QPoly derivative(const QPoly& a);
QPoly squarefree_part(const QPoly& a); // monic
Rational eval(const QPoly& a, const Rational& x);
QPoly pow(const QPoly& a, unsigned e);

// Substitutes x -> x + shift.
QPoly taylor_shift(const QPoly& a, const Rational& shift);

// Resultant of two polynomials over Q (0 when either is 0 unless both constant).
Rational resultant(const QPoly& a, const QPoly& b);

// Unique interpolating polynomial through (xs[i], ys[i]); xs must be distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Scales the variable and clears denominators: returns primitive integer
// polynomial `prim` and rational `scale` with a = scale * prim.
std::pair<std::vector<Integer>, Rational> integer_primitive(const QPoly& a);

std::string qpoly_str(const QPoly& a, const std::string& var = "x");

} // namespace repsplit

#endif
