#ifndef REPSPLIT_NUMBERFIELD_HPP
#define REPSPLIT_NUMBERFIELD_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "repsplit/qpoly.hpp"
#include "repsplit/rootbox.hpp"

namespace repsplit {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Algebraic extension Q(alpha), alpha selected among the conjugate roots of
// the (monic, irreducible) minimal polynomial by a certified isolating disk.
class NumberField {
public:
    // Validates irreducibility via the factorizer and that `box` isolates
    // exactly one root; stores a refined certified disk inside `box`.
    static FieldPtr create(QPoly minpoly, const Disk& box, int digits = kDefaultDigits);

    const QPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }

    // Certified isolating disk of the generator with radius <= 10^-digits.
    Disk root_box(int digits) const;

private:
    NumberField(QPoly minpoly, Disk box) : minpoly_(std::move(minpoly)), box_(std::move(box)) {}
    QPoly minpoly_;
    mutable std::mutex mu_;
    mutable Disk box_;
};

// Exact scalar: a rational number (null field) or an element of a number
// field in the power basis of its generator. Field-valued elements whose
// higher coordinates vanish are demoted to plain rationals, so equality is
// plain coordinate comparison.
class FieldElement {
public:
    FieldElement() : coords_{Rational(0)} {}
    FieldElement(const Rational& q) : coords_{q} {}
    FieldElement(long n) : coords_{Rational(n)} {}
    static FieldElement generator(const FieldPtr& f);
    static FieldElement from_coords(const FieldPtr& f, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_rational() const { return field_ == nullptr; }
    const Rational& as_rational() const; // requires is_rational()
    bool is_zero() const;

    FieldElement operator-() const;
    FieldElement inverse() const; // throws DivisionByZero on 0

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldPtr field_;                // null => rational
    std::vector<Rational> coords_;  // size 1 (rational) or field degree
    void normalize();
    friend struct FieldOps;
};

std::string field_element_str(const FieldElement& e, const std::string& gen = "a");

// Complex interval guaranteed to contain the embedded value, radius <= 10^-digits.
Disk complex_approx(const FieldElement& e, int digits);

// Dense univariate polynomial with FieldElement coefficients, low-to-high.
// All coefficients must live in one field (or be rational).
struct FPoly {
    std::vector<FieldElement> c;

    FPoly() = default;
    explicit FPoly(std::vector<FieldElement> coeffs) : c(std::move(coeffs)) { trim(); }
    static FPoly from_qpoly(const QPoly& q);
    static FPoly constant(const FieldElement& e) { return FPoly({e}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const FieldElement& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero())
            c.pop_back();
    }
    bool operator==(const FPoly& o) const { return c == o.c; }
};

FPoly operator+(const FPoly& a, const FPoly& b);
FPoly operator-(const FPoly& a, const FPoly& b);
FPoly operator*(const FPoly& a, const FPoly& b);
FPoly operator*(const FieldElement& s, const FPoly& a);
std::pair<FPoly, FPoly> divrem(const FPoly& a, const FPoly& b);
FPoly monic(const FPoly& a);
FPoly gcd(const FPoly& a, const FPoly& b);
FPoly derivative(const FPoly& a);
FPoly squarefree_part(const FPoly& a);
FieldElement eval(const FPoly& a, const FieldElement& x);
FPoly taylor_shift(const FPoly& a, const FieldElement& shift); // x -> x + shift
QPoly to_qpoly(const FPoly& a);                                // requires rational coefficients
std::string fpoly_str(const FPoly& a, const std::string& var = "x");

// Embedding of one field (or Q) into another, as images of generator powers.
struct Embedding {
    FieldPtr from, to;
    std::vector<FieldElement> gen_powers; // images of alpha^i in `to`, i < deg(from)

    static Embedding identity(const FieldPtr& f);
    bool is_identity() const { return from == to; }
    FieldElement operator()(const FieldElement& e) const;
    Embedding then(const Embedding& next) const; // this: A->B, next: B->C
};

struct AdjoinResult {
    FieldPtr field;   // extension containing the old field and the new root
    Embedding embed;  // old field (or Q) -> new field
    FieldElement root; // the adjoined root inside the new field
};

// Adjoins a root of `minpoly_over` (monic irreducible over `current`; current
// may be null for Q). When `box` is given it selects the root (and must
// isolate exactly one); otherwise the root with lexicographically largest
// (Im, Re) embedding is chosen. For a proper tower a primitive element for
// the compositum is computed, so the result is always Q(gamma).
AdjoinResult adjoin_root(const FieldPtr& current, const FPoly& minpoly_over,
                         const std::optional<Disk>& box = std::nullopt,
                         int digits = kDefaultDigits);

// Irreducible factors over the field (Trager's norm method; plain Zassenhaus
// when the field is Q). Input must be squarefree; factors come back monic.
std::vector<FPoly> factor_squarefree_over(const FieldPtr& field, const FPoly& f,
                                          int digits = kDefaultDigits);

// Complex conjugation as a field automorphism, available when the conjugate
// of the generator lies in the field (always, for abelian extensions).
struct Conjugation {
    FieldPtr field;                  // null => identity on Q
    std::vector<FieldElement> gen_powers;
    FieldElement operator()(const FieldElement& e) const;
};
std::optional<Conjugation> conjugation_map(const FieldPtr& field, int digits = kDefaultDigits);

} // namespace repsplit

#endif
