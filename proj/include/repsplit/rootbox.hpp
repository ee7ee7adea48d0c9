#ifndef REPSPLIT_ROOTBOX_HPP
#define REPSPLIT_ROOTBOX_HPP

#include <vector>

#include "repsplit/qpoly.hpp"

namespace repsplit {

// Closed complex disk with exact rational center and radius. All operations
// return disks guaranteed to contain the image of any points of the inputs,
// so chains of operations stay rigorous without directed rounding.
struct Disk {
    Rational re, im, rad;

    Disk() : re(0), im(0), rad(0) {}
    Disk(Rational r, Rational i, Rational d) : re(std::move(r)), im(std::move(i)), rad(std::move(d)) {}
    static Disk point(const Rational& re, const Rational& im = Rational(0)) {
        return Disk(re, im, Rational(0));
    }

    bool contains_zero() const;
};

Disk operator+(const Disk& a, const Disk& b);
Disk operator-(const Disk& a, const Disk& b);
Disk operator*(const Disk& a, const Disk& b);
Disk operator*(const Rational& q, const Disk& a);
Disk conj(const Disk& a);

// |center| upper/lower bounds avoiding square roots.
Rational abs_upper(const Disk& a); // >= sup |z|, z in disk
Rational abs_lower(const Disk& a); // <= inf |z|, z in disk (0 if disk meets 0)

bool disks_disjoint(const Disk& a, const Disk& b); // certified
bool disk_inside(const Disk& inner, const Disk& outer); // certified containment
bool disks_intersect(const Disk& a, const Disk& b);

// Snaps the center to a 10^-digits grid and inflates the radius accordingly.
Disk round_disk(const Disk& a, int digits);

// Certified isolating disks for all complex roots of a squarefree polynomial
// over Q: pairwise disjoint, one simple root in each, deterministic order
// (sorted by exact center comparison (re, im)). `digits` controls the working
// precision of the underlying floating-point iteration; it is doubled
// internally on certification failure up to the hard cap.
std::vector<Disk> isolate_roots(const QPoly& f, int digits);

// Refines an isolating disk of f (squarefree) until its radius is at most
// 10^-digits; the result is certified to contain the same root.
Disk refine_root(const QPoly& f, const Disk& box, int digits);

constexpr int kDefaultDigits = 64;
constexpr int kMaxDigits = 4096;

} // namespace repsplit

#endif
