#ifndef REPSPLIT_PERMGROUP_HPP
#define REPSPLIT_PERMGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repsplit/errors.hpp"

namespace repsplit {

// Points are 0-based internally; all file formats and reports use 1-based
// labels. Composition is left-to-right throughout: i^(gh) = (i^g)^h.
using Point = std::uint32_t;
constexpr Point kNoPoint = static_cast<Point>(-1);

class Permutation {
public:
    explicit Permutation(std::vector<Point> images); // validates bijection
    static Permutation identity(Point n);

    Point degree() const { return static_cast<Point>(img_.size()); }
    Point operator()(Point p) const { return img_[p]; }
    const std::vector<Point>& images() const { return img_; }
    bool is_identity() const;
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<Point> img_;
};

// apply a then b
Permutation compose(const Permutation& a, const Permutation& b);

struct PermutationAction {
    Point degree = 0;
    std::vector<Permutation> generators;

    static PermutationAction create(Point degree, std::vector<Permutation> gens);
};

// result[i^p] = v[i]; round-tripping with the inverse restores v
template <typename T>
std::vector<T> act_on_vector(const Permutation& p, const std::vector<T>& v) {
    if (v.size() != p.degree())
        throw DegreeMismatch("vector length does not match permutation degree");
    std::vector<T> out(v.size());
    for (Point i = 0; i < p.degree(); ++i)
        out[p(i)] = v[i];
    return out;
}

enum class GenFormat { cycles, image_lists, atlas_perm };
std::optional<GenFormat> format_from_name(const std::string& name);

PermutationAction parse_generators(const std::string& text, GenFormat format);

// Orbit of `base` in BFS first-seen order with a Schreier tree, plus the
// deduplicated Schreier generators of the stabilizer (identity dropped).
struct OrbitTransversal {
    Point base = 0;
    std::vector<Point> orbit;            // BFS order, orbit[0] == base
    std::vector<Point> parent;           // size N; kNoPoint for base and off-orbit points
    std::vector<int> via;                // generator index on the tree edge into each point
    std::vector<Point> depth;            // tree depth, 0 at base
    std::vector<Permutation> schreier;   // stabilizer generators
    std::vector<Permutation> gens;       // copies of the action generators
    std::vector<Permutation> inv_gens;

    bool in_orbit(Point p) const { return p == base || parent[p] != kNoPoint; }
    Point apply_transversal(Point i, Point x) const;         // x^(u_i), base^(u_i) = i
    Point apply_inverse_transversal(Point i, Point x) const; // x^(u_i^-1)
    Permutation transversal_element(Point i) const;
};

struct OrbitOptions {
    bool collect_schreier = true;
    std::size_t schreier_byte_cap = 6ull << 30; // guard against runaway degree
};

OrbitTransversal orbit_with_transversal(const PermutationAction& act, Point base,
                                        const OrbitOptions& opts = {});

bool check_transitive(const PermutationAction& act);

} // namespace repsplit

#endif
