#ifndef REPSPLIT_TESTS_HELPERS_HPP
#define REPSPLIT_TESTS_HELPERS_HPP

#include <array>
#include <vector>

#include "repsplit/permgroup.hpp"

namespace repsplit::testing {

// S_n acting on unordered pairs {a,b} listed in lexicographic order.
inline PermutationAction symmetric_on_pairs(int n) {
    std::vector<std::array<int, 2>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.push_back({a, b});
    auto induced = [&](const std::vector<int>& sn) {
        std::vector<Point> img(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int a = sn[static_cast<std::size_t>(pairs[i][0])];
            int b = sn[static_cast<std::size_t>(pairs[i][1])];
            if (a > b)
                std::swap(a, b);
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (pairs[j][0] == a && pairs[j][1] == b) {
                    img[i] = static_cast<Point>(j);
                    break;
                }
        }
        return Permutation(img);
    };
    std::vector<int> swap01(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        swap01[static_cast<std::size_t>(i)] = i;
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    swap01[0] = 1;
    swap01[1] = 0;
    return PermutationAction::create(static_cast<Point>(pairs.size()),
                                     {induced(swap01), induced(cycle)});
}

inline PermutationAction petersen_action() { return symmetric_on_pairs(5); }

// Elements of S3 in a fixed order, as image arrays on {0,1,2}.
inline const std::vector<std::array<int, 3>>& s3_elements() {
    static const std::vector<std::array<int, 3>> elems = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return elems;
}

inline std::array<int, 3> s3_mul(const std::array<int, 3>& p, const std::array<int, 3>& q) {
    return {q[static_cast<std::size_t>(p[0])], q[static_cast<std::size_t>(p[1])],
            q[static_cast<std::size_t>(p[2])]};
}

inline int s3_index(const std::array<int, 3>& e) {
    const auto& elems = s3_elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == e)
            return static_cast<int>(i);
    return -1;
}

// Right regular action of S3 generated by (01) and (012).
inline PermutationAction s3_regular_action() {
    std::vector<Permutation> gens;
    for (int g : {1, 4}) {
        std::vector<Point> img(6);
        for (int x = 0; x < 6; ++x)
            img[static_cast<std::size_t>(x)] = static_cast<Point>(
                s3_index(s3_mul(s3_elements()[static_cast<std::size_t>(x)],
                                s3_elements()[static_cast<std::size_t>(g)])));
        gens.emplace_back(img);
    }
    return PermutationAction::create(6, gens);
}

inline PermutationAction cyclic_action(int n) {
    std::vector<Point> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % n);
    return PermutationAction::create(static_cast<Point>(n), {Permutation(img)});
}

inline PermutationAction m11_action() {
    std::vector<Point> a(11), b(11);
    for (int i = 0; i < 11; ++i) {
        a[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % 11);
        b[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    }
    auto cyc = [](std::vector<Point>& v, std::initializer_list<int> c) {
        std::vector<int> pts(c);
        for (std::size_t i = 0; i < pts.size(); ++i)
            v[static_cast<std::size_t>(pts[i] - 1)] =
                static_cast<Point>(pts[(i + 1) % pts.size()] - 1);
    };
    cyc(b, {3, 7, 11, 8});
    cyc(b, {4, 10, 5, 6});
    return PermutationAction::create(11, {Permutation(a), Permutation(b)});
}

// Natural action of S3 on 3 points.
inline PermutationAction s3_natural_action() {
    return PermutationAction::create(
        3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
}

} // namespace repsplit::testing

#endif
