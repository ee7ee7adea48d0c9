#include "repsplit/orbitals.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace repsplit {

OrbitalBasis compute_suborbits(const PermutationAction& act) {
    OrbitalBasis b;
    b.degree = act.degree;
    b.transversal = orbit_with_transversal(act, 0);
    if (b.transversal.orbit.size() != act.degree)
        throw NotTransitive("action is not transitive");

    const Point n = act.degree;
    b.row1.assign(n, -1);
    std::deque<Point> queue;
    for (Point j = 0; j < n; ++j) {
        if (b.row1[j] != -1)
            continue;
        int r = b.rank++;
        b.suborbit_reps.push_back(j);
        Point count = 0;
        b.row1[j] = r;
        queue.push_back(j);
        while (!queue.empty()) {
            Point x = queue.front();
            queue.pop_front();
            ++count;
            for (const auto& s : b.transversal.schreier) {
                Point y = s(x);
                if (b.row1[y] == -1) {
                    b.row1[y] = r;
                    queue.push_back(y);
                }
            }
        }
        b.suborbit_lengths.push_back(count);
    }
    return b;
}

void transpose_pairing(OrbitalBasis& b) {
    b.transpose_of.assign(static_cast<std::size_t>(b.rank), -1);
    for (int r = 0; r < b.rank; ++r) {
        Point rep = b.suborbit_reps[static_cast<std::size_t>(r)];
        b.transpose_of[static_cast<std::size_t>(r)] = b.orbital_index(rep, b.transversal.base);
    }
    for (int r = 0; r < b.rank; ++r) {
        int rt = b.transpose_of[static_cast<std::size_t>(r)];
        if (b.transpose_of[static_cast<std::size_t>(rt)] != r ||
            b.suborbit_lengths[static_cast<std::size_t>(r)] !=
                b.suborbit_lengths[static_cast<std::size_t>(rt)])
            throw CheckFailure("transpose pairing is not an involution");
    }
    // first_col_index[r] = min{i : (i, base) in orbital r} = first point whose
    // row entry is the transposed orbital
    std::vector<Point> first_occurrence(static_cast<std::size_t>(b.rank), kNoPoint);
    for (Point i = 0; i < b.degree; ++i) {
        int c = b.row1[i];
        if (first_occurrence[static_cast<std::size_t>(c)] == kNoPoint)
            first_occurrence[static_cast<std::size_t>(c)] = i;
    }
    b.first_col_index.assign(static_cast<std::size_t>(b.rank), kNoPoint);
    for (int r = 0; r < b.rank; ++r)
        b.first_col_index[static_cast<std::size_t>(r)] =
            first_occurrence[static_cast<std::size_t>(b.transpose_of[static_cast<std::size_t>(r)])];
}

void order_orbitals(OrbitalBasis& b) {
    if (b.transpose_of.empty())
        transpose_pairing(b);

    struct Unit {
        int first, second; // second == -1 for self-paired orbitals
        Point length;
        bool asymmetric;
        Point col;
        Point rep;
    };
    std::vector<Unit> units;
    std::vector<bool> seen(static_cast<std::size_t>(b.rank), false);
    for (int r = 0; r < b.rank; ++r) {
        if (seen[static_cast<std::size_t>(r)])
            continue;
        int rt = b.transpose_of[static_cast<std::size_t>(r)];
        seen[static_cast<std::size_t>(r)] = true;
        Unit u;
        u.length = b.suborbit_lengths[static_cast<std::size_t>(r)];
        if (rt == r) {
            u.first = r;
            u.second = -1;
            u.asymmetric = false;
        } else {
            seen[static_cast<std::size_t>(rt)] = true;
            u.asymmetric = true;
            // within the pair, the member with the smaller first-column key leads
            if (b.first_col_index[static_cast<std::size_t>(r)] <
                b.first_col_index[static_cast<std::size_t>(rt)]) {
                u.first = r;
                u.second = rt;
            } else {
                u.first = rt;
                u.second = r;
            }
        }
        u.col = b.first_col_index[static_cast<std::size_t>(u.first)];
        u.rep = b.suborbit_reps[static_cast<std::size_t>(u.first)];
        units.push_back(u);
    }
    std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& c) {
        if (a.length != c.length)
            return a.length < c.length;
        if (a.asymmetric != c.asymmetric)
            return !a.asymmetric;
        if (a.col != c.col)
            return a.col < c.col;
        return a.rep < c.rep;
    });

    std::vector<int> old_order; // new index -> old index
    old_order.reserve(static_cast<std::size_t>(b.rank));
    for (const auto& u : units) {
        old_order.push_back(u.first);
        if (u.second >= 0)
            old_order.push_back(u.second);
    }
    std::vector<int> to_new(static_cast<std::size_t>(b.rank));
    for (int idx = 0; idx < b.rank; ++idx)
        to_new[static_cast<std::size_t>(old_order[static_cast<std::size_t>(idx)])] = idx;

    for (auto& v : b.row1)
        v = to_new[static_cast<std::size_t>(v)];
    auto permute = [&](auto& vec) {
        auto copy = vec;
        for (int idx = 0; idx < b.rank; ++idx)
            vec[static_cast<std::size_t>(idx)] = copy[static_cast<std::size_t>(old_order[static_cast<std::size_t>(idx)])];
    };
    permute(b.suborbit_lengths);
    permute(b.suborbit_reps);
    permute(b.first_col_index);
    std::vector<int> tr(static_cast<std::size_t>(b.rank));
    for (int idx = 0; idx < b.rank; ++idx)
        tr[static_cast<std::size_t>(idx)] =
            to_new[static_cast<std::size_t>(b.transpose_of[static_cast<std::size_t>(old_order[static_cast<std::size_t>(idx)])])];
    b.transpose_of = std::move(tr);
    b.ordered = true;

    if (b.diagonal() != 0 || b.suborbit_lengths[0] != 1)
        throw CheckFailure("diagonal orbital did not sort first");
}

OrbitalBasis orbital_basis(const PermutationAction& act) {
    OrbitalBasis b = compute_suborbits(act);
    transpose_pairing(b);
    order_orbitals(b);
    return b;
}

} // namespace repsplit
