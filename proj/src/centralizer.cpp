#include "repsplit/centralizer.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace repsplit {

int worker_thread_count(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("REPSPLIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

StructureConstants structure_constants(const OrbitalBasis& b, int threads) {
    StructureConstants sc;
    sc.rank = b.rank;
    sc.degree = b.degree;
    sc.c.assign(static_cast<std::size_t>(b.rank),
                std::vector<std::uint32_t>(static_cast<std::size_t>(b.rank) * static_cast<std::size_t>(b.rank), 0));

    const std::size_t rank = static_cast<std::size_t>(b.rank);
    auto sweep = [&](int r) {
        // count over k of (base,k) in orbital p, (k, rep_r) in orbital q;
        // the pair (k, j) is resolved by translating j back to the base.
        Point j = b.suborbit_reps[static_cast<std::size_t>(r)];
        Permutation w = b.transversal.transversal_element(j).inverse();
        auto& table = sc.c[static_cast<std::size_t>(r)];
        for (Point k = 0; k < b.degree; ++k) {
            int p = b.row1[k];
            int q = b.transpose_of[static_cast<std::size_t>(b.row1[w(k)])];
            ++table[static_cast<std::size_t>(p) * rank + static_cast<std::size_t>(q)];
        }
    };

    int workers = std::min(worker_thread_count(threads), b.rank);
    if (workers <= 1) {
        for (int r = 0; r < b.rank; ++r)
            sweep(r);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (int r = w; r < b.rank; r += workers)
                    sweep(r);
            });
        for (auto& th : pool)
            th.join();
    }

    sc.commutative = true;
    for (int r = 0; r < b.rank && sc.commutative; ++r)
        for (int p = 0; p < b.rank && sc.commutative; ++p)
            for (int q = p + 1; q < b.rank; ++q)
                if (sc.get(p, q, r) != sc.get(q, p, r)) {
                    sc.commutative = false;
                    break;
                }
    return sc;
}

bool is_multiplicity_free(const StructureConstants& sc) { return sc.commutative; }

std::vector<std::string> check_structure_constants(const StructureConstants& sc,
                                                   const OrbitalBasis& b) {
    std::vector<std::string> bad;
    auto complain = [&bad](const std::string& s) {
        if (bad.size() < 20)
            bad.push_back(s);
    };
    const int R = sc.rank;
    for (int r = 0; r < R; ++r)
        for (int p = 0; p < R; ++p)
            for (int q = 0; q < R; ++q) {
                std::uint32_t v = sc.get(p, q, r);
                if (v >= sc.degree)
                    complain("C out of bounds at (" + std::to_string(p) + "," + std::to_string(q) +
                             "," + std::to_string(r) + ")");
                if (p == 0 && v != (q == r ? 1u : 0u))
                    complain("identity row violated");
                if (q == 0 && v != (p == r ? 1u : 0u))
                    complain("identity column violated");
            }
    for (int p = 0; p < R; ++p)
        for (int q = 0; q < R; ++q) {
            unsigned long long total = 0;
            for (int r = 0; r < R; ++r)
                total += static_cast<unsigned long long>(sc.get(p, q, r)) *
                         b.suborbit_lengths[static_cast<std::size_t>(r)];
            unsigned long long expect =
                static_cast<unsigned long long>(b.suborbit_lengths[static_cast<std::size_t>(p)]) *
                b.suborbit_lengths[static_cast<std::size_t>(q)];
            if (total != expect)
                complain("row-sum identity violated at (" + std::to_string(p) + "," +
                         std::to_string(q) + ")");
            std::uint32_t tr = sc.get(p, q, 0);
            std::uint32_t want =
                (q == b.transpose_of[static_cast<std::size_t>(p)])
                    ? b.suborbit_lengths[static_cast<std::size_t>(p)]
                    : 0u;
            if (tr != want)
                complain("trace identity violated at (" + std::to_string(p) + "," +
                         std::to_string(q) + ")");
            for (int r = 0; r < R; ++r) {
                int pt = b.transpose_of[static_cast<std::size_t>(p)];
                int qt = b.transpose_of[static_cast<std::size_t>(q)];
                int rt = b.transpose_of[static_cast<std::size_t>(r)];
                if (sc.get(p, q, r) != sc.get(qt, pt, rt))
                    complain("transpose anti-automorphism violated");
            }
        }
    return bad;
}

bool associativity_spot_check(const StructureConstants& sc, std::uint64_t seed, int draws) {
    std::mt19937_64 rng(seed);
    const int R = sc.rank;
    std::uniform_int_distribution<int> pick(0, R - 1);
    for (int i = 0; i < draws; ++i) {
        int p = pick(rng), q = pick(rng), r = pick(rng), t = pick(rng);
        unsigned long long lhs = 0, rhs = 0;
        for (int s = 0; s < R; ++s) {
            lhs += static_cast<unsigned long long>(sc.get(p, q, s)) * sc.get(s, r, t);
            rhs += static_cast<unsigned long long>(sc.get(q, r, s)) * sc.get(p, s, t);
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace repsplit
