#include "repsplit/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace repsplit {

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point v : img_) {
        if (v >= img_.size() || seen[v])
            throw NotABijection("image list is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(Point n) {
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i)
        img[i] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (Point i = 0; i < degree(); ++i)
        if (img_[i] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Point> img(img_.size());
    for (Point i = 0; i < degree(); ++i)
        img[img_[i]] = i;
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("composing permutations of different degrees");
    std::vector<Point> img(a.degree());
    for (Point i = 0; i < a.degree(); ++i)
        img[i] = b(a(i));
    return Permutation(std::move(img));
}

PermutationAction PermutationAction::create(Point degree, std::vector<Permutation> gens) {
    if (gens.empty())
        throw MalformedInput("an action needs at least one generator");
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw DegreeMismatch("generators of different degrees");
    return PermutationAction{degree, std::move(gens)};
}

std::optional<GenFormat> format_from_name(const std::string& name) {
    if (name == "cycles")
        return GenFormat::cycles;
    if (name == "images" || name == "image_lists")
        return GenFormat::image_lists;
    if (name == "atlas" || name == "atlas_perm")
        return GenFormat::atlas_perm;
    return std::nullopt;
}

namespace {

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#')
            in_comment = true;
        if (ch == '\n')
            in_comment = false;
        if (!in_comment)
            out.push_back(ch);
    }
    return out;
}

long parse_point_token(const std::string& tok) {
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw MalformedInput("expected a point label, got '" + tok + "'");
    long v = std::strtol(tok.c_str(), nullptr, 10);
    if (v < 1)
        throw MalformedInput("point labels are 1-based, got '" + tok + "'");
    return v;
}

PermutationAction parse_cycles(const std::string& text) {
    std::istringstream lines(strip_comments(text));
    std::string line;
    std::vector<std::vector<std::vector<long>>> raw_gens; // gen -> cycles -> points
    long max_point = 0;
    while (std::getline(lines, line)) {
        std::vector<std::vector<long>> cycles;
        std::vector<long>* cur = nullptr;
        std::string tok;
        auto flush_tok = [&]() {
            if (tok.empty())
                return;
            if (!cur)
                throw MalformedInput("point outside of a cycle: '" + tok + "'");
            long v = parse_point_token(tok);
            max_point = std::max(max_point, v);
            cur->push_back(v);
            tok.clear();
        };
        for (char ch : line) {
            if (ch == '(') {
                if (cur)
                    throw MalformedInput("nested '(' in cycle input");
                cycles.emplace_back();
                cur = &cycles.back();
            } else if (ch == ')') {
                flush_tok();
                if (!cur)
                    throw MalformedInput("unmatched ')' in cycle input");
                cur = nullptr;
            } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                flush_tok();
            } else {
                tok.push_back(ch);
            }
        }
        flush_tok();
        if (cur)
            throw MalformedInput("unterminated cycle");
        if (!cycles.empty())
            raw_gens.push_back(std::move(cycles));
    }
    if (raw_gens.empty())
        throw MalformedInput("no generators found");
    if (max_point == 0)
        throw MalformedInput("no moved points; cycle input cannot declare a degree");
    Point n = static_cast<Point>(max_point);
    std::vector<Permutation> gens;
    for (const auto& cycles : raw_gens) {
        std::vector<Point> img(n);
        for (Point i = 0; i < n; ++i)
            img[i] = i;
        std::vector<bool> moved(n, false);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                Point from = static_cast<Point>(cyc[i] - 1);
                Point to = static_cast<Point>(cyc[(i + 1) % cyc.size()] - 1);
                if (moved[from])
                    throw NotABijection("point repeated across cycles");
                moved[from] = true;
                img[from] = to;
            }
        }
        gens.emplace_back(std::move(img));
    }
    return PermutationAction::create(n, std::move(gens));
}

std::vector<long> all_integer_tokens(std::istream& in) {
    std::vector<long> out;
    std::string tok;
    while (in >> tok)
        out.push_back(parse_point_token(tok));
    return out;
}

PermutationAction parse_image_lists(const std::string& text) {
    std::istringstream in(strip_comments(text));
    long n = 0, k = 0;
    if (!(in >> n >> k) || n < 1 || k < 1)
        throw MalformedInput("image_lists input needs a header line 'N k'");
    std::vector<long> vals = all_integer_tokens(in);
    if (static_cast<long>(vals.size()) != n * k)
        throw DegreeMismatch("image_lists input has the wrong number of entries");
    std::vector<Permutation> gens;
    for (long g = 0; g < k; ++g) {
        std::vector<Point> img(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            long v = vals[static_cast<std::size_t>(g * n + i)];
            if (v > n)
                throw MalformedInput("image exceeds declared degree");
            img[static_cast<std::size_t>(i)] = static_cast<Point>(v - 1);
        }
        gens.emplace_back(std::move(img));
    }
    return PermutationAction::create(static_cast<Point>(n), std::move(gens));
}

PermutationAction parse_atlas(const std::string& text) {
    std::istringstream in(strip_comments(text));
    std::string kw;
    long n = 0;
    if (!(in >> kw >> n) || kw != "perm" || n < 1)
        throw MalformedInput("atlas_perm input needs a header line 'perm N'");
    std::vector<long> vals = all_integer_tokens(in);
    if (vals.empty() || vals.size() % static_cast<std::size_t>(n) != 0)
        throw DegreeMismatch("atlas_perm image count is not a multiple of the degree");
    std::vector<Permutation> gens;
    for (std::size_t g = 0; g < vals.size() / static_cast<std::size_t>(n); ++g) {
        std::vector<Point> img(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            long v = vals[g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
            if (v > n)
                throw MalformedInput("image exceeds declared degree");
            img[static_cast<std::size_t>(i)] = static_cast<Point>(v - 1);
        }
        gens.emplace_back(std::move(img));
    }
    return PermutationAction::create(static_cast<Point>(n), std::move(gens));
}

} // namespace

PermutationAction parse_generators(const std::string& text, GenFormat format) {
    switch (format) {
    case GenFormat::cycles:
        return parse_cycles(text);
    case GenFormat::image_lists:
        return parse_image_lists(text);
    case GenFormat::atlas_perm:
        return parse_atlas(text);
    }
    throw MalformedInput("unknown generator format");
}

Point OrbitTransversal::apply_transversal(Point i, Point x) const {
    // u_i is the product of the tree-edge generators from base to i
    thread_local std::vector<int> path;
    path.clear();
    for (Point p = i; p != base; p = parent[p])
        path.push_back(via[p]);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        x = gens[static_cast<std::size_t>(*it)](x);
    return x;
}

Point OrbitTransversal::apply_inverse_transversal(Point i, Point x) const {
    for (Point p = i; p != base; p = parent[p])
        x = inv_gens[static_cast<std::size_t>(via[p])](x);
    return x;
}

Permutation OrbitTransversal::transversal_element(Point i) const {
    const Point n = static_cast<Point>(parent.size());
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x)
        img[x] = x;
    thread_local std::vector<int> path;
    path.clear();
    for (Point p = i; p != base; p = parent[p])
        path.push_back(via[p]);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const Permutation& g = gens[static_cast<std::size_t>(*it)];
        for (Point x = 0; x < n; ++x)
            img[x] = g(img[x]);
    }
    return Permutation(std::move(img));
}

namespace {

struct PermHash {
    std::size_t operator()(const std::vector<Point>* v) const {
        std::size_t h = 1469598103934665603ull;
        for (Point p : *v) {
            h ^= p;
            h *= 1099511628211ull;
        }
        return h;
    }
};
struct PermEq {
    bool operator()(const std::vector<Point>* a, const std::vector<Point>* b) const {
        return *a == *b;
    }
};

} // namespace

OrbitTransversal orbit_with_transversal(const PermutationAction& act, Point base,
                                        const OrbitOptions& opts) {
    const Point n = act.degree;
    OrbitTransversal t;
    t.base = base;
    t.parent.assign(n, kNoPoint);
    t.via.assign(n, -1);
    t.depth.assign(n, 0);
    t.gens = act.generators;
    for (const auto& g : act.generators)
        t.inv_gens.push_back(g.inverse());

    t.orbit.push_back(base);
    std::deque<Point> queue{base};
    std::vector<bool> seen(n, false);
    seen[base] = true;
    while (!queue.empty()) {
        Point k = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < t.gens.size(); ++gi) {
            Point j = t.gens[gi](k);
            if (!seen[j]) {
                seen[j] = true;
                t.parent[j] = k;
                t.via[j] = static_cast<int>(gi);
                t.depth[j] = t.depth[k] + 1;
                t.orbit.push_back(j);
                queue.push_back(j);
            }
        }
    }

    if (!opts.collect_schreier)
        return t;

    // Schreier generators u_k g u_{k^g}^{-1}, deduplicated, identity dropped.
    // Tree edges give the identity and are skipped. The current transversal
    // element is materialized incrementally along a DFS of the tree.
    std::vector<std::vector<Point>> children(n);
    for (Point p : t.orbit)
        if (p != base)
            children[t.parent[p]].push_back(p);

    std::unordered_set<const std::vector<Point>*, PermHash, PermEq> dedup;
    std::size_t bytes = 0;
    std::vector<Point> u_cur(n); // u_k images, maintained along the DFS path
    for (Point x = 0; x < n; ++x)
        u_cur[x] = x;
    std::vector<std::pair<Point, std::size_t>> stack; // (point, next child index)
    std::vector<std::vector<Point>> saved;            // u on the path, for backtracking
    stack.emplace_back(base, 0);

    auto emit_schreier = [&](Point k, std::size_t gi) {
        const Permutation& g = t.gens[gi];
        Point kg = g(k);
        if (t.parent[kg] == k && static_cast<std::size_t>(t.via[kg]) == gi)
            return; // tree edge
        std::vector<Point> img(n);
        for (Point x = 0; x < n; ++x)
            img[x] = t.apply_inverse_transversal(kg, g(u_cur[x]));
        // dropped when it acts trivially on the orbit (for a transitive
        // action this is exactly the identity test)
        bool ident = true;
        for (Point x : t.orbit)
            if (img[x] != x) {
                ident = false;
                break;
            }
        if (ident)
            return;
        // dedup needs stable addresses; check against stored generators
        auto probe = dedup.find(&img);
        if (probe != dedup.end())
            return;
        bytes += n * sizeof(Point);
        if (bytes > opts.schreier_byte_cap)
            throw ResourceLimit("schreier generator storage exceeds the configured cap");
        t.schreier.emplace_back(std::move(img));
        dedup.insert(&t.schreier.back().images());
    };

    // t.schreier reallocation would invalidate dedup pointers; reserve a
    // stable upper bound up front (orbit size * generators).
    t.schreier.reserve(t.orbit.size() * t.gens.size());

    while (!stack.empty()) {
        auto& [k, next] = stack.back();
        if (next == 0)
            for (std::size_t gi = 0; gi < t.gens.size(); ++gi)
                emit_schreier(k, gi);
        if (next < children[k].size()) {
            Point child = children[k][next];
            ++next;
            saved.push_back(u_cur);
            const Permutation& g = t.gens[static_cast<std::size_t>(t.via[child])];
            for (Point x = 0; x < n; ++x)
                u_cur[x] = g(u_cur[x]);
            stack.emplace_back(child, 0);
        } else {
            stack.pop_back();
            if (!saved.empty()) {
                u_cur = std::move(saved.back());
                saved.pop_back();
            }
        }
    }
    return t;
}

bool check_transitive(const PermutationAction& act) {
    OrbitOptions opts;
    opts.collect_schreier = false;
    return orbit_with_transversal(act, 0, opts).orbit.size() == act.degree;
}

} // namespace repsplit
