#include "repsplit/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace repsplit {

int total_degree(const Expo& e) {
    int d = 0;
    for (auto v : e)
        d += v;
    return d;
}

int mono_cmp(const Expo& a, const Expo& b, MonoOrder order) {
    if (order == MonoOrder::lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1; // smaller trailing exponent is bigger
    return 0;
}

bool mono_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

Expo mono_div(const Expo& a, const Expo& b) {
    Expo out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return out;
}

Expo mono_mul(const Expo& a, const Expo& b) {
    Expo out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return out;
}

int MultiPoly::total_deg() const {
    int d = 0;
    for (const auto& t : terms)
        d = std::max(d, total_degree(t.mono));
    return d;
}

MultiPoly MultiPoly::constant(int nvars, const FieldElement& c) {
    MultiPoly p;
    if (!c.is_zero())
        p.terms.push_back({Expo(static_cast<std::size_t>(nvars), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    Expo e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    MultiPoly p;
    p.terms.push_back({std::move(e), FieldElement(Rational(1))});
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Expo& e, const FieldElement& c) {
    MultiPoly p;
    if (!c.is_zero()) {
        Expo copy = e;
        copy.resize(static_cast<std::size_t>(nvars), 0);
        p.terms.push_back({std::move(copy), c});
    }
    return p;
}

MultiPoly mp_add(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mono_cmp(a.terms[i].mono, b.terms[j].mono, ctx.order);
        if (c > 0)
            out.terms.push_back(a.terms[i++]);
        else if (c < 0)
            out.terms.push_back(b.terms[j++]);
        else {
            FieldElement s = a.terms[i].coef + b.terms[j].coef;
            if (!s.is_zero())
                out.terms.push_back({a.terms[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.terms.size())
        out.terms.push_back(a.terms[i++]);
    while (j < b.terms.size())
        out.terms.push_back(b.terms[j++]);
    return out;
}

MultiPoly mp_neg(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& t : out.terms)
        t.coef = -t.coef;
    return out;
}

MultiPoly mp_sub(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
    return mp_add(ctx, a, mp_neg(b));
}

MultiPoly mp_mul_term(const PolyCtx& ctx, const MultiPoly& a, const Expo& mono,
                      const FieldElement& coef) {
    (void)ctx;
    MultiPoly out;
    if (coef.is_zero())
        return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        FieldElement c = t.coef * coef;
        if (!c.is_zero())
            out.terms.push_back({mono_mul(t.mono, mono), std::move(c)});
    }
    return out;
}

MultiPoly mp_mul(const PolyCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& t : a.terms)
        out = mp_add(ctx, out, mp_mul_term(ctx, b, t.mono, t.coef));
    return out;
}

MultiPoly mp_scale(const MultiPoly& a, const FieldElement& c) {
    MultiPoly out;
    if (c.is_zero())
        return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        out.terms.push_back({t.mono, t.coef * c});
    return out;
}

MultiPoly mp_monic(const MultiPoly& a) {
    if (a.is_zero())
        return a;
    return mp_scale(a, a.lt().coef.inverse());
}

MultiPoly mp_resort(const PolyCtx& ctx, MultiPoly a) {
    std::sort(a.terms.begin(), a.terms.end(), [&](const Term& x, const Term& y) {
        return mono_cmp(x.mono, y.mono, ctx.order) > 0;
    });
    return a;
}

bool mp_equal(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].mono != b.terms[i].mono || !(a.terms[i].coef == b.terms[i].coef))
            return false;
    return true;
}

FieldElement mp_eval(const MultiPoly& a, const std::vector<FieldElement>& point) {
    FieldElement acc;
    for (const auto& t : a.terms) {
        FieldElement v = t.coef;
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            for (int k = 0; k < t.mono[i]; ++k)
                v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

MultiPoly mp_substitute_drop(const PolyCtx& ctx, const MultiPoly& a, int var,
                             const FieldElement& value) {
    PolyCtx out_ctx{ctx.nvars - 1, ctx.order};
    MultiPoly out;
    for (const auto& t : a.terms) {
        FieldElement c = t.coef;
        for (int k = 0; k < t.mono[static_cast<std::size_t>(var)]; ++k)
            c = c * value;
        if (c.is_zero())
            continue;
        Expo e;
        e.reserve(t.mono.size() - 1);
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (static_cast<int>(i) != var)
                e.push_back(t.mono[i]);
        out = mp_add(out_ctx, out, MultiPoly::monomial(out_ctx.nvars, e, c));
    }
    return out;
}

FPoly mp_to_univariate(const MultiPoly& a, int var,
                       const std::vector<std::optional<FieldElement>>& vals) {
    std::vector<FieldElement> coeffs;
    for (const auto& t : a.terms) {
        FieldElement c = t.coef;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (static_cast<int>(i) == var)
                continue;
            for (int k = 0; k < t.mono[i]; ++k)
                c = c * *vals[i];
        }
        std::size_t d = t.mono[static_cast<std::size_t>(var)];
        if (coeffs.size() <= d)
            coeffs.resize(d + 1);
        coeffs[d] = coeffs[d] + c;
    }
    return FPoly(std::move(coeffs));
}

MultiPoly mp_map_coeffs(const MultiPoly& a,
                        const std::function<FieldElement(const FieldElement&)>& fn) {
    MultiPoly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        FieldElement c = fn(t.coef);
        if (!c.is_zero())
            out.terms.push_back({t.mono, std::move(c)});
    }
    return out;
}

std::string mp_str(const MultiPoly& a) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms) {
        std::string cs = field_element_str(t.coef);
        bool neg = cs.size() > 1 && cs[0] == '-' && t.coef.is_rational();
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg)
                cs = cs.substr(1);
        }
        first = false;
        bool wrote_coef = false;
        if (total_degree(t.mono) == 0 || cs != "1") {
            if (t.coef.is_rational())
                os << cs;
            else
                os << "(" << cs << ")";
            wrote_coef = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (wrote_coef || !first_var)
                os << "*";
            first_var = false;
            wrote_coef = true;
            os << "x" << (i + 1);
            if (t.mono[i] > 1)
                os << "^" << t.mono[i];
        }
    }
    return os.str();
}

} // namespace repsplit
