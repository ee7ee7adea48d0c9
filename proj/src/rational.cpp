#include "repsplit/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace repsplit {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw MalformedInput("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw MalformedInput("bad rational literal: " + text);
        try {
            Integer n(num, 10), d(den, 10);
            return make_rational(n, d);
        } catch (const std::invalid_argument&) {
            throw MalformedInput("bad rational literal: " + text);
        }
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-'))
            whole.erase(0, 1);
        if (whole.empty())
            whole = "0";
        for (char ch : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw MalformedInput("bad decimal literal: " + text);
        Integer scaled(whole + frac, 10);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        Rational q = make_rational(scaled, den);
        return neg ? Rational(-q) : q;
    }

    try {
        Integer n(s, 10);
        return Rational(n);
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad integer literal: " + text);
    }
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string decimal_from_scaled(const Integer& scaled, int digits, bool negative) {
    std::string body = scaled.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, std::string(digits + 1 - body.size(), '0'));
    std::string whole = body.substr(0, body.size() - digits);
    std::string frac = body.substr(body.size() - digits);
    std::string out = whole;
    if (digits > 0)
        out += "." + frac;
    if (negative && scaled != 0)
        out.insert(0, "-");
    return out;
}

} // namespace

std::string decimal_str_outward(const Rational& q, int digits) {
    Rational a = abs(q);
    Integer scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    // ceil(|q| * 10^digits)
    Integer num = a.get_num() * scale;
    Integer den = a.get_den();
    Integer quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        quo += 1;
    return decimal_from_scaled(quo, digits, sgn(q) < 0);
}

std::string decimal_str(const Rational& q, int digits) {
    Rational a = abs(q);
    Integer scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    // round(|q| * 10^digits)
    Integer num = a.get_num() * scale * 2 + a.get_den();
    Integer den = a.get_den() * 2;
    Integer quo;
    mpz_fdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return decimal_from_scaled(quo, digits, sgn(q) < 0);
}

Rational pow10_inv(int digits) {
    Integer den = 1;
    for (int i = 0; i < digits; ++i)
        den *= 10;
    return make_rational(1, den);
}

long approx_log2(const Rational& q) {
    if (q == 0)
        return 0;
    long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    return num_bits - den_bits;
}

std::size_t hash_rational(const Rational& q) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](unsigned long v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(mpz_get_ui(q.get_num().get_mpz_t()));
    mix(mpz_get_ui(q.get_den().get_mpz_t()));
    mix(static_cast<unsigned long>(sgn(q) + 2));
    return h;
}

} // namespace repsplit
