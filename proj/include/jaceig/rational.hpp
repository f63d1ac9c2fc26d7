#ifndef JACEIG_RATIONAL_HPP
#define JACEIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "jaceig/errors.hpp"

namespace jaceig {

// Exact arithmetic backbone. All series coefficients are Rat; the pure
// combinatorial kernels produce Int.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "num" or "num/den", denominator positive, reduced.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts an optional sign, digits, and an optional "/digits" part.
// Anything else (in particular decimal points) is rejected.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t pos = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    bool digits = false, slash = false, den_digits = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '/') {
            if (slash || !digits) throw ParseError("bad rational literal '" + text + "'");
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? den_digits : digits) = true;
        } else {
            throw ParseError("bad rational literal '" + text + "'");
        }
    }
    if (!digits || (slash && !den_digits))
        throw ParseError("bad rational literal '" + text + "'");
    Rat q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Decimal literals like "-0.125" are only admitted in float evaluation mode;
// they are still converted exactly.
inline Rat parse_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rat(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = text.size() - dot - 1;
    if (frac == 0) throw ParseError("bad decimal literal '" + text + "'");
    Rat q = parse_rat(digits);
    Rat den(1);
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    q /= den;
    q.canonicalize();
    return q;
}

// q^e for integer e; negative e inverts, which requires q != 0.
inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && q == 0) throw DivisionByZero("0 raised to a negative power");
    Rat base = inv ? Rat(1) / q : q;
    Rat acc(1);
    Rat p = base;
    while (n) {
        if (n & 1) acc *= p;
        n >>= 1;
        if (n) p *= p;
    }
    return acc;
}

} // namespace jaceig

#endif
