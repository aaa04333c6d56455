#pragma once

#include <gmpxx.h>

#include <string>

#include "bisyz/common.hpp"

namespace bisyz {

/// Exact rational scalar.  GMP keeps values canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den with canonicalization (mpq_class(n, d) alone would require the
/// caller to pass coprime arguments).
inline Rational rat(long num, long den = 1)
{
    if (den == 0) throw ZeroDivisor("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den)
{
    if (den == 0) throw ZeroDivisor("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Accepts "-3", "5/7", with optional surrounding whitespace.
inline Rational parse_rational(const std::string& text)
{
    std::size_t a = text.find_first_not_of(" \t\r\n");
    std::size_t b = text.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) throw ParseError("empty rational literal");
    std::string body = text.substr(a, b - a + 1);

    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, body.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ParseError("bad rational literal: '" + body + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw ParseError("zero denominator in literal: '" + body + "'");
    }
    mpq_canonicalize(q);
    Rational out(q);
    mpq_clear(q);
    return out;
}

/// "num" when the denominator is 1, otherwise "num/den".
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace bisyz
