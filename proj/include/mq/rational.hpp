#ifndef MQ_RATIONAL_HPP
#define MQ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "mq/errors.hpp"

namespace mq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p"; the result is canonicalized with q > 0.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw validation_error("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0)
        throw validation_error("zero denominator in rational literal: '" + s + "'");
    return r;
}

/// Lowest terms, q > 0; integers print without the "/1".
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw validation_error("negative power of zero");
        return rational_pow(1 / base, -e);
    }
    Rational acc = 1, b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace mq

#endif
