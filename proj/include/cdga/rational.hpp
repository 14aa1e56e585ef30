#pragma once

#include <gmpxx.h>
#include <string>

namespace cdga {

// Exact rational scalar. All arithmetic in the library is over these;
// there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p" or "p/q", lowest terms.
inline std::string rat_str(const Rational& q)
{
    return q.get_str();
}

}  // namespace cdga
