#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hoc {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (lowest terms, positive denominator), which is exactly the invariant
/// we need; all arithmetic is exact.
using Rational = mpq_class;

/// Parse an integer ("7"), fraction ("3/6") or finite decimal ("-0.125")
/// into an exact Rational. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational rational_parse(std::string_view text);

/// Canonical "p" or "p/q" string form.
std::string rational_str(const Rational& q);

/// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

/// num/den in canonical form. The raw two-argument mpq_class constructor
/// does not reduce, which breaks exact comparisons downstream.
inline Rational rational_frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational_frac: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

}  // namespace hoc
