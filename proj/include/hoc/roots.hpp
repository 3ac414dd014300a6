#pragma once

#include <optional>
#include <vector>

#include "hoc/poly.hpp"

namespace hoc {

/// Sturm sequence of the squarefree part of p. Sign-variation differences
/// between two points count the distinct real roots in the half-open
/// interval between them. Throws on the zero polynomial.
std::vector<Poly> sturm_chain(const Poly& p);

/// Sign variations of the chain at x, zero entries skipped.
int sign_variations(const std::vector<Poly>& chain, const Rational& x);

/// Number of distinct real roots of p in (iv.lo, iv.hi].
int count_roots(const Poly& p, const Interval& iv);
int count_roots(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

struct IsolateOptions {
    /// Refine each isolating interval to width <= (hi-lo)/2^resolution_bits.
    /// Negative means: stop as soon as every interval holds one root.
    int resolution_bits = 40;
};

/// Disjoint rational-endpoint intervals, each containing exactly one
/// distinct real root of p in [iv.lo, iv.hi], in increasing order.
/// A point interval [r, r] marks an exact rational root. For non-point
/// intervals the root lies in (lo, hi] and neither endpoint except
/// possibly hi == iv.hi is a root.
std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv, IsolateOptions opts = {});

/// Exact decision of p(x) >= 0 on [iv.lo, iv.hi]. On failure, witness is
/// the leftmost sample found with p(witness) < 0.
struct NonnegResult {
    std::optional<Rational> witness;
    bool nonneg() const { return !witness.has_value(); }
};

NonnegResult nonneg_on_interval(const Poly& p, const Interval& iv);

/// Sample values of p, one per constant-sign region of [lo, hi] (regions
/// are delimited by the distinct real roots), in increasing x order.
/// Zero values are not emitted; exact roots contribute nothing.
std::vector<Rational> sign_region_samples(const Poly& p, const Interval& iv);

}  // namespace hoc
