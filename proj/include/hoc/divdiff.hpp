#pragma once

#include <vector>

#include "hoc/spline.hpp"

namespace hoc {

/// Tabulated function values at pairwise distinct points.
struct FunctionTable {
    std::vector<Rational> points;
    std::vector<Rational> values;
};

/// Exact divided difference [points; f]. Repeated points are rejected.
Rational divided_difference(const FunctionTable& table);

/// A synthesized test function f(x) = P(x) + sum c_j (x - t_j)_+^{order-1}
/// with deg P < order and all c_j >= 0, so f has nonnegative order-th
/// derivative by construction.
struct SynthFunction {
    Poly poly_part;
    std::vector<std::pair<Rational, Rational>> knots;  // (t, c), c >= 0
    int order;

    SynthFunction(Poly p, std::vector<std::pair<Rational, Rational>> kn, int ord);

    /// prototype (x - t)_+^{order-1}
    static SynthFunction prototype(const Rational& t, int order);
    static SynthFunction monomial(int degree, int order, bool negate = false);
};

Rational synth_eval(const SynthFunction& f, const Rational& x);

/// Exact sum w_i f(a_i); f.order must equal problem.k().
Rational apply_functional(const InequalityProblem& problem, const SynthFunction& f);

/// The sliding-window decomposition
///   sum w_j f(a_j) = sum_j (a_j - a_{j+k}) S_j [a_j, ..., a_{j+k}; f],
///   S_j = sum_{i<=j} w_i (a_i - a_{j+1})...(a_i - a_{j+k-1}).
/// All S_j >= 0 is a sufficiency certificate.
struct HammerDecomposition {
    std::vector<Rational> arguments;   ///< strictly decreasing, anchors included
    std::vector<Rational> inner_sums;  ///< S_j, j = 1..n-k
    std::vector<Rational> coefficients;  ///< (a_j - a_{j+k}) S_j
    bool all_nonneg() const {
        for (const auto& s : inner_sums)
            if (s < 0) return false;
        return true;
    }
};

/// anchors are extra zero-weight argument points (they bypass the
/// canonicalizer's zero-weight removal and refine the window structure).
HammerDecomposition hammer_decompose(const InequalityProblem& problem,
                                     const std::vector<Rational>& anchors = {});

/// Exact two-sided evaluation of the decomposition identity for a
/// tabulated f. Requires the problem's moment sums to vanish.
struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal() const { return lhs == rhs; }
};

IdentityCheck hammer_identity_check(const InequalityProblem& problem, const FunctionTable& f,
                                    const std::vector<Rational>& anchors = {});

}  // namespace hoc
