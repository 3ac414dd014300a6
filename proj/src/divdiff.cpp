#include "hoc/divdiff.hpp"

#include <algorithm>

namespace hoc {

Rational divided_difference(const FunctionTable& table) {
    size_t n = table.points.size();
    if (n == 0 || table.values.size() != n)
        throw std::invalid_argument("divided_difference: need matching nonempty points/values");
    Rational acc = 0;
    for (size_t i = 0; i < n; ++i) {
        Rational denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational d = table.points[i] - table.points[j];
            if (d == 0)
                throw std::invalid_argument("divided_difference: repeated points unsupported");
            denom *= d;
        }
        acc += table.values[i] / denom;
    }
    return acc;
}

SynthFunction::SynthFunction(Poly p, std::vector<std::pair<Rational, Rational>> kn, int ord)
    : poly_part(std::move(p)), knots(std::move(kn)), order(ord) {
    if (order < 1) throw std::invalid_argument("SynthFunction: order must be >= 1");
    if (poly_part.degree() >= order)
        throw std::invalid_argument("SynthFunction: polynomial part must have degree < order");
    for (const auto& [t, c] : knots)
        if (c < 0) throw std::invalid_argument("SynthFunction: knot coefficients must be >= 0");
}

SynthFunction SynthFunction::prototype(const Rational& t, int order) {
    return SynthFunction(Poly(), {{t, Rational(1)}}, order);
}

SynthFunction SynthFunction::monomial(int degree, int order, bool negate) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = negate ? -1 : 1;
    return SynthFunction(Poly(std::move(c)), {}, order);
}

Rational synth_eval(const SynthFunction& f, const Rational& x) {
    Rational v = f.poly_part.eval(x);
    for (const auto& [t, c] : f.knots) {
        Rational d = x - t;
        if (d > 0) v += c * rational_pow(d, f.order - 1);
    }
    return v;
}

Rational apply_functional(const InequalityProblem& problem, const SynthFunction& f) {
    if (f.order != problem.k())
        throw std::invalid_argument("apply_functional: function order differs from problem k");
    Rational acc = 0;
    for (const auto& node : problem.nodes()) acc += node.w * synth_eval(f, node.a);
    return acc;
}

namespace {

/// Problem nodes with zero-weight anchors spliced in, strictly decreasing.
std::vector<WeightedNode> nodes_with_anchors(const InequalityProblem& problem,
                                             const std::vector<Rational>& anchors) {
    std::vector<WeightedNode> nodes = problem.nodes();
    for (const Rational& t : anchors) {
        bool present = std::any_of(nodes.begin(), nodes.end(),
                                   [&](const WeightedNode& n) { return n.a == t; });
        if (!present) nodes.push_back({t, Rational(0)});
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const WeightedNode& x, const WeightedNode& y) { return x.a > y.a; });
    return nodes;
}

}  // namespace

HammerDecomposition hammer_decompose(const InequalityProblem& problem,
                                     const std::vector<Rational>& anchors) {
    auto nodes = nodes_with_anchors(problem, anchors);
    int n = static_cast<int>(nodes.size());
    int k = problem.k();
    if (n < k + 1) throw std::invalid_argument("hammer_decompose: need at least k+1 nodes");

    HammerDecomposition dec;
    for (const auto& node : nodes) dec.arguments.push_back(node.a);
    for (int j = 1; j <= n - k; ++j) {
        Rational s = 0;
        for (int i = 1; i <= j; ++i) {
            Rational prod = nodes[i - 1].w;
            for (int m = j + 1; m <= j + k - 1; ++m) prod *= nodes[i - 1].a - nodes[m - 1].a;
            s += prod;
        }
        dec.coefficients.push_back((nodes[j - 1].a - nodes[j + k - 1].a) * s);
        dec.inner_sums.push_back(std::move(s));
    }
    return dec;
}

IdentityCheck hammer_identity_check(const InequalityProblem& problem, const FunctionTable& f,
                                    const std::vector<Rational>& anchors) {
    int k = problem.k();
    for (int j = 0; j < k; ++j) {
        Rational m = 0;
        for (const auto& node : problem.nodes()) m += node.w * rational_pow(node.a, j);
        if (m != 0)
            throw std::invalid_argument("hammer_identity_check: moment condition violated");
    }
    auto lookup = [&](const Rational& x) -> Rational {
        for (size_t i = 0; i < f.points.size(); ++i)
            if (f.points[i] == x) return f.values[i];
        throw std::invalid_argument("hammer_identity_check: f not tabulated at " + rational_str(x));
    };

    Rational lhs = 0;
    for (const auto& node : problem.nodes()) lhs += node.w * lookup(node.a);

    auto dec = hammer_decompose(problem, anchors);
    Rational rhs = 0;
    for (size_t j = 0; j < dec.coefficients.size(); ++j) {
        FunctionTable window;
        for (int m = 0; m <= k; ++m) {
            window.points.push_back(dec.arguments[j + m]);
            window.values.push_back(lookup(dec.arguments[j + m]));
        }
        rhs += dec.coefficients[j] * divided_difference(window);
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace hoc
