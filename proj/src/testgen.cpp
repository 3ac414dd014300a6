#include "hoc/testgen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "hoc/criteria.hpp"
#include "hoc/linalg.hpp"

namespace hoc {

namespace {

Rational random_rational(std::mt19937_64& rng, const Interval& range) {
    std::uniform_int_distribution<int> num(0, 1024);
    return range.lo + range.width() * rational_frac(num(rng), 1024);
}

}  // namespace

InequalityProblem sample_problem(const InstanceSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("sample_problem: k must be >= 1");
    if (spec.n <= spec.k)
        throw std::invalid_argument("sample_problem: n must exceed k (null space is trivial)");
    std::mt19937_64 rng(spec.seed);

    std::set<Rational> args;
    while (static_cast<int>(args.size()) < spec.n) args.insert(random_rational(rng, spec.argument_range));
    std::vector<Rational> a(args.begin(), args.end());

    RationalMatrix moment_rows(spec.k, RationalVector(spec.n));
    for (int j = 0; j < spec.k; ++j)
        for (int i = 0; i < spec.n; ++i) moment_rows[j][i] = rational_pow(a[i], j);
    auto basis = null_space(moment_rows);
    if (basis.empty()) throw std::logic_error("sample_problem: unexpected trivial null space");

    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Rational> w(spec.n, Rational(0));
    bool nonzero = false;
    while (!nonzero) {
        std::fill(w.begin(), w.end(), Rational(0));
        for (const auto& v : basis) {
            int c = coeff(rng);
            for (int i = 0; i < spec.n; ++i) w[i] += c * v[i];
        }
        for (const auto& x : w)
            if (x != 0) nonzero = true;
    }

    std::vector<WeightedNode> nodes;
    for (int i = 0; i < spec.n; ++i) nodes.push_back({a[i], w[i]});
    return InequalityProblem(std::move(nodes), spec.k);
}

std::vector<std::pair<Configuration, Configuration>> pte_pairs(int k) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> raw;
    if (k == 3) {
        raw = {{{7, 3, 2}, {6, 5, 1}}, {{6, 5, 3, 0}, {7, 4, 2, 1}}};
    } else if (k == 4) {
        raw = {{{15, 12, 10, 9, 6, 5, 3, 0}, {14, 13, 11, 8, 7, 4, 2, 1}}};
    } else {
        throw std::invalid_argument("pte_pairs: only k = 3 and k = 4 are provided");
    }
    std::vector<std::pair<Configuration, Configuration>> out;
    for (const auto& [xa, xb] : raw) {
        std::vector<Rational> va(xa.begin(), xa.end()), vb(xb.begin(), xb.end());
        Configuration ca(std::move(va)), cb(std::move(vb));
        if (power_sums(ca, k) != power_sums(cb, k))
            throw std::logic_error("pte_pairs: stored pair fails the power sum check");
        out.emplace_back(std::move(ca), std::move(cb));
    }
    return out;
}

GridOracleResult grid_oracle(const InequalityProblem& problem, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid_oracle: need at least 2 points");
    auto rk = build_rk(problem, problem.k());
    const Interval& dom = problem.domain();
    GridOracleResult res{spline_eval(rk, dom.lo), dom.lo};
    for (int i = 1; i < grid_points; ++i) {
        Rational x = dom.lo + dom.width() * rational_frac(i, grid_points - 1);
        Rational v = spline_eval(rk, x);
        if (v < res.min_value) {
            res.min_value = v;
            res.argmin = x;
        }
    }
    return res;
}

FunctionalOracleResult functional_oracle(const InequalityProblem& problem, int trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("functional_oracle: trials must be >= 1");
    int k = problem.k();

    std::vector<SynthFunction> probes;
    for (int j = 0; j < k; ++j) {
        probes.push_back(SynthFunction::monomial(j, k));
        probes.push_back(SynthFunction::monomial(j, k, true));
    }
    auto verdict = decide_exact(problem);
    if (verdict.status == Status::Fails && verdict.witness)
        probes.insert(probes.begin(), SynthFunction::prototype(*verdict.witness, k));

    auto test = [&](const SynthFunction& f) -> std::optional<Rational> {
        Rational v = apply_functional(problem, f);
        if (v < 0) return v;
        return std::nullopt;
    };
    for (const auto& f : probes)
        if (auto v = test(f)) return {false, f, std::move(*v)};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> cpos(0, 9);
    std::uniform_int_distribution<int> nknots(0, 3);
    Interval knot_range(problem.n() == 0 ? Interval{Rational(-1), Rational(1)}
                                         : Interval{problem.domain().lo - 1, problem.domain().hi + 1});
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> pc(k);
        for (auto& c : pc) c = coeff(rng);
        std::vector<std::pair<Rational, Rational>> knots;
        int m = nknots(rng);
        for (int i = 0; i < m; ++i)
            knots.emplace_back(random_rational(rng, knot_range), Rational(cpos(rng)));
        SynthFunction f(Poly(std::move(pc)), std::move(knots), k);
        if (auto v = test(f)) return {false, std::move(f), std::move(*v)};
    }
    return {};
}

}  // namespace hoc
