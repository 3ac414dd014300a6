#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hoc/divdiff.hpp"
#include "hoc/order.hpp"

namespace hoc {

/// Deterministic random-instance recipe.
struct InstanceSpec {
    int n;
    int k;
    Interval argument_range;
    std::uint64_t seed;
};

/// Random problem with exactly vanishing moments: distinct rational
/// arguments plus weights drawn as an integer combination of the moment
/// matrix's null space basis. Requires n > k.
InequalityProblem sample_problem(const InstanceSpec& spec);

/// Known integer pairs with equal power sums s_1..s_{k-1}; re-verified
/// exactly on every call. k must be 3 or 4.
std::vector<std::pair<Configuration, Configuration>> pte_pairs(int k);

struct GridOracleResult {
    Rational min_value;
    Rational argmin;
};

/// Exact minimum of r_k over grid_points equally spaced points of the
/// domain.
GridOracleResult grid_oracle(const InequalityProblem& problem, int grid_points);

struct FunctionalOracleResult {
    bool all_nonneg = true;
    std::optional<SynthFunction> counterexample;
    std::optional<Rational> value;  ///< the negative functional value found
};

/// Applies random synthesized functions of the right order plus the
/// deterministic probes (+-x^j and, on an exact Fails, the prototype at
/// the witness) and reports the first strictly negative value.
FunctionalOracleResult functional_oracle(const InequalityProblem& problem, int trials,
                                         std::uint64_t seed);

}  // namespace hoc
