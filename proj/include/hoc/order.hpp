#pragma once

#include <array>
#include <vector>

#include "hoc/criteria.hpp"

namespace hoc {

/// A point of S_k: values sorted descending, duplicates allowed.
struct Configuration {
    std::vector<Rational> values;

    explicit Configuration(std::vector<Rational> v);
    size_t n() const { return values.size(); }
};

/// Power sums s_j = sum x_i^j for j = 1..k-1.
std::vector<Rational> power_sums(const Configuration& x, int k);

enum class OrderRelation { Dominates, Dominated, Equal, Incomparable, DifferentClass };

/// Exact comparison in the order induced by "sum f(x_i) >= sum f(y_i) for
/// all f with nonnegative k-th derivative".
OrderRelation compare(const Configuration& x, const Configuration& y, int k);

/// The three equivalent tests at n = k: k-th power sums, maxima, and the
/// functional order itself.
struct Smooth1Report {
    int power_cmp;  ///< sgn(sum x^k - sum y^k)
    int max_cmp;    ///< sgn(max x - max y)
    OrderRelation relation;
    bool consistent() const;
};
Smooth1Report smooth1_equivalence(const Configuration& x, const Configuration& y, int k);

enum class ExtremalRole { Maximal, Minimal, Both, Neither };

/// Block pattern classification of extremal elements: x is maximal when
/// its coordinates split into at most k-1 consecutive constant groups
/// with every odd-numbered group of size <= 1 (minimal: even-numbered).
struct ExtremalPattern {
    std::vector<size_t> block_lengths;  ///< run lengths of equal values
    ExtremalRole role;
    std::vector<size_t> witness_indices;  ///< the i_1 <= ... <= i_k (1-based) when extremal
};
ExtremalPattern extremal_classify(const Configuration& x, int k);

/// Whether the class of x under the s_1..s_{k-1} constraints is a single
/// point: true iff x is extremal at order k-1.
bool is_singleton(const Configuration& x, int k);

enum class SixPointOutcome { Dominates, NotDominates, DifferentClass };

/// Symmetric six-point order-4 criterion for
/// (x, y, z, -z, -y, -x) vs (a, b, c, -c, -b, -a), entries >= 0.
SixPointOutcome six_point_check(const std::array<Rational, 3>& xyz,
                                const std::array<Rational, 3>& abc);

}  // namespace hoc
