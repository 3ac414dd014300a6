#pragma once

#include <optional>
#include <vector>

#include "hoc/poly.hpp"
#include "hoc/roots.hpp"

namespace hoc {

struct WeightedNode {
    Rational a;  ///< argument
    Rational w;  ///< weight
};

/// A canonicalized instance of "sum w_i f(a_i) >= 0 over all f with
/// nonnegative k-th derivative": arguments strictly decreasing, equal
/// arguments merged by weight addition, zero-weight nodes dropped.
class InequalityProblem {
  public:
    /// Canonicalize. domain defaults to the argument hull [min a, max a]
    /// and must contain every argument when supplied.
    InequalityProblem(std::vector<WeightedNode> nodes, int k,
                      std::optional<Interval> domain = std::nullopt);

    const std::vector<WeightedNode>& nodes() const { return nodes_; }
    int k() const { return k_; }
    const Interval& domain() const { return domain_; }
    size_t n() const { return nodes_.size(); }

    InequalityProblem negated() const;

  private:
    std::vector<WeightedNode> nodes_;
    int k_;
    Interval domain_{Rational(0), Rational(0)};
};

/// r_j(x) = sum w_i (a_i - x)_+^{j-1} as an exact piecewise polynomial.
/// breakpoints are the distinct arguments, strictly decreasing. piece(i)
/// is valid on [breakpoints[i+1], breakpoints[i]] (half-open on the right
/// for degree 0), and the last piece extends to -infinity. The spline is
/// identically zero to the right of breakpoints[0].
class TruncatedPowerSpline {
  public:
    TruncatedPowerSpline(std::vector<Rational> breakpoints, std::vector<Poly> pieces, int degree);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    int degree() const { return degree_; }

    Rational eval(const Rational& x) const;

  private:
    std::vector<Rational> breakpoints_;
    std::vector<Poly> pieces_;  // pieces_[i] applies on [breakpoints_[i+1], breakpoints_[i])
    int degree_;
};

/// Sign changes of a rational sequence: zeros deleted, adjacent
/// opposite-sign pairs counted.
int count_sign_changes(const std::vector<Rational>& seq);

/// Exact expansion of r_j for the problem, 1 <= j <= k.
TruncatedPowerSpline build_rk(const InequalityProblem& problem, int j);

Rational spline_eval(const TruncatedPowerSpline& s, const Rational& x);

/// Exact nonnegativity of the spline on iv; leftmost witness on failure.
NonnegResult spline_nonneg(const TruncatedPowerSpline& s, const Interval& iv);

/// Sign changes of the spline as a function on its support.
int spline_sign_changes(const TruncatedPowerSpline& s);

/// The three sequences whose sign-change counts drive the counting
/// criterion: raw weights, partial sums, and the piecewise-linear kink
/// values s_j = sum_{i<=j} w_i a_i - (sum_{i<=j} w_i) a_j.
struct SignChangeReport {
    int weight_changes = 0;
    int partial_sum_changes = 0;
    int r2_value_changes = 0;
};

SignChangeReport sign_change_report(const InequalityProblem& problem);

}  // namespace hoc
