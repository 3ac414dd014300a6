#pragma once

#include <optional>
#include <string>

#include "hoc/divdiff.hpp"
#include "hoc/spline.hpp"

namespace hoc {

enum class Status { Holds, Fails, MomentViolation };

/// Outcome of the complete decision. Fails carries a rational witness x
/// with r_k(x) < 0; MomentViolation carries the first offending power.
struct Verdict {
    Status status;
    std::optional<Rational> witness;
    std::optional<int> moment_index;
    std::optional<Rational> moment_value;
    std::string certificate;
};

struct MomentCheck {
    std::optional<int> violated_index;
    Rational value;  ///< the nonzero moment sum when violated
    bool ok() const { return !violated_index.has_value(); }
};

/// Power-sum check sum w_i a_i^j = 0 for j = 0..k-1; first violation wins.
MomentCheck check_moments(const InequalityProblem& problem);

/// The complete decision: moment conditions plus exact nonnegativity of
/// r_k over the domain. Necessary and sufficient.
Verdict decide_exact(const InequalityProblem& problem);

enum class TriState { Pass, Fail, NotApplicable };

/// Sufficient sign-change criterion. bullet (1..3) says which count fired.
struct CountingResult {
    enum class Kind { Pass, Inconclusive, NotApplicable } kind;
    int bullet = 0;
    SignChangeReport report;
};
CountingResult counting_criterion(const InequalityProblem& problem);

/// Exact k = 3 partial-sum criterion; agrees with decide_exact.
enum class K3Outcome { Pass, Fail, MomentViolation };
K3Outcome k3_criterion(const InequalityProblem& problem);

/// Endpoint-weight criterion, exact for canonicalized n <= k+2.
TriState endpoint_criterion(const InequalityProblem& problem);

/// Two-list sufficiency test for f''' >= 0 under the interleaving
/// condition min(a_i, b_i) >= max(a_{i+1}, b_{i+1}).
TriState small_hammer(const std::vector<Rational>& a_list, const std::vector<Rational>& b_list,
                      const std::vector<Rational>& weights);

/// Unweighted variant that also tolerates swapped pairs
/// {a_i, b_i} = {a_{i+1}, b_{i+1}}.
TriState superize(const std::vector<Rational>& a_list, const std::vector<Rational>& b_list);

/// Exact verification of the double-Abel-summation expansion of
/// sum w_i (f(a_i) - f(b_i)) for a tabulatable f with order 3.
struct AbelCheck {
    bool applicable = true;
    Rational lhs;
    Rational rhs;
    bool equal() const { return applicable && lhs == rhs; }
};
AbelCheck abel_identity_check(const std::vector<Rational>& a_list,
                              const std::vector<Rational>& b_list,
                              const std::vector<Rational>& weights, const SynthFunction& f);

/// Every applicable criterion plus the exact verdict, cross-checked: a
/// passing sufficient criterion may never coexist with an exact Fails.
struct CriterionEntry {
    std::string name;
    std::string outcome;  // "pass" | "fail" | "inconclusive" | "not_applicable"
    std::string detail;
};
struct CriteriaReport {
    Verdict verdict;
    std::vector<CriterionEntry> entries;
};
CriteriaReport criteria_report(const InequalityProblem& problem);

/// The dominance problem "sum w_i f(a_i) >= sum w_i f(b_i)" as a single
/// weighted node list (+w_i at a_i, -w_i at b_i).
InequalityProblem merged_dominance_problem(const std::vector<Rational>& a_list,
                                           const std::vector<Rational>& b_list,
                                           const std::vector<Rational>& weights, int k);

}  // namespace hoc
