#include "hoc/criteria.hpp"

#include <algorithm>

namespace hoc {

namespace {

bool is_descending(const std::vector<Rational>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

}  // namespace

MomentCheck check_moments(const InequalityProblem& problem) {
    for (int j = 0; j < problem.k(); ++j) {
        Rational m = 0;
        for (const auto& node : problem.nodes()) m += node.w * rational_pow(node.a, j);
        if (m != 0) return {j, std::move(m)};
    }
    return {};
}

Verdict decide_exact(const InequalityProblem& problem) {
    auto moments = check_moments(problem);
    if (!moments.ok())
        return {Status::MomentViolation, std::nullopt, moments.violated_index, moments.value,
                "moment-check"};
    if (problem.n() == 0) return {Status::Holds, std::nullopt, std::nullopt, std::nullopt, "empty"};
    auto rk = build_rk(problem, problem.k());
    auto res = spline_nonneg(rk, problem.domain());
    if (res.nonneg())
        return {Status::Holds, std::nullopt, std::nullopt, std::nullopt, "exact-spline"};
    return {Status::Fails, res.witness, std::nullopt, std::nullopt, "exact-spline"};
}

CountingResult counting_criterion(const InequalityProblem& problem) {
    SignChangeReport rep = sign_change_report(problem);
    if (problem.n() < 2 || problem.nodes().front().w <= 0 || !check_moments(problem).ok())
        return {CountingResult::Kind::NotApplicable, 0, rep};
    int k = problem.k();
    if (rep.weight_changes <= k) return {CountingResult::Kind::Pass, 1, rep};
    if (rep.partial_sum_changes <= k - 1) return {CountingResult::Kind::Pass, 2, rep};
    if (rep.r2_value_changes <= k - 2) return {CountingResult::Kind::Pass, 3, rep};
    return {CountingResult::Kind::Inconclusive, 0, rep};
}

K3Outcome k3_criterion(const InequalityProblem& problem) {
    if (problem.k() != 3) throw std::invalid_argument("k3_criterion: requires k = 3");
    if (!check_moments(problem).ok()) return K3Outcome::MomentViolation;
    const auto& nodes = problem.nodes();
    Rational w_sum = 0, wa_sum = 0, wa2_sum = 0;
    for (size_t j = 0; j + 1 < nodes.size(); ++j) {
        w_sum += nodes[j].w;
        wa_sum += nodes[j].w * nodes[j].a;
        wa2_sum += nodes[j].w * nodes[j].a * nodes[j].a;
        // only windows where r_3 can attain an interior local minimum
        if (w_sum * nodes[j].a >= wa_sum && wa_sum >= w_sum * nodes[j + 1].a) {
            if (w_sum * wa2_sum < wa_sum * wa_sum) return K3Outcome::Fail;
        }
    }
    return K3Outcome::Pass;
}

TriState endpoint_criterion(const InequalityProblem& problem) {
    if (!check_moments(problem).ok()) return TriState::NotApplicable;
    int k = problem.k();
    int n = static_cast<int>(problem.n());
    if (n > k + 2) return TriState::NotApplicable;
    if (n == 0) return TriState::Pass;  // all weights cancelled
    // zero moments with 1 <= n <= k would force all weights to zero
    if (n <= k) return TriState::Fail;
    const auto& nodes = problem.nodes();
    if (nodes.front().w < 0) return TriState::Fail;
    if (n == k + 2) {
        Rational last = nodes.back().w;
        if (k % 2 == 1) last = -last;
        if (last < 0) return TriState::Fail;
    }
    return TriState::Pass;
}

TriState small_hammer(const std::vector<Rational>& a_list, const std::vector<Rational>& b_list,
                      const std::vector<Rational>& weights) {
    size_t n = a_list.size();
    if (b_list.size() != n || weights.size() != n)
        throw std::invalid_argument("small_hammer: length mismatch");
    if (!is_descending(a_list) || !is_descending(b_list))
        throw std::invalid_argument("small_hammer: lists must be sorted descending");
    for (size_t i = 0; i + 1 < n; ++i)
        if (std::min(a_list[i], b_list[i]) < std::max(a_list[i + 1], b_list[i + 1]))
            return TriState::NotApplicable;

    Rational ma = 0, mb = 0, qa = 0, qb = 0;
    for (size_t i = 0; i < n; ++i) {
        ma += weights[i] * a_list[i];
        mb += weights[i] * b_list[i];
        qa += weights[i] * a_list[i] * a_list[i];
        qb += weights[i] * b_list[i] * b_list[i];
    }
    if (ma != mb || qa != qb) return TriState::Fail;

    for (size_t j = 0; j + 1 < n; ++j) {
        Rational lhs = 0, rhs = 0;
        for (size_t i = 0; i <= j; ++i) {
            lhs += weights[i] * (a_list[i] - a_list[j + 1]) * (a_list[i] - b_list[j + 1]);
            rhs += weights[i] * (b_list[i] - a_list[j + 1]) * (b_list[i] - b_list[j + 1]);
        }
        if (lhs < rhs) return TriState::Fail;
    }
    return TriState::Pass;
}

TriState superize(const std::vector<Rational>& a_list, const std::vector<Rational>& b_list) {
    size_t n = a_list.size();
    if (b_list.size() != n) throw std::invalid_argument("superize: length mismatch");
    if (!is_descending(a_list) || !is_descending(b_list))
        throw std::invalid_argument("superize: lists must be sorted descending");
    for (size_t i = 0; i + 1 < n; ++i) {
        bool interleaved =
            std::min(a_list[i], b_list[i]) >= std::max(a_list[i + 1], b_list[i + 1]);
        bool swapped = (a_list[i] == a_list[i + 1] && b_list[i] == b_list[i + 1]) ||
                       (a_list[i] == b_list[i + 1] && b_list[i] == a_list[i + 1]);
        if (!interleaved && !swapped) return TriState::NotApplicable;
    }
    Rational ma = 0, mb = 0, qa = 0, qb = 0;
    for (size_t i = 0; i < n; ++i) {
        ma += a_list[i];
        mb += b_list[i];
        qa += a_list[i] * a_list[i];
        qb += b_list[i] * b_list[i];
    }
    if (ma != mb || qa != qb) return TriState::Fail;

    for (size_t j = 0; j < n; ++j) {
        Rational lhs = 0, rhs = 0;
        for (size_t i = 0; i <= j; ++i) {
            lhs += (a_list[i] - a_list[j]) * (a_list[i] - b_list[j]);
            rhs += (b_list[i] - a_list[j]) * (b_list[i] - b_list[j]);
        }
        if (lhs < rhs) return TriState::Fail;
    }
    return TriState::Pass;
}

AbelCheck abel_identity_check(const std::vector<Rational>& a_list,
                              const std::vector<Rational>& b_list,
                              const std::vector<Rational>& weights, const SynthFunction& f) {
    size_t n = a_list.size();
    if (b_list.size() != n || weights.size() != n)
        throw std::invalid_argument("abel_identity_check: length mismatch");
    if (f.order != 3) throw std::invalid_argument("abel_identity_check: f must have order 3");
    if (n == 0) return {true, Rational(0), Rational(0)};

    Rational ma = 0, mb = 0, qa = 0, qb = 0;
    for (size_t i = 0; i < n; ++i) {
        ma += weights[i] * a_list[i];
        mb += weights[i] * b_list[i];
        qa += weights[i] * a_list[i] * a_list[i];
        qb += weights[i] * b_list[i] * b_list[i];
    }
    if (ma != mb || qa != qb) return {false, Rational(0), Rational(0)};

    std::vector<Rational> g(n), c(n - 1), d(n - 1);
    for (size_t j = 0; j < n; ++j) {
        Rational denom = a_list[j] - b_list[j];
        if (denom == 0) return {false, Rational(0), Rational(0)};
        g[j] = (synth_eval(f, a_list[j]) - synth_eval(f, b_list[j])) / denom;
    }
    for (size_t j = 0; j + 1 < n; ++j) {
        c[j] = a_list[j] + b_list[j] - a_list[j + 1] - b_list[j + 1];
        if (c[j] == 0) return {false, Rational(0), Rational(0)};
        d[j] = (g[j] - g[j + 1]) / c[j];
    }

    Rational lhs = 0;
    for (size_t i = 0; i < n; ++i)
        lhs += weights[i] * (synth_eval(f, a_list[i]) - synth_eval(f, b_list[i]));

    // Q_j = sum_{i<=j} w_i [(a_i - a_{j+1})(a_i - b_{j+1}) - (b_i - a_{j+1})(b_i - b_{j+1})]
    Rational rhs = 0;
    for (size_t j = 0; j + 2 < n; ++j) {
        Rational qsum = 0;
        for (size_t i = 0; i <= j; ++i) {
            qsum += weights[i] * ((a_list[i] - a_list[j + 1]) * (a_list[i] - b_list[j + 1]) -
                                  (b_list[i] - a_list[j + 1]) * (b_list[i] - b_list[j + 1]));
        }
        rhs += qsum * (d[j] - d[j + 1]);
    }
    return {true, std::move(lhs), std::move(rhs)};
}

CriteriaReport criteria_report(const InequalityProblem& problem) {
    CriteriaReport rep;
    rep.verdict = decide_exact(problem);
    if (rep.verdict.status == Status::MomentViolation) {
        rep.entries.push_back({"moments", "fail",
                               "sum w*a^" + std::to_string(*rep.verdict.moment_index) + " = " +
                                   rational_str(*rep.verdict.moment_value)});
        return rep;
    }
    bool any_sufficient_pass = false;

    auto counting = counting_criterion(problem);
    switch (counting.kind) {
        case CountingResult::Kind::Pass:
            any_sufficient_pass = true;
            rep.entries.push_back({"counting", "pass", "bullet " + std::to_string(counting.bullet)});
            break;
        case CountingResult::Kind::Inconclusive:
            rep.entries.push_back({"counting", "inconclusive", ""});
            break;
        case CountingResult::Kind::NotApplicable:
            rep.entries.push_back({"counting", "not_applicable", ""});
            break;
    }

    if (problem.k() == 3) {
        auto k3 = k3_criterion(problem);
        rep.entries.push_back({"k3", k3 == K3Outcome::Pass ? "pass" : "fail", ""});
    } else {
        rep.entries.push_back({"k3", "not_applicable", ""});
    }

    if (problem.n() >= static_cast<size_t>(problem.k()) + 1) {
        auto dec = hammer_decompose(problem);
        if (dec.all_nonneg()) {
            any_sufficient_pass = true;
            rep.entries.push_back({"popoviciu", "pass", ""});
        } else {
            size_t bad = 0;
            while (dec.inner_sums[bad] >= 0) ++bad;
            rep.entries.push_back({"popoviciu", "fail",
                                   "window " + std::to_string(bad + 1) + " inner sum " +
                                       rational_str(dec.inner_sums[bad])});
        }
    } else {
        rep.entries.push_back({"popoviciu", "not_applicable", ""});
    }

    auto ep = endpoint_criterion(problem);
    rep.entries.push_back({"endpoint",
                           ep == TriState::Pass          ? "pass"
                           : ep == TriState::Fail        ? "fail"
                                                         : "not_applicable",
                           ""});

    if (any_sufficient_pass && rep.verdict.status == Status::Fails)
        throw std::logic_error("criteria_report: sufficient criterion passed on a failing instance");
    return rep;
}

InequalityProblem merged_dominance_problem(const std::vector<Rational>& a_list,
                                           const std::vector<Rational>& b_list,
                                           const std::vector<Rational>& weights, int k) {
    if (a_list.size() != b_list.size() || a_list.size() != weights.size())
        throw std::invalid_argument("merged_dominance_problem: length mismatch");
    std::vector<WeightedNode> nodes;
    for (size_t i = 0; i < a_list.size(); ++i) {
        nodes.push_back({a_list[i], weights[i]});
        nodes.push_back({b_list[i], -weights[i]});
    }
    return InequalityProblem(std::move(nodes), k);
}

}  // namespace hoc
