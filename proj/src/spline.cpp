#include "hoc/spline.hpp"

#include <algorithm>

namespace hoc {

InequalityProblem::InequalityProblem(std::vector<WeightedNode> nodes, int k,
                                     std::optional<Interval> domain)
    : k_(k) {
    if (k < 1) throw std::invalid_argument("InequalityProblem: k must be >= 1");
    std::sort(nodes.begin(), nodes.end(),
              [](const WeightedNode& x, const WeightedNode& y) { return x.a > y.a; });
    for (auto& node : nodes) {
        if (!nodes_.empty() && nodes_.back().a == node.a)
            nodes_.back().w += node.w;
        else
            nodes_.push_back(node);
    }
    std::erase_if(nodes_, [](const WeightedNode& n) { return n.w == 0; });

    if (nodes_.empty()) {
        domain_ = domain.value_or(Interval(Rational(0), Rational(0)));
        return;
    }
    Interval hull(nodes_.back().a, nodes_.front().a);
    if (domain) {
        if (!(domain->lo <= hull.lo && hull.hi <= domain->hi))
            throw std::invalid_argument("InequalityProblem: domain must contain every argument");
        domain_ = *domain;
    } else {
        domain_ = hull;
    }
}

InequalityProblem InequalityProblem::negated() const {
    std::vector<WeightedNode> neg = nodes_;
    for (auto& node : neg) node.w = -node.w;
    return InequalityProblem(std::move(neg), k_, domain_);
}

TruncatedPowerSpline::TruncatedPowerSpline(std::vector<Rational> breakpoints,
                                           std::vector<Poly> pieces, int degree)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), degree_(degree) {
    if (breakpoints_.size() != pieces_.size())
        throw std::invalid_argument("TruncatedPowerSpline: piece/breakpoint mismatch");
}

Rational TruncatedPowerSpline::eval(const Rational& x) const {
    size_t above = 0;
    while (above < breakpoints_.size() && breakpoints_[above] > x) ++above;
    if (above == 0) return 0;
    return pieces_[above - 1].eval(x);
}

int count_sign_changes(const std::vector<Rational>& seq) {
    int changes = 0, last = 0;
    for (const Rational& v : seq) {
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

TruncatedPowerSpline build_rk(const InequalityProblem& problem, int j) {
    if (j < 1 || j > problem.k()) throw std::invalid_argument("build_rk: need 1 <= j <= k");
    std::vector<Rational> breaks;
    std::vector<Poly> pieces;
    Poly acc;
    for (const auto& node : problem.nodes()) {
        // (a - x)^{j-1}
        Poly pow = Poly::constant(Rational(1));
        Poly lin({node.a, Rational(-1)});
        for (int e = 0; e < j - 1; ++e) pow = pow * lin;
        acc = acc + pow * node.w;
        breaks.push_back(node.a);
        pieces.push_back(acc);
    }
    return TruncatedPowerSpline(std::move(breaks), std::move(pieces), j - 1);
}

Rational spline_eval(const TruncatedPowerSpline& s, const Rational& x) { return s.eval(x); }

NonnegResult spline_nonneg(const TruncatedPowerSpline& s, const Interval& iv) {
    const auto& bp = s.breakpoints();
    size_t m = bp.size();
    if (m == 0) return {};
    // walk pieces in ascending x order so the first witness is leftmost
    for (size_t idx = m; idx-- > 0;) {
        const Poly& piece = s.pieces()[idx];
        Rational hi = std::min(bp[idx], iv.hi);
        Rational lo = (idx + 1 < m) ? std::max(bp[idx + 1], iv.lo) : iv.lo;
        if (lo > hi) continue;
        auto res = nonneg_on_interval(piece, Interval(lo, hi));
        if (!res.witness) continue;
        // for degree-0 pieces the right endpoint belongs to the next piece
        if (s.eval(*res.witness) < 0) return res;
        if (s.eval(lo) < 0) return {lo};
        Rational mid = (lo + hi) / 2;
        if (s.eval(mid) < 0) return {mid};
    }
    return {};
}

int spline_sign_changes(const TruncatedPowerSpline& s) {
    const auto& bp = s.breakpoints();
    size_t m = bp.size();
    if (m == 0) return 0;
    std::vector<Rational> samples;
    // unbounded left piece, sampled from below its last root
    const Poly& left = s.pieces()[m - 1];
    if (!left.is_zero()) {
        Rational bound = 1;
        for (const Rational& c : left.coeffs()) bound = std::max(bound, Rational(abs(c / left.leading())));
        Rational lo = std::min(bp[m - 1], Rational(-bound - 1));
        for (auto& v : sign_region_samples(left, Interval(lo - 1, bp[m - 1]))) samples.push_back(std::move(v));
    }
    for (size_t idx = m - 1; idx-- > 0;) {
        const Poly& piece = s.pieces()[idx];
        if (piece.is_zero()) continue;
        for (auto& v : sign_region_samples(piece, Interval(bp[idx + 1], bp[idx])))
            samples.push_back(std::move(v));
    }
    return count_sign_changes(samples);
}

SignChangeReport sign_change_report(const InequalityProblem& problem) {
    std::vector<Rational> weights, partial, kink;
    Rational w_sum = 0, wa_sum = 0;
    for (const auto& node : problem.nodes()) {
        weights.push_back(node.w);
        w_sum += node.w;
        wa_sum += node.w * node.a;
        partial.push_back(w_sum);
        kink.push_back(wa_sum - w_sum * node.a);
    }
    return {count_sign_changes(weights), count_sign_changes(partial), count_sign_changes(kink)};
}

}  // namespace hoc
