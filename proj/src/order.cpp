#include "hoc/order.hpp"

#include <algorithm>

namespace hoc {

Configuration::Configuration(std::vector<Rational> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end(), std::greater<>());
}

std::vector<Rational> power_sums(const Configuration& x, int k) {
    if (k < 2) throw std::invalid_argument("power_sums: k must be >= 2");
    std::vector<Rational> s(k - 1, Rational(0));
    for (const Rational& v : x.values)
        for (int j = 1; j < k; ++j) s[j - 1] += rational_pow(v, j);
    return s;
}

OrderRelation compare(const Configuration& x, const Configuration& y, int k) {
    if (x.n() != y.n()) throw std::invalid_argument("compare: configurations differ in length");
    if (power_sums(x, k) != power_sums(y, k)) return OrderRelation::DifferentClass;
    if (x.values == y.values) return OrderRelation::Equal;

    std::vector<Rational> unit(x.n(), Rational(1));
    bool xy = decide_exact(merged_dominance_problem(x.values, y.values, unit, k)).status ==
              Status::Holds;
    bool yx = decide_exact(merged_dominance_problem(y.values, x.values, unit, k)).status ==
              Status::Holds;
    if (xy && yx) return OrderRelation::Equal;  // unreachable for distinct multisets
    if (xy) return OrderRelation::Dominates;
    if (yx) return OrderRelation::Dominated;
    return OrderRelation::Incomparable;
}

bool Smooth1Report::consistent() const {
    switch (relation) {
        case OrderRelation::Equal: return power_cmp == 0 && max_cmp == 0;
        case OrderRelation::Dominates: return power_cmp >= 0 && max_cmp >= 0;
        case OrderRelation::Dominated: return power_cmp <= 0 && max_cmp <= 0;
        default: return false;
    }
}

Smooth1Report smooth1_equivalence(const Configuration& x, const Configuration& y, int k) {
    if (static_cast<int>(x.n()) != k || static_cast<int>(y.n()) != k)
        throw std::invalid_argument("smooth1_equivalence: requires n = k");
    if (power_sums(x, k) != power_sums(y, k))
        throw std::invalid_argument("smooth1_equivalence: power sums differ");
    Rational px = 0, py = 0;
    for (const Rational& v : x.values) px += rational_pow(v, k);
    for (const Rational& v : y.values) py += rational_pow(v, k);
    return {sgn(px - py), sgn(x.values.front() - y.values.front()), compare(x, y, k)};
}

namespace {

/// Search for 1 = i_1 <= ... <= i_k = n+1 with x constant on each
/// [i_j, i_{j+1}) and the parity-selected gaps of size <= 1.
/// For maximal patterns the constrained gaps are i_2 - i_1, i_4 - i_3, ...;
/// for minimal, i_3 - i_2, i_5 - i_4, ...
bool pattern_search(const std::vector<Rational>& x, int k, bool maximal,
                    std::vector<size_t>& witness) {
    size_t n = x.size();
    // const_upto[p] = largest q such that x[p..q) is constant (0-based)
    auto run_end = [&](size_t p) {
        size_t q = p;
        while (q + 1 < n && x[q + 1] == x[p]) ++q;
        return q + 1;
    };

    // dp[j][p]: can we place i_{j+1} = p+1 (1-based) consistently
    std::vector<std::vector<int>> prev(k, std::vector<int>(n + 2, -2));
    std::vector<std::vector<bool>> ok(k, std::vector<bool>(n + 2, false));
    ok[0][1] = true;  // i_1 = 1
    for (int j = 0; j + 1 < k; ++j) {
        // the gap i_{j+2} - i_{j+1} is constrained to {0, 1} when the pair
        // (i_{j+1}, i_{j+2}) is (i_{2m-1}, i_{2m}) for maximal patterns,
        // or (i_{2m}, i_{2m+1}) for minimal ones
        bool constrained = maximal ? (j % 2 == 0) : (j % 2 == 1);
        for (size_t p = 1; p <= n + 1; ++p) {
            if (!ok[j][p]) continue;
            size_t max_next;
            if (p > n)
                max_next = n + 1;
            else
                max_next = run_end(p - 1) + 1;  // segment [p, next) must be constant
            for (size_t q = p; q <= (p <= n ? max_next : n + 1); ++q) {
                if (q < p) continue;
                if (constrained && q - p > 1) break;
                if (q > n + 1) break;
                if (!ok[j + 1][q]) {
                    ok[j + 1][q] = true;
                    prev[j + 1][q] = static_cast<int>(p);
                }
            }
        }
    }
    if (!ok[k - 1][n + 1]) return false;
    witness.assign(k, 0);
    size_t cur = n + 1;
    for (int j = k - 1; j >= 0; --j) {
        witness[j] = cur;
        if (j > 0) cur = static_cast<size_t>(prev[j][cur]);
    }
    return true;
}

}  // namespace

ExtremalPattern extremal_classify(const Configuration& x, int k) {
    if (k < 2) throw std::invalid_argument("extremal_classify: k must be >= 2");
    ExtremalPattern pat;
    size_t i = 0;
    while (i < x.n()) {
        size_t j = i;
        while (j + 1 < x.n() && x.values[j + 1] == x.values[i]) ++j;
        pat.block_lengths.push_back(j - i + 1);
        i = j + 1;
    }
    std::vector<size_t> wit_max, wit_min;
    bool mx = x.n() == 0 || pattern_search(x.values, k, true, wit_max);
    bool mn = x.n() == 0 || pattern_search(x.values, k, false, wit_min);
    pat.role = mx && mn ? ExtremalRole::Both
               : mx     ? ExtremalRole::Maximal
               : mn     ? ExtremalRole::Minimal
                        : ExtremalRole::Neither;
    pat.witness_indices = mx ? wit_max : wit_min;
    return pat;
}

bool is_singleton(const Configuration& x, int k) {
    if (static_cast<int>(x.n()) < k)
        throw std::invalid_argument("is_singleton: requires n >= k");
    ExtremalRole role = extremal_classify(x, k - 1).role;
    return role != ExtremalRole::Neither;
}

SixPointOutcome six_point_check(const std::array<Rational, 3>& xyz,
                                const std::array<Rational, 3>& abc) {
    for (const auto& v : xyz)
        if (v < 0) throw std::invalid_argument("six_point_check: entries must be >= 0");
    for (const auto& v : abc)
        if (v < 0) throw std::invalid_argument("six_point_check: entries must be >= 0");
    Rational s2x = 0, s3x = 0, s2a = 0, s3a = 0;
    for (const auto& v : xyz) {
        s2x += v * v;
        s3x += v * v * v;
    }
    for (const auto& v : abc) {
        s2a += v * v;
        s3a += v * v * v;
    }
    if (s2x != s2a || s3x != s3a) return SixPointOutcome::DifferentClass;
    Rational mx = std::max({xyz[0], xyz[1], xyz[2]});
    Rational ma = std::max({abc[0], abc[1], abc[2]});
    return mx >= ma ? SixPointOutcome::Dominates : SixPointOutcome::NotDominates;
}

}  // namespace hoc
