#include "hoc/roots.hpp"

#include <algorithm>
#include <functional>

namespace hoc {

std::vector<Poly> sturm_chain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    Poly q = p.squarefree_part();
    std::vector<Poly> chain{q};
    if (q.degree() == 0) return chain;
    chain.push_back(q.derivative());
    while (chain.back().degree() > 0) {
        Poly rem = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;  // can't happen for squarefree input, kept as a guard
        rem = -rem;
        // positive rescaling keeps signs, controls coefficient growth
        rem = rem * (Rational(1) / abs(rem.leading()));
        chain.push_back(std::move(rem));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int vars = 0, last = 0;
    for (const Poly& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

int count_roots(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    if (lo >= hi) return 0;
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_roots(const Poly& p, const Interval& iv) {
    return count_roots(sturm_chain(p), iv.lo, iv.hi);
}

namespace {

/// A split point in (a, b) that is not a root of q (degree+2 candidates
/// beat degree many roots).
Rational nonroot_split(const Poly& q, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    if (q.eval(mid) != 0) return mid;
    int d = q.degree();
    for (int i = 1; i <= d + 1; ++i) {
        Rational m = a + (b - a) * rational_frac(i, d + 2);
        if (m > a && m < b && q.eval(m) != 0) return m;
    }
    throw std::logic_error("nonroot_split: no candidate found");
}

}  // namespace

std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv, IsolateOptions opts) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    Poly q = p.squarefree_part();
    std::vector<Poly> chain = sturm_chain(p);
    std::vector<Interval> out;
    if (q.eval(iv.lo) == 0) out.emplace_back(iv.lo, iv.lo);
    if (iv.lo == iv.hi) return out;

    Rational target_width = opts.resolution_bits >= 0
                                ? Rational(iv.width() / rational_pow(Rational(2), opts.resolution_bits))
                                : Rational(0);

    // Shrink (a, b] around its single root until the width target is met;
    // an exact rational root collapses to a point interval.
    auto refine_one = [&](Rational a, Rational b) -> Interval {
        if (opts.resolution_bits >= 0) {
            while (b - a > target_width) {
                Rational m = (a + b) / 2;
                if (q.eval(m) == 0) return Interval(m, m);
                if (count_roots(chain, a, m) == 1)
                    b = m;
                else
                    a = m;
            }
        }
        return Interval(a, b);
    };

    std::function<void(const Rational&, const Rational&, int)> solve =
        [&](const Rational& a, const Rational& b, int cnt) {
            if (cnt == 0) return;
            if (cnt == 1) {
                out.push_back(refine_one(a, b));
                return;
            }
            Rational m = nonroot_split(q, a, b);
            int cl = count_roots(chain, a, m);
            solve(a, m, cl);
            solve(m, b, cnt - cl);
        };
    solve(iv.lo, iv.hi, count_roots(chain, iv.lo, iv.hi));
    return out;
}

namespace {

/// Sorted evaluation points covering every constant-sign region of p on
/// [lo, hi]: the endpoints, plus one point strictly between consecutive
/// distinct roots (and between an endpoint root and its neighbor).
std::vector<Rational> region_sample_points(const Poly& p, const Interval& iv) {
    std::vector<Rational> pts{iv.lo, iv.hi};
    if (iv.lo == iv.hi) return {iv.lo};
    auto ivls = isolate_roots(p, iv);

    // If lo is a root, the region just right of lo needs a sample; make
    // sure the first bracketing interval starts strictly above lo.
    if (p.eval(iv.lo) == 0) {
        for (auto& cur : ivls) {
            if (cur.lo == cur.hi) continue;  // point interval
            if (cur.lo > iv.lo) break;
            Poly q = p.squarefree_part();
            std::vector<Poly> chain = sturm_chain(p);
            Rational a = cur.lo, b = cur.hi;
            while (a == iv.lo) {
                Rational m = (a + b) / 2;
                if (q.eval(m) == 0) {
                    a = b = m;
                    break;
                }
                if (count_roots(chain, a, m) == 1)
                    b = m;
                else
                    a = m;
            }
            cur = Interval(a, b);
            break;
        }
        if (!ivls.empty()) {
            // sample between lo and the first interval
            const auto& f = ivls.front();
            if (f.lo > iv.lo) pts.push_back((iv.lo + f.lo) / 2);
        }
    }

    for (size_t i = 0; i < ivls.size(); ++i) {
        Rational next_left = (i + 1 < ivls.size()) ? ivls[i + 1].lo : iv.hi;
        if (ivls[i].lo == ivls[i].hi) {
            // exact root: sample strictly to its right
            if (next_left > ivls[i].hi) pts.push_back((ivls[i].hi + next_left) / 2);
        } else if (ivls[i].hi < iv.hi) {
            // the right endpoint of a bracketing interval is a split point,
            // never a root, and lies before the next root
            pts.push_back(ivls[i].hi);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

NonnegResult nonneg_on_interval(const Poly& p, const Interval& iv) {
    if (p.is_zero()) return {};
    for (const Rational& x : region_sample_points(p, iv))
        if (p.eval(x) < 0) return {x};
    return {};
}

std::vector<Rational> sign_region_samples(const Poly& p, const Interval& iv) {
    std::vector<Rational> vals;
    if (p.is_zero()) return vals;
    for (const Rational& x : region_sample_points(p, iv)) {
        Rational v = p.eval(x);
        if (v != 0) vals.push_back(std::move(v));
    }
    return vals;
}

}  // namespace hoc
