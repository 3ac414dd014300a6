#include "hoc/paths.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hoc {

namespace {

constexpr double kCancelTol = 1e-9;

double trunc_pow(double base, int e) {
    if (base <= 0) return e == 0 ? 0.0 : 0.0;
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double rk_at(const std::vector<std::pair<double, double>>& nodes, int k, double x) {
    double acc = 0.0;
    for (const auto& [a, w] : nodes) {
        double d = a - x;
        if (d > 0) acc += w * trunc_pow(d, k - 1);
    }
    return acc;
}

std::vector<double> power_sums_d(const std::vector<double>& v, int upto) {
    std::vector<double> s(upto, 0.0);
    for (double x : v) {
        double p = 1.0;
        for (int j = 0; j < upto; ++j) {
            p *= x;
            s[j] += p;
        }
    }
    return s;
}

}  // namespace

FloatConfig::FloatConfig(std::vector<double> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end(), std::greater<>());
}

double numeric_rk_min(const std::vector<std::pair<double, double>>& nodes, int k,
                      int grid_points) {
    if (nodes.empty()) return 0.0;
    double lo = nodes[0].first, hi = nodes[0].first;
    for (const auto& [a, w] : nodes) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    if (lo == hi) return std::min(0.0, rk_at(nodes, k, lo));
    double best = std::numeric_limits<double>::infinity(), best_x = lo;
    auto scan = [&](double a, double b, int pts) {
        for (int i = 0; i <= pts; ++i) {
            double x = a + (b - a) * i / pts;
            double v = rk_at(nodes, k, x);
            if (v < best) {
                best = v;
                best_x = x;
            }
        }
    };
    scan(lo, hi, grid_points);
    double step = (hi - lo) / grid_points;
    for (int round = 0; round < 3; ++round) {
        double a = std::max(lo, best_x - 2 * step);
        double b = std::min(hi, best_x + 2 * step);
        scan(a, b, 256);
        step = (b - a) / 256;
    }
    return best;
}

NumericVerdict numeric_decide(const std::vector<std::pair<double, double>>& nodes, int k,
                              double tol) {
    if (tol <= 0) throw std::invalid_argument("numeric_decide: tol must be positive");
    for (int j = 0; j < k; ++j) {
        double m = 0.0, scale = 1.0;
        for (const auto& [a, w] : nodes) {
            double p = std::pow(std::abs(a), j);
            m += w * (j == 0 ? 1.0 : std::pow(a, j));
            scale += std::abs(w) * p;
        }
        if (std::abs(m) > tol * scale) return NumericVerdict::MomentViolation;
    }
    return numeric_rk_min(nodes, k) >= -tol ? NumericVerdict::Holds : NumericVerdict::Fails;
}

std::vector<std::pair<double, double>> difference_nodes(const FloatConfig& upper,
                                                        const FloatConfig& lower) {
    std::vector<std::pair<double, double>> nodes;
    for (double v : upper.values) nodes.emplace_back(v, 1.0);
    for (double v : lower.values) nodes.emplace_back(v, -1.0);
    return nodes;
}

namespace {

/// All block-length vectors of the extremal pattern with k-1 blocks:
/// odd-position blocks pinned to size 1 for maximal patterns,
/// even-position blocks for minimal.
void enumerate_lengths(int blocks, int pos, int remaining, bool maximal,
                       std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == blocks) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    bool pinned = maximal ? (pos % 2 == 0) : (pos % 2 == 1);
    int lo = 1, hi = pinned ? 1 : remaining - (blocks - pos - 1);
    for (int l = lo; l <= hi; ++l) {
        cur.push_back(l);
        enumerate_lengths(blocks, pos + 1, remaining - l, maximal, cur, out);
        cur.pop_back();
    }
}

}  // namespace

FloatConfig find_extremal_numeric(const FloatConfig& x, int k, ExtremalRole role,
                                  double residual_tol) {
    if (role != ExtremalRole::Maximal && role != ExtremalRole::Minimal)
        throw std::invalid_argument("find_extremal_numeric: role must be maximal or minimal");
    int n = static_cast<int>(x.n());
    if (n < 2 || k < 3) throw std::invalid_argument("find_extremal_numeric: need n >= 2, k >= 3");
    if (x.values.front() - x.values.back() < 1e-12) return x;  // already both patterns

    int eqs = k - 1;
    std::vector<double> target = power_sums_d(x.values, eqs);
    double scale = 1.0;
    for (double s : target) scale = std::max(scale, std::abs(s));

    bool maximal = role == ExtremalRole::Maximal;
    std::vector<std::vector<int>> candidates;
    if (eqs <= n) {
        std::vector<int> cur;
        enumerate_lengths(eqs, 0, n, maximal, cur, candidates);
    }
    if (candidates.empty())
        throw std::runtime_error("find_extremal_numeric: no extremal block pattern fits n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));

    bool found = false;
    double best_score = 0.0;
    std::vector<double> best_values;
    for (const auto& lengths : candidates) {
        int r = static_cast<int>(lengths.size());
        // initial guess: block means of x
        Eigen::VectorXd v(r);
        int idx = 0;
        for (int i = 0; i < r; ++i) {
            double sum = 0.0;
            for (int j = 0; j < lengths[i]; ++j) sum += x.values[idx++];
            v[i] = sum / lengths[i];
        }
        bool converged = false;
        for (int iter = 0; iter < 200; ++iter) {
            Eigen::VectorXd f(eqs);
            Eigen::MatrixXd jac(eqs, r);
            for (int j = 1; j <= eqs; ++j) {
                double fj = -target[j - 1];
                for (int i = 0; i < r; ++i) {
                    fj += lengths[i] * std::pow(v[i], j);
                    jac(j - 1, i) = lengths[i] * j * std::pow(v[i], j - 1);
                }
                f[j - 1] = fj;
            }
            if (f.lpNorm<Eigen::Infinity>() < residual_tol * scale) {
                converged = true;
                break;
            }
            Eigen::VectorXd delta = jac.fullPivLu().solve(-f);
            double cap = 0.5 * (x.values.front() - x.values.back() + 1.0);
            if (delta.lpNorm<Eigen::Infinity>() > cap)
                delta *= cap / delta.lpNorm<Eigen::Infinity>();
            v += delta;
        }
        if (!converged) continue;
        bool descending = true;
        for (int i = 0; i + 1 < r; ++i)
            if (v[i] < v[i + 1] - 1e-9) descending = false;
        if (!descending) continue;
        double score = 0.0;
        for (int i = 0; i < r; ++i) score += lengths[i] * std::pow(v[i], k);
        if (!found || (maximal ? score > best_score : score < best_score)) {
            found = true;
            best_score = score;
            best_values.clear();
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < lengths[i]; ++j) best_values.push_back(v[i]);
        }
    }
    if (!found)
        throw std::runtime_error(
            "find_extremal_numeric: Newton found no real extremal configuration (n=" +
            std::to_string(n) + ", k=" + std::to_string(k) + ")");
    return FloatConfig(std::move(best_values));
}

namespace {

/// Remove coordinates shared by cur and tgt (within tol), recording them
/// as fixed.
void cancel_shared(std::vector<double>& cur, std::vector<double>& tgt,
                   std::vector<double>& fixed, double tol = kCancelTol) {
    for (size_t i = 0; i < cur.size();) {
        bool matched = false;
        for (size_t j = 0; j < tgt.size(); ++j) {
            if (std::abs(cur[i] - tgt[j]) <= tol) {
                fixed.push_back(tgt[j]);
                cur.erase(cur.begin() + i);
                tgt.erase(tgt.begin() + j);
                matched = true;
                break;
            }
        }
        if (!matched) ++i;
    }
}

std::vector<double> merged_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

struct TripleFamily {
    double sigma, q;
    // coordinates (u, v, w) with u the largest, as a function of u
    std::array<double, 3> at(double u) const {
        double s = sigma - u;
        double disc = std::max(0.0, 2 * (q - u * u) - s * s);
        double root = std::sqrt(disc);
        return {u, (s + root) / 2, (s - root) / 2};
    }
    // u at the minimal configuration (u = v)
    double u_min() const {
        return (2 * sigma + std::sqrt(std::max(0.0, 6 * q - 2 * sigma * sigma))) / 6;
    }
};

/// Descend from start to tgt through repeated triple deformations with
/// equal s_1, s_2 (the k = 3 recursion). Returns full sorted configs,
/// start first, tgt last. Throws on stall.
std::vector<std::vector<double>> descend_k3(std::vector<double> cur, std::vector<double> tgt,
                                            int steps) {
    std::vector<double> fixed;
    cancel_shared(cur, tgt, fixed);
    std::vector<std::vector<double>> trail{merged_sorted(cur, fixed)};
    size_t initial = cur.size();
    int steps_per_stage = std::max<int>(16, steps / std::max<size_t>(1, initial));

    while (!cur.empty()) {
        std::sort(cur.begin(), cur.end(), std::greater<>());
        std::sort(tgt.begin(), tgt.end(), std::greater<>());
        if (cur.size() <= 2) {
            // equal s_1 (and s_2) leave no freedom here
            for (size_t i = 0; i < cur.size(); ++i)
                if (std::abs(cur[i] - tgt[i]) > 1e-6)
                    throw std::runtime_error("increasing path: stalled with irreducible residue");
            for (double t : tgt) fixed.push_back(t);
            cur.clear();
            tgt.clear();
            trail.push_back(merged_sorted(cur, fixed));
            break;
        }
        // first index where tgt's largest exceeds the current coordinate
        size_t m = 0;
        while (m < cur.size() && cur[m] > tgt[0]) ++m;
        if (m == 0) throw std::runtime_error("increasing path: dominance lost (tgt max above cur max)");
        size_t i0 = std::min(m - 1, cur.size() - 3);
        // a tied leading pair leaves the triple at the bottom of its
        // deformation family; shift left to regain slack
        while (i0 > 0 && cur[i0] <= cur[i0 + 1] + 1e-12) --i0;

        TripleFamily fam{cur[i0] + cur[i0 + 1] + cur[i0 + 2],
                         cur[i0] * cur[i0] + cur[i0 + 1] * cur[i0 + 1] + cur[i0 + 2] * cur[i0 + 2]};
        double u0 = cur[i0];
        double u_end = fam.u_min();

        auto rest_without_triple = [&] {
            std::vector<double> rest;
            for (size_t i = 0; i < cur.size(); ++i)
                if (i < i0 || i > i0 + 2) rest.push_back(cur[i]);
            return rest;
        };
        std::vector<double> rest = rest_without_triple();

        auto push_sample = [&](const std::array<double, 3>& triple) {
            std::vector<double> vals = rest;
            vals.insert(vals.end(), triple.begin(), triple.end());
            vals.insert(vals.end(), fixed.begin(), fixed.end());
            std::sort(vals.begin(), vals.end(), std::greater<>());
            trail.push_back(std::move(vals));
        };

        bool collided = false;
        size_t hit_tgt = 0;
        int hit_coord = 0;
        double u_hit = u_end;
        auto prev = fam.at(u0);
        double u_prev = u0;
        for (int step = 1; step <= steps_per_stage && !collided; ++step) {
            double u = u0 + (u_end - u0) * step / steps_per_stage;
            auto tri = fam.at(u);
            for (int c = 0; c < 3 && !collided; ++c) {
                for (size_t j = 0; j < tgt.size() && !collided; ++j) {
                    double f_prev = prev[c] - tgt[j];
                    double f_now = tri[c] - tgt[j];
                    if (f_prev == 0 || f_now == 0 || (f_prev > 0) != (f_now > 0)) {
                        // bisect on u for the exact collision
                        double ulo = u_prev, uhi = u;
                        for (int it = 0; it < 200; ++it) {
                            double um = (ulo + uhi) / 2;
                            double fm = fam.at(um)[c] - tgt[j];
                            if ((fm > 0) == (f_prev > 0))
                                ulo = um;
                            else
                                uhi = um;
                        }
                        u_hit = (ulo + uhi) / 2;
                        hit_tgt = j;
                        hit_coord = c;
                        collided = true;
                    }
                }
            }
            if (collided) break;
            push_sample(tri);
            prev = tri;
            u_prev = u;
        }
        if (!collided) {
            // the proof guarantees a collision before the triple bottoms
            // out; allow a tolerance snap to the nearest target
            auto tri = fam.at(u_end);
            double best = 1e9;
            for (int c = 0; c < 3; ++c)
                for (size_t j = 0; j < tgt.size(); ++j)
                    if (std::abs(tri[c] - tgt[j]) < best) {
                        best = std::abs(tri[c] - tgt[j]);
                        hit_coord = c;
                        hit_tgt = j;
                        u_hit = u_end;
                    }
            if (best > 1e-6)
                throw std::runtime_error("increasing path: triple deformation stalled before collision");
            collided = true;
        }
        auto tri = fam.at(u_hit);
        tri[hit_coord] = tgt[hit_tgt];  // snap
        push_sample(tri);
        // retire the matched coordinate, keep the other two
        fixed.push_back(tgt[hit_tgt]);
        tgt.erase(tgt.begin() + hit_tgt);
        cur = rest;
        for (int c = 0; c < 3; ++c)
            if (c != hit_coord) cur.push_back(tri[c]);
        cancel_shared(cur, tgt, fixed);
    }
    return trail;
}

PathResult finalize_path(std::vector<std::vector<double>> configs, int k, int margin_grid = 512) {
    PathResult pr;
    size_t m = configs.size();
    for (size_t i = 0; i < m; ++i)
        pr.samples.push_back({m <= 1 ? 0.0 : static_cast<double>(i) / (m - 1),
                              FloatConfig(std::move(configs[i]))});
    if (pr.samples.empty()) return pr;
    auto base = power_sums_d(pr.samples.front().config.values, k - 1);
    double cons = 0.0;
    for (const auto& s : pr.samples) {
        auto ps = power_sums_d(s.config.values, k - 1);
        for (int j = 0; j < k - 1; ++j) cons = std::max(cons, std::abs(ps[j] - base[j]));
    }
    pr.conservation_error = cons;
    double margin = 0.0;
    bool first = true;
    for (size_t i = 0; i + 1 < pr.samples.size(); ++i) {
        double v = numeric_rk_min(
            difference_nodes(pr.samples[i + 1].config, pr.samples[i].config), k, margin_grid);
        if (first || v < margin) margin = v;
        first = false;
    }
    pr.monotonicity_margin = margin;
    return pr;
}

void require_same_class(const FloatConfig& a, const FloatConfig& b, int k, double tol) {
    auto sa = power_sums_d(a.values, k - 1);
    auto sb = power_sums_d(b.values, k - 1);
    for (int j = 0; j < k - 1; ++j) {
        double scale = std::max({1.0, std::abs(sa[j]), std::abs(sb[j])});
        if (std::abs(sa[j] - sb[j]) > tol * scale)
            throw std::invalid_argument("increasing path: power sums s_" + std::to_string(j + 1) +
                                        " differ");
    }
}

bool configs_equal(const FloatConfig& a, const FloatConfig& b, double tol = 1e-12) {
    if (a.n() != b.n()) return false;
    for (size_t i = 0; i < a.n(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

}  // namespace

PathResult increasing_path_k3(const FloatConfig& a, const FloatConfig& b, int steps) {
    if (a.n() != b.n()) throw std::invalid_argument("increasing_path_k3: size mismatch");
    if (a.n() < 1) throw std::invalid_argument("increasing_path_k3: empty configuration");
    require_same_class(a, b, 3, 1e-7);
    if (configs_equal(a, b, 1e-11)) return finalize_path({b.values}, 3);
    if (numeric_decide(difference_nodes(a, b), 3, 1e-9) != NumericVerdict::Holds)
        throw std::invalid_argument("increasing_path_k3: a does not dominate b");
    auto trail = descend_k3(a.values, b.values, steps);
    std::reverse(trail.begin(), trail.end());  // b first, a last
    return finalize_path(std::move(trail), 3);
}

namespace {

/// Least-norm Newton projection of vals onto prescribed power sums
/// s_1..s_m.
void project_power_sums(std::vector<double>& vals, const std::vector<double>& target) {
    int m = static_cast<int>(target.size());
    int n = static_cast<int>(vals.size());
    for (int iter = 0; iter < 4; ++iter) {
        Eigen::VectorXd r(m);
        Eigen::MatrixXd jac(m, n);
        auto ps = power_sums_d(vals, m);
        for (int j = 1; j <= m; ++j) {
            r[j - 1] = target[j - 1] - ps[j - 1];
            for (int i = 0; i < n; ++i) jac(j - 1, i) = j * std::pow(vals[i], j - 1);
        }
        Eigen::VectorXd delta =
            jac.transpose() * (jac * jac.transpose()).fullPivLu().solve(r);
        for (int i = 0; i < n; ++i) vals[i] += delta[i];
    }
}

}  // namespace

PathResult increasing_path_nk1(const FloatConfig& a, const FloatConfig& b, int k, int steps) {
    if (k != 3)
        throw std::invalid_argument("increasing_path_nk1: only k = 3 is supported");
    if (a.n() != b.n() || static_cast<int>(a.n()) != k + 1)
        throw std::invalid_argument("increasing_path_nk1: requires n = k+1");
    require_same_class(a, b, k, 1e-7);
    if (configs_equal(a, b, 1e-11)) return finalize_path({b.values}, k);
    if (numeric_decide(difference_nodes(a, b), k, 1e-9) != NumericVerdict::Holds)
        throw std::invalid_argument("increasing_path_nk1: a does not dominate b");

    // stage 1: ascend from b toward the maximal element of its class
    FloatConfig bmax = find_extremal_numeric(b, k, ExtremalRole::Maximal, 1e-14);
    std::vector<std::vector<double>> ascent;
    if (configs_equal(b, bmax, 1e-10)) {
        ascent = {b.values};
    } else {
        ascent = descend_k3(bmax.values, b.values, steps);
        std::reverse(ascent.begin(), ascent.end());  // b first
    }

    // if a is the class maximum itself the ascent already is the path;
    // the crossing machinery below degenerates there (tied coordinates
    // make the power sum Jacobian rank deficient)
    if (configs_equal(a, bmax, 1e-7)) {
        ascent.front() = b.values;
        ascent.back() = a.values;
        return finalize_path(std::move(ascent), k);
    }

    // first sample where the largest coordinate reaches a's largest or the
    // smallest reaches a's smallest
    double a_max = a.values.front(), a_min = a.values.back();
    auto crossed = [&](const std::vector<double>& v) {
        return v.front() >= a_max - 1e-12 || v.back() >= a_min - 1e-12;
    };
    size_t cross = 0;
    while (cross < ascent.size() && !crossed(ascent[cross])) ++cross;
    if (cross == ascent.size())
        throw std::runtime_error("increasing_path_nk1: ascent never reached a's end coordinates");

    std::vector<std::vector<double>> prefix(ascent.begin(), ascent.begin() + cross + 1);

    // refine the crossing between the last two prefix samples by projected
    // interpolation, then snap the matched coordinate exactly
    std::vector<double> at_cross = prefix.back();
    auto target_sums = power_sums_d(b.values, k - 1);
    if (prefix.size() >= 2) {
        const auto& lo = prefix[prefix.size() - 2];
        double alo = 0.0, ahi = 1.0;
        for (int it = 0; it < 80; ++it) {
            double am = (alo + ahi) / 2;
            std::vector<double> v(lo.size());
            for (size_t i = 0; i < v.size(); ++i)
                v[i] = (1 - am) * lo[i] + am * prefix.back()[i];
            project_power_sums(v, target_sums);
            std::sort(v.begin(), v.end(), std::greater<>());
            if (crossed(v))
                ahi = am;
            else
                alo = am;
        }
        std::vector<double> v(lo.size());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = (1 - ahi) * lo[i] + ahi * prefix.back()[i];
        project_power_sums(v, target_sums);
        std::sort(v.begin(), v.end(), std::greater<>());
        prefix.back() = v;
        at_cross = v;
    }

    bool match_max = std::abs(at_cross.front() - a_max) <= std::abs(at_cross.back() - a_min);
    std::vector<double> reduced_cur, reduced_a;
    double matched = match_max ? a_max : a_min;
    {
        std::vector<double> v = at_cross;
        if (match_max) {
            v.front() = a_max;
            reduced_cur.assign(v.begin() + 1, v.end());
            reduced_a.assign(a.values.begin() + 1, a.values.end());
        } else {
            v.back() = a_min;
            reduced_cur.assign(v.begin(), v.end() - 1);
            reduced_a.assign(a.values.begin(), a.values.end() - 1);
        }
        // restore the class sums on the remaining coordinates
        std::vector<double> reduced_target(k - 1);
        auto pa = power_sums_d(reduced_a, k - 1);
        for (int j = 0; j < k - 1; ++j) reduced_target[j] = pa[j];
        project_power_sums(reduced_cur, reduced_target);
        std::sort(reduced_cur.begin(), reduced_cur.end(), std::greater<>());
        v = reduced_cur;
        v.push_back(matched);
        std::sort(v.begin(), v.end(), std::greater<>());
        prefix.back() = v;
    }

    // stage 2: connect inside the n = k stratum
    std::vector<std::vector<double>> tail;
    if (FloatConfig rc{std::vector<double>(reduced_cur)}, ra{std::vector<double>(reduced_a)};
        configs_equal(rc, ra, 1e-9)) {
        tail = {reduced_a};
    } else {
        tail = descend_k3(reduced_a, reduced_cur, steps);
        std::reverse(tail.begin(), tail.end());
    }
    for (auto& v : tail) {
        v.push_back(matched);
        std::sort(v.begin(), v.end(), std::greater<>());
    }

    std::vector<std::vector<double>> all = std::move(prefix);
    all.insert(all.end(), tail.begin() + 1, tail.end());
    all.front() = b.values;  // exact endpoints
    all.back() = a.values;
    return finalize_path(std::move(all), k);
}

PathResult ode_demo_path(const std::array<double, 3>& x0, std::pair<double, double> t_span,
                         int steps) {
    auto [x, y, z] = x0;
    auto degenerate = [](double u, double v, double w) {
        return std::abs(u) < 1e-9 || std::abs(u - v) < 1e-9 || std::abs(u - w) < 1e-9;
    };
    if (degenerate(x, y, z) || degenerate(y, x, z) || degenerate(z, x, y))
        throw std::invalid_argument("ode_demo_path: coordinates must be distinct and nonzero");
    if (steps < 1) throw std::invalid_argument("ode_demo_path: steps must be >= 1");

    const double denom_floor = 1e-3;
    auto deriv = [&](const std::array<double, 3>& s, std::array<double, 3>& d) {
        auto [u, v, w] = s;
        double d1 = u * (u - v) * (u - w);
        double d2 = v * (v - u) * (v - w);
        double d3 = w * (w - u) * (w - v);
        if (std::abs(d1) < denom_floor || std::abs(d2) < denom_floor ||
            std::abs(d3) < denom_floor)
            return false;
        d = {1 / d1, 1 / d2, 1 / d3};
        return true;
    };

    std::array<double, 3> state{x, y, z};
    std::vector<double> sums_target = {x * x + y * y + z * z, x * x * x + y * y * y + z * z * z};
    auto project = [&](std::array<double, 3>& s) {
        std::vector<double> v{s[0], s[1], s[2]};
        // constraints are on squares and cubes, not plain power sums
        for (int iter = 0; iter < 3; ++iter) {
            Eigen::Vector2d r(sums_target[0] - (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]),
                              sums_target[1] -
                                  (v[0] * v[0] * v[0] + v[1] * v[1] * v[1] + v[2] * v[2] * v[2]));
            Eigen::Matrix<double, 2, 3> jac;
            for (int i = 0; i < 3; ++i) {
                jac(0, i) = 2 * v[i];
                jac(1, i) = 3 * v[i] * v[i];
            }
            Eigen::Vector3d delta = jac.transpose() * (jac * jac.transpose()).lu().solve(r);
            for (int i = 0; i < 3; ++i) v[i] += delta[i];
        }
        s = {v[0], v[1], v[2]};
    };

    auto six_config = [](const std::array<double, 3>& s) {
        std::vector<double> v{s[0], s[1], s[2], -s[2], -s[1], -s[0]};
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };

    std::vector<std::vector<double>> configs{six_config(state)};
    double h = (t_span.second - t_span.first) / steps;
    for (int i = 0; i < steps; ++i) {
        std::array<double, 3> k1, k2, k3, k4, tmp;
        if (!deriv(state, k1)) break;
        for (int j = 0; j < 3; ++j) tmp[j] = state[j] + h / 2 * k1[j];
        if (!deriv(tmp, k2)) break;
        for (int j = 0; j < 3; ++j) tmp[j] = state[j] + h / 2 * k2[j];
        if (!deriv(tmp, k3)) break;
        for (int j = 0; j < 3; ++j) tmp[j] = state[j] + h * k3[j];
        if (!deriv(tmp, k4)) break;
        for (int j = 0; j < 3; ++j)
            state[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        project(state);
        configs.push_back(six_config(state));
    }
    return finalize_path(std::move(configs), 4, 1024);
}

SchurCheckResult schur3_check(const GradientProvider& gradient,
                              const std::vector<std::array<double, 3>>& samples, double tol) {
    SchurCheckResult res;
    for (const auto& p : samples) {
        auto [x1, x2, x3] = p;
        if (x1 == x2 || x2 == x3 || x1 == x3) {
            ++res.skipped;
            continue;
        }
        auto g = gradient(p);
        double expr = ((g[0] - g[1]) / (x1 - x2) - (g[1] - g[2]) / (x2 - x3)) * (x1 - x3);
        if (expr < -tol) {
            res.pass = false;
            res.witness = p;
            return res;
        }
    }
    return res;
}

}  // namespace hoc
