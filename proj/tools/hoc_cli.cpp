#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hoc/json_io.hpp"
#include "hoc/paths.hpp"
#include "hoc/testgen.hpp"

namespace fs = std::filesystem;
using namespace hoc;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

int status_exit(Status s) {
    switch (s) {
        case Status::Holds: return kExitHolds;
        case Status::Fails: return kExitFails;
        default: return kExitError;
    }
}

struct CheckOutput {
    std::string text;
    int code;
};

CheckOutput check_one(const std::string& path, const std::string& criteria, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    InequalityProblem problem = parse_problem_json(read_file(path));
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    };

    if (criteria == "all" || criteria == "exact") {
        CriteriaReport rep;
        if (criteria == "exact")
            rep.verdict = decide_exact(problem);
        else
            rep = criteria_report(problem);
        int code = status_exit(rep.verdict.status);
        if (as_json) return {verdict_to_json(rep, elapsed_ms()), code};
        std::ostringstream out;
        out << path << ": "
            << (rep.verdict.status == Status::Holds   ? "holds"
                : rep.verdict.status == Status::Fails ? "fails"
                                                      : "moment_violation");
        if (rep.verdict.witness) out << " witness=" << rational_str(*rep.verdict.witness);
        if (rep.verdict.moment_index)
            out << " moment j=" << *rep.verdict.moment_index
                << " value=" << rational_str(*rep.verdict.moment_value);
        for (const auto& e : rep.entries) out << "\n  " << e.name << ": " << e.outcome
                                              << (e.detail.empty() ? "" : " (" + e.detail + ")");
        out << "\n";
        return {out.str(), code};
    }

    // single sufficient criterion: pass -> holds, otherwise inconclusive
    CriteriaReport rep;
    rep.verdict = {Status::Holds, std::nullopt, std::nullopt, std::nullopt, criteria};
    std::string outcome = "not_applicable", detail;
    int code = kExitInconclusive;
    if (criteria == "counting") {
        auto r = counting_criterion(problem);
        outcome = r.kind == CountingResult::Kind::Pass            ? "pass"
                  : r.kind == CountingResult::Kind::Inconclusive ? "inconclusive"
                                                                 : "not_applicable";
        if (r.kind == CountingResult::Kind::Pass) detail = "bullet " + std::to_string(r.bullet);
    } else if (criteria == "popoviciu") {
        if (problem.n() >= static_cast<size_t>(problem.k()) + 1) {
            auto dec = hammer_decompose(problem);
            if (dec.all_nonneg()) {
                outcome = "pass";
            } else {
                outcome = "fail";
                size_t bad = 0;
                while (dec.inner_sums[bad] >= 0) ++bad;
                detail = "window " + std::to_string(bad + 1) + " inner sum " +
                         rational_str(dec.inner_sums[bad]);
            }
        }
    } else if (criteria == "k3") {
        if (problem.k() == 3) {
            auto r = k3_criterion(problem);
            outcome = r == K3Outcome::Pass   ? "pass"
                      : r == K3Outcome::Fail ? "fail"
                                             : "moment_violation";
            if (r == K3Outcome::Fail) code = kExitFails;  // exact for k = 3
            if (r == K3Outcome::MomentViolation) code = kExitError;
        }
    } else if (criteria == "endpoint") {
        auto r = endpoint_criterion(problem);
        outcome = r == TriState::Pass ? "pass" : r == TriState::Fail ? "fail" : "not_applicable";
        if (r == TriState::Fail) code = kExitFails;  // exact when applicable
    } else {
        throw std::invalid_argument("unknown criteria selector: " + criteria);
    }
    if (outcome == "pass") code = kExitHolds;
    rep.entries.push_back({criteria, outcome, detail});
    if (as_json) return {verdict_to_json(rep, elapsed_ms()), code};
    std::ostringstream out;
    out << path << ": " << criteria << " " << outcome
        << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    return {out.str(), code};
}

int cmd_check(const std::string& path, const std::string& criteria, bool as_json) {
    std::vector<std::string> files;
    if (fs::is_directory(path)) {
        for (const auto& e : fs::directory_iterator(path))
            if (e.is_regular_file() && e.path().extension() == ".json")
                files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            std::cerr << "no .json files in " << path << "\n";
            return kExitError;
        }
    } else {
        files.push_back(path);
    }

    std::vector<std::future<CheckOutput>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(std::launch::async, check_one, f, criteria, as_json));
    int worst = kExitHolds;
    for (auto& j : jobs) {
        CheckOutput r = j.get();
        std::cout << r.text;
        worst = std::max(worst, r.code);
    }
    return worst;
}

int cmd_order(const std::string& px, const std::string& py, int k) {
    Configuration x = parse_configuration_json(read_file(px));
    Configuration y = parse_configuration_json(read_file(py));
    OrderRelation rel = compare(x, y, k);
    switch (rel) {
        case OrderRelation::Dominates: std::cout << "dominates\n"; return kExitHolds;
        case OrderRelation::Equal: std::cout << "equal\n"; return kExitHolds;
        case OrderRelation::Dominated: std::cout << "dominated\n"; return kExitFails;
        case OrderRelation::Incomparable: std::cout << "incomparable\n"; return kExitFails;
        default: std::cout << "different_class\n"; return kExitFails;
    }
}

int cmd_extremal(const std::string& path, int k, bool singleton) {
    Configuration x = parse_configuration_json(read_file(path));
    auto pat = extremal_classify(x, k);
    std::cout << "role: "
              << (pat.role == ExtremalRole::Maximal   ? "maximal"
                  : pat.role == ExtremalRole::Minimal ? "minimal"
                  : pat.role == ExtremalRole::Both    ? "both"
                                                      : "neither")
              << "\nblocks:";
    for (size_t b : pat.block_lengths) std::cout << " " << b;
    std::cout << "\n";
    if (singleton) std::cout << "singleton: " << (is_singleton(x, k) ? "true" : "false") << "\n";
    return kExitHolds;
}

std::string path_csv(const PathResult& res) {
    std::ostringstream csv;
    csv << "t";
    size_t n = res.samples.empty() ? 0 : res.samples.front().config.n();
    for (size_t i = 1; i <= n; ++i) csv << ",x" << i;
    csv << "\n" << std::setprecision(12);
    for (const auto& s : res.samples) {
        csv << s.t;
        for (double v : s.config.values) csv << "," << v;
        csv << "\n";
    }
    return csv.str();
}

int cmd_path(const std::string& pa, const std::string& pb, int k, int steps,
             const std::string& csv_out) {
    Configuration ca = parse_configuration_json(read_file(pa));
    Configuration cb = parse_configuration_json(read_file(pb));
    auto to_float = [](const Configuration& c) {
        std::vector<double> v;
        for (const auto& r : c.values) v.push_back(r.get_d());
        return FloatConfig(std::move(v));
    };
    FloatConfig a = to_float(ca), b = to_float(cb);
    if (a.n() != b.n()) {
        std::cerr << "configurations differ in length\n";
        return kExitError;
    }
    if (numeric_decide(difference_nodes(a, b), k, 1e-9) != NumericVerdict::Holds) {
        std::cerr << "no dominance: the first configuration does not dominate the second\n";
        return kExitFails;
    }
    PathResult res;
    try {
        if (k == 3 && a.n() != static_cast<size_t>(k) + 1)
            res = increasing_path_k3(a, b, steps);
        else if (a.n() == static_cast<size_t>(k) + 1)
            res = increasing_path_nk1(a, b, k, steps);
        else
            throw std::invalid_argument("supported cases: k = 3, or n = k+1 with k = 3");
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    std::cout << std::setprecision(12) << "samples: " << res.samples.size()
              << "\nconservation_error: " << res.conservation_error
              << "\nmonotonicity_margin: " << res.monotonicity_margin << "\n";
    std::string csv = path_csv(res);
    if (csv_out.empty())
        std::cout << csv;
    else
        write_file(csv_out, csv);
    return kExitHolds;
}

int cmd_gen(int n, int k, std::uint64_t seed, int count, const std::string& out_dir) {
    if (n <= k) {
        std::cerr << "n must exceed k\n";
        return kExitError;
    }
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec{n, k, Interval(Rational(-5), Rational(5)), seed + i};
        InequalityProblem p = sample_problem(spec);
        std::string path =
            (fs::path(out_dir) / ("gen_" + std::to_string(seed + i) + ".json")).string();
        write_file(path, problem_to_json(p));
        std::cout << path << "\n";
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision tool for higher-order convex inequalities"};
    app.require_subcommand(1);

    std::string check_path, criteria = "all";
    bool as_json = false;
    auto* check = app.add_subcommand("check", "decide a problem file (or a directory of them)");
    check->add_option("path", check_path)->required();
    check->add_option("--criteria", criteria)
        ->check(CLI::IsMember({"all", "exact", "counting", "popoviciu", "k3", "endpoint"}));
    check->add_flag("--json", as_json);

    std::string ox, oy;
    int order_k = 3;
    auto* order = app.add_subcommand("order", "compare two configurations");
    order->add_option("x", ox)->required();
    order->add_option("y", oy)->required();
    order->add_option("--k", order_k);

    std::string ex_path;
    int ex_k = 3;
    bool singleton = false;
    auto* extremal = app.add_subcommand("extremal", "classify the extremal pattern");
    extremal->add_option("path", ex_path)->required();
    extremal->add_option("--k", ex_k);
    extremal->add_flag("--singleton", singleton);

    std::string pa, pb, csv_out;
    int path_k = 3, steps = 256;
    auto* pathc = app.add_subcommand("path", "increasing path between dominant configurations");
    pathc->add_option("a", pa)->required();
    pathc->add_option("b", pb)->required();
    pathc->add_option("--k", path_k);
    pathc->add_option("--steps", steps);
    pathc->add_option("--csv", csv_out);

    int gn = 6, gk = 3, gcount = 1;
    std::uint64_t gseed = 42;
    std::string gout = ".";
    auto* gen = app.add_subcommand("gen", "generate zero-moment random problem files");
    gen->add_option("--n", gn);
    gen->add_option("--k", gk);
    gen->add_option("--seed", gseed);
    gen->add_option("--count", gcount);
    gen->add_option("--out", gout);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_path, criteria, as_json);
        if (order->parsed()) return cmd_order(ox, oy, order_k);
        if (extremal->parsed()) return cmd_extremal(ex_path, ex_k, singleton);
        if (pathc->parsed()) return cmd_path(pa, pb, path_k, steps, csv_out);
        if (gen->parsed()) return cmd_gen(gn, gk, gseed, gcount, gout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
