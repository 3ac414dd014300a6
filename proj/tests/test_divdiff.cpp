#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hoc/criteria.hpp"
#include "hoc/divdiff.hpp"
#include "hoc/testgen.hpp"

using namespace hoc;

namespace {

InequalityProblem six_point() {
    return InequalityProblem(
        {{Rational(6), Rational(1)},
         {Rational(5), Rational(-3)},
         {Rational(4), Rational(3)},
         {Rational(2), Rational(-3)},
         {Rational(1), Rational(3)},
         {Rational(0), Rational(-1)}},
        3);
}

InequalityProblem karamata() {
    return InequalityProblem({{Rational(3), Rational(1)}, {Rational(2), Rational(-2)}, {Rational(1), Rational(1)}},
                             2);
}

FunctionTable tabulate(const std::vector<Rational>& points, const SynthFunction& f) {
    FunctionTable t;
    t.points = points;
    for (const auto& x : points) t.values.push_back(synth_eval(f, x));
    return t;
}

SynthFunction random_synth(std::mt19937_64& rng, int order, const Interval& dom) {
    std::uniform_int_distribution<int> coeff(-10, 10), cpos(0, 10), nk(1, 6), num(-40, 40);
    std::vector<Rational> pc(order);
    for (auto& c : pc) c = coeff(rng);
    std::vector<std::pair<Rational, Rational>> knots;
    int m = nk(rng);
    for (int i = 0; i < m; ++i) {
        Rational t = dom.lo + dom.width() * rational_frac(num(rng) + 40, 80);
        knots.emplace_back(t, Rational(cpos(rng)));
    }
    return SynthFunction(Poly(std::move(pc)), std::move(knots), order);
}

}  // namespace

TEST_CASE("divided_difference basics") {
    CHECK(divided_difference({{Rational(5)}, {Rational(42)}}) == Rational(42));
    CHECK(divided_difference({{Rational(2), Rational(0)}, {Rational(4), Rational(0)}}) ==
          Rational(2));
    FunctionTable cube{{Rational(6), Rational(5), Rational(4), Rational(3)},
                       {Rational(216), Rational(125), Rational(64), Rational(27)}};
    CHECK(divided_difference(cube) == Rational(1));
    CHECK_THROWS_AS(divided_difference({{Rational(1), Rational(1)}, {Rational(0), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("divided_difference permutation symmetry and degree annihilation") {
    std::mt19937_64 rng(17);
    std::vector<Rational> pts{Rational(3), Rational(1), Rational(-2), Rational(5, 2)};
    for (int d = 0; d <= 3; ++d) {
        FunctionTable t;
        t.points = pts;
        for (const auto& x : pts) t.values.push_back(rational_pow(x, d));
        Rational expect = d < 3 ? Rational(0) : Rational(1);
        CHECK(divided_difference(t) == expect);
        auto shuffled = t;
        std::vector<size_t> idx{2, 0, 3, 1};
        for (size_t i = 0; i < 4; ++i) {
            shuffled.points[i] = t.points[idx[i]];
            shuffled.values[i] = t.values[idx[i]];
        }
        CHECK(divided_difference(shuffled) == divided_difference(t));
    }
}

TEST_CASE("synth_eval") {
    SynthFunction ramp(Poly(), {{Rational(0), Rational(1)}}, 2);
    CHECK(synth_eval(ramp, Rational(3)) == Rational(3));
    CHECK(synth_eval(ramp, Rational(-1)) == Rational(0));

    SynthFunction ident(Poly({std::vector<Rational>{Rational(0), Rational(1)}}), {}, 2);
    CHECK(synth_eval(ident, Rational(-5)) == Rational(-5));

    SynthFunction two(Poly(), {{Rational(1), Rational(2)}, {Rational(-1), Rational(1)}}, 3);
    CHECK(synth_eval(two, Rational(2)) == Rational(11));
    CHECK_THROWS_AS(SynthFunction(Poly(), {{Rational(0), Rational(-1)}}, 2),
                    std::invalid_argument);
}

TEST_CASE("apply_functional") {
    CHECK(apply_functional(six_point(), SynthFunction::prototype(Rational(9, 2), 3)) ==
          Rational(3, 2));
    CHECK(apply_functional(karamata(), SynthFunction::prototype(Rational(2), 2)) == Rational(1));
    // zero moments kill polynomials of degree < k
    auto p = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 9u});
    CHECK(apply_functional(p, SynthFunction::monomial(2, 3)) == Rational(0));
    CHECK_THROWS_AS(apply_functional(karamata(), SynthFunction::prototype(Rational(0), 3)),
                    std::invalid_argument);
}

TEST_CASE("prototype bridge: functional on prototype equals spline value") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(-70, 70);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto p = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 500u + seed});
        auto rk = build_rk(p, p.k());
        for (int t = 0; t < 100; ++t) {
            Rational x = rational_frac(num(rng), 10);
            CHECK(apply_functional(p, SynthFunction::prototype(x, p.k())) == spline_eval(rk, x));
        }
    }
}

TEST_CASE("hammer_decompose golden values") {
    auto unaug = hammer_decompose(six_point());
    REQUIRE(unaug.inner_sums.size() == 3);
    CHECK(unaug.inner_sums[1] == Rational(-1));
    CHECK(!unaug.all_nonneg());

    auto aug = hammer_decompose(six_point(), {Rational(3)});
    REQUIRE(aug.coefficients.size() == 4);
    CHECK(aug.coefficients[0] == Rational(6));
    CHECK(aug.coefficients[1] == Rational(0));
    CHECK(aug.coefficients[2] == Rational(0));
    CHECK(aug.coefficients[3] == Rational(6));

    auto kar = hammer_decompose(karamata());
    REQUIRE(kar.inner_sums.size() == 1);
    CHECK(kar.inner_sums[0] == Rational(1));
    CHECK(kar.all_nonneg());

    CHECK_THROWS_AS(hammer_decompose(InequalityProblem({{Rational(1), Rational(1)}}, 2)),
                    std::invalid_argument);
}

TEST_CASE("hammer_identity_check golden and property") {
    // f = x^3 on the augmented arguments: both sides 12
    std::vector<Rational> pts{Rational(6), Rational(5), Rational(4), Rational(3),
                              Rational(2), Rational(1), Rational(0)};
    FunctionTable cube;
    cube.points = pts;
    for (const auto& x : pts) cube.values.push_back(rational_pow(x, 3));
    auto chk = hammer_identity_check(six_point(), cube, {Rational(3)});
    CHECK(chk.lhs == Rational(12));
    CHECK(chk.rhs == Rational(12));
    CHECK(chk.equal());

    // polynomials of degree < k vanish on both sides
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto p = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 600u + seed});
        std::vector<Rational> args;
        for (const auto& nd : p.nodes()) args.push_back(nd.a);
        SynthFunction quad = random_synth(rng, 3, p.domain());
        SynthFunction lowdeg(Poly({std::vector<Rational>{Rational(2), Rational(-1), Rational(5)}}),
                             {}, 3);
        auto low = hammer_identity_check(p, tabulate(args, lowdeg));
        CHECK(low.lhs == Rational(0));
        CHECK(low.rhs == Rational(0));
        auto rnd = hammer_identity_check(p, tabulate(args, quad));
        CHECK(rnd.equal());
    }
    // moment violation rejected
    FunctionTable t{{Rational(3), Rational(2), Rational(1)}, {Rational(0), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(
        hammer_identity_check(
            InequalityProblem({{Rational(3), Rational(1)},
                               {Rational(2), Rational(1)},
                               {Rational(1), Rational(1)},
                               {Rational(0), Rational(1)}},
                              2),
            FunctionTable{{Rational(3), Rational(2), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(0), Rational(0)}}),
        std::invalid_argument);
}

TEST_CASE("popoviciu pass with zero moments implies nonnegative functionals") {
    std::mt19937_64 rng(37);
    int passing = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto p = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 700u + seed});
        if (p.n() < static_cast<size_t>(p.k()) + 1) continue;
        auto dec = hammer_decompose(p);
        if (!dec.all_nonneg()) continue;
        ++passing;
        for (int t = 0; t < 20; ++t)
            CHECK(apply_functional(p, random_synth(rng, 3, p.domain())) >= 0);
    }
    INFO("random instances passing the criterion: " << passing);
    // guaranteed instance
    auto kar = karamata();
    REQUIRE(hammer_decompose(kar).all_nonneg());
    for (int t = 0; t < 50; ++t)
        CHECK(apply_functional(kar, random_synth(rng, 2, kar.domain())) >= 0);
}
