#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/criteria.hpp"
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

}  // namespace

TEST_CASE("sample_problem determinism and moment nullity") {
    InstanceSpec spec{6, 3, Interval(Rational(-5), Rational(5)), 42};
    auto p = sample_problem(spec);
    auto q = sample_problem(spec);
    REQUIRE(p.n() == q.n());
    for (size_t i = 0; i < p.n(); ++i) {
        CHECK(p.nodes()[i].a == q.nodes()[i].a);
        CHECK(p.nodes()[i].w == q.nodes()[i].w);
    }
    CHECK(check_moments(p).ok());
    CHECK(p.n() > 0);
    CHECK_THROWS_AS(sample_problem({3, 3, Interval(Rational(0), Rational(1)), 1}),
                    std::invalid_argument);
}

TEST_CASE("sample_problem seeds differ") {
    auto p = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 1});
    auto q = sample_problem({6, 3, Interval(Rational(-5), Rational(5)), 2});
    bool same = p.n() == q.n();
    if (same)
        for (size_t i = 0; i < p.n(); ++i)
            if (p.nodes()[i].a != q.nodes()[i].a || p.nodes()[i].w != q.nodes()[i].w) same = false;
    CHECK(!same);
}

TEST_CASE("pte_pairs") {
    auto p3 = pte_pairs(3);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].first.values == std::vector<Rational>{Rational(7), Rational(3), Rational(2)});
    CHECK(power_sums(p3[0].first, 3) == std::vector<Rational>{Rational(12), Rational(62)});

    auto p4 = pte_pairs(4);
    REQUIRE(p4.size() == 1);
    auto s = power_sums(p4[0].first, 4);
    CHECK(s[0] == Rational(60));
    CHECK(s == power_sums(p4[0].second, 4));

    CHECK_THROWS_AS(pte_pairs(5), std::invalid_argument);
}

TEST_CASE("grid_oracle") {
    auto g = grid_oracle(six_point(), 49);
    CHECK(g.min_value == Rational(0));

    auto neg = grid_oracle(six_point().negated(), 49);
    CHECK(neg.min_value < 0);

    InequalityProblem mono({{Rational(1), Rational(1)}, {Rational(0), Rational(-1)}}, 1);
    CHECK(grid_oracle(mono, 10).min_value == Rational(0));

    CHECK_THROWS_AS(grid_oracle(six_point(), 1), std::invalid_argument);
}

TEST_CASE("functional_oracle directions") {
    auto ok = functional_oracle(six_point(), 500, 7);
    CHECK(ok.all_nonneg);

    auto bad = functional_oracle(six_point().negated(), 10, 7);
    REQUIRE(!bad.all_nonneg);
    CHECK(*bad.value < 0);
    CHECK(apply_functional(six_point().negated(), *bad.counterexample) == *bad.value);

    // moment violation is caught by the +-x^j probes
    InequalityProblem mv({{Rational(2), Rational(1)}, {Rational(1), Rational(-2)}, {Rational(0), Rational(1)}},
                         3);
    auto probe = functional_oracle(mv, 1, 7);
    CHECK(!probe.all_nonneg);
}

TEST_CASE("oracle coherence on random instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int k = 2 + static_cast<int>(seed % 3);
        auto p = sample_problem({k + 3, k, Interval(Rational(-5), Rational(5)), 1300u + seed});
        auto exact = decide_exact(p);
        auto fo = functional_oracle(p, 60, seed);
        CHECK((exact.status == Status::Holds) == fo.all_nonneg);
        if (exact.status == Status::Holds) CHECK(grid_oracle(p, 256).min_value >= 0);
    }
}
