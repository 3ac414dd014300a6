#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hoc/poly.hpp"

using namespace hoc;

namespace {

Poly make(std::initializer_list<int> coeffs) {
    std::vector<Rational> c;
    for (int x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly_eval") {
    CHECK(poly_eval(make({-1, 0, 1}), Rational(3)) == Rational(8));  // x^2 - 1
    CHECK(poly_eval(Poly(), Rational(17)) == Rational(0));
    // the quadratic behind the three-point extremal example
    CHECK(poly_eval(make({22, -24, 6}), Rational(2)) == Rational(-2));
}

TEST_CASE("degree and trimming") {
    CHECK(Poly().degree() == -1);
    CHECK(make({5}).degree() == 0);
    CHECK(Poly({std::vector<Rational>{Rational(1), Rational(0), Rational(0)}}).degree() == 0);
    CHECK(make({0, 1}).degree() == 1);
}

TEST_CASE("arithmetic and linearity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Poly p = random_poly(rng, 5), q = random_poly(rng, 5);
        Rational x = rational_frac(t - 25, 3);
        CHECK(poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x));
        CHECK(poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x));
        CHECK(poly_eval(p - q, x) == poly_eval(p, x) - poly_eval(q, x));
    }
}

TEST_CASE("derivative") {
    CHECK(make({-1, 0, 1}).derivative() == make({0, 2}));
    CHECK(make({5}).derivative().is_zero());
}

TEST_CASE("divmod is exact") {
    Poly num = make({-2, 1}) * make({3, 1}) + make({7});
    auto [q, r] = Poly::divmod(num, make({-2, 1}));
    CHECK(q == make({3, 1}));
    CHECK(r == make({7}));
    CHECK_THROWS_AS(Poly::divmod(num, Poly()), std::invalid_argument);
}

TEST_CASE("gcd and squarefree part") {
    Poly p = make({-1, 1});  // x - 1
    Poly sq = p * p;
    CHECK(sq.squarefree_part() == p);
    Poly g = Poly::gcd(p * make({2, 1}), p * make({5, 1}));
    CHECK(g == p);
}

TEST_CASE("factories") {
    CHECK(Poly::linear_root(Rational(1, 2)) == Poly({std::vector<Rational>{Rational(-1, 2), Rational(1)}}));
    CHECK(Poly::constant(Rational(4)).degree() == 0);
}
