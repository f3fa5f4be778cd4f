#include "doctest.h"
#include "mirrormap/errors.hpp"
#include "mirrormap/series.hpp"
#include "test_util.hpp"

using namespace mirrormap;
using mmtest::random_series;
using mmtest::random_val1_series;

namespace {

Series1 make(std::vector<long> v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Series1(std::move(c));
}

}  // namespace

TEST_CASE("mul: telescoping product (1+z)(1-z) = 1 - z^2") {
    Series1 a = make({1, 1, 0, 0, 0, 0});
    Series1 b = make({1, -1, 0, 0, 0, 0});
    CHECK(a * b == make({1, 0, -1, 0, 0, 0}));
}

TEST_CASE("div: geometric series 1/(1-z)") {
    Series1 one = Series1::one(4);
    Series1 q = div(one, make({1, -1, 0, 0, 0}));
    CHECK(q == make({1, 1, 1, 1, 1}));
}

TEST_CASE("div: 48/((1-64z)(1-16z)) head") {
    Poly den = Poly({Rat(1), Rat(-64)}) * Poly({Rat(1), Rat(-16)});
    Series1 k = Series1::from_rational(Poly::constant(Rat(48)), den, 2);
    CHECK(k[0] == 48);
    CHECK(k[1] == 3840);
    CHECK(k[2] == 258048);
}

TEST_CASE("div by non-unit throws") {
    CHECK_THROWS_AS(div(Series1::one(3), Series1::var(3)), NotAUnit);
}

TEST_CASE("exp: exp(0) = 1") { CHECK(exp(Series1::zero(5)) == Series1::one(5)); }

TEST_CASE("exp: exp(z + z^2) head") {
    Series1 e = exp(make({0, 1, 1, 0}));
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == make_rat(3, 2));
    CHECK(e[3] == make_rat(7, 6));
}

TEST_CASE("log: mercator series of 1/(1-z)") {
    Series1 f = div(Series1::one(4), make({1, -1, 0, 0, 0}));
    Series1 l = log(f);
    CHECK(l[1] == 1);
    CHECK(l[2] == make_rat(1, 2));
    CHECK(l[3] == make_rat(1, 3));
    CHECK(l[4] == make_rat(1, 4));
}

TEST_CASE("exp/log preconditions") {
    CHECK_THROWS_AS(exp(Series1::one(3)), DomainError);
    CHECK_THROWS_AS(log(Series1::zero(3)), DomainError);
}

TEST_CASE("revert: identity") {
    CHECK(revert(Series1::var(6)) == Series1::var(6));
}

TEST_CASE("revert: z/(1-z) inverts to q/(1+q)") {
    Series1 f = div(Series1::var(6), make({1, -1, 0, 0, 0, 0, 0}));
    Series1 h = revert(f);
    Series1 expect = div(Series1::var(6), make({1, 1, 0, 0, 0, 0, 0}));
    CHECK(h == expect);
}

TEST_CASE("theta and integrate_dlog") {
    Series1 f = make({1, 2, 3});
    CHECK(theta(f) == make({0, 2, 6}));
    // theta(z^n) = n z^n
    for (int n = 0; n <= 6; ++n) {
        Series1 zn = shift_up(Series1::one(6), n);
        CHECK(theta(zn) == Rat(n) * zn);
    }
    CHECK_THROWS_AS(integrate_dlog(Series1::one(3)), DomainError);
}

TEST_CASE("properties: ring laws, round-trips, Leibniz, commutator") {
    std::mt19937_64 rng(0x5eed0001);
    for (int rep = 0; rep < 40; ++rep) {
        const int N = 20;
        Series1 f = random_series(rng, N, mmtest::random_rat(rng));
        Series1 g = random_series(rng, N, mmtest::random_rat(rng));
        Series1 h = random_series(rng, N, mmtest::random_rat(rng));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));

        // div/mul round-trip when defined
        if (g[0] != 0) CHECK(div(f * g, g) == f);

        // exp/log round-trip
        Series1 v = random_series(rng, N, Rat(0));
        CHECK(log(exp(v)) == v);

        // Leibniz
        CHECK(theta(f * g) == theta(f) * g + f * theta(g));

        // commutator [Theta, z] = z acting on series
        Series1 zf = shift_up(f, 1);
        CHECK((theta(zf) - shift_up(theta(f), 1)).matches(zf));

        // integrate_dlog inverts theta away from the constant term
        Series1 f0 = f - Series1::constant(f[0], N);
        CHECK(integrate_dlog(theta(f0)) == f0);
    }
}

TEST_CASE("properties: revert round-trip") {
    std::mt19937_64 rng(0x5eed0002);
    for (int rep = 0; rep < 25; ++rep) {
        const int N = 20;
        Series1 f = random_val1_series(rng, N);
        Series1 h = revert(f);
        CHECK(compose(f, h) == Series1::var(N));
        CHECK(compose(h, f) == Series1::var(N));
    }
}

TEST_CASE("truncation contract: min order, no silent extension") {
    Series1 a = Series1::one(10);
    Series1 b = Series1::one(4);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
    CHECK(div(a, b).order() == 4);
    CHECK(compose(a, Series1::var(7)).order() == 7);
}
