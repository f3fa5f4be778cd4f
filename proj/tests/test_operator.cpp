#include <random>

#include "doctest.h"
#include "mirrormap/errors.hpp"
#include "mirrormap/models.hpp"
#include "mirrormap/operator.hpp"
#include "test_util.hpp"

using namespace mirrormap;

namespace {

Poly ipoly(std::vector<long> v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Poly(std::move(c));
}

// Theta^4 - 5z(5T+1)(5T+2)(5T+3)(5T+4)
RecurrenceSpec quintic_spec() {
    Poly p0 = Poly::from_roots({make_rat(-1, 5), make_rat(-2, 5), make_rat(-3, 5), make_rat(-4, 5)},
                               Rat(-5 * 625));
    return RecurrenceSpec{{p0, Poly::monomial(4)}, 4};
}

RecurrenceSpec random_mu_spec(std::mt19937_64& rng, int m, int order) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Poly> polys;
    for (int j = 0; j < m; ++j) {
        std::vector<Rat> c(order + 1);
        for (auto& x : c) x = Rat(coeff(rng));
        polys.emplace_back(std::move(c));
    }
    polys.push_back(Poly::monomial(order));
    return RecurrenceSpec{std::move(polys), order};
}

}  // namespace

TEST_CASE("convert: quintic recurrence to theta form") {
    RecurrenceSpec spec = quintic_spec();
    CHECK(spec.polys[0] == ipoly({-120, -1250, -4375, -6250, -3125}));
    ThetaOperator op = to_theta(spec);
    ZForm zf = to_zform(op);
    CHECK(zf.A[4] == ipoly({1, -3125}));
    CHECK(zf.A[3] == ipoly({0, -6250}));
    CHECK(zf.A[0] == ipoly({0, -120}));
}

TEST_CASE("convert: trivial Theta operator to z-form") {
    ThetaOperator theta_op{{Poly::monomial(1)}, 1};
    ZForm zf = to_zform(theta_op);
    CHECK(zf.A[1] == Poly::constant(Rat(1)));
    CHECK(zf.A[0].is_zero());
}

TEST_CASE("convert: round-trips on random operators") {
    std::mt19937_64 rng(0x5eed0010);
    std::uniform_int_distribution<int> md(1, 4);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int rep = 0; rep < 50; ++rep) {
        int m = md(rng);
        std::vector<Poly> polys;
        for (int j = 0; j <= m; ++j) {
            std::vector<Rat> c(6);
            for (auto& x : c) x = Rat(coeff(rng));
            polys.emplace_back(std::move(c));
        }
        if (polys[0].is_zero() && polys[m].is_zero()) continue;
        RecurrenceSpec spec{polys, 5};
        CHECK(to_recurrence(to_theta(spec)) == spec);
        ThetaOperator op = to_theta(spec);
        ThetaOperator back = from_zform(to_zform(op));
        // z-form may drop trailing zero polynomials of P_0; compare as applied
        Series1 probe = mmtest::random_series(rng, 12, Rat(1));
        CHECK(apply(op, probe) == apply(back, probe).truncated(probe.order() - op.m()));
    }
}

TEST_CASE("classify") {
    CHECK(classify(to_theta(quintic_spec())).is_picard_fuchs);
    CHECK(classify(to_theta(quintic_spec())).is_mu);
    // P_m = y^4 + 1: Picard-Fuchs but not MU
    ThetaOperator not_mu{{ipoly({0, 0, 0, 0, -1}), ipoly({1, 0, 0, 0, 1})}, 4};
    CHECK(classify(not_mu).is_picard_fuchs);
    CHECK_FALSE(classify(not_mu).is_mu);
    // z * Theta^2: leading z-form coefficient vanishes at 0
    ThetaOperator degenerate{{Poly::monomial(2), Poly()}, 2};
    CHECK_FALSE(classify(degenerate).is_picard_fuchs);
    CHECK_FALSE(classify(degenerate).is_mu);
}

TEST_CASE("apply: quintic annihilates its socle solution") {
    RecurrenceSpec spec = quintic_spec();
    Series1 phi0 = socle(spec, Rat(1), 20);
    Series1 res = apply(to_theta(spec), phi0);
    CHECK(res.order() == 19);
    CHECK(res.is_zero());
}

TEST_CASE("apply: tiny identities") {
    ThetaOperator theta_op{{Poly::monomial(1)}, 1};
    CHECK(apply(theta_op, Series1::one(5)).is_zero());
    ThetaOperator shifted{{Poly({Rat(-1), Rat(1)})}, 1};  // Theta - 1
    CHECK(apply(shifted, Series1::var(5)).is_zero());
}

TEST_CASE("socle: quintic factorials") {
    Series1 phi0 = socle(quintic_spec(), Rat(1), 3);
    CHECK(phi0[0] == 1);
    CHECK(phi0[1] == 120);
    CHECK(phi0[2] == 113400);
    CHECK(phi0[3] == 168168000);
}

TEST_CASE("socle: diagonal P2xP2 3-term spec") {
    // Theta^4 - 3z(7T^2+7T+2)(3T+1)(3T+2) - 72z^2(3T+5)(3T+4)(3T+2)(3T+1)
    RecurrenceSpec spec{{ipoly({-2880, -16848, -31752, -23328, -5832}),
                         ipoly({-12, -96, -285, -378, -189}),
                         Poly::monomial(4)},
                        4};
    Series1 a = socle(spec, Rat(1), 4);
    CHECK(a[1] == 12);
    CHECK(a[2] == 900);   // (3n)!/(n!)^3 b_n with Franel number b_2 = 10
    CHECK(a[3] == 94080);
}

TEST_CASE("socle: zero seed gives the zero series") {
    CHECK(socle(quintic_spec(), Rat(0), 10).is_zero());
}

TEST_CASE("socle: vanishing P_m reported with its index") {
    // P_1 = (y-3) y^3 vanishes at n = 3
    RecurrenceSpec bad{{ipoly({1, 1}), Poly::monomial(3) * ipoly({-3, 1})}, 4};
    CHECK_THROWS_AS(socle(bad, Rat(1), 10), NonsolvableRecurrence);
    try {
        socle(bad, Rat(1), 10);
    } catch (const NonsolvableRecurrence& e) {
        CHECK(e.index == 3);
    }
}

TEST_CASE("theta_partial") {
    ThetaOperator t4{{Poly::monomial(4)}, 4};
    CHECK(theta_partial(t4).polys[0] == Poly::monomial(3).scaled(Rat(4)));
    ThetaOperator c{{Poly::constant(Rat(1))}, 0};
    CHECK(theta_partial(c).polys[0].is_zero());
    // quintic: d/dT of P_0 evaluated at 0 is -1250
    CHECK(theta_partial(to_theta(quintic_spec())).polys[0].eval(Rat(0)) == -1250);
}

TEST_CASE("log_psi: quintic b_1 = 770 and the defining identity") {
    RecurrenceSpec spec = quintic_spec();
    Series1 phi0 = socle(spec, Rat(1), 20);
    Series1 psi = log_psi(spec, phi0, 20);
    CHECK(psi[0] == 0);
    CHECK(psi[1] == 770);
    Series1 lhs = apply(theta_partial(to_theta(spec)), phi0) + apply(to_theta(spec), psi);
    CHECK(lhs.is_zero());
}

TEST_CASE("log_psi: degenerate guard (operator Theta, constant socle)") {
    RecurrenceSpec spec{{Poly(), Poly::monomial(1)}, 1};
    Series1 phi0 = socle(spec, Rat(1), 8);
    CHECK(phi0 == Series1::one(8));
    CHECK(log_psi(spec, phi0, 8).is_zero());
}

TEST_CASE("q_param: psi = 0 gives the identity map") {
    QCoordinates q = q_param(Series1::one(10), Series1::zero(10));
    CHECK(q.q_of_z == Series1::var(11));
    CHECK(q.z_of_q == Series1::var(11));
}

TEST_CASE("q_param: quintic head z + 770 z^2") {
    RecurrenceSpec spec = quintic_spec();
    Series1 phi0 = socle(spec, Rat(1), 10);
    QCoordinates q = q_param(phi0, log_psi(spec, phi0, 10));
    CHECK(q.q_of_z[1] == 1);
    CHECK(q.q_of_z[2] == 770);
    CHECK(compose(q.q_of_z, q.z_of_q) == Series1::var(11));
}

TEST_CASE("q_param: diagonal P2xP2 z(q) head matches the printed expansion") {
    RecurrenceSpec spec{{ipoly({-2880, -16848, -31752, -23328, -5832}),
                         ipoly({-12, -96, -285, -378, -189}),
                         Poly::monomial(4)},
                        4};
    Series1 phi0 = socle(spec, Rat(1), 10);
    QCoordinates q = q_param(phi0, log_psi(spec, phi0, 10));
    CHECK(q.z_of_q[1] == 1);
    CHECK(q.z_of_q[2] == -48);
    CHECK(q.z_of_q[3] == -18);
    CHECK(q.z_of_q[4] == 7976);
    CHECK(q.z_of_q[5] == -1697115);
}

TEST_CASE("fit_recurrence: recovers the quintic operator") {
    CIModel quintic;
    quintic.degrees = {5};
    quintic.dim = 3;
    Series1 a = ci_series(quintic, 30);
    FitResult fit = fit_recurrence(a, 1, 4);
    REQUIRE(fit.status == FitStatus::ok);
    CHECK(*fit.spec == quintic_spec());
}

TEST_CASE("fit_recurrence: geometric series normalizes to P_1 = y") {
    std::vector<Rat> all_ones(26, Rat(1));  // 1/(1-z)
    FitResult fit = fit_recurrence(Series1(all_ones), 1, 1);
    REQUIRE(fit.status == FitStatus::ok);
    CHECK(fit.spec->polys[1] == Poly::monomial(1));
    CHECK(fit.spec->polys[0] == Poly({Rat(-1), Rat(-1)}));
}

TEST_CASE("fit_recurrence: too few terms is reported as NoFit with the minimum") {
    Series1 a = Series1::one(5);
    FitResult fit = fit_recurrence(a, 2, 4);
    CHECK(fit.status == FitStatus::no_fit);
    CHECK(fit.detail.find(std::to_string(fit_min_terms(2, 4))) != std::string::npos);
}

TEST_CASE("fit_auto: (P1)^4 diagonal needs a 3-term degree-4 recurrence") {
    ProductProjModel m;
    m.factor_dims = {1, 1, 1, 1};
    m.multidegree = {{2, 2, 2, 2}};
    m.w0 = Rat(48);
    Series1 a = diagonal_restrict(product_series(m, 41), {1, 1, 1, 1});
    FitResult fit = fit_auto(a, 4, 5);
    REQUIRE(fit.status == FitStatus::ok);
    CHECK(fit.spec->m() == 2);
    // annihilates the brute-force coefficients through order 40
    CHECK(apply(to_theta(*fit.spec), a).is_zero());
    // true P_1 carries (2T+1)^2 where the printed table has (2T+1)
    Poly p1_true = Poly({Rat(2), Rat(5), Rat(5)}) * Poly({Rat(1), Rat(2)}) *
                   Poly({Rat(1), Rat(2)});
    CHECK(fit.spec->polys[1] == p1_true.scaled(Rat(-4)));
}

TEST_CASE("property: fit returns random MU specs themselves from their socle solutions") {
    std::mt19937_64 rng(0x5eed0011);
    int done = 0;
    while (done < 20) {
        RecurrenceSpec spec = random_mu_spec(rng, 1 + static_cast<int>(rng() % 2), 3);
        if (spec.polys[0].is_zero()) continue;
        Series1 a = socle(spec, Rat(1), fit_min_terms(spec.m(), 3) + 4);
        if (a.is_zero()) continue;
        FitResult fit = fit_recurrence(a, spec.m(), 3);
        if (fit.status != FitStatus::ok) continue;  // ambiguous when the seed is degenerate
        CHECK(*fit.spec == spec);
        CHECK(apply(to_theta(*fit.spec), a).is_zero());
        ++done;
    }
}

TEST_CASE("fit_recurrence: degenerate data is AmbiguousFit") {
    // the sequence 1, 0, 0, ... only constrains P_j(0) = 0
    std::vector<Rat> v(40, Rat(0));
    v[0] = Rat(1);
    FitResult fit = fit_recurrence(Series1(std::move(v)), 1, 2);
    CHECK(fit.status == FitStatus::ambiguous);
}

TEST_CASE("property: socle uniqueness, perturbation breaks annihilation") {
    std::mt19937_64 rng(0x5eed0012);
    for (int rep = 0; rep < 25; ++rep) {
        RecurrenceSpec spec = random_mu_spec(rng, 1, 3);
        if (spec.polys[0].is_zero()) continue;
        Series1 phi0 = socle(spec, Rat(1), 15);
        CHECK(apply(to_theta(spec), phi0).is_zero());
        int k = 1 + static_cast<int>(rng() % 14);
        std::vector<Rat> v(phi0.coeffs());
        v[k] += Rat(1);
        CHECK_FALSE(apply(to_theta(spec), Series1(std::move(v))).is_zero());
    }
}

TEST_CASE("property: MU classification matches A_i(0) = 0 for i <= d") {
    std::mt19937_64 rng(0x5eed0013);
    for (int rep = 0; rep < 20; ++rep) {
        RecurrenceSpec spec = random_mu_spec(rng, 2, 4);
        ThetaOperator op = to_theta(spec);
        if (!classify(op).is_mu) continue;
        ZForm zf = to_zform(op);
        for (int i = 0; i < zf.order; ++i) CHECK(zf.A[i][0] == 0);
        CHECK(zf.A[zf.order][0] == 1);
    }
}
