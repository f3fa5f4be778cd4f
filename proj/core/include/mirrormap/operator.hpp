#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrormap/poly.hpp"
#include "mirrormap/series.hpp"

namespace mirrormap {

// Holonomic recurrence P_0(n) a_n + P_1(n+1) a_{n+1} + ... + P_m(n+m) a_{n+m} = 0,
// required for every n in Z with a_n = 0 for n < 0. `order` is the operator
// order d+1 = max degree of the P_j.
struct RecurrenceSpec {
    std::vector<Poly> polys;  // P_0 .. P_m
    int order = 0;

    int m() const { return static_cast<int>(polys.size()) - 1; }
    bool operator==(const RecurrenceSpec& o) const {
        return polys == o.polys && order == o.order;
    }
    // same relation, all P_j integer with content 1 and P_m leading > 0
    RecurrenceSpec primitive() const;
    // same relation scaled so that P_m is monic (P_m = y^order when MU)
    RecurrenceSpec mu_normalized() const;
    std::string to_string() const;
};

// The same data read as the operator D = z^m P_0(Theta) + ... + P_m(Theta).
struct ThetaOperator {
    std::vector<Poly> polys;  // P_0 .. P_m
    int order = 0;

    int m() const { return static_cast<int>(polys.size()) - 1; }
    bool operator==(const ThetaOperator& o) const {
        return polys == o.polys && order == o.order;
    }
    std::string to_string() const;
};

// The same operator as D = A_{d+1}(z) Theta^{d+1} + ... + A_0(z).
struct ZForm {
    std::vector<Poly> A;  // A_0 .. A_{d+1}, polynomials in z
    int order = 0;

    // the rational ratio C_i(z) = A_i(z)/A_{d+1}(z) as a numerator/denominator pair
    std::pair<const Poly&, const Poly&> c_ratio(int i) const { return {A[i], A[order]}; }

    bool operator==(const ZForm& o) const { return A == o.A && order == o.order; }
    std::string to_string() const;
};

ThetaOperator to_theta(const RecurrenceSpec& spec);
RecurrenceSpec to_recurrence(const ThetaOperator& op);
ZForm to_zform(const ThetaOperator& op);
ThetaOperator from_zform(const ZForm& zf);

struct OperatorClass {
    bool is_picard_fuchs = false;  // A_{d+1}(0) != 0
    bool is_mu = false;            // P_m(y) = y^{d+1} exactly
};
OperatorClass classify(const ThetaOperator& op);

// Exact truncated application. Output order = f.order() - m.
Series1 apply(const ThetaOperator& op, const Series1& f);

// Unique power-series solution with the given a_0 (forward solve). Throws
// NonsolvableRecurrence (with the offending index) when P_m(n) = 0 for some
// n in 1..N.
Series1 socle(const RecurrenceSpec& spec, const Rat& a0, int N);

// Formal derivative with respect to Theta: every P_j replaced by P_j'.
ThetaOperator theta_partial(const ThetaOperator& op);

// The unique Psi with Psi(0) = 0 such that (log z) phi0 + Psi is annihilated;
// equivalently apply(theta_partial(D), phi0) + apply(D, Psi) = 0.
Series1 log_psi(const RecurrenceSpec& spec, const Series1& phi0, int N);

struct QCoordinates {
    Series1 q_of_z;  // z exp(psi/phi0), valuation 1, leading coefficient 1
    Series1 z_of_q;  // compositional inverse
};
QCoordinates q_param(const Series1& phi0, const Series1& psi);

enum class FitStatus { ok, no_fit, ambiguous };

struct FitResult {
    FitStatus status = FitStatus::no_fit;
    std::optional<RecurrenceSpec> spec;
    std::string detail;  // human-readable reason for no_fit/ambiguous
};

// Exact nullspace solve for an (m+1)-term recurrence of the given order
// annihilating the supplied coefficients (boundary relations with a_{n<0} = 0
// included). Returns the MU-normalized solution when it exists; a unique
// non-MU solution is returned in primitive form. The returned spec is
// re-verified against all supplied coefficients.
FitResult fit_recurrence(const Series1& coeffs, int m, int order);

// Auto mode: order 4 first (3-fold targets), then m from 1 to 5.
FitResult fit_auto(const Series1& coeffs, int order = 4, int max_m = 5);

// Minimum coefficient count for a trustworthy fit at (m, order).
int fit_min_terms(int m, int order, int safety_margin = 10);

}  // namespace mirrormap
