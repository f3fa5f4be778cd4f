#pragma once

#include <vector>

#include "mirrormap/operator.hpp"
#include "mirrormap/series.hpp"

namespace mirrormap {

// Truncated expansion of C_d(z) = A_d(z)/A_{d+1}(z). Requires a Picard-Fuchs
// operator (A_{d+1}(0) != 0); throws NotPicardFuchs otherwise.
Series1 cd_series(const ZForm& op, int N);

// Solves Theta W + (2/(d+1)) C_d W = 0 with W(0) = w0:
// W = w0 * exp(-(2/(d+1)) * integral of C_d dv/v). Requires C_d(0) = 0
// (maximal unipotent monodromy); throws DomainError otherwise.
Series1 yukawa_w(const ZForm& op, const Rat& w0, int N);

// K_z = W / phi0^2; phi0(0) must be 1.
Series1 k_z(const Series1& w, const Series1& phi0);

struct QFrame {
    Series1 k_q;
    Series1 jacobian;  // J = (Xi z(q))/z(q), J(0) = 1
};

// Frame change K_z (dz/z)^d = K_q (dq/q)^d: K_q = (K_z o z(q)) * J^d.
QFrame to_q_frame(const Series1& kz, const Series1& q_of_z, const Series1& z_of_q, int dim);

// n0 + sum_d n_d d^3 q^d / (1 - q^d); Moebius inversion of the coefficients.
struct InstantonReport {
    Rat n0;
    std::vector<Rat> gamma;        // Gamma_1 .. Gamma_D
    std::vector<Rat> n;            // n_d = Gamma_d / d^3
    std::vector<bool> integral;    // per-entry diagnostics, never errors
    std::vector<bool> nonnegative;
};

// d = 3 only (the expansion is specific to threefolds); throws
// UnsupportedDimension otherwise. K_q must be valid to order D.
InstantonReport instanton(const Series1& k_q, int dim, int D);

// Rebuilds n0 + sum n_d d^3 q^d/(1-q^d) to order N.
Series1 lambert_resum(const InstantonReport& report, int N);

// Bundled output of the whole chain for one MU recurrence.
struct YukawaFrame {
    int dim = 3;
    Series1 phi0;
    Series1 psi;
    Series1 q_of_z;
    Series1 z_of_q;
    Series1 w;    // unnormalized W_{d,0}
    Series1 kz;   // W / phi0^2
    Series1 kq;
    Series1 jacobian;
};

// socle -> log solution -> q-coordinates -> W -> K_z -> K_q.
YukawaFrame run_pipeline(const RecurrenceSpec& spec, const Rat& w0, int dim, int N);

}  // namespace mirrormap
