#include "mirrormap/coupling.hpp"

#include "mirrormap/errors.hpp"

namespace mirrormap {

namespace {

int moebius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

}  // namespace

Series1 cd_series(const ZForm& op, int N) {
    auto [num, den] = op.c_ratio(op.order - 1);
    if (den.is_zero() || den[0] == 0)
        throw NotPicardFuchs("cd_series: A_{d+1}(0) = 0, operator is not Picard-Fuchs at z = 0");
    return Series1::from_rational(num, den, N);
}

Series1 yukawa_w(const ZForm& op, const Rat& w0, int N) {
    if (w0 == 0) throw DomainError("yukawa_w: normalization W(0) must be nonzero");
    Series1 cd = cd_series(op, N);
    if (cd[0] != 0) throw DomainError("yukawa_w: C_d(0) != 0, dlog integral is singular");
    int d1 = op.order;  // d + 1
    Rat coeff = make_rat(Int(-2), Int(d1));
    return w0 * exp(coeff * integrate_dlog(cd));
}

Series1 k_z(const Series1& w, const Series1& phi0) {
    if (phi0[0] != 1) throw DomainError("k_z: phi0(0) must be 1");
    return div(w, phi0 * phi0);
}

QFrame to_q_frame(const Series1& kz, const Series1& q_of_z, const Series1& z_of_q, int dim) {
    if (q_of_z.valuation() != 1 || z_of_q.valuation() != 1)
        throw DomainError("to_q_frame: q(z) and z(q) must have valuation 1");
    if (!compose(q_of_z, z_of_q).matches(Series1::var(std::min(q_of_z.order(), z_of_q.order()))))
        throw DomainError("to_q_frame: q(z) and z(q) are not mutual inverses");
    int N = std::min(kz.order(), z_of_q.order());
    // J = (Xi z(q))/z(q): both numerator and denominator have valuation 1
    Series1 tz = theta(z_of_q);
    std::vector<Rat> num(N + 1, Rat(0)), den(N + 1, Rat(0));
    for (int i = 0; i <= N && i + 1 <= z_of_q.order(); ++i) {
        num[i] = tz[i + 1];
        den[i] = z_of_q[i + 1];
    }
    Series1 jac = div(Series1(std::move(num)), Series1(std::move(den)));
    Series1 kq = compose(kz, z_of_q.truncated(N));
    Series1 jpow = Series1::one(N);
    for (int i = 0; i < dim; ++i) jpow = jpow * jac;
    return QFrame{kq * jpow, std::move(jac)};
}

InstantonReport instanton(const Series1& k_q, int dim, int D) {
    if (dim != 3)
        throw UnsupportedDimension("instanton: the Lambert expansion is defined for d = 3 only");
    if (k_q.order() < D) throw DomainError("instanton: K_q not valid to the requested degree");
    InstantonReport rep;
    rep.n0 = k_q[0];
    rep.gamma.reserve(D);
    rep.n.reserve(D);
    for (int e = 1; e <= D; ++e) {
        Rat g(0);
        for (int f = 1; f <= e; ++f)
            if (e % f == 0) g += Rat(moebius(e / f)) * k_q[f];
        Rat nd = g / Rat(static_cast<long>(e) * e * e);
        rep.integral.push_back(is_integer(nd));
        rep.nonnegative.push_back(nd >= 0);
        rep.gamma.push_back(std::move(g));
        rep.n.push_back(std::move(nd));
    }
    return rep;
}

Series1 lambert_resum(const InstantonReport& report, int N) {
    std::vector<Rat> v(N + 1, Rat(0));
    v[0] = report.n0;
    for (size_t d = 1; d <= report.gamma.size(); ++d) {
        const Rat& g = report.gamma[d - 1];
        if (g == 0) continue;
        for (size_t j = d; j <= static_cast<size_t>(N); j += d) v[j] += g;
    }
    return Series1(std::move(v));
}

YukawaFrame run_pipeline(const RecurrenceSpec& spec, const Rat& w0, int dim, int N) {
    YukawaFrame fr;
    fr.dim = dim;
    fr.phi0 = socle(spec, Rat(1), N);
    fr.psi = log_psi(spec, fr.phi0, N);
    QCoordinates q = q_param(fr.phi0, fr.psi);
    fr.q_of_z = q.q_of_z;
    fr.z_of_q = q.z_of_q;
    ZForm zf = to_zform(to_theta(spec));
    fr.w = yukawa_w(zf, w0, N);
    fr.kz = k_z(fr.w, fr.phi0);
    QFrame qf = to_q_frame(fr.kz, fr.q_of_z, fr.z_of_q, dim);
    fr.kq = qf.k_q;
    fr.jacobian = qf.jacobian;
    return fr;
}

}  // namespace mirrormap
