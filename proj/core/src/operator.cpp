#include "mirrormap/operator.hpp"

#include <algorithm>
#include <sstream>

#include "mirrormap/errors.hpp"

namespace mirrormap {

namespace {

int max_degree(const std::vector<Poly>& polys) {
    int d = -1;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

std::string polys_to_string(const std::vector<Poly>& polys, int m, bool as_operator) {
    std::ostringstream os;
    bool first = true;
    for (int j = m; j >= 0; --j) {
        if (polys[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        int zpow = m - j;
        if (zpow > 0) {
            os << "z";
            if (zpow > 1) os << "^" << zpow;
            os << "*";
        }
        os << "(" << polys[j].to_string(as_operator ? "T" : "y") << ")";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

RecurrenceSpec RecurrenceSpec::primitive() const {
    Int lcm(1), gcd(0);
    for (const auto& p : polys) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.denominator_lcm().get_mpz_t());
    std::vector<Poly> scaled;
    scaled.reserve(polys.size());
    for (const auto& p : polys) scaled.push_back(p.scaled(Rat(lcm)));
    for (const auto& p : scaled) {
        Int g = p.numerator_gcd();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), g.get_mpz_t());
    }
    if (gcd == 0) gcd = 1;
    Rat scale = make_rat(Int(1), gcd);
    if (!scaled.back().is_zero() && scaled.back().leading() < 0) scale = -scale;
    for (auto& p : scaled) p = p.scaled(scale);
    return RecurrenceSpec{std::move(scaled), order};
}

RecurrenceSpec RecurrenceSpec::mu_normalized() const {
    const Poly& pm = polys.back();
    if (pm.is_zero()) return *this;
    Rat inv = Rat(1) / pm.leading();
    std::vector<Poly> scaled;
    scaled.reserve(polys.size());
    for (const auto& p : polys) scaled.push_back(p.scaled(inv));
    return RecurrenceSpec{std::move(scaled), order};
}

std::string RecurrenceSpec::to_string() const { return polys_to_string(polys, m(), false); }
std::string ThetaOperator::to_string() const { return polys_to_string(polys, m(), true); }

std::string ZForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = order; i >= 0; --i) {
        if (A[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << A[i].to_string("z") << ")";
        if (i > 0) {
            os << "*T";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

ThetaOperator to_theta(const RecurrenceSpec& spec) { return ThetaOperator{spec.polys, spec.order}; }
RecurrenceSpec to_recurrence(const ThetaOperator& op) { return RecurrenceSpec{op.polys, op.order}; }

ZForm to_zform(const ThetaOperator& op) {
    // D = sum_j z^{m-j} P_j(Theta) = sum_i (sum_j p_{j,i} z^{m-j}) Theta^i
    int m = op.m();
    int d1 = std::max(op.order, max_degree(op.polys));
    std::vector<Poly> A(d1 + 1);
    for (int i = 0; i <= d1; ++i) {
        std::vector<Rat> c(m + 1, Rat(0));
        for (int j = 0; j <= m; ++j) c[m - j] = op.polys[j][i];
        A[i] = Poly(std::move(c));
    }
    return ZForm{std::move(A), d1};
}

ThetaOperator from_zform(const ZForm& zf) {
    int m = 0;
    for (const auto& a : zf.A) m = std::max(m, a.degree());
    std::vector<Poly> polys(m + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<Rat> c(zf.order + 1, Rat(0));
        for (int i = 0; i <= zf.order; ++i) c[i] = zf.A[i][m - j];
        polys[j] = Poly(std::move(c));
    }
    return ThetaOperator{std::move(polys), zf.order};
}

OperatorClass classify(const ThetaOperator& op) {
    OperatorClass out;
    ZForm zf = to_zform(op);
    out.is_picard_fuchs = zf.A[zf.order][0] != 0;
    const Poly& pm = op.polys.back();
    out.is_mu = pm == Poly::monomial(op.order);
    return out;
}

Series1 apply(const ThetaOperator& op, const Series1& f) {
    int m = op.m();
    int out_order = f.order() - m;
    if (out_order < 0) throw DomainError("apply: series order too small for the operator");
    std::vector<Rat> v(out_order + 1, Rat(0));
    for (int N = 0; N <= out_order; ++N) {
        Rat s(0);
        for (int j = 0; j <= m; ++j) {
            int idx = N - m + j;
            if (idx < 0) continue;
            s += op.polys[j].eval(Rat(idx)) * f[idx];
        }
        v[N] = s;
    }
    return Series1(std::move(v));
}

Series1 socle(const RecurrenceSpec& spec, const Rat& a0, int N) {
    int m = spec.m();
    const Poly& pm = spec.polys[m];
    std::vector<Rat> a(N + 1, Rat(0));
    a[0] = a0;
    for (int n = 1; n <= N; ++n) {
        Rat pmn = pm.eval(Rat(n));
        if (pmn == 0)
            throw NonsolvableRecurrence("socle: P_m vanishes at n = " + std::to_string(n), n);
        Rat s(0);
        int base = n - m;
        for (int j = 0; j < m; ++j) {
            int idx = base + j;
            if (idx < 0) continue;
            s += spec.polys[j].eval(Rat(idx)) * a[idx];
        }
        a[n] = -s / pmn;
    }
    return Series1(std::move(a));
}

ThetaOperator theta_partial(const ThetaOperator& op) {
    std::vector<Poly> d;
    d.reserve(op.polys.size());
    for (const auto& p : op.polys) d.push_back(p.derivative());
    return ThetaOperator{std::move(d), std::max(op.order - 1, 0)};
}

Series1 log_psi(const RecurrenceSpec& spec, const Series1& phi0, int N) {
    // P_m(n) b_n + sum_{i=1..m} P_{m-i}(n-i) b_{n-i}
    //            + sum_{i=0..m} P'_{m-i}(n-i) a_{n-i} = 0
    int m = spec.m();
    if (phi0.order() < N) throw DomainError("log_psi: phi0 valid to lower order than requested");
    std::vector<Poly> dp;
    dp.reserve(spec.polys.size());
    for (const auto& p : spec.polys) dp.push_back(p.derivative());
    std::vector<Rat> b(N + 1, Rat(0));
    for (int n = 1; n <= N; ++n) {
        Rat pmn = spec.polys[m].eval(Rat(n));
        if (pmn == 0)
            throw NonsolvableRecurrence("log_psi: P_m vanishes at n = " + std::to_string(n), n);
        Rat s(0);
        for (int i = 1; i <= m; ++i)
            if (n - i >= 0) s += spec.polys[m - i].eval(Rat(n - i)) * b[n - i];
        for (int i = 0; i <= m; ++i)
            if (n - i >= 0) s += dp[m - i].eval(Rat(n - i)) * phi0[n - i];
        b[n] = -s / pmn;
    }
    return Series1(std::move(b));
}

QCoordinates q_param(const Series1& phi0, const Series1& psi) {
    if (phi0[0] != 1) throw DomainError("q_param: phi0(0) must be 1");
    if (psi[0] != 0) throw DomainError("q_param: psi(0) must be 0");
    Series1 e = exp(div(psi, phi0));
    int N = e.order();
    // q = z * e, exact to order N+1 since e is exact to N; keep order N+1
    std::vector<Rat> q(N + 2, Rat(0));
    for (int i = 0; i <= N; ++i) q[i + 1] = e[i];
    Series1 q_of_z{std::move(q)};
    Series1 z_of_q = revert(q_of_z);
    return QCoordinates{std::move(q_of_z), std::move(z_of_q)};
}

int fit_min_terms(int m, int order, int safety_margin) {
    return (m + 1) * (order + 1) + m + safety_margin;
}

namespace {

// Solve rows * x = rhs exactly; returns solutions count 0 (inconsistent),
// 1 (unique, sol filled), or 2 (underdetermined).
int gauss_solve(std::vector<std::vector<Rat>>& a, std::vector<Rat>& rhs, std::vector<Rat>& sol) {
    size_t nr = a.size(), nc = sol.size();
    std::vector<int> pivot_row_of_col(nc, -1);
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t pr = r;
        while (pr < nr && a[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(a[pr], a[r]);
        std::swap(rhs[pr], rhs[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t k = c; k < nc; ++k) a[r][k] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t k = c; k < nc; ++k) a[i][k] -= f * a[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (size_t i = r; i < nr; ++i)
        if (rhs[i] != 0) return 0;
    bool free_col = false;
    for (size_t c = 0; c < nc; ++c)
        if (pivot_row_of_col[c] < 0) free_col = true;
    if (free_col) return 2;
    for (size_t c = 0; c < nc; ++c) sol[c] = rhs[pivot_row_of_col[c]];
    return 1;
}

bool verify_fit(const RecurrenceSpec& spec, const Series1& a) {
    Series1 residual = apply(to_theta(spec), a);
    return residual.is_zero();
}

}  // namespace

FitResult fit_recurrence(const Series1& coeffs, int m, int order) {
    int N = coeffs.order();
    int ncol = (m + 1) * (order + 1);
    if (N + 1 < fit_min_terms(m, order, 0))
        return {FitStatus::no_fit, std::nullopt,
                "need at least " + std::to_string(fit_min_terms(m, order)) +
                    " coefficients for m=" + std::to_string(m) +
                    ", order=" + std::to_string(order)};

    // Unknowns p_{j,i} (j = 0..m, i = 0..order). MU normalization pins
    // P_m = y^order; move those columns to the right-hand side.
    auto col = [&](int j, int i) { return j * (order + 1) + i; };
    int nfree = ncol - (order + 1);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (int n = -m; n <= N - m; ++n) {
        std::vector<Rat> row(nfree, Rat(0));
        Rat r(0);
        bool nonzero = false;
        for (int j = 0; j <= m; ++j) {
            int idx = n + j;
            if (idx < 0 || idx > N) continue;
            if (coeffs[idx] == 0) continue;
            Rat y(idx);
            Rat ypow(1);
            for (int i = 0; i <= order; ++i) {
                Rat v = ypow * coeffs[idx];
                if (j == m) {
                    if (i == order) r -= v;
                } else {
                    row[col(j, i)] = v;
                }
                nonzero = true;
                ypow *= y;
            }
        }
        if (nonzero) {
            rows.push_back(std::move(row));
            rhs.push_back(std::move(r));
        }
    }
    std::vector<Rat> sol(nfree, Rat(0));
    int res = gauss_solve(rows, rhs, sol);
    if (res == 2)
        return {FitStatus::ambiguous, std::nullopt,
                "nullspace dimension > 1 after MU normalization; raise m/order or supply more terms"};
    if (res == 1) {
        std::vector<Poly> polys(m + 1);
        for (int j = 0; j < m; ++j) {
            std::vector<Rat> c(order + 1, Rat(0));
            for (int i = 0; i <= order; ++i) c[i] = sol[col(j, i)];
            polys[j] = Poly(std::move(c));
        }
        polys[m] = Poly::monomial(order);
        RecurrenceSpec spec{std::move(polys), order};
        if (!verify_fit(spec, coeffs))
            return {FitStatus::no_fit, std::nullopt, "candidate failed re-verification"};
        return {FitStatus::ok, std::move(spec), ""};
    }

    // No MU-normalized solution. Look for an unconstrained one-dimensional
    // nullspace and return it in primitive form.
    rows.clear();
    rhs.clear();
    for (int n = -m; n <= N - m; ++n) {
        std::vector<Rat> row(ncol, Rat(0));
        bool nonzero = false;
        for (int j = 0; j <= m; ++j) {
            int idx = n + j;
            if (idx < 0 || idx > N || coeffs[idx] == 0) continue;
            Rat y(idx);
            Rat ypow(1);
            for (int i = 0; i <= order; ++i) {
                row[col(j, i)] = ypow * coeffs[idx];
                nonzero = true;
                ypow *= y;
            }
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    // Try pinning each column to 1 in turn until a unique solution appears.
    for (int pin = ncol - 1; pin >= 0; --pin) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (const auto& row : rows) {
            std::vector<Rat> r;
            r.reserve(ncol - 1);
            for (int c = 0; c < ncol; ++c)
                if (c != pin) r.push_back(row[c]);
            a.push_back(std::move(r));
            b.push_back(-row[pin]);
        }
        std::vector<Rat> s(ncol - 1, Rat(0));
        int st = gauss_solve(a, b, s);
        if (st == 0) continue;  // this column is zero in every nullspace vector
        if (st == 2)
            return {FitStatus::ambiguous, std::nullopt,
                    "nullspace dimension > 1; raise m/order or supply more terms"};
        std::vector<Poly> polys(m + 1);
        for (int j = 0; j <= m; ++j) {
            std::vector<Rat> c(order + 1, Rat(0));
            for (int i = 0; i <= order; ++i) {
                int cc = col(j, i);
                c[i] = (cc == pin) ? Rat(1) : s[cc < pin ? cc : cc - 1];
            }
            polys[j] = Poly(std::move(c));
        }
        RecurrenceSpec spec = RecurrenceSpec{std::move(polys), order}.primitive();
        if (!verify_fit(spec, coeffs))
            return {FitStatus::no_fit, std::nullopt, "candidate failed re-verification"};
        return {FitStatus::ok, std::move(spec), ""};
    }
    return {FitStatus::no_fit, std::nullopt, "empty nullspace"};
}

FitResult fit_auto(const Series1& coeffs, int order, int max_m) {
    FitResult last;
    for (int m = 1; m <= max_m; ++m) {
        FitResult r = fit_recurrence(coeffs, m, order);
        if (r.status == FitStatus::ok) return r;
        last = std::move(r);
    }
    return last;
}

}  // namespace mirrormap
