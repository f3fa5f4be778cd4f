#include "mirrormap/series.hpp"

#include <algorithm>
#include <sstream>

#include "mirrormap/errors.hpp"

namespace mirrormap {

namespace {
const Rat kZero(0);
int common_order(const Series1& a, const Series1& b) { return std::min(a.order(), b.order()); }
}  // namespace

Series1::Series1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, Rat(0));
}

Series1 Series1::zero(int order) { return Series1(std::vector<Rat>(order + 1, Rat(0))); }

Series1 Series1::constant(const Rat& c, int order) {
    std::vector<Rat> v(order + 1, Rat(0));
    v[0] = c;
    return Series1(std::move(v));
}

Series1 Series1::var(int order) {
    std::vector<Rat> v(order + 1, Rat(0));
    if (order >= 1) v[1] = Rat(1);
    return Series1(std::move(v));
}

Series1 Series1::from_poly(const Poly& p, int order) {
    std::vector<Rat> v(order + 1, Rat(0));
    for (int i = 0; i <= std::min(order, p.degree()); ++i) v[i] = p[i];
    return Series1(std::move(v));
}

Series1 Series1::from_rational(const Poly& num, const Poly& den, int order) {
    return div(from_poly(num, order), from_poly(den, order));
}

const Rat& Series1::operator[](int n) const {
    if (n < 0 || n > order()) return kZero;
    return c_[n];
}

Series1 Series1::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    return Series1(std::vector<Rat>(c_.begin(), c_.begin() + new_order + 1));
}

int Series1::valuation() const {
    for (int n = 0; n <= order(); ++n)
        if (c_[n] != 0) return n;
    return order() + 1;
}

bool Series1::is_zero() const { return valuation() > order(); }

bool Series1::matches(const Series1& o) const {
    int n = common_order(*this, o);
    for (int i = 0; i <= n; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Series1 operator+(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    std::vector<Rat> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = a[i] + b[i];
    return Series1(std::move(v));
}

Series1 operator-(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    std::vector<Rat> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = a[i] - b[i];
    return Series1(std::move(v));
}

Series1 operator-(const Series1& a) {
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x = -x;
    return Series1(std::move(v));
}

Series1 operator*(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    std::vector<Rat> v(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            v[i + j] += a[i] * b[j];
        }
    }
    return Series1(std::move(v));
}

Series1 operator*(const Rat& c, const Series1& a) {
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x *= c;
    return Series1(std::move(v));
}

Series1 div(const Series1& a, const Series1& b) {
    if (b[0] == 0) throw NotAUnit("div: divisor has zero constant term");
    int n = common_order(a, b);
    std::vector<Rat> v(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rat s = a[k];
        for (int j = 1; j <= k; ++j) {
            if (b[j] == 0) continue;
            s -= b[j] * v[k - j];
        }
        v[k] = s / b[0];
    }
    return Series1(std::move(v));
}

Series1 exp(const Series1& f) {
    if (f[0] != 0) throw DomainError("exp: series must vanish at 0");
    int n = f.order();
    std::vector<Rat> g(n + 1, Rat(0));
    g[0] = Rat(1);
    // n g_n = sum_k (k f_k) g_{n-k}, from theta(g) = theta(f) g
    for (int k = 1; k <= n; ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j) {
            if (f[j] == 0) continue;
            s += Rat(j) * f[j] * g[k - j];
        }
        g[k] = s / Rat(k);
    }
    return Series1(std::move(g));
}

Series1 log(const Series1& f) {
    if (f[0] != 1) throw DomainError("log: series must have constant term 1");
    Series1 q = div(theta(f), f);
    return integrate_dlog(q);
}

Series1 compose(const Series1& f, const Series1& g) {
    if (g[0] != 0) throw DomainError("compose: inner series must vanish at 0");
    int n = common_order(f, g);
    // Horner over the truncation ring
    Series1 acc = Series1::zero(n);
    Series1 gi = g.truncated(n);
    for (int k = std::min(f.order(), n); k >= 0; --k) {
        acc = acc * gi;
        std::vector<Rat> v(acc.coeffs());
        v[0] += f[k];
        acc = Series1(std::move(v));
    }
    return acc;
}

Series1 revert(const Series1& f) {
    if (f[0] != 0) throw DomainError("revert: series must vanish at 0");
    if (f[1] == 0) throw DomainError("revert: series must have nonzero linear term");
    int n = f.order();
    if (n < 1) throw DomainError("revert: order too small");
    // Newton iteration h <- h - (f(h) - q)/f'(h); precision doubles per step.
    std::vector<int> targets;
    for (int m = n; m > 1; m = (m + 1) / 2) targets.push_back(m);
    std::vector<Rat> h0{Rat(0), Rat(1) / f[1]};
    Series1 h(std::move(h0));
    Series1 df = Series1::zero(n);
    {
        std::vector<Rat> d(n + 1, Rat(0));
        for (int k = 0; k < n; ++k) d[k] = Rat(k + 1) * f[k + 1];
        df = Series1(std::move(d));
    }
    for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
        int m = *it;
        // pad the current approximation with zero coefficients up to order m
        std::vector<Rat> v(m + 1, Rat(0));
        for (int i = 0; i <= std::min(h.order(), m); ++i) v[i] = h[i];
        Series1 hm(std::move(v));
        Series1 fe = compose(f.truncated(m), hm) - Series1::var(m);
        Series1 de = compose(df.truncated(m), hm);
        h = hm - div(fe, de);
    }
    return h;
}

Series1 theta(const Series1& f) {
    std::vector<Rat> v(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) v[i] = Rat(i) * f[i];
    return Series1(std::move(v));
}

Series1 integrate_dlog(const Series1& f) {
    if (f[0] != 0) throw DomainError("integrate_dlog: integrand f/z has a pole");
    std::vector<Rat> v(f.order() + 1, Rat(0));
    for (int i = 1; i <= f.order(); ++i) v[i] = f[i] / Rat(i);
    return Series1(std::move(v));
}

Series1 shift_up(const Series1& f, int k) {
    std::vector<Rat> v(f.order() + 1, Rat(0));
    for (int i = k; i <= f.order(); ++i) v[i] = f[i - k];
    return Series1(std::move(v));
}

std::string Series1::to_string(const std::string& var, int max_terms) const {
    std::ostringstream os;
    bool first = true;
    int printed = 0;
    for (int i = 0; i <= order(); ++i) {
        if (max_terms >= 0 && printed >= max_terms) break;
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        ++printed;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

}  // namespace mirrormap
