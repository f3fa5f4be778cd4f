#include "mirrormap/poly.hpp"

#include <sstream>

namespace mirrormap {

namespace {
const Rat kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rat& c) {
    if (c == 0) return Poly();
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots, const Rat& scale) {
    Poly p = Poly::constant(scale);
    for (const Rat& r : roots) p = p * Poly({-r, Rat(1)});
    return p;
}

const Rat& Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("Poly::divmod: division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0) return {Poly(), *this};
    std::vector<Rat> q(qd + 1, Rat(0));
    for (int k = qd; k >= 0; --k) {
        Rat c = rem[k + dd] / d.leading();
        q[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d[i];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::divided_exactly_by(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DomainError("Poly::divided_exactly_by: nonzero remainder");
    return q;
}

Int Poly::denominator_lcm() const {
    Int l(1);
    for (const Rat& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

Int Poly::numerator_gcd() const {
    Int g(0);
    for (const Rat& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
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
    }
    return os.str();
}

}  // namespace mirrormap
