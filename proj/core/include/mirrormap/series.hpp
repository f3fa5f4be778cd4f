#pragma once

#include <string>
#include <vector>

#include "mirrormap/poly.hpp"
#include "mirrormap/rational.hpp"

namespace mirrormap {

// Truncated formal power series over Rat. A series of order N carries exact
// coefficients for z^0..z^N and says nothing beyond z^N. Binary operations
// truncate to the smaller order; nothing ever extends validity silently.
// Values are immutable after construction.
class Series1 {
  public:
    // zero series of order 0
    Series1() : c_(1, Rat(0)) {}
    explicit Series1(std::vector<Rat> coeffs);

    static Series1 zero(int order);
    static Series1 constant(const Rat& c, int order);
    static Series1 one(int order) { return constant(Rat(1), order); }
    // the series z
    static Series1 var(int order);
    // truncated expansion of num(z)/den(z), den(0) != 0
    static Series1 from_rational(const Poly& num, const Poly& den, int order);
    static Series1 from_poly(const Poly& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int n) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Series1 truncated(int new_order) const;
    // index of the first nonzero coefficient; order()+1 when identically zero
    int valuation() const;
    bool is_zero() const;
    // equality of values AND truncation orders
    bool operator==(const Series1& o) const { return c_ == o.c_; }
    // coefficientwise equality on the common prefix
    bool matches(const Series1& o) const;

    std::string to_string(const std::string& var = "z", int max_terms = -1) const;

  private:
    std::vector<Rat> c_;
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a);
Series1 operator*(const Series1& a, const Series1& b);
Series1 operator*(const Rat& c, const Series1& a);

// Throws NotAUnit when b(0) = 0.
Series1 div(const Series1& a, const Series1& b);

// exp requires f(0) = 0, log requires f(0) = 1; mutually inverse to order.
Series1 exp(const Series1& f);
Series1 log(const Series1& f);

// compose requires g(0) = 0; result order = min(f.order, g.order).
Series1 compose(const Series1& f, const Series1& g);
// revert requires f(0) = 0, f'(0) != 0; returns h with f(h(q)) = q.
Series1 revert(const Series1& f);

// theta: coefficient of z^n multiplied by n (z d/dz).
Series1 theta(const Series1& f);
// inverse of theta on series vanishing at 0: coefficient divided by n.
// Throws DomainError when f(0) != 0.
Series1 integrate_dlog(const Series1& f);

// z^k * f, truncated to f's order (validity is not extended).
Series1 shift_up(const Series1& f, int k);

}  // namespace mirrormap
