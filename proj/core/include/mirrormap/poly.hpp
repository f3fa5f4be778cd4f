#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mirrormap/rational.hpp"

namespace mirrormap {

// Exact univariate polynomial over Rat, coefficients low -> high, trailing
// zeros trimmed. The zero polynomial has no coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
    static Poly monomial(int degree, const Rat& c = Rat(1));
    // scale * prod_i (y - roots[i])
    static Poly from_roots(const std::vector<Rat>& roots, const Rat& scale = Rat(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    // coefficient of y^i, zero-padded beyond the degree
    const Rat& operator[](int i) const;
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Exact division; throws DomainError when the remainder is nonzero.
    Poly divided_exactly_by(const Poly& d) const;
    // Quotient/remainder division.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    // lcm of coefficient denominators (1 for the zero polynomial).
    Int denominator_lcm() const;
    // gcd of coefficient numerators, for primitive-form scaling.
    Int numerator_gcd() const;

    std::string to_string(const std::string& var = "y") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace mirrormap
