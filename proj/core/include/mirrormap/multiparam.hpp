#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mirrormap/models.hpp"
#include "mirrormap/multiseries.hpp"
#include "mirrormap/rational.hpp"

namespace mirrormap {

// Exact sparse bivariate polynomial with a canonical (ordered-map) term order.
class Poly2 {
  public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    explicit Poly2(std::map<Key, Rat> terms);

    static Poly2 constant(const Rat& c);
    static Poly2 monomial(int i, int j, const Rat& c = Rat(1));

    const std::map<Key, Rat>& terms() const { return terms_; }
    Rat coeff(int i, int j) const;
    bool is_zero() const { return terms_.empty(); }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 scaled(const Rat& c) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Rat eval(const Rat& x, const Rat& y) const;
    Poly2 partial(int var) const;  // d/dx for var = 0, d/dy for var = 1
    // substitution y = x, returned as a univariate Poly
    Poly diagonal() const;

    std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

  private:
    std::map<Key, Rat> terms_;
};

// One step of a two-variable holonomic system of 2-term-per-variable shape:
// (l_j + 1)^{denom_power} a_{l + e_j} = numerator(l_1, l_2) a_l.
struct BiRule {
    Poly2 numerator;
    int denom_power = 3;
};

struct BiRecurrence {
    BiRule rule1;  // advances l1
    BiRule rule2;  // advances l2
};

// The degree (3,3) hypersurface system in P^2 x P^2.
BiRecurrence p2xp2_birecurrence();

// The rules of any 2-factor product-of-projective-spaces model.
BiRecurrence birecurrence_from_product(const ProductProjModel& model);

struct BivariateSolution {
    SeriesM phi0;
    SeriesM psi1;
    SeriesM psi2;
};

// phi0 from the commuting pair with a_{0,0} = 1; psi_j as the unique solution
// of the inhomogeneous system obtained by pushing (log z_j) phi0 + psi_j
// through BOTH operators, swept by total degree. Conflicting coefficient
// values throw InconsistentSystem.
BivariateSolution biv_solve(const BiRecurrence& rec, int total_degree);

struct BivariateQ {
    SeriesM q1;  // z1 exp(psi1/phi0)
    SeriesM q2;
    bool all_integral = true;
    // non-integral coefficients: exponent vector and value
    std::vector<std::pair<std::vector<int>, Rat>> failures;
};

BivariateQ biv_q(const BivariateSolution& sol);

// Resultant of the binary cubics 27 z1 (A+B)^3 - A^3 and 27 z2 (A+B)^3 - B^3
// by the 6x6 Sylvester determinant, in x = 27 z1, y = 27 z2, normalized to
// constant term 1.
Poly2 discriminant_p2p2();

}  // namespace mirrormap
