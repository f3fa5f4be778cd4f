#pragma once

#include <map>
#include <string>
#include <vector>

#include "mirrormap/rational.hpp"
#include "mirrormap/series.hpp"

namespace mirrormap {

// Truncated power series in t variables over Rat, sparse by exponent vector,
// truncated by total degree: every stored term has component sum <= bound,
// absent keys are zero. Immutable after construction.
class SeriesM {
  public:
    using Key = std::vector<int>;

    SeriesM() : nvars_(1), bound_(0) {}
    SeriesM(int nvars, int total_degree_bound)
        : nvars_(nvars), bound_(total_degree_bound) {}
    SeriesM(int nvars, int total_degree_bound, std::map<Key, Rat> terms);

    static SeriesM constant(int nvars, int bound, const Rat& c);

    int nvars() const { return nvars_; }
    int degree_bound() const { return bound_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    Rat coeff(const Key& e) const;

    SeriesM truncated(int new_bound) const;
    // multiply by the variable z_j (exponent shift); the result keeps the
    // stated bound, terms pushed past it are dropped
    SeriesM shifted_by_var(int j, int new_bound) const;

    bool operator==(const SeriesM& o) const;

    std::string to_string(int max_terms = -1) const;

  private:
    int nvars_;
    int bound_;
    std::map<Key, Rat> terms_;
};

SeriesM operator+(const SeriesM& a, const SeriesM& b);
SeriesM operator-(const SeriesM& a, const SeriesM& b);
SeriesM operator*(const SeriesM& a, const SeriesM& b);
SeriesM operator*(const Rat& c, const SeriesM& a);
// b must have nonzero constant term; throws NotAUnit otherwise.
SeriesM div(const SeriesM& a, const SeriesM& b);
// f must vanish at 0; throws DomainError otherwise.
SeriesM exp(const SeriesM& f);

// Restriction z_i -> z^{w_i}: coefficient of z^n is the sum of F[e] over
// exponent vectors with sum_i w_i e_i = n. The output order is the largest n
// for which every contributing multi-index is within the bound:
// min(w)*(bound+1) - 1.
Series1 diagonal_restrict(const SeriesM& F, const std::vector<int>& weights);

}  // namespace mirrormap
