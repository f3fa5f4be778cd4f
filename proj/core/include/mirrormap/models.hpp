#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mirrormap/multiseries.hpp"
#include "mirrormap/operator.hpp"
#include "mirrormap/rational.hpp"
#include "mirrormap/series.hpp"

namespace mirrormap {

// Complete intersection of hypersurfaces of the given degrees, coefficients
// a_n = prod_i (d_i n)! / prod_j (w_j n)!. For the ordinary case all
// denominator weights are 1 and the Calabi-Yau balance reads
// dim + r + 1 = sum d_i; weighted projective cases list their extra factorial
// denominators explicitly (e.g. {2} for the (2n)! of P(2,1,1,1,1)).
struct CIModel {
    std::vector<int> degrees;
    int dim = 3;
    std::vector<int> extra_denominators;
    // W_d(0); defaults to prod d_i for ordinary intersections
    std::optional<Rat> w0;

    bool is_ordinary() const { return extra_denominators.empty(); }
    std::vector<int> denominator_weights() const;
    Rat normalization() const;
    void validate() const;  // throws ModelError
};

Series1 ci_series(const CIModel& model, int N);
RecurrenceSpec ci_recurrence(const CIModel& model);

// Complete intersection in a product of projective spaces P^{n_1} x ... x P^{n_s}
// cut out by r hypersurfaces with multidegree matrix M (r x s). Coefficient at
// multi-index l is prod_i (sum_j M_ij l_j)! / prod_j (l_j!)^{n_j + 1}.
struct ProductProjModel {
    std::vector<int> factor_dims;               // n_1 .. n_s
    std::vector<std::vector<int>> multidegree;  // rows = hypersurfaces
    Rat w0 = Rat(0);                            // classical triple intersection, config data

    void validate() const;  // Calabi-Yau: column sums = n_j + 1
};

SeriesM product_series(const ProductProjModel& model, int degree_bound);

// Toric data: generators v_1..v_k of the lattice, partitioned into the index
// sets E_1..E_r, plus a user-supplied Mori basis of the relation lattice R(E).
struct ToricModel {
    std::vector<std::vector<long>> generators;   // k vectors of length rank
    std::vector<std::vector<int>> partition;     // index sets E_1..E_r (0-based)
    std::vector<std::vector<long>> mori_basis;   // t vectors of length k
    Rat w0 = Rat(0);

    void validate() const;  // throws ModelError when sum lambda_j v_j != 0
};

SeriesM toric_series(const ToricModel& model, int degree_bound);

// Report-only dump of the mirror Laurent polynomials P_{E_i}(X) = 1 - sum u_j X^{v_j}.
std::vector<std::string> mirror_laurent_terms(const ToricModel& model);

// Two-term data: Theta^{d+1} - mu z (Theta + alpha_1) ... (Theta + alpha_{d+1}).
struct HypergeomParams {
    std::vector<Rat> alpha;
    Rat mu = Rat(0);
    Rat w0 = Rat(0);

    int order() const { return static_cast<int>(alpha.size()); }
    // every catalog model satisfies alpha_1 + alpha_{d+1} = alpha_2 + alpha_d = 1
    bool alpha_pairs_sum_to_one() const;
};

ThetaOperator two_term_op(const HypergeomParams& params);

struct ExtractOutcome {
    std::optional<HypergeomParams> params;
    Poly unfactored_remainder;  // nonzero degree when the factorization failed
};

// Factors -P_0 of a 2-term MU spec over Q by rational-root search.
// Unfactorable is reported as a value (params empty, remainder filled).
ExtractOutcome extract_params(const RecurrenceSpec& spec);

// Explicit recurrence supplied as data.
struct ExplicitRecurrence {
    RecurrenceSpec spec;
    Rat w0 = Rat(0);
};

struct ModelSpec {
    std::string name;
    int dim = 3;
    int default_terms = 20;
    // for product models run through the univariate pipeline
    std::optional<std::vector<int>> diagonal_weights;
    std::variant<CIModel, ProductProjModel, ToricModel, ExplicitRecurrence, HypergeomParams> payload;

    Rat normalization() const;
    std::string kind() const;
    void validate() const;
};

}  // namespace mirrormap
