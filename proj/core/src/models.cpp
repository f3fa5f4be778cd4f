#include "mirrormap/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mirrormap/errors.hpp"

namespace mirrormap {

std::vector<int> CIModel::denominator_weights() const {
    // ones fill up to k = dim + r + 1 total factors
    int r = static_cast<int>(degrees.size());
    int ones = dim + r + 1 - static_cast<int>(extra_denominators.size());
    if (ones < 0) throw ModelError("CIModel: more denominator factors than dim + r + 1 allows");
    std::vector<int> w(ones, 1);
    w.insert(w.end(), extra_denominators.begin(), extra_denominators.end());
    return w;
}

Rat CIModel::normalization() const {
    if (w0) return *w0;
    if (!is_ordinary())
        throw ModelError("CIModel: weighted model requires explicit normalization w0");
    Rat p(1);
    for (int d : degrees) p *= Rat(d);
    return p;
}

void CIModel::validate() const {
    if (degrees.empty()) throw ModelError("CIModel: field 'degrees' must be nonempty");
    for (int d : degrees)
        if (d <= 0) throw ModelError("CIModel: field 'degrees' must be positive");
    for (int w : extra_denominators)
        if (w <= 1) throw ModelError("CIModel: field 'extra_denominators' entries must exceed 1");
    long degree_sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
    long weight_sum = 0;
    for (int w : denominator_weights()) weight_sum += w;
    if (degree_sum != weight_sum)
        throw ModelError("CIModel: Calabi-Yau condition violated (field 'degrees': sum " +
                         std::to_string(degree_sum) + " != denominator weight sum " +
                         std::to_string(weight_sum) + ")");
    if (normalization() <= 0) throw ModelError("CIModel: field 'w0' must be positive");
}

Series1 ci_series(const CIModel& model, int N) {
    model.validate();
    std::vector<int> weights = model.denominator_weights();
    std::vector<Rat> a(N + 1);
    for (int n = 0; n <= N; ++n) {
        Int num(1), den(1);
        for (int d : model.degrees) num *= factorial(static_cast<unsigned long>(d) * n);
        for (int w : weights) den *= factorial(static_cast<unsigned long>(w) * n);
        a[n] = make_rat(num, den);
    }
    return Series1(std::move(a));
}

RecurrenceSpec ci_recurrence(const CIModel& model) {
    model.validate();
    int d1 = model.dim + 1;
    // ratio a_{n+1}/a_n = prod_i prod_{k=1..d_i} (d_i y + k) / prod_j prod_{l=1..w_j} (w_j y + l)
    Poly num = Poly::constant(Rat(1));
    for (int d : model.degrees)
        for (int k = 1; k <= d; ++k) num = num * Poly({Rat(k), Rat(d)});
    Poly den = Poly::constant(Rat(1));
    for (int w : model.denominator_weights())
        for (int l = 1; l <= w; ++l) den = den * Poly({Rat(l), Rat(w)});
    // -P_0(y) = (y+1)^{d+1} * num / den, exact by construction
    Poly shifted = Poly::from_roots(std::vector<Rat>(d1, Rat(-1))) * num;
    Poly p0;
    try {
        p0 = shifted.divided_exactly_by(den);
    } catch (const DomainError&) {
        throw ModelError("CIModel: factorial ratio does not clear to a polynomial");
    }
    if (p0.degree() != d1)
        throw ModelError("CIModel: cleared recurrence polynomial has degree " +
                         std::to_string(p0.degree()) + ", expected " + std::to_string(d1));
    std::vector<Poly> polys{-p0, Poly::monomial(d1)};
    return RecurrenceSpec{std::move(polys), d1};
}

void ProductProjModel::validate() const {
    size_t s = factor_dims.size();
    if (s == 0) throw ModelError("ProductProjModel: field 'factors' must be nonempty");
    if (multidegree.empty()) throw ModelError("ProductProjModel: field 'multidegree' must be nonempty");
    for (const auto& row : multidegree) {
        if (row.size() != s)
            throw ModelError("ProductProjModel: field 'multidegree' row width != factor count");
        for (int v : row)
            if (v < 0) throw ModelError("ProductProjModel: field 'multidegree' entries must be >= 0");
    }
    for (size_t j = 0; j < s; ++j) {
        int col = 0;
        for (const auto& row : multidegree) col += row[j];
        if (col != factor_dims[j] + 1)
            throw ModelError("ProductProjModel: Calabi-Yau condition violated at factor " +
                             std::to_string(j + 1) + " (field 'multidegree': column sum " +
                             std::to_string(col) + " != " + std::to_string(factor_dims[j] + 1) + ")");
    }
}

SeriesM product_series(const ProductProjModel& model, int degree_bound) {
    model.validate();
    int s = static_cast<int>(model.factor_dims.size());
    std::map<SeriesM::Key, Rat> terms;
    SeriesM::Key l(s, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == s) {
            Int num(1), den(1);
            for (const auto& row : model.multidegree) {
                long deg = 0;
                for (int j = 0; j < s; ++j) deg += static_cast<long>(row[j]) * l[j];
                num *= factorial(static_cast<unsigned long>(deg));
            }
            for (int j = 0; j < s; ++j) {
                Int f = factorial(static_cast<unsigned long>(l[j]));
                for (int rep = 0; rep <= model.factor_dims[j]; ++rep) den *= f;
            }
            terms.emplace(l, make_rat(num, den));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            l[pos] = v;
            rec(pos + 1, remaining - v);
        }
        l[pos] = 0;
    };
    rec(0, degree_bound);
    return SeriesM(s, degree_bound, std::move(terms));
}

void ToricModel::validate() const {
    if (generators.empty()) throw ModelError("ToricModel: field 'generators' must be nonempty");
    size_t rank = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != rank) throw ModelError("ToricModel: field 'generators' rank mismatch");
    size_t k = generators.size();
    std::vector<char> seen(k, 0);
    for (const auto& part : partition)
        for (int idx : part) {
            if (idx < 0 || static_cast<size_t>(idx) >= k)
                throw ModelError("ToricModel: field 'partition' index out of range");
            if (seen[idx]) throw ModelError("ToricModel: field 'partition' reuses a generator");
            seen[idx] = 1;
        }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ModelError("ToricModel: field 'partition' must cover every generator");
    if (mori_basis.empty()) throw ModelError("ToricModel: field 'mori_basis' must be nonempty");
    for (const auto& lam : mori_basis) {
        if (lam.size() != k) throw ModelError("ToricModel: field 'mori_basis' vector length != k");
        for (size_t c = 0; c < rank; ++c) {
            long acc = 0;
            for (size_t j = 0; j < k; ++j) acc += lam[j] * generators[j][c];
            if (acc != 0)
                throw ModelError("ToricModel: field 'mori_basis' vector violates sum lambda_j v_j = 0");
        }
    }
}

SeriesM toric_series(const ToricModel& model, int degree_bound) {
    model.validate();
    int t = static_cast<int>(model.mori_basis.size());
    size_t k = model.generators.size();
    std::map<SeriesM::Key, Rat> terms;
    SeriesM::Key c(t, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == t) {
            std::vector<long> lambda(k, 0);
            for (int s = 0; s < t; ++s)
                for (size_t j = 0; j < k; ++j) lambda[j] += static_cast<long>(c[s]) * model.mori_basis[s][j];
            for (long lj : lambda)
                if (lj < 0) return;  // outside R^+(E)
            Int num(1), den(1);
            for (const auto& part : model.partition) {
                long tot = 0;
                for (int idx : part) tot += lambda[idx];
                num *= factorial(static_cast<unsigned long>(tot));
            }
            for (long lj : lambda) den *= factorial(static_cast<unsigned long>(lj));
            terms.emplace(c, make_rat(num, den));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            c[pos] = v;
            rec(pos + 1, remaining - v);
        }
        c[pos] = 0;
    };
    rec(0, degree_bound);
    return SeriesM(t, degree_bound, std::move(terms));
}

std::vector<std::string> mirror_laurent_terms(const ToricModel& model) {
    model.validate();
    std::vector<std::string> out;
    for (size_t i = 0; i < model.partition.size(); ++i) {
        std::ostringstream os;
        os << "P_E" << i + 1 << "(X) = 1";
        for (int idx : model.partition[i]) {
            os << " - u" << idx + 1;
            const auto& v = model.generators[idx];
            for (size_t c = 0; c < v.size(); ++c) {
                if (v[c] == 0) continue;
                os << "*X" << c + 1;
                if (v[c] != 1) os << "^" << v[c];
            }
        }
        out.push_back(os.str());
    }
    return out;
}

bool HypergeomParams::alpha_pairs_sum_to_one() const {
    std::vector<Rat> s(alpha);
    std::sort(s.begin(), s.end());
    size_t n = s.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (s[i] + s[n - 1 - i] != 1) return false;
    return true;
}

ThetaOperator two_term_op(const HypergeomParams& params) {
    if (params.alpha.empty()) throw ModelError("HypergeomParams: field 'alpha' must be nonempty");
    if (params.mu == 0) throw ModelError("HypergeomParams: field 'mu' must be nonzero");
    int d1 = params.order();
    std::vector<Rat> negated;
    negated.reserve(params.alpha.size());
    for (const Rat& a : params.alpha) negated.push_back(-a);
    Poly p0 = Poly::from_roots(negated, -params.mu);
    return ThetaOperator{{std::move(p0), Poly::monomial(d1)}, d1};
}

namespace {

// All positive divisors; empty when the factoring budget is blown.
std::vector<Int> divisors(const Int& value) {
    std::vector<Int> out;
    Int v = abs(value);
    if (v == 0) return out;
    Int i(1);
    // trial enumeration up to sqrt; values here come from recurrence
    // constants and stay small
    while (i * i <= v) {
        if (v % i == 0) {
            out.push_back(i);
            out.push_back(v / i);
        }
        ++i;
        if (i > 2000000) return {};
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Rat> find_rational_root(const Poly& p) {
    if (p[0] == 0) return Rat(0);
    // rational root theorem on the integer-cleared polynomial
    Poly cleared = p.scaled(Rat(p.denominator_lcm()));
    std::vector<Int> ps = divisors(cleared[0].get_num());
    std::vector<Int> qs = divisors(cleared.leading().get_num());
    for (const Int& den : qs)
        for (const Int& num : ps) {
            Rat cand = make_rat(num, den);
            if (p.eval(cand) == 0) return cand;
            if (p.eval(-cand) == 0) return -cand;
        }
    return std::nullopt;
}

}  // namespace

ExtractOutcome extract_params(const RecurrenceSpec& spec) {
    if (spec.m() != 1) throw ModelError("extract_params: requires a 2-term recurrence");
    RecurrenceSpec mu = spec.mu_normalized();
    if (mu.polys[1] != Poly::monomial(spec.order))
        throw ModelError("extract_params: requires an MU spec (P_1 = y^{d+1})");
    Poly p = -mu.polys[0];  // mu * prod (y + alpha_i)
    Rat lead = p.leading();
    ExtractOutcome out;
    std::vector<Rat> alphas;
    while (p.degree() > 0) {
        auto root = find_rational_root(p);
        if (!root) {
            out.unfactored_remainder = p;
            return out;
        }
        alphas.push_back(-*root);
        p = p.divided_exactly_by(Poly({-*root, Rat(1)}));
    }
    std::sort(alphas.begin(), alphas.end());
    out.params = HypergeomParams{std::move(alphas), lead, Rat(0)};
    return out;
}

Rat ModelSpec::normalization() const {
    return std::visit(
        [](const auto& payload) -> Rat {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, CIModel>) return payload.normalization();
            if constexpr (std::is_same_v<T, ProductProjModel>) return payload.w0;
            if constexpr (std::is_same_v<T, ToricModel>) return payload.w0;
            if constexpr (std::is_same_v<T, ExplicitRecurrence>) return payload.w0;
            if constexpr (std::is_same_v<T, HypergeomParams>) return payload.w0;
        },
        payload);
}

std::string ModelSpec::kind() const {
    return std::visit(
        [](const auto& payload) -> std::string {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, CIModel>)
                return payload.is_ordinary() ? "complete_intersection" : "weighted_ci";
            if constexpr (std::is_same_v<T, ProductProjModel>) return "product_projective";
            if constexpr (std::is_same_v<T, ToricModel>) return "toric";
            if constexpr (std::is_same_v<T, ExplicitRecurrence>) return "explicit_recurrence";
            if constexpr (std::is_same_v<T, HypergeomParams>) return "two_term";
        },
        payload);
}

void ModelSpec::validate() const {
    if (name.empty()) throw ConfigError("ModelSpec: field 'name' must be nonempty");
    if (default_terms < 1) throw ConfigError("ModelSpec: field 'terms' must be positive");
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CIModel>) p.validate();
            if constexpr (std::is_same_v<T, ProductProjModel>) p.validate();
            if constexpr (std::is_same_v<T, ToricModel>) p.validate();
            if constexpr (std::is_same_v<T, ExplicitRecurrence>) {
                if (p.spec.polys.size() < 2)
                    throw ConfigError("ModelSpec: field 'recurrence' needs at least two polynomials");
            }
            if constexpr (std::is_same_v<T, HypergeomParams>) {
                if (p.alpha.empty()) throw ConfigError("ModelSpec: field 'alpha' must be nonempty");
                if (p.mu == 0) throw ConfigError("ModelSpec: field 'mu' must be nonzero");
            }
        },
        payload);
    if (diagonal_weights) {
        size_t expected = 0;
        if (auto* p = std::get_if<ProductProjModel>(&payload))
            expected = p->factor_dims.size();
        else if (auto* t = std::get_if<ToricModel>(&payload))
            expected = t->mori_basis.size();
        else
            throw ConfigError("ModelSpec: field 'diagonal_weights' applies to multivariate models only");
        if (diagonal_weights->size() != expected)
            throw ConfigError("ModelSpec: field 'diagonal_weights' must have " +
                              std::to_string(expected) + " entries");
        for (int w : *diagonal_weights)
            if (w <= 0) throw ConfigError("ModelSpec: field 'diagonal_weights' must be positive");
    }
}

}  // namespace mirrormap
