#include "mirrormap/multiparam.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mirrormap/errors.hpp"

namespace mirrormap {

Poly2::Poly2(std::map<Key, Rat> terms) {
    for (auto& [k, v] : terms)
        if (v != 0) terms_.emplace(k, v);
}

Poly2 Poly2::constant(const Rat& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, const Rat& c) {
    Poly2 p;
    if (c != 0) p.terms_.emplace(Key{i, j}, c);
    return p;
}

Rat Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    std::map<Key, Rat> t(terms_);
    for (const auto& [k, v] : o.terms_) {
        auto [it, inserted] = t.emplace(k, v);
        if (!inserted) it->second += v;
    }
    return Poly2(std::move(t));
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o.scaled(Rat(-1)); }

Poly2 Poly2::operator*(const Poly2& o) const {
    std::map<Key, Rat> t;
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : o.terms_) {
            Key k{k1.first + k2.first, k1.second + k2.second};
            auto [it, inserted] = t.emplace(k, v1 * v2);
            if (!inserted) it->second += v1 * v2;
        }
    return Poly2(std::move(t));
}

Poly2 Poly2::scaled(const Rat& c) const {
    std::map<Key, Rat> t;
    if (c != 0)
        for (const auto& [k, v] : terms_) t.emplace(k, v * c);
    return Poly2(std::move(t));
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, v] : terms_) acc += v * pow_rat(x, k.first) * pow_rat(y, k.second);
    return acc;
}

Poly2 Poly2::partial(int var) const {
    std::map<Key, Rat> t;
    for (const auto& [k, v] : terms_) {
        int e = var == 0 ? k.first : k.second;
        if (e == 0) continue;
        Key nk = var == 0 ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
        auto [it, inserted] = t.emplace(nk, Rat(e) * v);
        if (!inserted) it->second += Rat(e) * v;
    }
    return Poly2(std::move(t));
}

Poly Poly2::diagonal() const {
    int deg = 0;
    for (const auto& [k, v] : terms_) deg = std::max(deg, k.first + k.second);
    std::vector<Rat> c(deg + 1, Rat(0));
    for (const auto& [k, v] : terms_) c[k.first + k.second] += v;
    return mirrormap::Poly(std::move(c));
}

std::string Poly2::to_string(const std::string& x, const std::string& y) const {
    if (terms_.empty()) return "0";
    // graded order, then lex, for a stable human-readable form
    std::vector<std::pair<Key, Rat>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : items) {
        Rat a = v > 0 ? v : Rat(-v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && (k.first + k.second > 0);
        if (!unit) os << rat_to_string(a);
        bool star = !unit;
        if (k.first > 0) {
            if (star) os << "*";
            os << x;
            if (k.first > 1) os << "^" << k.first;
            star = true;
        }
        if (k.second > 0) {
            if (star) os << "*";
            os << y;
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

BiRecurrence birecurrence_from_product(const ProductProjModel& model) {
    model.validate();
    if (model.factor_dims.size() != 2)
        throw ModelError("birecurrence_from_product: exactly two factors required");
    BiRecurrence rec;
    for (int j = 0; j < 2; ++j) {
        Poly2 num = Poly2::constant(Rat(1));
        for (const auto& row : model.multidegree) {
            Poly2 base = Poly2::monomial(1, 0, Rat(row[0])) + Poly2::monomial(0, 1, Rat(row[1]));
            for (int k = 1; k <= row[j]; ++k) num = num * (base + Poly2::constant(Rat(k)));
        }
        BiRule rule{std::move(num), model.factor_dims[j] + 1};
        (j == 0 ? rec.rule1 : rec.rule2) = std::move(rule);
    }
    return rec;
}

BiRecurrence p2xp2_birecurrence() {
    ProductProjModel m;
    m.factor_dims = {2, 2};
    m.multidegree = {{3, 3}};
    m.w0 = Rat(18);
    return birecurrence_from_product(m);
}

namespace {

Rat rule_step(const BiRule& rule, int lj, const Rat& num_val, const Rat& prev) {
    Rat den = pow_rat(Rat(lj), static_cast<unsigned long>(rule.denom_power));
    return num_val * prev / den;
}

}  // namespace

BivariateSolution biv_solve(const BiRecurrence& rec, int total_degree) {
    const int D = total_degree;
    std::map<SeriesM::Key, Rat> a;
    a[{0, 0}] = Rat(1);
    // phi0 by the commuting recurrences; both routes must agree
    for (int tot = 1; tot <= D; ++tot) {
        for (int l1 = 0; l1 <= tot; ++l1) {
            int l2 = tot - l1;
            bool have = false;
            Rat val;
            if (l1 >= 1) {
                Rat nv = rec.rule1.numerator.eval(Rat(l1 - 1), Rat(l2));
                val = rule_step(rec.rule1, l1, nv, a[{l1 - 1, l2}]);
                have = true;
            }
            if (l2 >= 1) {
                Rat nv = rec.rule2.numerator.eval(Rat(l1), Rat(l2 - 1));
                Rat v2 = rule_step(rec.rule2, l2, nv, a[{l1, l2 - 1}]);
                if (have && v2 != val)
                    throw InconsistentSystem(
                        "biv_solve: the two recurrence rules disagree on phi0 at (" +
                        std::to_string(l1) + "," + std::to_string(l2) + ")");
                val = v2;
                have = true;
            }
            a[{l1, l2}] = val;
        }
    }

    // For psi_j, push (log z_j) phi0 + psi_j through both operators
    // D_i = Theta_i^{p_i} - z_i N_i(Theta_1, Theta_2):
    //   l_i^{p_i} b_l = N_i(l - e_i) b_{l-e_i}
    //                   - [i == j] p_i l_i^{p_i - 1} a_l
    //                   + (d/dTheta_j N_i)(l - e_i) a_{l-e_i}
    auto solve_psi = [&](int j) {
        std::map<SeriesM::Key, Rat> b;
        b[{0, 0}] = Rat(0);
        Poly2 dN1 = rec.rule1.numerator.partial(j);
        Poly2 dN2 = rec.rule2.numerator.partial(j);
        for (int tot = 1; tot <= D; ++tot) {
            for (int l1 = 0; l1 <= tot; ++l1) {
                int l2 = tot - l1;
                bool have = false;
                Rat val;
                if (l1 >= 1) {
                    Rat rhs = rec.rule1.numerator.eval(Rat(l1 - 1), Rat(l2)) * b[{l1 - 1, l2}] +
                              dN1.eval(Rat(l1 - 1), Rat(l2)) * a[{l1 - 1, l2}];
                    if (j == 0)
                        rhs -= Rat(rec.rule1.denom_power) *
                               pow_rat(Rat(l1), rec.rule1.denom_power - 1) * a[{l1, l2}];
                    val = rhs / pow_rat(Rat(l1), rec.rule1.denom_power);
                    have = true;
                }
                if (l2 >= 1) {
                    Rat rhs = rec.rule2.numerator.eval(Rat(l1), Rat(l2 - 1)) * b[{l1, l2 - 1}] +
                              dN2.eval(Rat(l1), Rat(l2 - 1)) * a[{l1, l2 - 1}];
                    if (j == 1)
                        rhs -= Rat(rec.rule2.denom_power) *
                               pow_rat(Rat(l2), rec.rule2.denom_power - 1) * a[{l1, l2}];
                    Rat v2 = rhs / pow_rat(Rat(l2), rec.rule2.denom_power);
                    if (have && v2 != val)
                        throw InconsistentSystem(
                            "biv_solve: the two operators disagree on psi" + std::to_string(j + 1) +
                            " at (" + std::to_string(l1) + "," + std::to_string(l2) + ")");
                    val = v2;
                    have = true;
                }
                b[{l1, l2}] = val;
            }
        }
        return b;
    };

    auto b1 = solve_psi(0);
    auto b2 = solve_psi(1);
    return BivariateSolution{SeriesM(2, D, std::move(a)), SeriesM(2, D, std::move(b1)),
                             SeriesM(2, D, std::move(b2))};
}

BivariateQ biv_q(const BivariateSolution& sol) {
    int D = sol.phi0.degree_bound();
    BivariateQ out{exp(div(sol.psi1, sol.phi0)).shifted_by_var(0, D + 1),
                   exp(div(sol.psi2, sol.phi0)).shifted_by_var(1, D + 1),
                   true,
                   {}};
    for (const SeriesM* q : {&out.q1, &out.q2})
        for (const auto& [e, v] : q->terms())
            if (!is_integer(v)) {
                out.all_integral = false;
                out.failures.emplace_back(e, v);
            }
    return out;
}

namespace {

// determinant by Laplace expansion along the first row
Poly2 det(std::vector<std::vector<Poly2>> m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly2 acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly2>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly2> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly2 term = m[0][j] * det(std::move(minor));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Poly2 discriminant_p2p2() {
    // f1 = x (A+B)^3 - A^3, f2 = y (A+B)^3 - B^3, dehomogenized at B = 1:
    // f1 = (x-1) A^3 + 3x A^2 + 3x A + x
    // f2 =     y A^3 + 3y A^2 + 3y A + (y-1)
    Poly2 x = Poly2::monomial(1, 0);
    Poly2 y = Poly2::monomial(0, 1);
    Poly2 one = Poly2::constant(Rat(1));
    std::vector<Poly2> f1{x - one, x.scaled(Rat(3)), x.scaled(Rat(3)), x};           // A^3..A^0
    std::vector<Poly2> f2{y, y.scaled(Rat(3)), y.scaled(Rat(3)), y - one};
    std::vector<std::vector<Poly2>> syl(6, std::vector<Poly2>(6));
    for (int sh = 0; sh < 3; ++sh)
        for (int i = 0; i < 4; ++i) {
            syl[sh][sh + i] = f1[i];
            syl[3 + sh][sh + i] = f2[i];
        }
    Poly2 r = det(std::move(syl));
    Rat c0 = r.coeff(0, 0);
    if (c0 == 0) throw Error("discriminant_p2p2: vanishing constant term");
    return r.scaled(Rat(1) / c0);
}

}  // namespace mirrormap
