#include "mirrormap/multiseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mirrormap/errors.hpp"

namespace mirrormap {

namespace {
int key_total(const SeriesM::Key& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

SeriesM::SeriesM(int nvars, int total_degree_bound, std::map<Key, Rat> terms)
    : nvars_(nvars), bound_(total_degree_bound) {
    for (auto& [e, v] : terms) {
        if (static_cast<int>(e.size()) != nvars_)
            throw DomainError("SeriesM: exponent vector length mismatch");
        if (v == 0 || key_total(e) > bound_) continue;
        terms_.emplace(e, v);
    }
}

SeriesM SeriesM::constant(int nvars, int bound, const Rat& c) {
    std::map<Key, Rat> t;
    if (c != 0) t.emplace(Key(nvars, 0), c);
    return SeriesM(nvars, bound, std::move(t));
}

Rat SeriesM::coeff(const Key& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

SeriesM SeriesM::truncated(int new_bound) const {
    if (new_bound >= bound_) return *this;
    return SeriesM(nvars_, new_bound, terms_);
}

SeriesM SeriesM::shifted_by_var(int j, int new_bound) const {
    std::map<Key, Rat> t;
    for (const auto& [e, v] : terms_) {
        Key k = e;
        k[j] += 1;
        if (key_total(k) <= new_bound) t.emplace(std::move(k), v);
    }
    return SeriesM(nvars_, new_bound, std::move(t));
}

bool SeriesM::operator==(const SeriesM& o) const {
    return nvars_ == o.nvars_ && bound_ == o.bound_ && terms_ == o.terms_;
}

SeriesM operator+(const SeriesM& a, const SeriesM& b) {
    if (a.nvars() != b.nvars()) throw DomainError("SeriesM: variable count mismatch");
    int bound = std::min(a.degree_bound(), b.degree_bound());
    std::map<SeriesM::Key, Rat> t(a.terms());
    for (const auto& [e, v] : b.terms()) {
        auto [it, inserted] = t.emplace(e, v);
        if (!inserted) it->second += v;
    }
    return SeriesM(a.nvars(), bound, std::move(t));
}

SeriesM operator-(const SeriesM& a, const SeriesM& b) { return a + Rat(-1) * b; }

SeriesM operator*(const Rat& c, const SeriesM& a) {
    std::map<SeriesM::Key, Rat> t;
    if (c != 0)
        for (const auto& [e, v] : a.terms()) t.emplace(e, c * v);
    return SeriesM(a.nvars(), a.degree_bound(), std::move(t));
}

SeriesM operator*(const SeriesM& a, const SeriesM& b) {
    if (a.nvars() != b.nvars()) throw DomainError("SeriesM: variable count mismatch");
    int bound = std::min(a.degree_bound(), b.degree_bound());
    std::map<SeriesM::Key, Rat> t;
    for (const auto& [e, v] : a.terms()) {
        int de = key_total(e);
        if (de > bound) continue;
        for (const auto& [f, w] : b.terms()) {
            if (de + key_total(f) > bound) continue;
            SeriesM::Key k(e.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = e[i] + f[i];
            auto [it, inserted] = t.emplace(std::move(k), v * w);
            if (!inserted) it->second += v * w;
        }
    }
    return SeriesM(a.nvars(), bound, std::move(t));
}

SeriesM div(const SeriesM& a, const SeriesM& b) {
    if (a.nvars() != b.nvars()) throw DomainError("SeriesM: variable count mismatch");
    SeriesM::Key origin(a.nvars(), 0);
    Rat b0 = b.coeff(origin);
    if (b0 == 0) throw NotAUnit("SeriesM div: divisor has zero constant term");
    int bound = std::min(a.degree_bound(), b.degree_bound());
    // graded sweep: c_e = (a_e - sum_{0 < f <= e} b_f c_{e-f}) / b_0
    std::map<SeriesM::Key, Rat> c;
    std::vector<SeriesM::Key> keys;
    {
        // enumerate all exponent vectors with total degree <= bound, graded order
        SeriesM::Key e(a.nvars(), 0);
        std::vector<SeriesM::Key> all;
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == a.nvars()) {
                all.push_back(e);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                e[pos] = v;
                rec(pos + 1, remaining - v);
            }
            e[pos] = 0;
        };
        rec(0, bound);
        std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
            return key_total(x) < key_total(y);
        });
        keys = std::move(all);
    }
    for (const auto& e : keys) {
        Rat s = a.coeff(e);
        for (const auto& [f, w] : b.terms()) {
            if (key_total(f) == 0) continue;
            bool le = true;
            SeriesM::Key d(e.size());
            for (size_t i = 0; i < e.size(); ++i) {
                d[i] = e[i] - f[i];
                if (d[i] < 0) {
                    le = false;
                    break;
                }
            }
            if (!le) continue;
            auto it = c.find(d);
            if (it != c.end()) s -= w * it->second;
        }
        if (s != 0) c.emplace(e, s / b0);
    }
    return SeriesM(a.nvars(), bound, std::move(c));
}

SeriesM exp(const SeriesM& f) {
    SeriesM::Key origin(f.nvars(), 0);
    if (f.coeff(origin) != 0) throw DomainError("SeriesM exp: series must vanish at 0");
    int bound = f.degree_bound();
    SeriesM acc = SeriesM::constant(f.nvars(), bound, Rat(1));
    SeriesM term = acc;
    // f has valuation >= 1, so f^k contributes nothing past k = bound
    for (int k = 1; k <= bound; ++k) {
        term = Rat(1, k) * (term * f);
        if (term.terms().empty()) break;
        acc = acc + term;
    }
    return acc;
}

std::string SeriesM::to_string(int max_terms) const {
    std::ostringstream os;
    int printed = 0;
    bool first = true;
    std::vector<std::pair<Key, Rat>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        return key_total(x.first) < key_total(y.first);
    });
    for (const auto& [e, v] : items) {
        if (max_terms >= 0 && printed >= max_terms) break;
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(v);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*z" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
        ++printed;
    }
    if (first) os << "0";
    return os.str();
}

Series1 diagonal_restrict(const SeriesM& F, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != F.nvars())
        throw DomainError("diagonal_restrict: weight count mismatch");
    int wmin = *std::min_element(weights.begin(), weights.end());
    if (wmin <= 0) throw DomainError("diagonal_restrict: weights must be positive");
    int order = wmin * (F.degree_bound() + 1) - 1;
    std::vector<Rat> out(order + 1, Rat(0));
    for (const auto& [e, v] : F.terms()) {
        long n = 0;
        for (size_t i = 0; i < e.size(); ++i) n += static_cast<long>(weights[i]) * e[i];
        if (n <= order) out[n] += v;
    }
    return Series1(std::move(out));
}

}  // namespace mirrormap
