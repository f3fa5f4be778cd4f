#include "mirrormap/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "mirrormap/errors.hpp"

namespace mirrormap {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw ConfigError("format: expected one of text|json|csv, got '" + name + "'");
}

Command parse_command(const std::string& name) {
    if (name == "phi0") return Command::phi0;
    if (name == "operator") return Command::op;
    if (name == "qcoord") return Command::qcoord;
    if (name == "yukawa") return Command::yukawa;
    if (name == "instantons") return Command::instantons;
    if (name == "report") return Command::report;
    if (name == "catalog") return Command::catalog_list;
    throw ConfigError("command: unknown command '" + name + "'");
}

// ---------------------------------------------------------------------------
// config JSON
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Rat& r : v) out.push_back(rat_to_string(r));
    return out;
}

std::vector<std::string> series_head(const Series1& s, int upto) {
    std::vector<std::string> out;
    for (int i = 0; i <= std::min(upto, s.order()); ++i) out.push_back(rat_to_string(s[i]));
    return out;
}

Rat require_rat(const ordered_json& j, const std::string& field) {
    if (!j.contains(field)) throw ConfigError(field + ": required field is missing");
    const auto& v = j.at(field);
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw ConfigError(field + ": expected an integer or a 'p/q' string");
}

std::vector<int> require_int_list(const ordered_json& j, const std::string& field) {
    if (!j.contains(field) || !j.at(field).is_array())
        throw ConfigError(field + ": required array field is missing");
    std::vector<int> out;
    for (const auto& v : j.at(field)) {
        if (!v.is_number_integer()) throw ConfigError(field + ": entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> require_int_matrix(const ordered_json& j, const std::string& field) {
    if (!j.contains(field) || !j.at(field).is_array())
        throw ConfigError(field + ": required matrix field is missing");
    std::vector<std::vector<int>> out;
    for (const auto& row : j.at(field)) {
        if (!row.is_array()) throw ConfigError(field + ": expected an array of arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ConfigError(field + ": entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Rat> rat_list(const ordered_json& arr, const std::string& field) {
    std::vector<Rat> out;
    for (const auto& v : arr) {
        if (v.is_number_integer())
            out.emplace_back(static_cast<long>(v.get<long long>()));
        else if (v.is_string())
            out.push_back(rat_from_string(v.get<std::string>()));
        else
            throw ConfigError(field + ": entries must be integers or 'p/q' strings");
    }
    return out;
}

Poly poly_from_json(const ordered_json& arr, const std::string& field) {
    return Poly(rat_list(arr, field));
}

ordered_json poly_to_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

}  // namespace

ModelSpec parse_model_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    ModelSpec spec;
    if (!j.contains("name") || !j.at("name").is_string())
        throw ConfigError("name: required string field is missing");
    spec.name = j.at("name").get<std::string>();
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("kind: required string field is missing");
    std::string kind = j.at("kind").get<std::string>();
    spec.dim = j.value("dim", 3);
    if (spec.dim < 1) throw ConfigError("dim: must be a positive integer");
    spec.default_terms = j.value("terms", 20);

    if (kind == "complete_intersection" || kind == "weighted_ci") {
        CIModel m;
        m.degrees = require_int_list(j, "degrees");
        m.dim = spec.dim;
        if (kind == "weighted_ci") {
            m.extra_denominators = require_int_list(j, "extra_denominators");
            m.w0 = require_rat(j, "w0");
        } else if (j.contains("w0")) {
            m.w0 = require_rat(j, "w0");
        }
        spec.payload = std::move(m);
    } else if (kind == "product_projective") {
        ProductProjModel m;
        m.factor_dims = require_int_list(j, "factors");
        m.multidegree = require_int_matrix(j, "multidegree");
        m.w0 = require_rat(j, "w0");
        spec.payload = std::move(m);
    } else if (kind == "toric") {
        ToricModel m;
        auto gens = require_int_matrix(j, "generators");
        for (auto& g : gens) m.generators.emplace_back(g.begin(), g.end());
        m.partition = require_int_matrix(j, "partition");
        auto mori = require_int_matrix(j, "mori_basis");
        for (auto& l : mori) m.mori_basis.emplace_back(l.begin(), l.end());
        m.w0 = require_rat(j, "w0");
        spec.payload = std::move(m);
    } else if (kind == "explicit_recurrence") {
        if (!j.contains("recurrence") || !j.at("recurrence").is_object())
            throw ConfigError("recurrence: required object field is missing");
        const auto& r = j.at("recurrence");
        if (!r.contains("polys") || !r.at("polys").is_array())
            throw ConfigError("recurrence.polys: required array field is missing");
        RecurrenceSpec rs;
        for (const auto& p : r.at("polys")) rs.polys.push_back(poly_from_json(p, "recurrence.polys"));
        rs.order = r.value("order", spec.dim + 1);
        ExplicitRecurrence m;
        m.spec = std::move(rs);
        m.w0 = require_rat(j, "w0");
        spec.payload = std::move(m);
    } else if (kind == "two_term") {
        HypergeomParams m;
        if (!j.contains("alpha") || !j.at("alpha").is_array())
            throw ConfigError("alpha: required array field is missing");
        m.alpha = rat_list(j.at("alpha"), "alpha");
        m.mu = require_rat(j, "mu");
        m.w0 = require_rat(j, "w0");
        spec.payload = std::move(m);
    } else {
        throw ConfigError("kind: unknown model kind '" + kind + "'");
    }

    if (j.contains("diagonal_weights"))
        spec.diagonal_weights = require_int_list(j, "diagonal_weights");
    try {
        spec.validate();
    } catch (const ModelError& e) {
        // structural violations found at load time are schema errors
        throw ConfigError(e.what());
    }
    return spec;
}

namespace {

ordered_json payload_json(const ModelSpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    j["kind"] = spec.kind();
    j["dim"] = spec.dim;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CIModel>) {
                j["degrees"] = p.degrees;
                if (!p.extra_denominators.empty()) j["extra_denominators"] = p.extra_denominators;
                j["w0"] = rat_to_string(p.normalization());
            }
            if constexpr (std::is_same_v<T, ProductProjModel>) {
                j["factors"] = p.factor_dims;
                j["multidegree"] = p.multidegree;
                j["w0"] = rat_to_string(p.w0);
            }
            if constexpr (std::is_same_v<T, ToricModel>) {
                j["generators"] = p.generators;
                j["partition"] = p.partition;
                j["mori_basis"] = p.mori_basis;
                j["w0"] = rat_to_string(p.w0);
            }
            if constexpr (std::is_same_v<T, ExplicitRecurrence>) {
                ordered_json polys = ordered_json::array();
                for (const auto& q : p.spec.polys) polys.push_back(poly_to_json(q));
                j["recurrence"] = {{"order", p.spec.order}, {"polys", polys}};
                j["w0"] = rat_to_string(p.w0);
            }
            if constexpr (std::is_same_v<T, HypergeomParams>) {
                j["alpha"] = rat_strings(p.alpha);
                j["mu"] = rat_to_string(p.mu);
                j["w0"] = rat_to_string(p.w0);
            }
        },
        spec.payload);
    if (spec.diagonal_weights) j["diagonal_weights"] = *spec.diagonal_weights;
    return j;
}

}  // namespace

std::string model_config_to_json(const ModelSpec& spec) {
    ordered_json j = payload_json(spec);
    j["terms"] = spec.default_terms;
    return j.dump(2);
}

std::uint64_t model_config_hash(const ModelSpec& spec) {
    // payload only: the hash keys cached coefficients, so truncation knobs
    // and the display name stay out of it
    ordered_json j = payload_json(spec);
    j.erase("name");
    std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
    return out;
}

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string rat_cache_token(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> parse_cache_token(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= tok.size()) return std::nullopt;
    try {
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den <= 0) return std::nullopt;
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::string CoeffCache::file_for(const ModelSpec& spec) const {
    return (fs::path(dir_) /
            (sanitize(spec.name) + "-" + hash_hex(model_config_hash(spec)) + ".coeffs"))
        .string();
}

std::optional<std::vector<Rat>> CoeffCache::load_univariate(const ModelSpec& spec) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_for(spec));
    if (!in) return std::nullopt;
    std::vector<Rat> coeffs;
    std::string line;
    long expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long idx;
        std::string tok;
        if (!(ls >> idx >> tok) || idx != expected) {
            std::cerr << "mirrormap: warning: corrupt cache line in " << file_for(spec)
                      << ", recomputing\n";
            return std::nullopt;
        }
        auto r = parse_cache_token(tok);
        if (!r) {
            std::cerr << "mirrormap: warning: corrupt cache value in " << file_for(spec)
                      << ", recomputing\n";
            return std::nullopt;
        }
        coeffs.push_back(std::move(*r));
        ++expected;
    }
    if (coeffs.empty()) return std::nullopt;
    return coeffs;
}

void CoeffCache::store_univariate(const ModelSpec& spec, const std::vector<Rat>& coeffs) const {
    if (!enabled()) return;
    fs::create_directories(dir_);
    std::ofstream out(file_for(spec), std::ios::trunc);
    for (size_t i = 0; i < coeffs.size(); ++i)
        out << i << " " << rat_cache_token(coeffs[i]) << "\n";
}

namespace {
std::string mfile_for(const std::string& dir, const ModelSpec& spec, int bound) {
    return (fs::path(dir) / (sanitize(spec.name) + "-" + hash_hex(model_config_hash(spec)) + "-d" +
                             std::to_string(bound) + ".mcoeffs"))
        .string();
}
}  // namespace

std::optional<SeriesM> CoeffCache::load_multivariate(const ModelSpec& spec) const {
    if (!enabled()) return std::nullopt;
    // pick the deepest stored bound
    int best = -1;
    std::string prefix = sanitize(spec.name) + "-" + hash_hex(model_config_hash(spec)) + "-d";
    std::error_code ec;
    for (const auto& ent : fs::directory_iterator(dir_, ec)) {
        std::string fn = ent.path().filename().string();
        if (fn.rfind(prefix, 0) != 0 || ent.path().extension() != ".mcoeffs") continue;
        int b = std::atoi(fn.substr(prefix.size()).c_str());
        best = std::max(best, b);
    }
    if (best < 0) return std::nullopt;
    std::ifstream in(mfile_for(dir_, spec, best));
    if (!in) return std::nullopt;
    std::map<SeriesM::Key, Rat> terms;
    std::string line;
    int nvars = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string idx, tok;
        if (!(ls >> idx >> tok)) return std::nullopt;
        SeriesM::Key key;
        std::istringstream is(idx);
        std::string part;
        while (std::getline(is, part, ',')) {
            try {
                key.push_back(std::stoi(part));
            } catch (const std::exception&) {
                std::cerr << "mirrormap: warning: corrupt cache index in multivariate cache\n";
                return std::nullopt;
            }
        }
        if (nvars < 0) nvars = static_cast<int>(key.size());
        if (static_cast<int>(key.size()) != nvars) return std::nullopt;
        auto r = parse_cache_token(tok);
        if (!r) {
            std::cerr << "mirrormap: warning: corrupt cache value in multivariate cache\n";
            return std::nullopt;
        }
        terms.emplace(std::move(key), std::move(*r));
    }
    if (nvars < 0) return std::nullopt;
    return SeriesM(nvars, best, std::move(terms));
}

void CoeffCache::store_multivariate(const ModelSpec& spec, const SeriesM& series) const {
    if (!enabled()) return;
    fs::create_directories(dir_);
    std::ofstream out(mfile_for(dir_, spec, series.degree_bound()), std::ios::trunc);
    for (const auto& [e, v] : series.terms()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
        out << " " << rat_cache_token(v) << "\n";
    }
}

// ---------------------------------------------------------------------------
// deep generators
// ---------------------------------------------------------------------------

namespace {

class FactorialTable {
  public:
    const Int& operator()(long n) {
        while (static_cast<long>(table_.size()) <= n) {
            table_.push_back(table_.back() * Int(static_cast<long>(table_.size())));
        }
        return table_[n];
    }

  private:
    std::vector<Int> table_{Int(1)};
};

}  // namespace

Series1 product_diagonal_series(const ProductProjModel& model, const std::vector<int>& weights,
                                int N) {
    model.validate();
    int s = static_cast<int>(model.factor_dims.size());
    if (static_cast<int>(weights.size()) != s)
        throw ModelError("diagonal weights: length must equal the factor count");
    FactorialTable fact;
    bool unit_weights = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
    bool uniform_rows = true;
    for (const auto& row : model.multidegree)
        for (int v : row)
            if (v != row[0]) uniform_rows = false;

    if (unit_weights && uniform_rows) {
        // a_n = prod_i (c_i n)! * [x^n] prod_j (sum_k x^k / (k!)^{n_j+1})
        Series1 p = Series1::one(N);
        for (int j = 0; j < s; ++j) {
            std::vector<Rat> base(N + 1);
            for (int k = 0; k <= N; ++k) {
                Int den(1);
                for (int rep = 0; rep <= model.factor_dims[j]; ++rep) den *= fact(k);
                base[k] = make_rat(Int(1), den);
            }
            p = p * Series1(std::move(base));
        }
        std::vector<Rat> a(N + 1);
        for (int n = 0; n <= N; ++n) {
            Int num(1);
            for (const auto& row : model.multidegree) num *= fact(static_cast<long>(row[0]) * n);
            a[n] = Rat(num) * p[n];
        }
        return Series1(std::move(a));
    }

    std::vector<Rat> a(N + 1, Rat(0));
    std::vector<int> l(s, 0);
    std::function<void(int, int)> rec = [&](int pos, int wsum) {
        if (pos == s) {
            Int num(1), den(1);
            for (const auto& row : model.multidegree) {
                long deg = 0;
                for (int j = 0; j < s; ++j) deg += static_cast<long>(row[j]) * l[j];
                num *= fact(deg);
            }
            for (int j = 0; j < s; ++j)
                for (int rep = 0; rep <= model.factor_dims[j]; ++rep) den *= fact(l[j]);
            a[wsum] += make_rat(num, den);
            return;
        }
        for (int v = 0; wsum + v * weights[pos] <= N; ++v) {
            l[pos] = v;
            rec(pos + 1, wsum + v * weights[pos]);
        }
        l[pos] = 0;
    };
    rec(0, 0);
    return Series1(std::move(a));
}

namespace {

Series1 toric_diagonal_series(const ToricModel& model, const std::vector<int>& weights, int N) {
    int wmin = *std::min_element(weights.begin(), weights.end());
    int bound = (N + 1 + wmin - 1) / wmin;  // ensures restricted order >= N
    return diagonal_restrict(toric_series(model, bound), weights).truncated(N);
}

}  // namespace

Series1 model_series(const ModelSpec& spec, int N, const CoeffCache& cache) {
    spec.validate();
    if (model_is_bivariate(spec))
        throw ConfigError("model '" + spec.name + "' is multivariate; univariate series undefined");
    if (cache.enabled()) {
        auto cached = cache.load_univariate(spec);
        if (cached && static_cast<int>(cached->size()) > N) {
            cached->resize(N + 1);
            return Series1(std::move(*cached));
        }
        // fall through and recompute; extension keeps the prefix bit-exact
    }
    Series1 out = std::visit(
        [&](const auto& p) -> Series1 {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CIModel>) return ci_series(p, N);
            if constexpr (std::is_same_v<T, ProductProjModel>) {
                std::vector<int> w = spec.diagonal_weights
                                         ? *spec.diagonal_weights
                                         : std::vector<int>(p.factor_dims.size(), 1);
                return product_diagonal_series(p, w, N);
            }
            if constexpr (std::is_same_v<T, ToricModel>) {
                std::vector<int> w = spec.diagonal_weights
                                         ? *spec.diagonal_weights
                                         : std::vector<int>(p.mori_basis.size(), 1);
                return toric_diagonal_series(p, w, N);
            }
            if constexpr (std::is_same_v<T, ExplicitRecurrence>)
                return socle(p.spec, Rat(1), N);
            if constexpr (std::is_same_v<T, HypergeomParams>)
                return socle(to_recurrence(two_term_op(p)), Rat(1), N);
        },
        spec.payload);
    if (cache.enabled()) cache.store_univariate(spec, out.coeffs());
    return out;
}

OperatorBundle resolve_operator(const ModelSpec& spec, const Series1& coeffs) {
    OperatorBundle out;
    if (auto* ci = std::get_if<CIModel>(&spec.payload)) {
        out.spec = ci_recurrence(*ci);
        return out;
    }
    if (auto* tt = std::get_if<HypergeomParams>(&spec.payload)) {
        out.spec = to_recurrence(two_term_op(*tt));
        return out;
    }
    if (auto* ex = std::get_if<ExplicitRecurrence>(&spec.payload)) {
        out.spec = ex->spec;
        return out;
    }
    FitResult fit = fit_auto(coeffs, spec.dim + 1, 5);
    if (fit.status == FitStatus::no_fit)
        throw FitFailure("NoFit: " + (fit.detail.empty() ? "empty nullspace" : fit.detail));
    if (fit.status == FitStatus::ambiguous) throw FitFailure("AmbiguousFit: " + fit.detail);
    out.spec = *fit.spec;
    out.fitted = true;
    return out;
}

// ---------------------------------------------------------------------------
// printed comparisons
// ---------------------------------------------------------------------------

PrintedComparison compare_printed(const PrintedRefs& printed, const OperatorBundle& op,
                                  const YukawaFrame& frame, const InstantonReport& inst) {
    PrintedComparison cmp;
    if (printed.op) {
        cmp.any_reference = true;
        RecurrenceSpec derived = op.spec.primitive();
        RecurrenceSpec ref = printed.op->primitive();
        cmp.operator_match = derived == ref;
        if (!*cmp.operator_match) {
            std::ostringstream os;
            if (derived.m() != ref.m()) {
                os << "printed operator has m=" << ref.m() << ", derived m=" << derived.m();
            } else {
                for (int j = 0; j <= derived.m(); ++j)
                    if (!(derived.polys[j] == ref.polys[j])) {
                        os << "first mismatch at P_" << j << ": derived "
                           << derived.polys[j].to_string() << " vs printed "
                           << ref.polys[j].to_string();
                        break;
                    }
            }
            cmp.operator_note = os.str();
        }
    }
    if (printed.w_closed_form) {
        cmp.any_reference = true;
        Series1 ref = Series1::from_rational(printed.w_closed_form->first,
                                             printed.w_closed_form->second, frame.w.order());
        if (frame.w.matches(ref))
            cmp.w_sign = "+";
        else if (frame.w.matches(-ref))
            cmp.w_sign = "-";
        else
            cmp.w_sign = "none";
    }
    if (!printed.kq_head.empty()) {
        cmp.any_reference = true;
        bool ok = true;
        for (size_t i = 0; i < printed.kq_head.size(); ++i)
            if (static_cast<int>(i) > frame.kq.order() || frame.kq[static_cast<int>(i)] != printed.kq_head[i])
                ok = false;
        cmp.kq_match = ok;
    }
    if (!printed.n_head.empty()) {
        cmp.any_reference = true;
        bool ok = inst.n.size() >= printed.n_head.size();
        for (size_t i = 0; ok && i < printed.n_head.size(); ++i)
            if (inst.n[i] != printed.n_head[i]) ok = false;
        cmp.n_match = ok;
    }
    if (printed.mu || !printed.alpha.empty()) {
        cmp.any_reference = true;
        if (op.spec.m() == 1) {
            ExtractOutcome ex = extract_params(op.spec);
            if (ex.params) {
                if (printed.mu) cmp.mu_match = ex.params->mu == *printed.mu;
                if (!printed.alpha.empty()) {
                    std::vector<Rat> ref = printed.alpha;
                    std::sort(ref.begin(), ref.end());
                    cmp.alpha_match = ex.params->alpha == ref;
                }
            } else {
                cmp.mu_match = false;
                cmp.alpha_match = false;
            }
        }
    }
    if (printed.w0) {
        cmp.any_reference = true;
        cmp.w0_match = frame.w[0] == *printed.w0;
    }
    return cmp;
}

// ---------------------------------------------------------------------------
// drivers
// ---------------------------------------------------------------------------

bool model_is_bivariate(const ModelSpec& spec) {
    if (spec.diagonal_weights) return false;
    if (std::holds_alternative<ProductProjModel>(spec.payload)) return true;
    if (auto* t = std::get_if<ToricModel>(&spec.payload)) return t->mori_basis.size() > 1;
    return false;
}

UnivariateRun run_univariate(const ModelSpec& spec, const RunOptions& opt,
                             const PrintedRefs* printed) {
    spec.validate();
    if (model_is_bivariate(spec))
        throw ConfigError("model '" + spec.name +
                          "' is a multi-parameter system; use the 2-parameter pipeline");
    UnivariateRun run;
    run.model = spec;
    run.terms = opt.terms > 0 ? opt.terms : spec.default_terms;
    run.depth = opt.max_degree;
    int n_run = std::max(run.terms, run.depth + 2);
    bool needs_fit = std::holds_alternative<ProductProjModel>(spec.payload) ||
                     std::holds_alternative<ToricModel>(spec.payload);
    int n_series = needs_fit ? std::max(n_run, fit_min_terms(5, spec.dim + 1) + 1) : n_run;
    CoeffCache cache(opt.cache_dir);
    run.coeffs = model_series(spec, n_series, cache);
    run.op = resolve_operator(spec, run.coeffs);
    RecurrenceSpec pipeline_spec = run.op.spec.mu_normalized();
    run.frame = run_pipeline(pipeline_spec, spec.normalization(), spec.dim, n_run);
    if (!run.frame.phi0.matches(run.coeffs))
        throw Error("internal: socle solution disagrees with the coefficient generator");
    if (run.frame.kq[0] != run.frame.kz[0] || run.frame.kz[0] != spec.normalization())
        throw Error("internal: frame-change origin invariant violated");
    if (spec.dim == 3) run.instantons = instanton(run.frame.kq, 3, run.depth);
    if (printed) run.printed = compare_printed(*printed, run.op, run.frame, run.instantons);
    return run;
}

BivariateRun run_bivariate(const ModelSpec& spec, const RunOptions& opt) {
    spec.validate();
    if (!model_is_bivariate(spec))
        throw ConfigError("model '" + spec.name + "' is not a 2-parameter system");
    auto* prod = std::get_if<ProductProjModel>(&spec.payload);
    if (!prod || prod->factor_dims.size() != 2)
        throw ConfigError("2-parameter pipeline: only two-factor product models are supported");
    BivariateRun run;
    run.model = spec;
    run.degree = std::max(opt.max_degree, 2);
    run.sol = biv_solve(birecurrence_from_product(*prod), run.degree);
    run.q = biv_q(run.sol);
    run.symmetry_ok = true;
    for (const auto& [e, v] : run.sol.psi1.terms()) {
        SeriesM::Key swapped{e[1], e[0]};
        if (run.sol.psi2.coeff(swapped) != v) run.symmetry_ok = false;
    }
    run.discriminant = discriminant_p2p2();
    return run;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

ordered_json comparison_json(const PrintedComparison& c) {
    ordered_json j;
    if (c.operator_match) {
        j["printed_operator_match"] = *c.operator_match;
        if (!c.operator_note.empty()) j["printed_operator_note"] = c.operator_note;
    }
    if (c.w_sign) j["printed_w_sign"] = *c.w_sign;
    if (c.kq_match) j["printed_kq_match"] = *c.kq_match;
    if (c.n_match) j["printed_n_match"] = *c.n_match;
    if (c.mu_match) j["printed_mu_match"] = *c.mu_match;
    if (c.alpha_match) j["printed_alpha_match"] = *c.alpha_match;
    if (c.w0_match) j["printed_w0_match"] = *c.w0_match;
    return j;
}

ordered_json operator_json(const OperatorBundle& op) {
    ordered_json j;
    j["source"] = op.fitted ? "fitted" : "constructed";
    RecurrenceSpec prim = op.spec.primitive();
    ordered_json polys = ordered_json::array();
    for (const auto& p : prim.polys) polys.push_back(poly_to_json(p));
    j["recurrence"] = {{"m", prim.m()}, {"order", prim.order}, {"polys", polys}};
    j["theta_form"] = to_theta(prim).to_string();
    ZForm zf = to_zform(to_theta(prim));
    ordered_json a = ordered_json::array();
    for (const auto& ai : zf.A) a.push_back(ai.to_string("z"));
    j["z_form"] = a;
    return j;
}

ordered_json instanton_json(const InstantonReport& inst) {
    ordered_json j;
    j["n0"] = rat_to_string(inst.n0);
    j["gamma"] = rat_strings(inst.gamma);
    j["n"] = rat_strings(inst.n);
    j["integral"] = inst.integral;
    j["nonnegative"] = inst.nonnegative;
    return j;
}

ordered_json univariate_json(const UnivariateRun& run, Command cmd) {
    ordered_json j;
    j["config"] = payload_json(run.model);
    j["config"]["terms"] = run.terms;
    j["config"]["max_degree"] = run.depth;
    bool all = cmd == Command::report;
    if (all || cmd == Command::phi0) j["phi0"] = series_head(run.frame.phi0, run.terms);
    if (all || cmd == Command::op) j["operator"] = operator_json(run.op);
    if (all || cmd == Command::qcoord) {
        j["psi"] = series_head(run.frame.psi, run.terms);
        j["q_of_z"] = series_head(run.frame.q_of_z, run.terms);
        j["z_of_q"] = series_head(run.frame.z_of_q, run.terms);
    }
    if (all || cmd == Command::yukawa) {
        j["w"] = series_head(run.frame.w, run.terms);
        j["k_z"] = series_head(run.frame.kz, run.terms);
        j["k_q"] = series_head(run.frame.kq, run.terms);
    }
    if ((all || cmd == Command::instantons) && run.model.dim == 3)
        j["instantons"] = instanton_json(run.instantons);
    if (all)
        if (auto* t = std::get_if<ToricModel>(&run.model.payload))
            j["mirror_laurent"] = mirror_laurent_terms(*t);
    if (run.printed.any_reference) j["diagnostics"] = comparison_json(run.printed);
    return j;
}

std::string csv_univariate(const UnivariateRun& run, Command cmd) {
    std::ostringstream os;
    switch (cmd) {
        case Command::phi0:
            os << "n,coefficient\n";
            for (int i = 0; i <= std::min(run.terms, run.frame.phi0.order()); ++i)
                os << i << "," << rat_to_string(run.frame.phi0[i]) << "\n";
            break;
        case Command::qcoord:
            os << "n,q_of_z,z_of_q\n";
            for (int i = 0; i <= std::min(run.terms, run.frame.q_of_z.order()); ++i)
                os << i << "," << rat_to_string(run.frame.q_of_z[i]) << ","
                   << rat_to_string(run.frame.z_of_q[i]) << "\n";
            break;
        case Command::yukawa:
            os << "n,w,k_z,k_q\n";
            for (int i = 0; i <= std::min(run.terms, run.frame.kq.order()); ++i)
                os << i << "," << rat_to_string(run.frame.w[i]) << ","
                   << rat_to_string(run.frame.kz[i]) << "," << rat_to_string(run.frame.kq[i])
                   << "\n";
            break;
        case Command::instantons:
            os << "d,gamma,n,integral,nonnegative\n";
            for (size_t d = 0; d < run.instantons.n.size(); ++d)
                os << d + 1 << "," << rat_to_string(run.instantons.gamma[d]) << ","
                   << rat_to_string(run.instantons.n[d]) << ","
                   << (run.instantons.integral[d] ? "true" : "false") << ","
                   << (run.instantons.nonnegative[d] ? "true" : "false") << "\n";
            break;
        default:
            throw ConfigError("format: csv output is limited to flat tables "
                              "(phi0, qcoord, yukawa, instantons)");
    }
    return os.str();
}

std::string text_univariate(const UnivariateRun& run, Command cmd) {
    std::ostringstream os;
    bool all = cmd == Command::report;
    os << "model " << run.model.name << " (" << run.model.kind() << ", dim " << run.model.dim
       << ", W(0) = " << rat_to_string(run.model.normalization()) << ")\n";
    if (all || cmd == Command::phi0)
        os << "phi0   " << run.frame.phi0.truncated(run.terms).to_string("z", 8) << "\n";
    if (all || cmd == Command::op) {
        RecurrenceSpec prim = run.op.spec.primitive();
        os << "operator (" << (run.op.fitted ? "fitted" : "constructed") << ", m = " << prim.m()
           << ", order = " << prim.order << ")\n";
        os << "  theta form: " << to_theta(prim).to_string() << "\n";
        for (int j = 0; j <= prim.m(); ++j)
            os << "  P_" << j << "(y) = " << prim.polys[j].to_string() << "\n";
    }
    if (all || cmd == Command::qcoord) {
        os << "q(z)   " << run.frame.q_of_z.truncated(run.terms).to_string("z", 8) << "\n";
        os << "z(q)   " << run.frame.z_of_q.truncated(run.terms).to_string("q", 8) << "\n";
    }
    if (all || cmd == Command::yukawa) {
        os << "W      " << run.frame.w.truncated(run.terms).to_string("z", 8) << "\n";
        os << "K_z    " << run.frame.kz.truncated(run.terms).to_string("z", 8) << "\n";
        os << "K_q    " << run.frame.kq.truncated(run.terms).to_string("q", 8) << "\n";
    }
    if ((all || cmd == Command::instantons) && run.model.dim == 3) {
        os << "n_0 = " << rat_to_string(run.instantons.n0) << "\n";
        for (size_t d = 0; d < run.instantons.n.size(); ++d) {
            os << "n_" << d + 1 << " = " << rat_to_string(run.instantons.n[d]);
            if (!run.instantons.integral[d]) os << "  [non-integral]";
            if (!run.instantons.nonnegative[d]) os << "  [negative]";
            os << "\n";
        }
    }
    if (all)
        if (auto* t = std::get_if<ToricModel>(&run.model.payload)) {
            os << "mirror Laurent polynomials:\n";
            for (const std::string& line : mirror_laurent_terms(*t)) os << "  " << line << "\n";
        }
    if (run.printed.any_reference) {
        os << "printed-reference diagnostics:\n";
        if (run.printed.operator_match) {
            os << "  operator match: " << (*run.printed.operator_match ? "yes" : "NO") << "\n";
            if (!run.printed.operator_note.empty())
                os << "    " << run.printed.operator_note << "\n";
        }
        if (run.printed.w_sign) os << "  W closed form sign: " << *run.printed.w_sign << "\n";
        if (run.printed.kq_match)
            os << "  K_q head match: " << (*run.printed.kq_match ? "yes" : "NO") << "\n";
        if (run.printed.n_match)
            os << "  n_d match: " << (*run.printed.n_match ? "yes" : "NO") << "\n";
        if (run.printed.mu_match)
            os << "  mu match: " << (*run.printed.mu_match ? "yes" : "NO") << "\n";
        if (run.printed.alpha_match)
            os << "  alpha match: " << (*run.printed.alpha_match ? "yes" : "NO") << "\n";
        if (run.printed.w0_match)
            os << "  W(0) match: " << (*run.printed.w0_match ? "yes" : "NO") << "\n";
    }
    return os.str();
}

std::string key_string(const SeriesM::Key& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

ordered_json seriesm_json(const SeriesM& s) {
    ordered_json arr = ordered_json::array();
    std::vector<std::pair<SeriesM::Key, Rat>> items(s.terms().begin(), s.terms().end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int v : a.first) ta += v;
        for (int v : b.first) tb += v;
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    });
    for (const auto& [e, v] : items) arr.push_back({key_string(e), rat_to_string(v)});
    return arr;
}

ordered_json bivariate_json(const BivariateRun& run, Command cmd) {
    ordered_json j;
    j["config"] = payload_json(run.model);
    j["config"]["max_degree"] = run.degree;
    bool all = cmd == Command::report;
    if (all || cmd == Command::phi0) j["phi0"] = seriesm_json(run.sol.phi0);
    if (all || cmd == Command::qcoord) {
        j["psi1"] = seriesm_json(run.sol.psi1);
        j["psi2"] = seriesm_json(run.sol.psi2);
        j["q1"] = seriesm_json(run.q.q1);
        j["q2"] = seriesm_json(run.q.q2);
    }
    ordered_json diag;
    diag["q_integral"] = run.q.all_integral;
    if (!run.q.failures.empty()) {
        ordered_json f = ordered_json::array();
        for (const auto& [e, v] : run.q.failures) f.push_back({key_string(e), rat_to_string(v)});
        diag["q_integrality_failures"] = f;
    }
    diag["psi_symmetry"] = run.symmetry_ok;
    if (all) j["discriminant"] = run.discriminant.to_string();
    j["diagnostics"] = diag;
    return j;
}

std::string text_bivariate(const BivariateRun& run, Command cmd) {
    std::ostringstream os;
    bool all = cmd == Command::report;
    os << "model " << run.model.name << " (2-parameter, total degree " << run.degree << ")\n";
    if (all || cmd == Command::phi0) os << "phi0: " << run.sol.phi0.to_string(10) << " + ...\n";
    if (all || cmd == Command::qcoord) {
        os << "q1:   " << run.q.q1.to_string(8) << " + ...\n";
        os << "q2:   " << run.q.q2.to_string(8) << " + ...\n";
    }
    os << "q integrality: " << (run.q.all_integral ? "all integral" : "FAILURES") << "\n";
    os << "psi symmetry:  " << (run.symmetry_ok ? "ok" : "VIOLATED") << "\n";
    if (all) os << "discriminant (x = 27 z1, y = 27 z2):\n  " << run.discriminant.to_string() << "\n";
    return os.str();
}

}  // namespace

std::string render(const UnivariateRun& run, Command cmd, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json:
            return univariate_json(run, cmd).dump(2) + "\n";
        case OutputFormat::csv:
            return csv_univariate(run, cmd);
        case OutputFormat::text:
            return text_univariate(run, cmd);
    }
    return {};
}

std::string render(const BivariateRun& run, Command cmd, OutputFormat fmt) {
    if (cmd == Command::op || cmd == Command::yukawa || cmd == Command::instantons)
        throw ConfigError("command: '" + std::string(cmd == Command::op ? "operator"
                                                     : cmd == Command::yukawa ? "yukawa"
                                                                              : "instantons") +
                          "' is not defined for 2-parameter models; use phi0/qcoord/report");
    switch (fmt) {
        case OutputFormat::json:
            return bivariate_json(run, cmd).dump(2) + "\n";
        case OutputFormat::csv:
            throw ConfigError("format: csv output is not available for 2-parameter models");
        case OutputFormat::text:
            return text_bivariate(run, cmd);
    }
    return {};
}

std::string render_catalog(OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : catalog()) {
            ordered_json j;
            j["key"] = e.model.name;
            j["kind"] = e.model.kind();
            j["dim"] = e.model.dim;
            j["w0"] = rat_to_string(e.model.normalization());
            j["family"] = e.printed.family;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << "key,kind,dim,w0,family\n";
        for (const auto& e : catalog())
            os << e.model.name << "," << e.model.kind() << "," << e.model.dim << ","
               << rat_to_string(e.model.normalization()) << "," << e.printed.family << "\n";
        return os.str();
    }
    std::ostringstream os;
    for (const auto& e : catalog()) {
        os << e.model.name;
        for (size_t i = e.model.name.size(); i < 26; ++i) os << ' ';
        os << e.model.kind() << "  dim " << e.model.dim << "  W(0) = "
           << rat_to_string(e.model.normalization()) << "  [" << e.printed.family << "]\n";
    }
    return os.str();
}

}  // namespace mirrormap
