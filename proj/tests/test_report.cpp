#include <sstream>
#include <unistd.h>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mirrormap/catalog.hpp"
#include "mirrormap/errors.hpp"
#include "mirrormap/report.hpp"

using namespace mirrormap;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("mirrormap-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

const char* kQuinticJson = R"({
  "name": "my-quintic",
  "kind": "complete_intersection",
  "dim": 3,
  "degrees": [5],
  "terms": 12
})";

}  // namespace

TEST_CASE("parse_model_config: quintic round-trip") {
    ModelSpec spec = parse_model_config(kQuinticJson);
    CHECK(spec.name == "my-quintic");
    CHECK(spec.kind() == "complete_intersection");
    CHECK(spec.normalization() == 5);
    CHECK(spec.default_terms == 12);
    ModelSpec again = parse_model_config(model_config_to_json(spec));
    CHECK(again.name == spec.name);
    CHECK(model_config_hash(again) == model_config_hash(spec));
}

TEST_CASE("parse_model_config: schema errors name the offending field") {
    CHECK_THROWS_WITH_AS(parse_model_config("{\"kind\":\"two_term\"}"),
                         doctest::Contains("name"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_model_config("{\"name\":\"x\"}"),
                         doctest::Contains("kind"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_model_config("{\"name\":\"x\",\"kind\":\"two_term\",\"mu\":\"1\",\"w0\":\"1\"}"),
        doctest::Contains("alpha"), ConfigError);
    // Calabi-Yau violations are caught at load with a named field
    CHECK_THROWS_WITH_AS(
        parse_model_config(
            "{\"name\":\"x\",\"kind\":\"complete_intersection\",\"degrees\":[4]}"),
        doctest::Contains("degrees"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_model_config("{\"name\":\"x\",\"kind\":\"product_projective\","
                           "\"factors\":[2,2],\"multidegree\":[[3,2]],\"w0\":\"1\"}"),
        doctest::Contains("multidegree"), ConfigError);
}

TEST_CASE("model_config_hash: stable under terms, sensitive to payload") {
    ModelSpec a = parse_model_config(kQuinticJson);
    ModelSpec b = a;
    b.default_terms = 40;
    CHECK(model_config_hash(a) == model_config_hash(b));
    ModelSpec c = a;
    std::get<CIModel>(c.payload).degrees = {3, 3};
    CHECK(model_config_hash(a) != model_config_hash(c));
}

TEST_CASE("cache: save/load round-trip is bit-exact") {
    TempDir tmp;
    CoeffCache cache(tmp.path.string());
    ModelSpec spec = parse_model_config(kQuinticJson);
    Series1 a = model_series(spec, 30, cache);
    auto loaded = cache.load_univariate(spec);
    REQUIRE(loaded.has_value());
    CHECK(Series1(*loaded) == a);
    // second computation is served from the prefix
    Series1 b = model_series(spec, 20, cache);
    CHECK(b == a.truncated(20));
}

TEST_CASE("cache: raising terms extends the file and reuses the prefix") {
    TempDir tmp;
    CoeffCache cache(tmp.path.string());
    ModelSpec spec = parse_model_config(kQuinticJson);
    model_series(spec, 10, cache);
    std::string before;
    {
        std::ifstream in(cache.file_for(spec));
        std::ostringstream ss;
        ss << in.rdbuf();
        before = ss.str();
    }
    model_series(spec, 25, cache);
    std::string after;
    {
        std::ifstream in(cache.file_for(spec));
        std::ostringstream ss;
        ss << in.rdbuf();
        after = ss.str();
    }
    CHECK(after.size() > before.size());
    CHECK(after.compare(0, before.size(), before) == 0);
}

TEST_CASE("cache: corrupt line falls back to recomputation") {
    TempDir tmp;
    CoeffCache cache(tmp.path.string());
    ModelSpec spec = parse_model_config(kQuinticJson);
    Series1 a = model_series(spec, 12, cache);
    {
        std::ofstream out(cache.file_for(spec), std::ios::app);
        out << "not-an-index garbage\n";
    }
    CHECK_FALSE(cache.load_univariate(spec).has_value());
    Series1 again = model_series(spec, 12, cache);
    CHECK(again == a);
    // the rewritten cache is clean again
    CHECK(cache.load_univariate(spec).has_value());
}

TEST_CASE("run_univariate: determinism of rendered output") {
    RunOptions opt;
    opt.terms = 8;
    opt.max_degree = 5;
    const CatalogEntry* quintic = catalog_find("quintic");
    REQUIRE(quintic != nullptr);
    UnivariateRun r1 = run_univariate(quintic->model, opt, &quintic->printed);
    UnivariateRun r2 = run_univariate(quintic->model, opt, &quintic->printed);
    for (OutputFormat fmt : {OutputFormat::text, OutputFormat::json}) {
        CHECK(render(r1, Command::report, fmt) == render(r2, Command::report, fmt));
    }
    CHECK(render(r1, Command::instantons, OutputFormat::csv) ==
          render(r2, Command::instantons, OutputFormat::csv));
}

TEST_CASE("render: csv is limited to flat tables") {
    RunOptions opt;
    opt.terms = 6;
    UnivariateRun run = run_univariate(catalog_find("ci-33")->model, opt);
    CHECK(render(run, Command::instantons, OutputFormat::csv).rfind("d,gamma,n,", 0) == 0);
    CHECK_THROWS_AS(render(run, Command::report, OutputFormat::csv), ConfigError);
    CHECK_THROWS_AS(render(run, Command::op, OutputFormat::csv), ConfigError);
}

TEST_CASE("compare_printed: p1x4 flags the printed-operator discrepancy") {
    const CatalogEntry* e = catalog_find("p1x4-diagonal");
    REQUIRE(e != nullptr);
    RunOptions opt;
    opt.terms = 10;
    UnivariateRun run = run_univariate(e->model, opt, &e->printed);
    REQUIRE(run.printed.operator_match.has_value());
    CHECK_FALSE(*run.printed.operator_match);
    CHECK(run.printed.operator_note.find("P_1") != std::string::npos);
    CHECK(run.printed.w_sign == "+");
    CHECK(run.printed.kq_match == true);
    CHECK(run.printed.n_match == true);
}

TEST_CASE("run_univariate: explicit recurrence with vanishing P_m propagates") {
    ModelSpec spec = parse_model_config(R"({
      "name": "bad", "kind": "explicit_recurrence", "w0": "1",
      "recurrence": {"order": 4, "polys": [["1","1"], ["0","0","0","-3","1"]]}
    })");
    RunOptions opt;
    CHECK_THROWS_AS(run_univariate(spec, opt), NonsolvableRecurrence);
}

TEST_CASE("resolve_operator: non-holonomic data reports NoFit") {
    // a series violating any short recurrence: factorial growth with prime twists
    std::vector<Rat> v;
    long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    Rat acc(1);
    for (int n = 0; n <= 60; ++n) {
        acc *= Rat(primes[n % 15] + n * n);
        v.push_back(acc);
    }
    ModelSpec spec;
    spec.name = "nofit";
    ProductProjModel m;
    m.factor_dims = {2, 2};
    m.multidegree = {{3, 3}};
    m.w0 = Rat(18);
    spec.payload = std::move(m);
    spec.diagonal_weights = std::vector<int>{1, 1};
    CHECK_THROWS_AS(resolve_operator(spec, Series1(std::move(v))), FitFailure);
}

TEST_CASE("cache: multivariate terms round-trip bit-exactly") {
    TempDir tmp;
    CoeffCache cache(tmp.path.string());
    const CatalogEntry* e = catalog_find("p2xp2");
    REQUIRE(e != nullptr);
    const auto& m = std::get<ProductProjModel>(e->model.payload);
    SeriesM F = product_series(m, 5);
    cache.store_multivariate(e->model, F);
    auto loaded = cache.load_multivariate(e->model);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == F);
}

TEST_CASE("run_univariate: toric payload goes through the fitted pipeline") {
    ModelSpec spec;
    spec.name = "quintic-toric";
    ToricModel t;
    t.generators = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
    t.partition = {{0, 1, 2, 3, 4}};
    t.mori_basis = {{1, 1, 1, 1, 1}};
    t.w0 = Rat(5);
    spec.payload = std::move(t);
    RunOptions opt;
    opt.terms = 8;
    UnivariateRun run = run_univariate(spec, opt);
    CHECK(run.op.fitted);
    CHECK(run.op.spec.m() == 1);
    CHECK(run.instantons.n[0] == 2875);
    CHECK(run.instantons.n[1] == 609250);
    // toric reports carry the mirror Laurent polynomial dump
    std::string text = render(run, Command::report, OutputFormat::text);
    CHECK(text.find("mirror Laurent polynomials:") != std::string::npos);
    CHECK(text.find("1 - u1*X1") != std::string::npos);
}

TEST_CASE("run_univariate: two_term payload reproduces the quintic") {
    ModelSpec spec = parse_model_config(R"({
      "name": "quintic-params", "kind": "two_term", "w0": "5",
      "alpha": ["1/5", "2/5", "3/5", "4/5"], "mu": "3125", "terms": 8
    })");
    RunOptions opt;
    UnivariateRun run = run_univariate(spec, opt);
    CHECK(run.frame.phi0[1] == 120);
    CHECK(run.instantons.n[0] == 2875);
}

TEST_CASE("bivariate run: p2xp2 integrality and symmetry") {
    const CatalogEntry* e = catalog_find("p2xp2");
    REQUIRE(e != nullptr);
    RunOptions opt;
    opt.max_degree = 6;
    BivariateRun run = run_bivariate(e->model, opt);
    CHECK(run.q.all_integral);
    CHECK(run.symmetry_ok);
    std::string text = render(run, Command::report, OutputFormat::text);
    CHECK(text.find("all integral") != std::string::npos);
    CHECK(render(run, Command::report, OutputFormat::json) ==
          render(run_bivariate(e->model, opt), Command::report, OutputFormat::json));
}
