// Command-line front end: model configs in, reports out.
//
//   mirrormap catalog
//   mirrormap report --model quintic --terms 12
//   mirrormap instantons --config my_model.json --max-degree 8 --format csv
//
// Exit codes: 0 success, 1 validation/config error, 2 computation error
// (NoFit, AmbiguousFit, InconsistentSystem, nonsolvable recurrence).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mirrormap/catalog.hpp"
#include "mirrormap/errors.hpp"
#include "mirrormap/report.hpp"

namespace {

struct CliArgs {
    std::string model_key;
    std::string config_path;
    int terms = -1;
    int max_degree = 5;
    std::string format = "text";
    std::string cache_dir;
    bool compare_printed = false;
};

int run_command(const std::string& command, const CliArgs& args) {
    using namespace mirrormap;
    Command cmd = parse_command(command);
    RunOptions opt;
    opt.terms = args.terms;
    opt.max_degree = args.max_degree;
    opt.format = parse_format(args.format);
    opt.cache_dir = args.cache_dir;
    opt.compare_printed = args.compare_printed;

    if (cmd == Command::catalog_list) {
        std::cout << render_catalog(opt.format);
        return 0;
    }

    ModelSpec spec;
    const PrintedRefs* printed = nullptr;
    if (!args.model_key.empty()) {
        const CatalogEntry* entry = catalog_find(args.model_key);
        if (!entry) throw ConfigError("model: unknown catalog key '" + args.model_key + "'");
        spec = entry->model;
        if (opt.compare_printed) printed = &entry->printed;
    } else if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw ConfigError("config: cannot open '" + args.config_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        spec = parse_model_config(buf.str());
    } else {
        throw ConfigError("model: provide --model KEY or --config FILE");
    }

    if (model_is_bivariate(spec)) {
        BivariateRun run = run_bivariate(spec, opt);
        std::cout << render(run, cmd, opt.format);
    } else {
        UnivariateRun run = run_univariate(spec, opt, printed);
        std::cout << render(run, cmd, opt.format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mirror-map and Yukawa-coupling pipeline for Calabi-Yau models"};
    app.require_subcommand(1);

    CliArgs args;
    std::vector<CLI::App*> subs;
    for (const char* name : {"phi0", "operator", "qcoord", "yukawa", "instantons", "report", "catalog"}) {
        CLI::App* sub = app.add_subcommand(name);
        if (std::string(name) != "catalog") {
            sub->add_option("--model,-m", args.model_key, "built-in catalog key");
            sub->add_option("--config,-c", args.config_path, "model config JSON file");
            sub->add_option("--terms,-n", args.terms, "truncation order");
            sub->add_option("--max-degree,-d", args.max_degree,
                            "instanton depth / total-degree bound");
            sub->add_option("--cache-dir", args.cache_dir, "coefficient cache directory");
            sub->add_flag("--compare-printed", args.compare_printed,
                          "golden comparisons against the printed tables");
        }
        sub->add_option("--format,-f", args.format, "text|json|csv");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (CLI::App* sub : subs)
        if (sub->parsed()) command = sub->get_name();

    try {
        return run_command(command, args);
    } catch (const mirrormap::ConfigError& e) {
        std::cerr << "mirrormap: config error: " << e.what() << "\n";
        return 1;
    } catch (const mirrormap::ModelError& e) {
        std::cerr << "mirrormap: config error: " << e.what() << "\n";
        return 1;
    } catch (const mirrormap::Error& e) {
        std::cerr << "mirrormap: computation error: " << e.what() << "\n";
        return 2;
    }
}
