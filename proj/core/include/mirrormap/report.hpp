#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mirrormap/catalog.hpp"
#include "mirrormap/coupling.hpp"
#include "mirrormap/models.hpp"
#include "mirrormap/multiparam.hpp"

namespace mirrormap {

enum class OutputFormat { text, json, csv };
OutputFormat parse_format(const std::string& name);  // throws ConfigError

struct RunOptions {
    int terms = -1;       // -1: model default
    int max_degree = 5;   // instanton depth; total-degree bound for 2-parameter runs
    OutputFormat format = OutputFormat::text;
    std::string cache_dir;       // empty: cache disabled
    bool compare_printed = false;
};

// Parses and validates a config JSON document (see README for the schema).
// Throws ConfigError with the offending field named.
ModelSpec parse_model_config(const std::string& json_text);
std::string model_config_to_json(const ModelSpec& spec);

// 64-bit hash of the model-defining payload (truncation knobs excluded, so a
// raised term count reuses the same cache file).
std::uint64_t model_config_hash(const ModelSpec& spec);

// Coefficient persistence: one coefficient per line, "index num/den" for
// univariate series and "e1,e2,...,et num/den" for multivariate terms.
// Reload is bit-exact; a corrupt file is ignored with a warning and
// recomputed; a raised term count extends the file, reusing the prefix.
class CoeffCache {
  public:
    explicit CoeffCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    std::string file_for(const ModelSpec& spec) const;

    // nullopt when missing/corrupt; otherwise whatever prefix is stored
    std::optional<std::vector<Rat>> load_univariate(const ModelSpec& spec) const;
    void store_univariate(const ModelSpec& spec, const std::vector<Rat>& coeffs) const;

    std::optional<SeriesM> load_multivariate(const ModelSpec& spec) const;
    void store_multivariate(const ModelSpec& spec, const SeriesM& series) const;

  private:
    std::string dir_;
};

// Deep univariate coefficient generator for any model that feeds the
// one-parameter pipeline (CI, explicit recurrence, two-term, diagonal
// restriction of a product/toric model). Uses the cache when enabled.
Series1 model_series(const ModelSpec& spec, int N, const CoeffCache& cache);

// Direct deep generator for diagonal product models; equals
// diagonal_restrict(product_series(model, *), weights) coefficientwise.
Series1 product_diagonal_series(const ProductProjModel& model,
                                const std::vector<int>& weights, int N);

struct OperatorBundle {
    RecurrenceSpec spec;     // MU-normalized form used by the pipeline
    bool fitted = false;     // discovered by fit_recurrence (vs constructed)
    std::string fit_detail;  // failure detail when status != ok
};

// Constructs (CI/two-term/explicit) or fits (diagonal models) the annihilating
// recurrence. Throws on validation errors; fit failures are reported in-band.
OperatorBundle resolve_operator(const ModelSpec& spec, const Series1& coeffs);

struct PrintedComparison {
    std::optional<bool> operator_match;   // printed operator == derived (up to scale)
    std::string operator_note;            // first differing polynomial
    // +1/-1 when the printed closed form matches W up to that global sign;
    // "none" when neither sign matches
    std::optional<std::string> w_sign;
    std::optional<bool> kq_match;
    std::optional<bool> n_match;
    std::optional<bool> mu_match;
    std::optional<bool> alpha_match;
    std::optional<bool> w0_match;
    bool any_reference = false;
};

PrintedComparison compare_printed(const PrintedRefs& printed, const OperatorBundle& op,
                                  const YukawaFrame& frame, const InstantonReport& inst);

// One-parameter pipeline output plus provenance and diagnostics.
struct UnivariateRun {
    ModelSpec model;
    int terms = 0;
    int depth = 0;
    Series1 coeffs;
    OperatorBundle op;
    YukawaFrame frame;
    InstantonReport instantons;
    PrintedComparison printed;
};

UnivariateRun run_univariate(const ModelSpec& spec, const RunOptions& opt,
                             const PrintedRefs* printed = nullptr);

// Two-parameter run (the P2 x P2 system).
struct BivariateRun {
    ModelSpec model;
    int degree = 0;
    BivariateSolution sol;
    BivariateQ q;
    bool symmetry_ok = false;  // b^(1)_{l1,l2} = b^(2)_{l2,l1}
    Poly2 discriminant;
};

BivariateRun run_bivariate(const ModelSpec& spec, const RunOptions& opt);

bool model_is_bivariate(const ModelSpec& spec);

// Serialization. JSON is deterministic (stable key order, canonical "p/q"
// rationals); CSV is limited to flat tables and rejects `report`.
enum class Command { phi0, op, qcoord, yukawa, instantons, report, catalog_list };
Command parse_command(const std::string& name);  // throws ConfigError

std::string render(const UnivariateRun& run, Command cmd, OutputFormat fmt);
std::string render(const BivariateRun& run, Command cmd, OutputFormat fmt);
std::string render_catalog(OutputFormat fmt);

}  // namespace mirrormap
