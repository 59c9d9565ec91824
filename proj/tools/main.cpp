// prayatul: instance-level pairwise comparison of classifier predictions.
//
// Exit codes: 0 success, 1 flag/usage error, 2 data or validation error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prayatul/engine.hpp"
#include "prayatul/io.hpp"
#include "prayatul/render.hpp"

namespace {

using namespace prayatul;

struct NamedPath {
    std::string name;
    std::string path;
};

NamedPath split_named_path(const std::string& text, const std::string& flag) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
        throw CLI::ValidationError(flag, "expected NAME=PATH, got \"" + text + "\"");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
}

// CLI11 check for --average values.
std::string check_averaging(const std::string& text) {
    try {
        parse_averaging(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

struct CommonFlags {
    std::string format = "text";
    int digits = 4;
    bool cells = false;
    bool no_ids = false;
    std::string average;

    void attach(CLI::App* cmd, bool with_cells = true) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "markdown", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--digits", digits, "Display precision (display only)")
            ->check(CLI::Range(1, 10))
            ->capture_default_str();
        if (with_cells) {
            cmd->add_flag("--cells", cells, "Keep and print per-cell instance IDs");
        }
        cmd->add_flag("--no-ids", no_ids, "Inputs are plain label files, one label per line");
        cmd->add_option("--average", average,
                        "Baseline averaging: binary:<class>, macro or micro "
                        "(default: binary for two-class truth, macro otherwise)")
            ->check(CLI::Validator(check_averaging, "AVERAGING"));
    }

    LabelFormat label_format() const {
        return no_ids ? LabelFormat::PlainLabels : LabelFormat::CsvWithIds;
    }

    RenderOptions render_options() const {
        RenderOptions opts;
        opts.format = parse_format(format);
        opts.digits = digits;
        opts.show_cells = cells;
        opts.averaging_label = average.empty() ? "default" : average;
        return opts;
    }

    CompareOptions compare_options() const {
        CompareOptions opts;
        opts.keep_cells = cells;
        if (!average.empty()) opts.averaging = parse_averaging(average);
        opts.allow_reorder = !no_ids;
        return opts;
    }
};

ComparisonReport single_fold_report(const std::string& truth_path,
                                    const std::string& primary_spec,
                                    const std::vector<std::string>& alternative_specs,
                                    const CommonFlags& flags) {
    const LabelFormat fmt = flags.label_format();
    const NamedPath p = split_named_path(primary_spec, "--primary");

    FoldInput fold;
    fold.truth = load_labels(truth_path, fmt);
    fold.primary = {p.name, load_labels(p.path, fmt)};
    for (const auto& spec : alternative_specs) {
        const NamedPath a = split_named_path(spec, "--alternative");
        fold.alternatives.push_back({a.name, load_labels(a.path, fmt)});
    }
    return tournament({std::move(fold)}, flags.compare_options(),
                      AggregationMode::MeanOfMeasures, truth_path);
}

ComparisonReport manifest_report(const std::string& manifest_path, AggregationMode mode,
                                 const CommonFlags& flags) {
    const Manifest manifest = load_manifest(manifest_path);
    const LabelFormat fmt = flags.label_format();
    const auto& primary_files = manifest.model_files(manifest.primary);

    std::vector<FoldInput> folds;
    for (int f = 0; f < manifest.folds; ++f) {
        FoldInput fold;
        fold.truth = load_labels(manifest.truth[f], fmt);
        fold.primary = {manifest.primary, load_labels(primary_files[f], fmt)};
        for (const auto& [name, files] : manifest.models) {
            if (name == manifest.primary) continue;
            fold.alternatives.push_back({name, load_labels(files[f], fmt)});
        }
        folds.push_back(std::move(fold));
    }
    return tournament(folds, flags.compare_options(), mode, manifest_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise classifier comparison via the prayatul matrix"};
    app.require_subcommand(1);

    std::string truth_path;
    std::string primary_spec;
    std::vector<std::string> alternative_specs;
    std::vector<std::string> model_specs;
    std::string manifest_path;
    std::string aggregate_mode = "mean";
    CommonFlags compare_flags, tournament_flags, folds_flags, baseline_flags;

    CLI::App* compare =
        app.add_subcommand("compare", "Compare one primary against alternatives, per pair");
    compare->add_option("--truth", truth_path, "Ground-truth label file")->required();
    compare->add_option("--primary", primary_spec, "Primary model as NAME=PATH")->required();
    compare
        ->add_option("--alternative", alternative_specs, "Alternative model as NAME=PATH "
                                                         "(repeatable)")
        ->required();
    compare_flags.attach(compare);

    CLI::App* tour = app.add_subcommand(
        "tournament", "Compare one primary against several alternatives, table layout");
    tour->add_option("--truth", truth_path, "Ground-truth label file")->required();
    tour->add_option("--primary", primary_spec, "Primary model as NAME=PATH")->required();
    tour->add_option("--alternative", alternative_specs,
                     "Alternative model as NAME=PATH (repeatable)")
        ->required();
    tournament_flags.attach(tour, /*with_cells=*/false);

    CLI::App* folds = app.add_subcommand("folds", "Run a cross-validation manifest");
    folds->add_option("--manifest", manifest_path, "Manifest JSON file")->required();
    folds->add_option("--aggregate", aggregate_mode, "Fold aggregation")
        ->check(CLI::IsMember({"mean", "pooled"}))
        ->capture_default_str();
    folds_flags.attach(folds);

    CLI::App* baseline =
        app.add_subcommand("baseline", "Confusion-matrix accuracy/precision/recall per model");
    baseline->add_option("--truth", truth_path, "Ground-truth label file")->required();
    baseline->add_option("--model", model_specs, "Model as NAME=PATH (repeatable)")->required();
    baseline_flags.attach(baseline, /*with_cells=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compare->parsed()) {
            const auto report =
                single_fold_report(truth_path, primary_spec, alternative_specs, compare_flags);
            std::cout << render_report(report, compare_flags.render_options());
        } else if (tour->parsed()) {
            const auto report =
                single_fold_report(truth_path, primary_spec, alternative_specs, tournament_flags);
            std::cout << render_tournament(report, tournament_flags.render_options());
        } else if (folds->parsed()) {
            const AggregationMode mode = aggregate_mode == "pooled"
                                             ? AggregationMode::PooledCounts
                                             : AggregationMode::MeanOfMeasures;
            const auto report = manifest_report(manifest_path, mode, folds_flags);
            std::cout << render_report(report, folds_flags.render_options());
        } else if (baseline->parsed()) {
            const LabelFormat fmt = baseline_flags.label_format();
            const LabelSequence truth = load_labels(truth_path, fmt);
            const Averaging averaging = baseline_flags.average.empty()
                                            ? default_averaging(truth)
                                            : parse_averaging(baseline_flags.average);
            std::vector<NamedSummary> summaries;
            for (const auto& spec : model_specs) {
                const NamedPath m = split_named_path(spec, "--model");
                auto aligned = align(truth, {load_labels(m.path, fmt)},
                                     baseline_flags.compare_options().allow_reorder);
                summaries.push_back(
                    {m.name, summarize(confusion_matrix(truth, aligned[0]), averaging)});
            }
            std::cout << render_baseline_table(truth_path, summaries,
                                               baseline_flags.render_options());
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
