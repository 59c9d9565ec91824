#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prayatul/confusion.hpp"
#include "prayatul/core.hpp"

namespace prayatul {

struct NamedLabels {
    std::string name;
    LabelSequence labels;
};

struct CompareOptions {
    bool keep_cells = false;
    /// Unset: picked per fold from the truth's class count
    /// (see default_averaging).
    std::optional<Averaging> averaging;
    /// CsvWithIds inputs may arrive in any row order; positional inputs
    /// must already match.
    bool allow_reorder = true;
};

/// One (primary, alternative) comparison on one fold: the matrix, the five
/// measures, and both models' confusion-matrix baselines on identical data.
struct PairResult {
    std::string primary_name;
    std::string alternative_name;
    int fold_index = 0;
    PrayatulMatrix matrix;
    MeasureSet measures;
    ConfusionSummary primary_baseline;
    ConfusionSummary alternative_baseline;
};

enum class AggregationMode { MeanOfMeasures, PooledCounts };

/// Aggregate of one measure across folds. With mean-of-measures, folds
/// where the measure is undefined are excluded from the mean and counted
/// here; all-undefined means the aggregate itself is undefined.
struct AggregateMeasure {
    MeasureValue value;
    int undefined_folds = 0;
};

struct AggregateMeasureSet {
    AggregateMeasure sigma_c;
    AggregateMeasure alpha;
    AggregateMeasure xi_c;
    AggregateMeasure xi_e;
    AggregateMeasure phi_e;
};

struct PairAggregate {
    std::string primary_name;
    std::string alternative_name;
    int fold_count = 0;
    PrayatulMatrix pooled_matrix;  ///< elementwise sum of the fold matrices
    AggregateMeasureSet measures;
};

/// All folds of one (primary, alternative) pair plus their aggregate.
struct PairSeries {
    std::string alternative_name;
    std::vector<PairResult> folds;
    PairAggregate aggregate;
};

/// One primary vs. K alternatives, per fold and aggregated.
struct ComparisonReport {
    std::string truth_ref;  ///< path or label naming the ground truth
    std::string primary_name;
    std::vector<PairSeries> pairs;
    AggregationMode aggregation_mode = AggregationMode::MeanOfMeasures;
};

/// Aligns, builds the matrix, computes measures and both baselines.
PairResult compare_pair(const LabelSequence& truth, const NamedLabels& primary,
                        const NamedLabels& alternative, const CompareOptions& options = {},
                        int fold_index = 0);

/// Aggregates fold results of a single pair. MixedPair if the results span
/// different (primary, alternative) pairs.
PairAggregate aggregate(const std::vector<PairResult>& fold_results, AggregationMode mode);

struct FoldInput {
    LabelSequence truth;
    NamedLabels primary;
    std::vector<NamedLabels> alternatives;  // same names/order in every fold
};

/// Runs every pair on every fold (alternatives in input order) and
/// assembles the report. Any failure aborts the whole tournament; there are
/// no partial reports.
ComparisonReport tournament(const std::vector<FoldInput>& folds, const CompareOptions& options = {},
                            AggregationMode mode = AggregationMode::MeanOfMeasures,
                            const std::string& truth_ref = {});

}  // namespace prayatul
