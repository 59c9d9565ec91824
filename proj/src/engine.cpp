#include "prayatul/engine.hpp"

#include <utility>

#include "prayatul/io.hpp"

namespace prayatul {

PairResult compare_pair(const LabelSequence& truth, const NamedLabels& primary,
                        const NamedLabels& alternative, const CompareOptions& options,
                        int fold_index) {
    auto aligned = align(truth, {primary.labels, alternative.labels}, options.allow_reorder);
    const LabelSequence& p = aligned[0];
    const LabelSequence& q = aligned[1];

    PairResult result;
    result.primary_name = primary.name;
    result.alternative_name = alternative.name;
    result.fold_index = fold_index;
    result.matrix = generate_prayatul_matrix(truth, p, q, options.keep_cells);
    result.measures = measure_set(result.matrix);

    const Averaging averaging = options.averaging ? *options.averaging : default_averaging(truth);
    result.primary_baseline = summarize(confusion_matrix(truth, p), averaging);
    result.alternative_baseline = summarize(confusion_matrix(truth, q), averaging);
    return result;
}

namespace {

AggregateMeasure mean_of(const std::vector<PairResult>& folds, MeasureValue MeasureSet::*member) {
    AggregateMeasure agg;
    double sum = 0.0;
    int defined = 0;
    for (const auto& fold : folds) {
        const MeasureValue& v = fold.measures.*member;
        if (v) {
            sum += *v;
            ++defined;
        } else {
            ++agg.undefined_folds;
        }
    }
    if (defined > 0) {
        agg.value = sum / static_cast<double>(defined);
    }
    return agg;
}

AggregateMeasure from_pooled(MeasureValue value) {
    AggregateMeasure agg;
    agg.value = value;
    return agg;
}

}  // namespace

PairAggregate aggregate(const std::vector<PairResult>& fold_results, AggregationMode mode) {
    if (fold_results.empty()) {
        throw Error(ErrorCode::EmptyInput, "no fold results to aggregate");
    }
    for (const auto& fold : fold_results) {
        if (fold.primary_name != fold_results.front().primary_name ||
            fold.alternative_name != fold_results.front().alternative_name) {
            throw Error(ErrorCode::MixedPair,
                        "cannot aggregate " + fold_results.front().primary_name + " vs " +
                            fold_results.front().alternative_name + " with " + fold.primary_name +
                            " vs " + fold.alternative_name);
        }
    }

    PairAggregate agg;
    agg.primary_name = fold_results.front().primary_name;
    agg.alternative_name = fold_results.front().alternative_name;
    agg.fold_count = static_cast<int>(fold_results.size());
    for (const auto& fold : fold_results) {
        agg.pooled_matrix.br += fold.matrix.br;
        agg.pooled_matrix.rw += fold.matrix.rw;
        agg.pooled_matrix.wr += fold.matrix.wr;
        agg.pooled_matrix.bw += fold.matrix.bw;
    }

    if (mode == AggregationMode::MeanOfMeasures) {
        agg.measures.sigma_c = mean_of(fold_results, &MeasureSet::sigma_c);
        agg.measures.alpha = mean_of(fold_results, &MeasureSet::alpha);
        agg.measures.xi_c = mean_of(fold_results, &MeasureSet::xi_c);
        agg.measures.xi_e = mean_of(fold_results, &MeasureSet::xi_e);
        agg.measures.phi_e = mean_of(fold_results, &MeasureSet::phi_e);
    } else {
        const MeasureSet pooled = measure_set(agg.pooled_matrix);
        agg.measures.sigma_c = from_pooled(pooled.sigma_c);
        agg.measures.alpha = from_pooled(pooled.alpha);
        agg.measures.xi_c = from_pooled(pooled.xi_c);
        agg.measures.xi_e = from_pooled(pooled.xi_e);
        agg.measures.phi_e = from_pooled(pooled.phi_e);
    }
    return agg;
}

ComparisonReport tournament(const std::vector<FoldInput>& folds, const CompareOptions& options,
                            AggregationMode mode, const std::string& truth_ref) {
    if (folds.empty()) {
        throw Error(ErrorCode::EmptyInput, "tournament requires at least one fold");
    }
    if (folds.front().alternatives.empty()) {
        throw Error(ErrorCode::EmptyInput, "tournament requires at least one alternative");
    }

    ComparisonReport report;
    report.truth_ref = truth_ref;
    report.primary_name = folds.front().primary.name;
    report.aggregation_mode = mode;

    const std::size_t pair_count = folds.front().alternatives.size();
    for (std::size_t pair = 0; pair < pair_count; ++pair) {
        PairSeries series;
        series.alternative_name = folds.front().alternatives[pair].name;
        for (std::size_t f = 0; f < folds.size(); ++f) {
            series.folds.push_back(compare_pair(folds[f].truth, folds[f].primary,
                                                folds[f].alternatives[pair], options,
                                                static_cast<int>(f)));
        }
        series.aggregate = aggregate(series.folds, mode);
        report.pairs.push_back(std::move(series));
    }
    return report;
}

}  // namespace prayatul
