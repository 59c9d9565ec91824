#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prayatul/core.hpp"

namespace prayatul {

/// Multiclass confusion matrix for a single model. Row = true class,
/// column = predicted class. Classes are the union of the label tokens seen
/// in truth and predictions, sorted lexicographically.
struct ConfusionMatrix {
    std::vector<std::string> classes;
    std::vector<std::vector<std::int64_t>> counts;

    std::int64_t total() const noexcept;
    std::int64_t trace() const noexcept;
};

enum class AveragingKind { Binary, Macro, Micro };

/// Precision/recall averaging mode. Binary scores a single positive class;
/// macro takes the unweighted mean of per-class scores (classes with a zero
/// denominator contribute 0 and stay in the mean); micro pools counts
/// globally, which on single-label data forces precision == recall ==
/// accuracy.
struct Averaging {
    AveragingKind kind = AveragingKind::Macro;
    std::string positive_class;  // Binary only

    static Averaging binary(std::string cls);
    static Averaging macro();
    static Averaging micro();

    /// "binary:<class>", "macro" or "micro"; also the CLI flag syntax.
    std::string to_string() const;
};

/// Parses the to_string() form back. Throws SchemaError on anything else.
Averaging parse_averaging(const std::string& text);

/// Classical per-model scores under a chosen averaging mode.
struct ConfusionSummary {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    Averaging averaging;
};

ConfusionMatrix confusion_matrix(const LabelSequence& truth, const LabelSequence& predictions);

ConfusionSummary summarize(const ConfusionMatrix& cm, const Averaging& averaging);

/// Mode used when the caller does not pick one: binary with the
/// lexicographically-last truth class for two-class data, macro otherwise.
Averaging default_averaging(const LabelSequence& truth);

}  // namespace prayatul
