#include "prayatul/confusion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prayatul {

std::int64_t ConfusionMatrix::total() const noexcept {
    std::int64_t sum = 0;
    for (const auto& row : counts) {
        for (std::int64_t c : row) sum += c;
    }
    return sum;
}

std::int64_t ConfusionMatrix::trace() const noexcept {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += counts[i][i];
    return sum;
}

Averaging Averaging::binary(std::string cls) {
    return Averaging{AveragingKind::Binary, std::move(cls)};
}

Averaging Averaging::macro() { return Averaging{AveragingKind::Macro, {}}; }

Averaging Averaging::micro() { return Averaging{AveragingKind::Micro, {}}; }

std::string Averaging::to_string() const {
    switch (kind) {
        case AveragingKind::Binary: return "binary:" + positive_class;
        case AveragingKind::Macro: return "macro";
        case AveragingKind::Micro: return "micro";
    }
    return "macro";
}

Averaging parse_averaging(const std::string& text) {
    if (text == "macro") return Averaging::macro();
    if (text == "micro") return Averaging::micro();
    if (text.rfind("binary:", 0) == 0 && text.size() > 7) {
        return Averaging::binary(text.substr(7));
    }
    throw Error(ErrorCode::SchemaError,
                "bad averaging mode \"" + text + "\" (expected binary:<class>, macro or micro)");
}

ConfusionMatrix confusion_matrix(const LabelSequence& truth, const LabelSequence& predictions) {
    if (truth.size() == 0) {
        throw Error(ErrorCode::EmptyInput, "ground truth contains no instances");
    }
    if (predictions.size() != truth.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "predictions have " + std::to_string(predictions.size()) +
                        " instances, truth has " + std::to_string(truth.size()));
    }
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (predictions.ids[i] != truth.ids[i]) {
            throw Error(ErrorCode::IdMismatch,
                        "predictions and truth differ at position " + std::to_string(i) + ": \"" +
                            predictions.ids[i] + "\" vs \"" + truth.ids[i] + "\"");
        }
    }

    std::set<std::string> tokens(truth.labels.begin(), truth.labels.end());
    tokens.insert(predictions.labels.begin(), predictions.labels.end());

    ConfusionMatrix cm;
    cm.classes.assign(tokens.begin(), tokens.end());  // std::set iterates sorted
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < cm.classes.size(); ++i) index[cm.classes[i]] = i;

    cm.counts.assign(cm.classes.size(), std::vector<std::int64_t>(cm.classes.size(), 0));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++cm.counts[index[truth.labels[i]]][index[predictions.labels[i]]];
    }
    return cm;
}

namespace {

// 0 when the denominator is 0; the documented convention for classes with
// no predicted (precision) or no true (recall) instances.
double safe_div(std::int64_t num, std::int64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::int64_t row_sum(const ConfusionMatrix& cm, std::size_t i) {
    std::int64_t s = 0;
    for (std::int64_t c : cm.counts[i]) s += c;
    return s;
}

std::int64_t col_sum(const ConfusionMatrix& cm, std::size_t j) {
    std::int64_t s = 0;
    for (const auto& row : cm.counts) s += row[j];
    return s;
}

}  // namespace

ConfusionSummary summarize(const ConfusionMatrix& cm, const Averaging& averaging) {
    const std::int64_t n = cm.total();
    ConfusionSummary out;
    out.averaging = averaging;
    out.accuracy = safe_div(cm.trace(), n);

    switch (averaging.kind) {
        case AveragingKind::Binary: {
            const auto it =
                std::find(cm.classes.begin(), cm.classes.end(), averaging.positive_class);
            if (it == cm.classes.end()) {
                throw Error(ErrorCode::UnknownPositiveClass,
                            "positive class \"" + averaging.positive_class +
                                "\" does not occur in truth or predictions");
            }
            const std::size_t c = static_cast<std::size_t>(it - cm.classes.begin());
            const std::int64_t tp = cm.counts[c][c];
            out.precision = safe_div(tp, col_sum(cm, c));
            out.recall = safe_div(tp, row_sum(cm, c));
            break;
        }
        case AveragingKind::Macro: {
            double precision_sum = 0.0;
            double recall_sum = 0.0;
            for (std::size_t c = 0; c < cm.classes.size(); ++c) {
                precision_sum += safe_div(cm.counts[c][c], col_sum(cm, c));
                recall_sum += safe_div(cm.counts[c][c], row_sum(cm, c));
            }
            out.precision = precision_sum / static_cast<double>(cm.classes.size());
            out.recall = recall_sum / static_cast<double>(cm.classes.size());
            break;
        }
        case AveragingKind::Micro: {
            // Single-label data: global FP == global FN == N - trace.
            const std::int64_t tp = cm.trace();
            out.precision = safe_div(tp, n);
            out.recall = safe_div(tp, n);
            break;
        }
    }
    return out;
}

Averaging default_averaging(const LabelSequence& truth) {
    std::set<std::string> tokens(truth.labels.begin(), truth.labels.end());
    if (tokens.size() == 2) {
        return Averaging::binary(*tokens.rbegin());
    }
    return Averaging::macro();
}

}  // namespace prayatul
