#include "prayatul/core.hpp"

#include <unordered_set>
#include <utility>

namespace prayatul {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::IdMismatch: return "IdMismatch";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::BadHeader: return "BadHeader";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::MissingInstance: return "MissingInstance";
        case ErrorCode::ExtraInstance: return "ExtraInstance";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::MissingFold: return "MissingFold";
        case ErrorCode::UnknownPrimary: return "UnknownPrimary";
        case ErrorCode::UnknownPositiveClass: return "UnknownPositiveClass";
        case ErrorCode::MixedPair: return "MixedPair";
    }
    return "Error";
}

LabelSequence LabelSequence::from_labels(std::vector<std::string> labels) {
    LabelSequence seq;
    seq.ids.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        seq.ids.push_back(std::to_string(i));
    }
    seq.labels = std::move(labels);
    return seq;
}

void validate_sequence(const LabelSequence& seq) {
    if (seq.ids.size() != seq.labels.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "sequence has " + std::to_string(seq.ids.size()) + " ids but " +
                        std::to_string(seq.labels.size()) + " labels");
    }
    if (seq.size() == 0) {
        throw Error(ErrorCode::EmptyInput, "sequence contains no instances");
    }
    std::unordered_set<std::string> seen;
    seen.reserve(seq.ids.size());
    for (const auto& id : seq.ids) {
        if (!seen.insert(id).second) {
            throw Error(ErrorCode::DuplicateId, "instance id \"" + id + "\" appears more than once");
        }
    }
}

namespace {

void require_aligned(const LabelSequence& a, const LabelSequence& b, const char* a_name,
                     const char* b_name) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    std::string(a_name) + " has " + std::to_string(a.size()) + " instances, " +
                        b_name + " has " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.ids[i] != b.ids[i]) {
            throw Error(ErrorCode::IdMismatch,
                        std::string(a_name) + " and " + b_name + " differ at position " +
                            std::to_string(i) + ": \"" + a.ids[i] + "\" vs \"" + b.ids[i] + "\"");
        }
    }
}

}  // namespace

CorrectnessVector correctness(const LabelSequence& predictions, const LabelSequence& truth) {
    require_aligned(predictions, truth, "predictions", "truth");
    CorrectnessVector out;
    out.flags.resize(predictions.size());
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        out.flags[i] = predictions.labels[i] == truth.labels[i];
    }
    return out;
}

PrayatulMatrix generate_prayatul_matrix(const LabelSequence& truth, const LabelSequence& primary,
                                        const LabelSequence& alternative, bool keep_cells) {
    if (truth.size() == 0) {
        throw Error(ErrorCode::EmptyInput, "ground truth contains no instances");
    }
    require_aligned(primary, truth, "primary", "truth");
    require_aligned(alternative, truth, "alternative", "truth");

    PrayatulMatrix m;
    if (keep_cells) {
        m.cells.emplace();
    }
    const std::size_t n = truth.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool p_right = primary.labels[i] == truth.labels[i];
        const bool q_right = alternative.labels[i] == truth.labels[i];
        if (p_right && q_right) {
            ++m.br;
            if (keep_cells) m.cells->br.push_back(truth.ids[i]);
        } else if (p_right) {
            ++m.rw;
            if (keep_cells) m.cells->rw.push_back(truth.ids[i]);
        } else if (q_right) {
            ++m.wr;
            if (keep_cells) m.cells->wr.push_back(truth.ids[i]);
        } else {
            ++m.bw;
            if (keep_cells) m.cells->bw.push_back(truth.ids[i]);
        }
    }
    return m;
}

namespace {

MeasureValue ratio(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        return std::nullopt;
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

MeasureValue comparative_deviation(const PrayatulMatrix& m) {
    return ratio(m.rw - m.wr, m.rw + m.wr);
}

MeasureValue polarization(const PrayatulMatrix& m) {
    return ratio(m.br + m.rw - m.bw, m.total());
}

MeasureValue comparative_rightness(const PrayatulMatrix& m) {
    return ratio(m.br + m.rw, m.br + m.rw + m.wr);
}

MeasureValue effective_rightness(const PrayatulMatrix& m) {
    return ratio(m.br + m.rw - m.wr, m.br + m.rw + m.wr);
}

MeasureValue effective_superiority(const PrayatulMatrix& m) {
    return ratio(m.br + m.rw - m.wr, m.total());
}

MeasureSet measure_set(const PrayatulMatrix& m) {
    MeasureSet set;
    set.sigma_c = comparative_deviation(m);
    set.alpha = polarization(m);
    set.xi_c = comparative_rightness(m);
    set.xi_e = effective_rightness(m);
    set.phi_e = effective_superiority(m);
    set.source.br = m.br;
    set.source.rw = m.rw;
    set.source.wr = m.wr;
    set.source.bw = m.bw;
    return set;
}

PrayatulMatrix transpose(const PrayatulMatrix& m) {
    PrayatulMatrix t;
    t.br = m.br;
    t.rw = m.wr;
    t.wr = m.rw;
    t.bw = m.bw;
    if (m.cells) {
        t.cells.emplace();
        t.cells->br = m.cells->br;
        t.cells->rw = m.cells->wr;
        t.cells->wr = m.cells->rw;
        t.cells->bw = m.cells->bw;
    }
    return t;
}

}  // namespace prayatul
