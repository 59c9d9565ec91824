#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prayatul/error.hpp"

namespace prayatul {

/// Ordered, ID-aligned sequence of categorical labels: either the ground
/// truth of a test set or one model's recorded predictions for it. Labels
/// are opaque string tokens compared by exact equality; no numeric coercion.
struct LabelSequence {
    std::vector<std::string> ids;
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return ids.size(); }

    /// Builds a sequence with synthetic positional IDs "0", "1", ...
    static LabelSequence from_labels(std::vector<std::string> labels);
};

/// Throws if ids/labels lengths differ, the sequence is empty, or an ID
/// repeats. Ingestion calls this on every loaded file.
void validate_sequence(const LabelSequence& seq);

/// Per-instance correctness flags: flags[i] is true iff the model's label
/// equals the ground truth at position i.
struct CorrectnessVector {
    std::vector<bool> flags;
};

/// Per-cell instance ID membership, in input order.
struct CellMembership {
    std::vector<std::string> br;
    std::vector<std::string> rw;
    std::vector<std::string> wr;
    std::vector<std::string> bw;
};

/// 2x2 joint-correctness contingency table for an ordered (primary,
/// alternative) model pair against shared ground truth:
///
///   br  both right          rw  primary right, alternative wrong
///   wr  primary wrong, alternative right      bw  both wrong
///
/// br + rw + wr + bw always equals the number of instances counted.
struct PrayatulMatrix {
    std::int64_t br = 0;
    std::int64_t rw = 0;
    std::int64_t wr = 0;
    std::int64_t bw = 0;
    std::optional<CellMembership> cells;

    std::int64_t total() const noexcept { return br + rw + wr + bw; }

    bool counts_equal(const PrayatulMatrix& other) const noexcept {
        return br == other.br && rw == other.rw && wr == other.wr && bw == other.bw;
    }
};

/// A comparative measure value. Disengaged means the measure's denominator
/// was zero for the given matrix (e.g. total agreement makes sigma_c
/// undefined). Undefined is a reportable state, never an error, and is
/// never substituted with 0.
using MeasureValue = std::optional<double>;

/// The five comparative measures of one ordered (primary, alternative)
/// pair, plus the counts they were computed from.
struct MeasureSet {
    MeasureValue sigma_c;  ///< comparative deviation, (rw-wr)/(rw+wr)
    MeasureValue alpha;    ///< polarization, (br+rw-bw)/N
    MeasureValue xi_c;     ///< comparative rightness, (br+rw)/(br+rw+wr)
    MeasureValue xi_e;     ///< effective rightness, (br+rw-wr)/(br+rw+wr)
    MeasureValue phi_e;    ///< effective superiority, (br+rw-wr)/N
    PrayatulMatrix source; ///< counts only; cell lists are not copied
};

/// Flags each prediction right/wrong against the truth. Both sequences must
/// be aligned: same length, same IDs in the same order.
CorrectnessVector correctness(const LabelSequence& predictions, const LabelSequence& truth);

/// Builds the matrix in a single pass over the instances: each one falls in
/// exactly one cell according to the four-way test
///   p==g && q==g -> br,  p==g && q!=g -> rw,
///   p!=g && q==g -> wr,  p!=g && q!=g -> bw.
/// O(N) time, O(1) extra memory unless keep_cells is set, in which case the
/// instance ID is appended to its cell's list (input order preserved).
PrayatulMatrix generate_prayatul_matrix(const LabelSequence& truth,
                                        const LabelSequence& primary,
                                        const LabelSequence& alternative,
                                        bool keep_cells = false);

/// (rw - wr) / (rw + wr). Undefined when the pair never disagrees.
/// Positive: the primary wins the disagreements; negative: the alternative.
MeasureValue comparative_deviation(const PrayatulMatrix& m);

/// (br + rw - bw) / N. How strongly the primary leans toward right
/// decisions over the whole set.
MeasureValue polarization(const PrayatulMatrix& m);

/// (br + rw) / (br + rw + wr). The primary's share of the instances where
/// at least one model is right. Undefined when both are always wrong.
MeasureValue comparative_rightness(const PrayatulMatrix& m);

/// (br + rw - wr) / (br + rw + wr). Comparative rightness penalized by the
/// primary's losses on disagreements.
MeasureValue effective_rightness(const PrayatulMatrix& m);

/// (br + rw - wr) / N. Effective rightness referenced to the full dataset.
MeasureValue effective_superiority(const PrayatulMatrix& m);

/// All five measures from one matrix.
MeasureSet measure_set(const PrayatulMatrix& m);

/// Swaps the primary and alternative roles: returns (br, wr, rw, bw) with
/// the rw/wr cell lists exchanged. Involution: transpose(transpose(m)) == m.
PrayatulMatrix transpose(const PrayatulMatrix& m);

}  // namespace prayatul
