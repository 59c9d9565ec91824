"""Instance-level pairwise classifier comparison via the prayatul matrix.

The compiled core lives in ``prayatul._core``; this package re-exports the
public surface and adds one list-friendly convenience, :func:`compare`.
"""

from prayatul._core import (
    ConfusionMatrix,
    ConfusionSummary,
    Error,
    LabelSequence,
    MeasureSet,
    PrayatulMatrix,
    align,
    comparative_deviation,
    comparative_rightness,
    confusion_matrix,
    correctness,
    effective_rightness,
    effective_superiority,
    generate_prayatul_matrix,
    load_labels,
    measure_set,
    polarization,
    summarize,
    transpose,
)

__all__ = [
    "ConfusionMatrix",
    "ConfusionSummary",
    "Error",
    "LabelSequence",
    "MeasureSet",
    "PrayatulMatrix",
    "align",
    "comparative_deviation",
    "comparative_rightness",
    "compare",
    "confusion_matrix",
    "correctness",
    "effective_rightness",
    "effective_superiority",
    "generate_prayatul_matrix",
    "load_labels",
    "measure_set",
    "polarization",
    "summarize",
    "transpose",
]


def _as_sequence(value):
    if isinstance(value, LabelSequence):
        return value
    return LabelSequence([str(token) for token in value])


def compare(truth, primary, alternative, keep_cells=False):
    """Build the prayatul matrix and all five measures for one pair.

    Accepts ``LabelSequence`` objects or plain iterables of label tokens
    (aligned by position). Returns ``(PrayatulMatrix, MeasureSet)``.
    """
    matrix = generate_prayatul_matrix(
        _as_sequence(truth),
        _as_sequence(primary),
        _as_sequence(alternative),
        keep_cells,
    )
    return matrix, measure_set(matrix)
