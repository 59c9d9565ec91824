#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "prayatul/core.hpp"

namespace prayatul {

/// Prediction/truth file layouts.
///   CsvWithIds:  UTF-8 CSV, mandatory header "id,label", no quoting
///                dialect (tokens may not contain commas). The only format
///                that permits reordering during alignment.
///   PlainLabels: one non-empty label per line; instances are identified
///                by position (synthetic IDs "0", "1", ...).
enum class LabelFormat { CsvWithIds, PlainLabels };

/// Loads and validates one label file. Labels (and IDs) are trimmed of
/// surrounding whitespace; LF and CRLF are both accepted. Every violation
/// is fatal with the offending line reported; rows are never dropped.
LabelSequence load_labels(const std::filesystem::path& path,
                          LabelFormat format = LabelFormat::CsvWithIds);

/// Writes the CsvWithIds form. load_labels(write_labels_csv(seq)) == seq.
void write_labels_csv(const LabelSequence& seq, const std::filesystem::path& path);

/// Reorders each sequence in `others` to the truth's ID order. Requires the
/// exact same ID set: an ID of truth absent from a model file is
/// MissingInstance, an ID not in truth is ExtraInstance (both list up to 10
/// offenders). With allow_reorder false (positional formats) any order
/// difference is an IdMismatch instead.
std::vector<LabelSequence> align(const LabelSequence& truth, std::vector<LabelSequence> others,
                                 bool allow_reorder = true);

/// Cross-validation experiment description. Fold indices are 0-based.
struct Manifest {
    int folds = 0;
    std::vector<std::filesystem::path> truth;  // one file per fold
    std::vector<std::pair<std::string, std::vector<std::filesystem::path>>> models;
    std::string primary;

    const std::vector<std::filesystem::path>& model_files(const std::string& name) const;
};

/// Parses and validates a manifest JSON document:
///   {"folds": int, "truth": [path per fold],
///    "models": {"<name>": [path per fold], ...}, "primary": "<name>"}
/// Relative paths are resolved against the manifest's directory. Model
/// declaration order is preserved.
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace prayatul
