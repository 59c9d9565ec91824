#include "prayatul/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace prayatul {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::MissingFile, "cannot open \"" + path.string() + "\"");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

LabelSequence load_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw Error(ErrorCode::EmptyInput, "\"" + path.string() + "\" is empty");
    }
    if (trim(lines[0]) != "id,label") {
        throw Error(ErrorCode::BadHeader, "\"" + path.string() + "\" first line must be exactly \"id,label\", got \"" + lines[0] + "\"");
    }

    LabelSequence seq;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& row = lines[i];
        if (i + 1 == lines.size() && row.empty()) break;  // trailing newline
        const std::size_t lineno = i + 1;
        const auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
            throw Error(ErrorCode::MalformedRow,
                        "\"" + path.string() + "\" line " + std::to_string(lineno) +
                            ": expected exactly one comma");
        }
        std::string id = trim(row.substr(0, comma));
        std::string label = trim(row.substr(comma + 1));
        if (id.empty() || label.empty()) {
            throw Error(ErrorCode::MalformedRow,
                        "\"" + path.string() + "\" line " + std::to_string(lineno) +
                            ": empty id or label");
        }
        if (!seen.insert(id).second) {
            throw Error(ErrorCode::DuplicateId, "\"" + path.string() + "\" line " +
                                                    std::to_string(lineno) + ": id \"" + id +
                                                    "\" appears more than once");
        }
        seq.ids.push_back(std::move(id));
        seq.labels.push_back(std::move(label));
    }
    if (seq.size() == 0) {
        throw Error(ErrorCode::EmptyInput, "\"" + path.string() + "\" has a header but no rows");
    }
    return seq;
}

LabelSequence load_plain(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i + 1 == lines.size() && lines[i].empty()) break;  // trailing newline
        const std::string label = trim(lines[i]);
        if (label.empty()) {
            throw Error(ErrorCode::MalformedRow, "\"" + path.string() + "\" line " +
                                                     std::to_string(i + 1) + ": blank line");
        }
        labels.push_back(label);
    }
    if (labels.empty()) {
        throw Error(ErrorCode::EmptyInput, "\"" + path.string() + "\" is empty");
    }
    return LabelSequence::from_labels(std::move(labels));
}

}  // namespace

LabelSequence load_labels(const std::filesystem::path& path, LabelFormat format) {
    LabelSequence seq =
        format == LabelFormat::CsvWithIds ? load_csv(path) : load_plain(path);
    validate_sequence(seq);
    return seq;
}

void write_labels_csv(const LabelSequence& seq, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::MissingFile, "cannot write \"" + path.string() + "\"");
    }
    out << "id,label\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << seq.ids[i] << ',' << seq.labels[i] << '\n';
    }
}

namespace {

std::string join_sample(const std::vector<std::string>& ids) {
    std::ostringstream os;
    const std::size_t shown = std::min<std::size_t>(ids.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) os << ", ";
        os << '"' << ids[i] << '"';
    }
    if (ids.size() > shown) os << ", ... (" << ids.size() << " total)";
    return os.str();
}

}  // namespace

std::vector<LabelSequence> align(const LabelSequence& truth, std::vector<LabelSequence> others,
                                 bool allow_reorder) {
    std::unordered_map<std::string, std::size_t> truth_index;
    truth_index.reserve(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) truth_index.emplace(truth.ids[i], i);

    for (auto& other : others) {
        if (other.ids == truth.ids) continue;  // already aligned
        if (!allow_reorder) {
            if (other.size() != truth.size()) {
                throw Error(ErrorCode::LengthMismatch,
                            "sequence has " + std::to_string(other.size()) +
                                " instances, truth has " + std::to_string(truth.size()));
            }
            throw Error(ErrorCode::IdMismatch,
                        "positional sequences must list instances in the truth's order");
        }

        std::unordered_map<std::string, std::size_t> other_index;
        other_index.reserve(other.size());
        for (std::size_t i = 0; i < other.size(); ++i) other_index.emplace(other.ids[i], i);

        std::vector<std::string> missing;
        for (const auto& id : truth.ids) {
            if (other_index.find(id) == other_index.end()) missing.push_back(id);
        }
        if (!missing.empty()) {
            throw Error(ErrorCode::MissingInstance,
                        "instances in truth but not in model file: " + join_sample(missing));
        }
        std::vector<std::string> extra;
        for (const auto& id : other.ids) {
            if (truth_index.find(id) == truth_index.end()) extra.push_back(id);
        }
        if (!extra.empty()) {
            throw Error(ErrorCode::ExtraInstance,
                        "instances in model file but not in truth: " + join_sample(extra));
        }

        LabelSequence reordered;
        reordered.ids = truth.ids;
        reordered.labels.resize(truth.size());
        for (std::size_t i = 0; i < truth.size(); ++i) {
            reordered.labels[i] = other.labels[other_index[truth.ids[i]]];
        }
        other = std::move(reordered);
    }
    return others;
}

const std::vector<std::filesystem::path>& Manifest::model_files(const std::string& name) const {
    for (const auto& [model, files] : models) {
        if (model == name) return files;
    }
    throw Error(ErrorCode::UnknownPrimary, "model \"" + name + "\" is not listed in the manifest");
}

namespace {

using ordered_json = nlohmann::ordered_json;

// Per-fold path list for one manifest entry. A shorter array, or a null /
// empty entry, names the first fold with no file.
std::vector<std::filesystem::path> fold_paths(const ordered_json& value, const std::string& owner,
                                              bool owner_is_model, int folds,
                                              const std::filesystem::path& base) {
    if (!value.is_array()) {
        throw Error(ErrorCode::SchemaError, "\"" + owner + "\" must be an array of file paths");
    }
    std::vector<std::filesystem::path> paths;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& entry = value[i];
        if (entry.is_null() || (entry.is_string() && entry.get<std::string>().empty())) {
            if (owner_is_model) {
                throw Error(ErrorCode::MissingFold,
                            "model \"" + owner + "\" has no file for fold " + std::to_string(i));
            }
            throw Error(ErrorCode::SchemaError,
                        "\"truth[" + std::to_string(i) + "]\" must be a file path");
        }
        if (!entry.is_string()) {
            throw Error(ErrorCode::SchemaError,
                        "\"" + owner + "[" + std::to_string(i) + "]\" must be a string");
        }
        std::filesystem::path p = entry.get<std::string>();
        paths.push_back(p.is_absolute() ? p : base / p);
    }
    if (static_cast<int>(paths.size()) != folds) {
        if (owner_is_model && static_cast<int>(paths.size()) < folds) {
            throw Error(ErrorCode::MissingFold, "model \"" + owner + "\" has no file for fold " +
                                                    std::to_string(paths.size()));
        }
        throw Error(ErrorCode::SchemaError, "\"" + owner + "\" lists " +
                                                std::to_string(paths.size()) + " files for " +
                                                std::to_string(folds) + " folds");
    }
    return paths;
}

}  // namespace

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::MissingFile, "cannot open \"" + path.string() + "\"");
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, "\"" + path.string() + "\": " + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::SchemaError, "manifest root must be an object");
    }
    for (const char* key : {"folds", "truth", "models", "primary"}) {
        if (!doc.contains(key)) {
            throw Error(ErrorCode::SchemaError, std::string("missing field \"") + key + "\"");
        }
    }
    if (!doc["folds"].is_number_integer()) {
        throw Error(ErrorCode::SchemaError, "\"folds\" must be an integer");
    }

    Manifest manifest;
    manifest.folds = doc["folds"].get<int>();
    if (manifest.folds < 1) {
        throw Error(ErrorCode::SchemaError, "\"folds\" must be >= 1");
    }

    const auto base = std::filesystem::absolute(path).parent_path();
    manifest.truth = fold_paths(doc["truth"], "truth", false, manifest.folds, base);

    if (!doc["models"].is_object() || doc["models"].empty()) {
        throw Error(ErrorCode::SchemaError, "\"models\" must be a non-empty object");
    }
    for (const auto& [name, files] : doc["models"].items()) {
        manifest.models.emplace_back(
            name, fold_paths(files, "models." + name, true, manifest.folds, base));
    }

    if (!doc["primary"].is_string()) {
        throw Error(ErrorCode::SchemaError, "\"primary\" must be a string");
    }
    manifest.primary = doc["primary"].get<std::string>();
    const bool known = std::any_of(manifest.models.begin(), manifest.models.end(),
                                   [&](const auto& m) { return m.first == manifest.primary; });
    if (!known) {
        throw Error(ErrorCode::UnknownPrimary,
                    "primary \"" + manifest.primary + "\" is not a listed model");
    }
    return manifest;
}

}  // namespace prayatul
