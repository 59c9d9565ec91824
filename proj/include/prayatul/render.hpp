#pragma once

#include <string>
#include <vector>

#include "prayatul/engine.hpp"

namespace prayatul {

enum class OutputFormat { Text, Markdown, Csv, Json };

/// Parses "text", "markdown", "csv" or "json".
OutputFormat parse_format(const std::string& text);

/// Presentation knobs. digits affects display only, never computation;
/// JSON always serializes numbers at full double precision.
struct RenderOptions {
    OutputFormat format = OutputFormat::Text;
    int digits = 4;  // 1..10
    bool show_cells = false;
    /// Echoed into structured output as options.average ("default" when
    /// the caller let the data decide).
    std::string averaging_label = "default";
};

/// Undefined measures render as an em dash in text/markdown, an empty CSV
/// field, and null (plus "defined": false) in JSON.
std::string render_report(const ComparisonReport& report, const RenderOptions& options);

/// Wide layout: one row per fold plus the aggregate row, five measure
/// columns per alternative. CSV and JSON fall back to render_report.
std::string render_tournament(const ComparisonReport& report, const RenderOptions& options);

struct NamedSummary {
    std::string name;
    ConfusionSummary summary;
};

std::string render_baseline_table(const std::string& truth_ref,
                                  const std::vector<NamedSummary>& models,
                                  const RenderOptions& options);

}  // namespace prayatul
