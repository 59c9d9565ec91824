#include "prayatul/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace prayatul {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kUndefined = "—";  // em dash

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

std::string fmt(const MeasureValue& value, int digits, const char* undefined_token = kUndefined) {
    return value ? fixed(*value, digits) : std::string(undefined_token);
}

// Column padding counts display columns, not bytes (the em dash is 3 bytes).
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) ++w;
    }
    return w;
}

std::string pad_left(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

const char* mode_name(AggregationMode mode) {
    return mode == AggregationMode::MeanOfMeasures ? "mean-of-measures" : "pooled-counts";
}

struct MeasureRow {
    const char* key;
    const AggregateMeasure* agg;
    const MeasureValue* value;
};

std::vector<std::pair<const char*, const MeasureValue*>> measure_rows(const MeasureSet& set) {
    return {{"sigma_c", &set.sigma_c},
            {"alpha", &set.alpha},
            {"xi_c", &set.xi_c},
            {"xi_e", &set.xi_e},
            {"phi_e", &set.phi_e}};
}

std::vector<std::pair<const char*, const AggregateMeasure*>> aggregate_rows(
    const AggregateMeasureSet& set) {
    return {{"sigma_c", &set.sigma_c},
            {"alpha", &set.alpha},
            {"xi_c", &set.xi_c},
            {"xi_e", &set.xi_e},
            {"phi_e", &set.phi_e}};
}

// Fig.-style matrix block with Right/Wrong axes and marginal totals.
void matrix_block(std::ostream& os, const PrayatulMatrix& m, const std::string& primary,
                  const std::string& alternative) {
    const std::size_t label_w = std::max<std::size_t>(primary.size(), 5);  // "Total"
    const std::size_t cell_w =
        std::max<std::size_t>(7, std::to_string(m.total()).size() + 2);
    const std::string header_pad(label_w + 7, ' ');  // row label + axis word

    os << header_pad << pad_left(alternative, cell_w) << '\n';
    os << header_pad << pad_left("Right", cell_w) << pad_left("Wrong", cell_w)
       << pad_left("Total", cell_w) << '\n';
    os << pad_right(primary, label_w) << "  Right" << pad_left(std::to_string(m.br), cell_w)
       << pad_left(std::to_string(m.rw), cell_w) << pad_left(std::to_string(m.br + m.rw), cell_w)
       << '\n';
    os << std::string(label_w + 1, ' ') << " Wrong" << pad_left(std::to_string(m.wr), cell_w)
       << pad_left(std::to_string(m.bw), cell_w) << pad_left(std::to_string(m.wr + m.bw), cell_w)
       << '\n';
    os << std::string(label_w + 1, ' ') << " Total" << pad_left(std::to_string(m.br + m.wr), cell_w)
       << pad_left(std::to_string(m.rw + m.bw), cell_w) << pad_left(std::to_string(m.total()), cell_w)
       << '\n';
}

void cells_block(std::ostream& os, const CellMembership& cells, const char* indent) {
    const std::pair<const char*, const std::vector<std::string>*> rows[] = {
        {"BR", &cells.br}, {"RW", &cells.rw}, {"WR", &cells.wr}, {"BW", &cells.bw}};
    for (const auto& [name, ids] : rows) {
        os << indent << name << ':';
        if (ids->empty()) {
            os << " (none)";
        } else {
            for (const auto& id : *ids) os << ' ' << id;
        }
        os << '\n';
    }
}

void baseline_lines(std::ostream& os, const PairResult& fold, int digits) {
    const std::string p_name = fold.primary_name + " (primary)";
    const std::size_t name_w = std::max(p_name.size(), fold.alternative_name.size());
    os << "\n  baseline (" << fold.primary_baseline.averaging.to_string() << ")\n";
    os << "  " << pad_right("model", name_w) << "  accuracy  precision     recall\n";
    for (const auto& [name, s] :
         {std::pair<std::string, const ConfusionSummary*>{p_name, &fold.primary_baseline},
          {fold.alternative_name, &fold.alternative_baseline}}) {
        os << "  " << pad_right(name, name_w) << pad_left(fixed(s->accuracy, digits), 10)
           << pad_left(fixed(s->precision, digits), 11) << pad_left(fixed(s->recall, digits), 11)
           << '\n';
    }
}

std::string render_text(const ComparisonReport& report, const RenderOptions& options) {
    std::ostringstream os;
    const bool multi_fold =
        !report.pairs.empty() && report.pairs.front().folds.size() > 1;
    for (std::size_t p = 0; p < report.pairs.size(); ++p) {
        const PairSeries& series = report.pairs[p];
        if (p) os << '\n';
        for (const PairResult& fold : series.folds) {
            os << report.primary_name << " vs " << series.alternative_name;
            if (multi_fold) os << " (fold " << fold.fold_index << ")";
            os << '\n';
            matrix_block(os, fold.matrix, report.primary_name, series.alternative_name);
            os << '\n';
            for (const auto& [key, value] : measure_rows(fold.measures)) {
                os << "  " << pad_right(key, 7) << "  " << fmt(*value, options.digits) << '\n';
            }
            if (options.show_cells && fold.matrix.cells) {
                os << "  cells\n";
                cells_block(os, *fold.matrix.cells, "    ");
            }
            baseline_lines(os, fold, options.digits);
            if (multi_fold) os << '\n';
        }
        if (multi_fold) {
            const PairAggregate& agg = series.aggregate;
            os << report.primary_name << " vs " << series.alternative_name << " aggregate ("
               << mode_name(report.aggregation_mode) << ", " << agg.fold_count << " folds)\n";
            os << "  pooled counts: br=" << agg.pooled_matrix.br << " rw=" << agg.pooled_matrix.rw
               << " wr=" << agg.pooled_matrix.wr << " bw=" << agg.pooled_matrix.bw << '\n';
            for (const auto& [key, m] : aggregate_rows(agg.measures)) {
                os << "  " << pad_right(key, 7) << "  " << fmt(m->value, options.digits);
                if (m->undefined_folds > 0) {
                    os << "  (" << m->undefined_folds << " undefined fold"
                       << (m->undefined_folds == 1 ? "" : "s") << " excluded)";
                }
                os << '\n';
            }
        }
    }
    return os.str();
}

std::string render_markdown(const ComparisonReport& report, const RenderOptions& options) {
    std::ostringstream os;
    const bool multi_fold =
        !report.pairs.empty() && report.pairs.front().folds.size() > 1;
    for (std::size_t p = 0; p < report.pairs.size(); ++p) {
        const PairSeries& series = report.pairs[p];
        if (p) os << '\n';
        for (const PairResult& fold : series.folds) {
            os << "### " << report.primary_name << " vs " << series.alternative_name;
            if (multi_fold) os << " (fold " << fold.fold_index << ")";
            os << "\n\n";
            const PrayatulMatrix& m = fold.matrix;
            os << "| " << report.primary_name << " \\ " << series.alternative_name
               << " | Right | Wrong | Total |\n";
            os << "| --- | ---: | ---: | ---: |\n";
            os << "| Right | " << m.br << " | " << m.rw << " | " << m.br + m.rw << " |\n";
            os << "| Wrong | " << m.wr << " | " << m.bw << " | " << m.wr + m.bw << " |\n";
            os << "| Total | " << m.br + m.wr << " | " << m.rw + m.bw << " | " << m.total()
               << " |\n\n";
            os << "| measure | value |\n| --- | ---: |\n";
            for (const auto& [key, value] : measure_rows(fold.measures)) {
                os << "| " << key << " | " << fmt(*value, options.digits) << " |\n";
            }
            os << '\n';
            os << "| model | accuracy | precision | recall |\n| --- | ---: | ---: | ---: |\n";
            os << "| " << fold.primary_name << " (primary) | "
               << fixed(fold.primary_baseline.accuracy, options.digits) << " | "
               << fixed(fold.primary_baseline.precision, options.digits) << " | "
               << fixed(fold.primary_baseline.recall, options.digits) << " |\n";
            os << "| " << fold.alternative_name << " | "
               << fixed(fold.alternative_baseline.accuracy, options.digits) << " | "
               << fixed(fold.alternative_baseline.precision, options.digits) << " | "
               << fixed(fold.alternative_baseline.recall, options.digits) << " |\n";
        }
        if (multi_fold) {
            const PairAggregate& agg = series.aggregate;
            os << "\n### " << report.primary_name << " vs " << series.alternative_name
               << " aggregate (" << mode_name(report.aggregation_mode) << ", " << agg.fold_count
               << " folds)\n\n";
            os << "| measure | value | undefined folds |\n| --- | ---: | ---: |\n";
            for (const auto& [key, m] : aggregate_rows(agg.measures)) {
                os << "| " << key << " | " << fmt(m->value, options.digits) << " | "
                   << m->undefined_folds << " |\n";
            }
        }
    }
    return os.str();
}

std::string render_csv(const ComparisonReport& report, const RenderOptions& options) {
    std::ostringstream os;
    os << "primary,alternative,fold,br,rw,wr,bw,sigma_c,alpha,xi_c,xi_e,phi_e,"
          "acc_p,acc_q,pre_p,pre_q,rec_p,rec_q\n";
    for (const PairSeries& series : report.pairs) {
        for (const PairResult& fold : series.folds) {
            const PrayatulMatrix& m = fold.matrix;
            os << fold.primary_name << ',' << fold.alternative_name << ',' << fold.fold_index
               << ',' << m.br << ',' << m.rw << ',' << m.wr << ',' << m.bw;
            for (const auto& [key, value] : measure_rows(fold.measures)) {
                os << ',' << fmt(*value, options.digits, "");
            }
            os << ',' << fixed(fold.primary_baseline.accuracy, options.digits) << ','
               << fixed(fold.alternative_baseline.accuracy, options.digits) << ','
               << fixed(fold.primary_baseline.precision, options.digits) << ','
               << fixed(fold.alternative_baseline.precision, options.digits) << ','
               << fixed(fold.primary_baseline.recall, options.digits) << ','
               << fixed(fold.alternative_baseline.recall, options.digits) << '\n';
        }
    }
    return os.str();
}

ordered_json measure_json(const MeasureValue& value) {
    ordered_json j;
    j["value"] = value ? ordered_json(*value) : ordered_json(nullptr);
    j["defined"] = value.has_value();
    return j;
}

ordered_json measures_json(const MeasureSet& set) {
    ordered_json j;
    for (const auto& [key, value] : measure_rows(set)) {
        j[key] = measure_json(*value);
    }
    return j;
}

ordered_json matrix_json(const PrayatulMatrix& m) {
    ordered_json j;
    j["br"] = m.br;
    j["rw"] = m.rw;
    j["wr"] = m.wr;
    j["bw"] = m.bw;
    return j;
}

ordered_json summary_json(const ConfusionSummary& s) {
    ordered_json j;
    j["accuracy"] = s.accuracy;
    j["precision"] = s.precision;
    j["recall"] = s.recall;
    j["averaging"] = s.averaging.to_string();
    return j;
}

std::string render_json(const ComparisonReport& report, const RenderOptions& options) {
    ordered_json j;
    j["truth"] = report.truth_ref;
    j["primary"] = report.primary_name;
    j["pairs"] = ordered_json::array();
    for (const PairSeries& series : report.pairs) {
        ordered_json pair;
        pair["alternative"] = series.alternative_name;
        pair["folds"] = ordered_json::array();
        for (const PairResult& fold : series.folds) {
            ordered_json fj;
            fj["fold"] = fold.fold_index;
            fj["matrix"] = matrix_json(fold.matrix);
            if (fold.matrix.cells) {
                ordered_json cells;
                cells["br"] = fold.matrix.cells->br;
                cells["rw"] = fold.matrix.cells->rw;
                cells["wr"] = fold.matrix.cells->wr;
                cells["bw"] = fold.matrix.cells->bw;
                fj["cells"] = std::move(cells);
            }
            fj["measures"] = measures_json(fold.measures);
            ordered_json baselines;
            baselines["primary"] = summary_json(fold.primary_baseline);
            baselines["alternative"] = summary_json(fold.alternative_baseline);
            fj["baselines"] = std::move(baselines);
            pair["folds"].push_back(std::move(fj));
        }
        ordered_json agg;
        agg["folds"] = series.aggregate.fold_count;
        agg["matrix"] = matrix_json(series.aggregate.pooled_matrix);
        ordered_json agg_measures;
        for (const auto& [key, m] : aggregate_rows(series.aggregate.measures)) {
            ordered_json mj = measure_json(m->value);
            mj["undefined_folds"] = m->undefined_folds;
            agg_measures[key] = std::move(mj);
        }
        agg["measures"] = std::move(agg_measures);
        pair["aggregate"] = std::move(agg);
        j["pairs"].push_back(std::move(pair));
    }
    j["aggregation_mode"] = mode_name(report.aggregation_mode);
    ordered_json opts;
    opts["digits"] = options.digits;
    opts["cells"] = options.show_cells;
    opts["average"] = options.averaging_label;
    j["options"] = std::move(opts);
    return j.dump(2) + "\n";
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "markdown") return OutputFormat::Markdown;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw Error(ErrorCode::SchemaError,
                "bad format \"" + text + "\" (expected text, markdown, csv or json)");
}

std::string render_report(const ComparisonReport& report, const RenderOptions& options) {
    switch (options.format) {
        case OutputFormat::Text: return render_text(report, options);
        case OutputFormat::Markdown: return render_markdown(report, options);
        case OutputFormat::Csv: return render_csv(report, options);
        case OutputFormat::Json: return render_json(report, options);
    }
    return {};
}

std::string render_tournament(const ComparisonReport& report, const RenderOptions& options) {
    if (options.format == OutputFormat::Csv || options.format == OutputFormat::Json) {
        return render_report(report, options);
    }
    static constexpr const char* kKeys[] = {"sigma_c", "alpha", "xi_c", "xi_e", "phi_e"};
    const std::size_t fold_count = report.pairs.empty() ? 0 : report.pairs.front().folds.size();
    const char* agg_label =
        report.aggregation_mode == AggregationMode::MeanOfMeasures ? "mean" : "pooled";

    auto fold_values = [&](const PairSeries& series, std::size_t f) {
        std::vector<std::string> cells;
        for (const auto& [key, value] : measure_rows(series.folds[f].measures)) {
            (void)key;
            cells.push_back(fmt(*value, options.digits));
        }
        return cells;
    };
    auto aggregate_values = [&](const PairSeries& series) {
        std::vector<std::string> cells;
        for (const auto& [key, m] : aggregate_rows(series.aggregate.measures)) {
            (void)key;
            cells.push_back(fmt(m->value, options.digits));
        }
        return cells;
    };

    std::ostringstream os;
    if (options.format == OutputFormat::Markdown) {
        os << "### " << report.primary_name << " vs "
           << report.pairs.size() << (report.pairs.size() == 1 ? " alternative" : " alternatives")
           << "\n\n";
        os << "| fold |";
        for (const PairSeries& series : report.pairs) {
            for (const char* key : kKeys) os << ' ' << series.alternative_name << ':' << key << " |";
        }
        os << "\n| --- |";
        for (std::size_t i = 0; i < report.pairs.size() * 5; ++i) os << " ---: |";
        os << '\n';
        for (std::size_t f = 0; f < fold_count; ++f) {
            os << "| " << report.pairs.front().folds[f].fold_index << " |";
            for (const PairSeries& series : report.pairs) {
                for (const auto& cell : fold_values(series, f)) os << ' ' << cell << " |";
            }
            os << '\n';
        }
        os << "| " << agg_label << " |";
        for (const PairSeries& series : report.pairs) {
            for (const auto& cell : aggregate_values(series)) os << ' ' << cell << " |";
        }
        os << '\n';
        return os.str();
    }

    const std::size_t cell_w = static_cast<std::size_t>(options.digits) + 5;
    const std::size_t fold_w = 6;
    os << report.primary_name << " vs " << report.pairs.size()
       << (report.pairs.size() == 1 ? " alternative" : " alternatives") << '\n';
    std::string header = pad_right("", fold_w);
    for (const PairSeries& series : report.pairs) {
        header += "  " + pad_right(series.alternative_name, cell_w * 5 - 1);
    }
    while (!header.empty() && header.back() == ' ') header.pop_back();
    os << header << '\n' << pad_right("fold", fold_w);
    for (std::size_t p = 0; p < report.pairs.size(); ++p) {
        os << ' ';
        for (const char* key : kKeys) os << pad_left(key, cell_w);
    }
    os << '\n';
    for (std::size_t f = 0; f < fold_count; ++f) {
        os << pad_right(std::to_string(report.pairs.front().folds[f].fold_index), fold_w);
        for (const PairSeries& series : report.pairs) {
            os << ' ';
            for (const auto& cell : fold_values(series, f)) os << pad_left(cell, cell_w);
        }
        os << '\n';
    }
    os << pad_right(agg_label, fold_w);
    for (const PairSeries& series : report.pairs) {
        os << ' ';
        for (const auto& cell : aggregate_values(series)) os << pad_left(cell, cell_w);
    }
    os << '\n';
    return os.str();
}

std::string render_baseline_table(const std::string& truth_ref,
                                  const std::vector<NamedSummary>& models,
                                  const RenderOptions& options) {
    std::ostringstream os;
    switch (options.format) {
        case OutputFormat::Text: {
            std::size_t name_w = 5;
            for (const auto& m : models) name_w = std::max(name_w, m.name.size());
            os << "baseline scores on " << truth_ref << '\n';
            os << pad_right("model", name_w) << "  averaging  accuracy  precision     recall\n";
            for (const auto& m : models) {
                os << pad_right(m.name, name_w) << "  "
                   << pad_right(m.summary.averaging.to_string(), 9)
                   << pad_left(fixed(m.summary.accuracy, options.digits), 10)
                   << pad_left(fixed(m.summary.precision, options.digits), 11)
                   << pad_left(fixed(m.summary.recall, options.digits), 11) << '\n';
            }
            break;
        }
        case OutputFormat::Markdown: {
            os << "| model | averaging | accuracy | precision | recall |\n";
            os << "| --- | --- | ---: | ---: | ---: |\n";
            for (const auto& m : models) {
                os << "| " << m.name << " | " << m.summary.averaging.to_string() << " | "
                   << fixed(m.summary.accuracy, options.digits) << " | "
                   << fixed(m.summary.precision, options.digits) << " | "
                   << fixed(m.summary.recall, options.digits) << " |\n";
            }
            break;
        }
        case OutputFormat::Csv: {
            os << "model,averaging,accuracy,precision,recall\n";
            for (const auto& m : models) {
                os << m.name << ',' << m.summary.averaging.to_string() << ','
                   << fixed(m.summary.accuracy, options.digits) << ','
                   << fixed(m.summary.precision, options.digits) << ','
                   << fixed(m.summary.recall, options.digits) << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["truth"] = truth_ref;
            j["models"] = ordered_json::array();
            for (const auto& m : models) {
                ordered_json mj;
                mj["name"] = m.name;
                ordered_json s = summary_json(m.summary);
                for (auto& [k, v] : s.items()) mj[k] = v;
                j["models"].push_back(std::move(mj));
            }
            ordered_json opts;
            opts["digits"] = options.digits;
            opts["average"] = options.averaging_label;
            j["options"] = std::move(opts);
            os << j.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace prayatul
